#pragma once
// Declarative problem files: a text schema describing one bound quiver
// algebra, named complexes and chain maps over it, and a list of commands
// to run against them.  parse_problem turns the text into live objects with
// line/column diagnostics; run_problem executes the commands and collects a
// report that renders either as fixed-layout text or as a single JSON
// document, both byte-for-byte deterministic for identical inputs.  Per-
// command timings are collected on the side so callers can surface them on
// standard error without touching the deterministic payload.
//
// Schema, one directive per line ('#' starts a comment, blank lines are
// ignored, numbers are decimal, coefficients may be negative):
//
//   algebra
//     prime 32003
//     vertices 6
//     arrow a1 1 2                  # name source target
//     relation 1 a3*a2*a1           # terms "<coeff> <path>" joined by '+'
//   end
//   complex Z1
//     degrees 0 2
//     object 0 P6                   # degree, then the summands in order
//     object 1 P2 P5
//     object 2 P1
//     diff 0 1 0 1 b2               # degree row col coeff path (accumulates)
//   end
//   map f Z1 Z2                     # name domain codomain
//     entry 0 1 0 1 e6              # degree row col coeff path (accumulates)
//   end
//   run decompose Z1                # appended to the command list in order
//
// Path expressions follow parse_path_expr: arrow names joined by '*' with
// the last-applied arrow first; "e4" is the trivial path at vertex 4.
//
// Commands: validate C | hom C D | homotopy-hom C D | decompose C |
// diagonalize Z X | enlarge dX0 dY0 | summand-test dX0 dY0 |
// indec-diagonal d0... | candidate-z0 X | d0-shape a b c d |
// classify-indec Z n | split-common f | classify-map f | check-f-shape f |
// refute-irreducible f h1 h2 | restrict f lo hi.
// Degree-0 block data (enlarge, summand-test, indec-diagonal, d0-shape) is
// passed as maps whose domain is the head placed as a one-degree complex at
// the bottom degree of the codomain; the chain condition then encodes
// d^1 . d0 = 0.

#include "complex.hpp"
#include "decompose.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cforge {

struct ParseError : CfError {
    int line = 0, col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : CfError("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " +
                  msg),
          line(line_), col(col_) {}
};

struct Command {
    std::string verb;
    std::vector<std::string> args;
    int line = 0;
};

struct ProblemFile {
    AlgebraPtr A;
    std::vector<std::pair<std::string, Complex>> complexes; // declaration order
    std::vector<std::pair<std::string, ChainMap>> maps;     // declaration order
    std::vector<Command> commands;

    bool has_cx(const std::string& name) const;
    bool has_mp(const std::string& name) const;
    const Complex& cx(const std::string& name) const;  // throws CfError naming the entity
    const ChainMap& mp(const std::string& name) const; // throws CfError naming the entity
};

// Parse from text / from a file on disk.  prime_override replaces the file's
// prime before any coefficient is reduced.  Throws ParseError for syntax and
// semantic problems (unknown names, bad shapes), pointing at the offending
// line and column.
ProblemFile parse_problem(const std::string& text,
                          std::optional<uint32_t> prime_override = std::nullopt);
ProblemFile parse_problem_file(const std::string& path,
                               std::optional<uint32_t> prime_override = std::nullopt);

struct CommandReport {
    std::string heading; // the command with its arguments, space-joined
    bool ok = true;
    bool property_violation = false; // a failed after-the-fact engine check
    std::string error;               // set when !ok
    std::vector<std::string> text;   // text-mode payload lines
    std::vector<std::pair<std::string, std::string>> json; // key -> rendered JSON value
    double ms = 0.0;                 // wall time; never part of the payload
};

struct Report {
    std::vector<CommandReport> commands;
    int exit_code = 0; // 0 all ok, 2 a command errored, 3 a property violation

    std::string render_text(const ProblemFile& pf) const;
    std::string render_json(const ProblemFile& pf) const;
};

Report run_problem(const ProblemFile& pf, uint64_t seed = kDefaultSeed);

// A re-parseable problem-file block for Z (the round-trip target for every
// complex embedded in a report).
std::string serialize_complex(const Algebra& A, const std::string& name, const Complex& Z);

// JSON string literal with the mandatory escapes.
std::string json_quote(const std::string& s);

} // namespace cforge
