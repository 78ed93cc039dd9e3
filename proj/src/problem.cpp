#include "cforge/problem.hpp"

#include "cforge/classify.hpp"
#include "cforge/enlarge.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace cforge {

namespace {

// ---------------------------------------------------------------- tokenizing

struct Token {
    std::string s;
    int col = 0; // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

long long parse_int(const Token& t, int line) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(t.s, &pos);
    } catch (...) {
        throw ParseError("expected an integer, got '" + t.s + "'", line, t.col);
    }
    if (pos != t.s.size())
        throw ParseError("expected an integer, got '" + t.s + "'", line, t.col);
    return v;
}

int parse_vertex(const Token& t, int n_vertices, int line) {
    if (t.s.size() < 2 || t.s[0] != 'P')
        throw ParseError("expected a summand like P3, got '" + t.s + "'", line, t.col);
    int v = 0;
    try {
        size_t pos = 0;
        v = std::stoi(t.s.substr(1), &pos);
        if (pos + 1 != t.s.size()) throw CfError("");
    } catch (...) {
        throw ParseError("expected a summand like P3, got '" + t.s + "'", line, t.col);
    }
    if (v < 1 || v > n_vertices)
        throw ParseError("vertex " + std::to_string(v) + " is outside 1.." +
                             std::to_string(n_vertices),
                         line, t.col);
    return v;
}

// ------------------------------------------------------------ raw structures

struct RawRelTerm {
    long long coeff = 1;
    std::string path;
    int line = 0, col = 0;
};

struct RawAlgebra {
    bool present = false;
    int header_line = 0;
    long long prime = 0;
    int prime_line = 0;
    int vertices = 0;
    std::vector<Arrow> arrows;
    std::vector<int> arrow_lines;
    std::vector<std::vector<RawRelTerm>> relations;
};

struct RawEntry {
    int deg = 0;
    size_t row = 0, col = 0;
    long long coeff = 0;
    std::string path;
    int line = 0, pcol = 0;
};

struct RawComplex {
    std::string name;
    int header_line = 0;
    bool have_degrees = false;
    int lo = 0, hi = 0;
    std::map<int, ProjObj> objects;
    std::vector<RawEntry> diffs;
};

struct RawMap {
    std::string name, dom, cod;
    int header_line = 0;
    std::vector<RawEntry> entries;
};

struct RawCommand {
    Token verb;
    std::vector<Token> args;
    int line = 0;
};

// ------------------------------------------------------------------ building

AlgebraPtr build_algebra(const RawAlgebra& ra, std::optional<uint32_t> prime_override) {
    if (!ra.present) throw ParseError("missing algebra block", 1, 1);
    long long p = prime_override ? static_cast<long long>(*prime_override) : ra.prime;
    if (p < 2 || p > (1ll << 31))
        throw ParseError("prime must be in [2, 2^31]", std::max(ra.prime_line, 1), 1);
    std::optional<Fp> F_;
    try {
        F_.emplace(static_cast<uint32_t>(p));
    } catch (const CfError& e) {
        throw ParseError(e.what(), std::max(ra.prime_line, 1), 1);
    }
    const Fp& F = *F_;
    if (ra.vertices < 1) throw ParseError("vertices must be declared", ra.header_line, 1);

    std::vector<Relation> rels;
    for (const auto& raw : ra.relations) {
        Relation r;
        for (const RawRelTerm& t : raw) {
            uint32_t c = F.reduce_int(t.coeff);
            if (!c) continue;
            std::vector<int> idx;
            std::string tok;
            std::vector<std::string> names;
            std::stringstream ss(t.path);
            while (std::getline(ss, tok, '*')) names.push_back(tok);
            for (size_t k = names.size(); k-- > 0;) { // application order
                int ai = -1;
                for (size_t j = 0; j < ra.arrows.size(); ++j)
                    if (ra.arrows[j].name == names[k]) ai = static_cast<int>(j);
                if (ai < 0)
                    throw ParseError("unknown arrow '" + names[k] + "' in relation", t.line, t.col);
                idx.push_back(ai);
            }
            r.terms.push_back(RelTerm{c, std::move(idx)});
        }
        if (!r.terms.empty()) rels.push_back(std::move(r));
    }
    try {
        return Algebra::build(F, ra.vertices, ra.arrows, rels);
    } catch (const CfError& e) {
        throw ParseError(std::string("algebra construction failed: ") + e.what(), ra.header_line,
                         1);
    }
}

void check_entry(const Algebra& A, const RawEntry& en, const ProjObj& dom, const ProjObj& cod) {
    if (en.row >= cod.size() || en.col >= dom.size())
        throw ParseError("entry (" + std::to_string(en.row) + "," + std::to_string(en.col) +
                             ") is outside the " + std::to_string(cod.size()) + "x" +
                             std::to_string(dom.size()) + " shape at degree " +
                             std::to_string(en.deg),
                         en.line, 1);
    AlgElem el;
    try {
        el = parse_path_expr(A, en.path);
    } catch (const CfError& e) {
        throw ParseError(e.what(), en.line, en.pcol);
    }
    if (el.dom_v != dom.verts[en.col] || el.cod_v != cod.verts[en.row])
        throw ParseError("path '" + en.path + "' maps P" + std::to_string(el.dom_v) + " -> P" +
                             std::to_string(el.cod_v) + " but entry (" + std::to_string(en.row) +
                             "," + std::to_string(en.col) + ") needs P" +
                             std::to_string(dom.verts[en.col]) + " -> P" +
                             std::to_string(cod.verts[en.row]),
                         en.line, en.pcol);
}

Complex build_complex(AlgebraPtr A, const RawComplex& rc) {
    const Fp& F = A->field();
    std::vector<ProjObj> objs;
    for (int i = rc.lo; i <= rc.hi; ++i) {
        auto it = rc.objects.find(i);
        objs.push_back(it == rc.objects.end() ? ProjObj{} : it->second);
    }
    std::vector<std::vector<MorEntry>> per_deg(rc.hi > rc.lo ? rc.hi - rc.lo : 0);
    for (const RawEntry& en : rc.diffs) {
        check_entry(*A, en, objs[en.deg - rc.lo], objs[en.deg + 1 - rc.lo]);
        per_deg[en.deg - rc.lo].push_back(
            MorEntry{en.row, en.col, F.reduce_int(en.coeff), en.path});
    }
    std::vector<ProjMor> ds;
    for (int i = rc.lo; i < rc.hi; ++i)
        ds.push_back(mor_from_entries(*A, objs[i - rc.lo], objs[i + 1 - rc.lo],
                                      per_deg[i - rc.lo]));
    try {
        return make_complex(A, rc.lo, objs, ds);
    } catch (const CfError& e) {
        throw ParseError("invalid complex '" + rc.name + "': " + e.what(), rc.header_line, 1);
    }
}

ChainMap build_map(const ProblemFile& pf, const RawMap& rm) {
    const Complex& X = pf.cx(rm.dom);
    const Complex& Y = pf.cx(rm.cod);
    const Algebra& A = *pf.A;
    if (rm.entries.empty()) return chain_zero(X, Y);
    int lo = rm.entries[0].deg, hi = rm.entries[0].deg;
    for (const RawEntry& en : rm.entries) {
        lo = std::min(lo, en.deg);
        hi = std::max(hi, en.deg);
    }
    std::vector<std::vector<MorEntry>> per_deg(hi - lo + 1);
    for (const RawEntry& en : rm.entries) {
        check_entry(A, en, obj_at(X, en.deg), obj_at(Y, en.deg));
        per_deg[en.deg - lo].push_back(
            MorEntry{en.row, en.col, A.field().reduce_int(en.coeff), en.path});
    }
    std::vector<ProjMor> comps;
    for (int i = lo; i <= hi; ++i)
        comps.push_back(mor_from_entries(A, obj_at(X, i), obj_at(Y, i), per_deg[i - lo]));
    try {
        return make_chain_map(X, Y, lo, comps);
    } catch (const CfError& e) {
        throw ParseError("the entries of map '" + rm.name + "' do not form a chain map: " +
                             e.what(),
                         rm.header_line, 1);
    }
}

// ------------------------------------------------------- command validation

struct VerbSig {
    const char* verb;
    const char* shape; // per-argument kinds: c complex, m map, i integer
    bool variadic;     // the last shape letter may repeat
};

const VerbSig kVerbs[] = {
    {"validate", "c", false},
    {"hom", "cc", false},
    {"homotopy-hom", "cc", false},
    {"decompose", "c", false},
    {"diagonalize", "cc", false},
    {"enlarge", "mm", false},
    {"summand-test", "mm", false},
    {"indec-diagonal", "m", true},
    {"candidate-z0", "c", false},
    {"d0-shape", "mmmm", false},
    {"classify-indec", "ci", false},
    {"split-common", "m", false},
    {"classify-map", "m", false},
    {"check-f-shape", "m", false},
    {"refute-irreducible", "mmm", false},
    {"restrict", "mii", false},
};

void validate_command(const ProblemFile& pf, const RawCommand& rc) {
    const VerbSig* sig = nullptr;
    for (const VerbSig& s : kVerbs)
        if (rc.verb.s == s.verb) sig = &s;
    if (!sig) throw ParseError("unknown command '" + rc.verb.s + "'", rc.line, rc.verb.col);
    size_t nshape = std::string(sig->shape).size();
    if (rc.args.size() < nshape || (!sig->variadic && rc.args.size() > nshape))
        throw ParseError("command '" + rc.verb.s + "' expects " +
                             std::string(sig->variadic ? "at least " : "") +
                             std::to_string(nshape) + " argument(s), got " +
                             std::to_string(rc.args.size()),
                         rc.line, rc.verb.col);
    for (size_t k = 0; k < rc.args.size(); ++k) {
        char kind = sig->shape[std::min(k, nshape - 1)];
        const Token& t = rc.args[k];
        if (kind == 'c' && !pf.has_cx(t.s))
            throw ParseError("unknown complex '" + t.s + "'", rc.line, t.col);
        if (kind == 'm' && !pf.has_mp(t.s))
            throw ParseError("unknown map '" + t.s + "'", rc.line, t.col);
        if (kind == 'i') parse_int(t, rc.line);
    }
}

} // namespace

// ---------------------------------------------------------------- accessors

bool ProblemFile::has_cx(const std::string& name) const {
    for (const auto& p : complexes)
        if (p.first == name) return true;
    return false;
}

bool ProblemFile::has_mp(const std::string& name) const {
    for (const auto& p : maps)
        if (p.first == name) return true;
    return false;
}

const Complex& ProblemFile::cx(const std::string& name) const {
    for (const auto& p : complexes)
        if (p.first == name) return p.second;
    throw CfError("unknown complex '" + name + "'");
}

const ChainMap& ProblemFile::mp(const std::string& name) const {
    for (const auto& p : maps)
        if (p.first == name) return p.second;
    throw CfError("unknown map '" + name + "'");
}

// ------------------------------------------------------------------- parsing

ProblemFile parse_problem(const std::string& text, std::optional<uint32_t> prime_override) {
    ProblemFile pf;
    RawAlgebra ra;
    enum class Mode { Top, InAlgebra, InComplex, InMap };
    Mode mode = Mode::Top;
    RawComplex rc;
    RawMap rm;
    std::vector<RawCommand> raw_cmds;

    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::vector<Token> tk = tokenize(raw_line);
        if (tk.empty()) continue;
        const std::string& head = tk[0].s;
        auto need = [&](size_t n, const char* what) {
            if (tk.size() != n + 1)
                throw ParseError(std::string("'") + head + "' expects " + what, line_no,
                                 tk[0].col);
        };

        if (mode == Mode::Top) {
            if (head == "algebra") {
                if (ra.present)
                    throw ParseError("duplicate algebra block", line_no, tk[0].col);
                need(0, "no arguments");
                ra.present = true;
                ra.header_line = line_no;
                mode = Mode::InAlgebra;
            } else if (head == "complex") {
                if (!pf.A)
                    throw ParseError("the algebra block must come before any complex", line_no,
                                     tk[0].col);
                need(1, "a name");
                if (pf.has_cx(tk[1].s))
                    throw ParseError("duplicate complex '" + tk[1].s + "'", line_no, tk[1].col);
                rc = RawComplex{};
                rc.name = tk[1].s;
                rc.header_line = line_no;
                mode = Mode::InComplex;
            } else if (head == "map") {
                if (!pf.A)
                    throw ParseError("the algebra block must come before any map", line_no,
                                     tk[0].col);
                need(3, "a name, a domain and a codomain");
                if (pf.has_mp(tk[1].s))
                    throw ParseError("duplicate map '" + tk[1].s + "'", line_no, tk[1].col);
                if (!pf.has_cx(tk[2].s))
                    throw ParseError("unknown complex '" + tk[2].s + "'", line_no, tk[2].col);
                if (!pf.has_cx(tk[3].s))
                    throw ParseError("unknown complex '" + tk[3].s + "'", line_no, tk[3].col);
                rm = RawMap{};
                rm.name = tk[1].s;
                rm.dom = tk[2].s;
                rm.cod = tk[3].s;
                rm.header_line = line_no;
                mode = Mode::InMap;
            } else if (head == "run") {
                if (tk.size() < 2)
                    throw ParseError("'run' expects a command", line_no, tk[0].col);
                RawCommand cmd;
                cmd.verb = tk[1];
                cmd.args.assign(tk.begin() + 2, tk.end());
                cmd.line = line_no;
                raw_cmds.push_back(std::move(cmd));
            } else {
                throw ParseError("unknown directive '" + head + "'", line_no, tk[0].col);
            }
            continue;
        }

        if (head == "end") {
            if (tk.size() != 1) throw ParseError("'end' takes no arguments", line_no, tk[0].col);
            if (mode == Mode::InAlgebra) {
                pf.A = build_algebra(ra, prime_override);
            } else if (mode == Mode::InComplex) {
                if (!rc.have_degrees)
                    throw ParseError("complex '" + rc.name + "' declares no degrees",
                                     rc.header_line, 1);
                pf.complexes.emplace_back(rc.name, build_complex(pf.A, rc));
            } else {
                pf.maps.emplace_back(rm.name, build_map(pf, rm));
            }
            mode = Mode::Top;
            continue;
        }

        if (mode == Mode::InAlgebra) {
            if (head == "prime") {
                need(1, "one integer");
                ra.prime = parse_int(tk[1], line_no);
                ra.prime_line = line_no;
            } else if (head == "vertices") {
                need(1, "one integer");
                ra.vertices = static_cast<int>(parse_int(tk[1], line_no));
            } else if (head == "arrow") {
                need(3, "a name, a source and a target");
                for (const Arrow& a : ra.arrows)
                    if (a.name == tk[1].s)
                        throw ParseError("duplicate arrow '" + tk[1].s + "'", line_no, tk[1].col);
                Arrow a;
                a.name = tk[1].s;
                a.src = static_cast<int>(parse_int(tk[2], line_no));
                a.tgt = static_cast<int>(parse_int(tk[3], line_no));
                ra.arrows.push_back(std::move(a));
                ra.arrow_lines.push_back(line_no);
            } else if (head == "relation") {
                std::vector<RawRelTerm> terms;
                size_t k = 1;
                while (k < tk.size()) {
                    if (k + 1 >= tk.size())
                        throw ParseError("relation terms are '<coeff> <path>' joined by '+'",
                                         line_no, tk[k].col);
                    RawRelTerm t;
                    t.coeff = parse_int(tk[k], line_no);
                    t.path = tk[k + 1].s;
                    t.line = line_no;
                    t.col = tk[k + 1].col;
                    terms.push_back(std::move(t));
                    k += 2;
                    if (k < tk.size()) {
                        if (tk[k].s != "+")
                            throw ParseError("expected '+' between relation terms", line_no,
                                             tk[k].col);
                        ++k;
                    }
                }
                if (terms.empty())
                    throw ParseError("empty relation", line_no, tk[0].col);
                ra.relations.push_back(std::move(terms));
            } else {
                throw ParseError("unknown algebra directive '" + head + "'", line_no, tk[0].col);
            }
            continue;
        }

        if (mode == Mode::InComplex) {
            if (head == "degrees") {
                need(2, "two integers");
                rc.lo = static_cast<int>(parse_int(tk[1], line_no));
                rc.hi = static_cast<int>(parse_int(tk[2], line_no));
                if (rc.hi < rc.lo - 1)
                    throw ParseError("empty interval must be '<lo> <lo-1>' at worst", line_no,
                                     tk[2].col);
                rc.have_degrees = true;
            } else if (head == "object") {
                if (!rc.have_degrees)
                    throw ParseError("degrees must be declared before objects", line_no,
                                     tk[0].col);
                if (tk.size() < 2)
                    throw ParseError("'object' expects a degree", line_no, tk[0].col);
                int d = static_cast<int>(parse_int(tk[1], line_no));
                if (d < rc.lo || d > rc.hi)
                    throw ParseError("degree " + std::to_string(d) + " is outside [" +
                                         std::to_string(rc.lo) + ", " + std::to_string(rc.hi) +
                                         "]",
                                     line_no, tk[1].col);
                if (rc.objects.count(d))
                    throw ParseError("duplicate object line for degree " + std::to_string(d),
                                     line_no, tk[1].col);
                ProjObj o;
                for (size_t k = 2; k < tk.size(); ++k)
                    o.verts.push_back(parse_vertex(tk[k], pf.A->vertices(), line_no));
                rc.objects[d] = std::move(o);
            } else if (head == "diff") {
                if (!rc.have_degrees)
                    throw ParseError("degrees must be declared before differentials", line_no,
                                     tk[0].col);
                need(5, "degree, row, col, coeff, path");
                RawEntry en;
                en.deg = static_cast<int>(parse_int(tk[1], line_no));
                if (en.deg < rc.lo || en.deg >= rc.hi)
                    throw ParseError("differential degree " + std::to_string(en.deg) +
                                         " is outside [" + std::to_string(rc.lo) + ", " +
                                         std::to_string(rc.hi - 1) + "]",
                                     line_no, tk[1].col);
                long long r = parse_int(tk[2], line_no), c = parse_int(tk[3], line_no);
                if (r < 0 || c < 0)
                    throw ParseError("row and column must be nonnegative", line_no, tk[2].col);
                en.row = static_cast<size_t>(r);
                en.col = static_cast<size_t>(c);
                en.coeff = parse_int(tk[4], line_no);
                en.path = tk[5].s;
                en.line = line_no;
                en.pcol = tk[5].col;
                rc.diffs.push_back(std::move(en));
            } else {
                throw ParseError("unknown complex directive '" + head + "'", line_no, tk[0].col);
            }
            continue;
        }

        // Mode::InMap
        if (head == "entry") {
            need(5, "degree, row, col, coeff, path");
            RawEntry en;
            en.deg = static_cast<int>(parse_int(tk[1], line_no));
            long long r = parse_int(tk[2], line_no), c = parse_int(tk[3], line_no);
            if (r < 0 || c < 0)
                throw ParseError("row and column must be nonnegative", line_no, tk[2].col);
            en.row = static_cast<size_t>(r);
            en.col = static_cast<size_t>(c);
            en.coeff = parse_int(tk[4], line_no);
            en.path = tk[5].s;
            en.line = line_no;
            en.pcol = tk[5].col;
            rm.entries.push_back(std::move(en));
        } else {
            throw ParseError("unknown map directive '" + head + "'", line_no, tk[0].col);
        }
    }

    if (mode != Mode::Top) throw ParseError("unterminated block (missing 'end')", line_no, 1);
    if (!pf.A) throw ParseError("missing algebra block", std::max(line_no, 1), 1);

    for (const RawCommand& cmd : raw_cmds) {
        validate_command(pf, cmd);
        Command c;
        c.verb = cmd.verb.s;
        for (const Token& t : cmd.args) c.args.push_back(t.s);
        c.line = cmd.line;
        pf.commands.push_back(std::move(c));
    }
    return pf;
}

ProblemFile parse_problem_file(const std::string& path, std::optional<uint32_t> prime_override) {
    std::ifstream in(path);
    if (!in) throw CfError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str(), prime_override);
}

// ------------------------------------------------------------- serialization

namespace {

std::vector<MorEntry> dump_entries(const Algebra& A, const ProjMor& m) {
    std::vector<MorEntry> out;
    for (size_t b = 0; b < m.cod.size(); ++b)
        for (size_t a = 0; a < m.dom.size(); ++a) {
            const AlgElem& e = m.at(b, a);
            const std::vector<size_t>& ids = A.paths_from_to(e.cod_v, e.dom_v);
            for (size_t k = 0; k < e.coeffs.size(); ++k)
                if (e.coeffs[k]) out.push_back(MorEntry{b, a, e.coeffs[k], A.path_name(ids[k])});
        }
    return out;
}

} // namespace

std::string serialize_complex(const Algebra& A, const std::string& name, const Complex& Z) {
    std::ostringstream s;
    s << "complex " << name << "\n";
    s << "  degrees " << Z.lo << " " << Z.hi() << "\n";
    for (int i = Z.lo; i <= Z.hi(); ++i) {
        s << "  object " << i;
        for (int v : obj_at(Z, i).verts) s << " P" << v;
        s << "\n";
    }
    for (int i = Z.lo; i < Z.hi(); ++i)
        for (const MorEntry& en : dump_entries(A, diff_at(Z, i)))
            s << "  diff " << i << " " << en.row << " " << en.col << " " << en.coeff << " "
              << en.path << "\n";
    s << "end\n";
    return s.str();
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    out += "\"";
    return out;
}

// ------------------------------------------------------------------ handlers

namespace {

std::string jbool(bool b) { return b ? "true" : "false"; }

template <typename T> std::string jnum(T v) { return std::to_string(v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string jarr(const std::vector<std::string>& elems) { return "[" + join(elems, ",") + "]"; }

std::string jobj(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::vector<std::string> parts;
    for (const auto& p : kv) parts.push_back(json_quote(p.first) + ":" + p.second);
    return "{" + join(parts, ",") + "}";
}

template <typename T> std::string jarr_nums(const std::vector<T>& v) {
    std::vector<std::string> parts;
    for (const T& x : v) parts.push_back(std::to_string(x));
    return jarr(parts);
}

std::string index_list(const std::vector<size_t>& v) {
    if (v.empty()) return "none";
    std::vector<std::string> parts;
    for (size_t x : v) parts.push_back(std::to_string(x));
    return join(parts, " ");
}

// text line and JSON array element for one morphism entry
std::string entry_text(const MorEntry& en) {
    return std::to_string(en.row) + " " + std::to_string(en.col) + " " +
           std::to_string(en.coeff) + " " + en.path;
}

std::string entry_json(const MorEntry& en) {
    return "[" + std::to_string(en.row) + "," + std::to_string(en.col) + "," +
           std::to_string(en.coeff) + "," + json_quote(en.path) + "]";
}

// Decoded degree-0 block data: a map whose domain is a one-degree head
// complex sitting at the bottom of its codomain.
struct HeadMap {
    ProjObj head;
    int head_deg = 0;
    Complex target;
    ProjMor d0;
};

HeadMap decode_head_map(const ProblemFile& pf, const std::string& name) {
    const ChainMap& f = pf.mp(name);
    Complex dom = trim_complex(f.X);
    int nonzero = 0, deg = dom.lo;
    for (int i = dom.lo; i <= dom.hi(); ++i)
        if (obj_at(dom, i).size()) {
            ++nonzero;
            deg = i;
        }
    if (nonzero != 1)
        throw CfError("the domain of '" + name + "' must be a single-degree head");
    Complex cod = trim_complex(f.Y);
    if (!cod.is_zero() && deg != cod.lo)
        throw CfError("the head of '" + name + "' must sit at the bottom degree of its codomain");
    HeadMap hm;
    hm.head = obj_at(dom, deg);
    hm.head_deg = deg;
    hm.target = f.Y;
    hm.d0 = chain_comp_at(f, deg);
    return hm;
}

using Handler = void (*)(const ProblemFile&, const Command&, uint64_t, CommandReport&);

void h_validate(const ProblemFile& pf, const Command& c, uint64_t, CommandReport& r) {
    const Complex& X = pf.cx(c.args[0]);
    validate_complex(X);
    r.text.push_back("valid: true");
    r.text.push_back("interval: [" + std::to_string(X.lo) + ", " + std::to_string(X.hi()) + "]");
    r.text.push_back("display: " + complex_to_string(X));
    r.json.emplace_back("valid", "true");
    r.json.emplace_back("lo", jnum(X.lo));
    r.json.emplace_back("hi", jnum(X.hi()));
    r.json.emplace_back("display", json_quote(complex_to_string(X)));
}

void h_hom(const ProblemFile& pf, const Command& c, uint64_t, CommandReport& r) {
    size_t d = chain_map_space(pf.cx(c.args[0]), pf.cx(c.args[1])).size();
    r.text.push_back("dimension: " + std::to_string(d));
    r.json.emplace_back("dimension", jnum(d));
}

void h_homotopy_hom(const ProblemFile& pf, const Command& c, uint64_t, CommandReport& r) {
    HomotopyHom h = homotopy_category_hom(pf.cx(c.args[0]), pf.cx(c.args[1]));
    r.text.push_back("chain maps: " + std::to_string(h.chain_dim));
    r.text.push_back("null-homotopic: " + std::to_string(h.boundary_dim));
    r.text.push_back("dimension: " + std::to_string(h.dim()));
    r.json.emplace_back("chain_dim", jnum(h.chain_dim));
    r.json.emplace_back("boundary_dim", jnum(h.boundary_dim));
    r.json.emplace_back("dim", jnum(h.dim()));
}

void h_decompose(const ProblemFile& pf, const Command& c, uint64_t seed, CommandReport& r) {
    Decomposition D = decompose(pf.cx(c.args[0]), seed);
    size_t parts = 0;
    for (size_t m : D.multiplicity) parts += m;
    r.text.push_back("parts: " + std::to_string(parts));
    r.text.push_back("classes: " + std::to_string(D.reps.size()));
    std::vector<std::string> classes;
    for (size_t k = 0; k < D.reps.size(); ++k) {
        r.text.push_back("class " + std::to_string(k) + ": multiplicity " +
                         std::to_string(D.multiplicity[k]) + ", " + complex_to_string(D.reps[k]));
        classes.push_back(jobj({{"multiplicity", jnum(D.multiplicity[k])},
                                {"display", json_quote(complex_to_string(D.reps[k]))},
                                {"block", json_quote(serialize_complex(
                                              *pf.A, "class" + std::to_string(k), D.reps[k]))}}));
    }
    r.json.emplace_back("parts", jnum(parts));
    r.json.emplace_back("classes", jarr(classes));
}

void h_diagonalize(const ProblemFile& pf, const Command& c, uint64_t seed, CommandReport& r) {
    DiagonalizeResult d = diagonalize_summand(pf.cx(c.args[0]), pf.cx(c.args[1]), seed);
    const Complex& W = d.view.whole;
    bool off_zero = true;
    for (int i = 1; i < W.hi(); ++i) {
        size_t bi = obj_at(d.view.base, i).size();
        size_t bn = obj_at(d.view.base, i + 1).size();
        const ProjMor& dm = diff_at(W, i);
        for (size_t row = 0; row < dm.cod.size(); ++row)
            for (size_t col = 0; col < dm.dom.size(); ++col) {
                bool base_row = row < bn, base_col = col < bi;
                if (base_row != base_col && !elem_is_zero(dm.at(row, col))) off_zero = false;
            }
    }
    if (!off_zero)
        throw CfError("property violation: off-diagonal blocks are nonzero after diagonalize");
    if (!chain_map_is_iso(d.iso))
        throw CfError("property violation: the diagonalizing map is not an isomorphism");
    r.text.push_back("whole: " + complex_to_string(W));
    r.text.push_back("rest: " + complex_to_string(d.rest));
    r.text.push_back("off-diagonal: zero");
    r.text.push_back("isomorphic: true");
    r.json.emplace_back("whole", json_quote(serialize_complex(*pf.A, "whole", W)));
    r.json.emplace_back("rest", json_quote(serialize_complex(*pf.A, "rest", d.rest)));
    r.json.emplace_back("off_diagonal_zero", "true");
    r.json.emplace_back("isomorphic", "true");
}

void h_enlarge(const ProblemFile& pf, const Command& c, uint64_t seed, CommandReport& r) {
    HeadMap hx = decode_head_map(pf, c.args[0]);
    HeadMap hy = decode_head_map(pf, c.args[1]);
    if (hx.head != hy.head)
        throw CfError("the heads of '" + c.args[0] + "' and '" + c.args[1] + "' differ");
    EnlargementView v =
        build_left_enlargement(hx.target, hy.target, hx.head, hx.d0, hy.d0, seed);
    r.text.push_back("enlargement: " + complex_to_string(v.whole));
    r.text.push_back("indecomposable: true");
    r.json.emplace_back("whole", json_quote(serialize_complex(*pf.A, "whole", v.whole)));
    r.json.emplace_back("indecomposable", "true");
}

void h_summand_test(const ProblemFile& pf, const Command& c, uint64_t, CommandReport& r) {
    HeadMap hx = decode_head_map(pf, c.args[0]);
    HeadMap hy = decode_head_map(pf, c.args[1]);
    if (hx.head != hy.head)
        throw CfError("the heads of '" + c.args[0] + "' and '" + c.args[1] + "' differ");
    SummandTest s = summand_test(hx.target, hy.target, hx.d0, hy.d0);
    r.text.push_back(std::string("summand: ") + (s.has_witness() ? "true" : "false"));
    if (s.has_witness()) {
        const ChainMap& g = *s.witness;
        std::vector<std::string> arr;
        for (int i = g.lo; i <= std::max(g.X.hi(), g.Y.hi()); ++i)
            for (const MorEntry& en : dump_entries(*pf.A, chain_comp_at(g, i))) {
                r.text.push_back("witness " + std::to_string(i) + " " + entry_text(en));
                arr.push_back("[" + std::to_string(i) + "," + entry_json(en).substr(1));
            }
        r.json.emplace_back("summand", "true");
        r.json.emplace_back("witness", jarr(arr));
    } else {
        r.json.emplace_back("summand", "false");
    }
}

void h_indec_diagonal(const ProblemFile& pf, const Command& c, uint64_t seed, CommandReport& r) {
    std::vector<Complex> parts;
    std::vector<ProjMor> d0s;
    ProjObj head;
    for (size_t k = 0; k < c.args.size(); ++k) {
        HeadMap hm = decode_head_map(pf, c.args[k]);
        if (k == 0)
            head = hm.head;
        else if (hm.head != head)
            throw CfError("the heads of '" + c.args[0] + "' and '" + c.args[k] + "' differ");
        parts.push_back(hm.target);
        d0s.push_back(hm.d0);
    }
    DiagonalIndecResult d = diagonal_indecomposability(head, parts, d0s, seed);
    r.text.push_back(std::string("indecomposable: ") + (d.indecomposable ? "true" : "false"));
    r.text.push_back("parts: " + std::to_string(d.total_parts));
    r.text.push_back("split parts: " + index_list(d.split_parts));
    r.json.emplace_back("indecomposable", jbool(d.indecomposable));
    r.json.emplace_back("total_parts", jnum(d.total_parts));
    r.json.emplace_back("split_parts", jarr_nums(d.split_parts));
}

void h_candidate_z0(const ProblemFile& pf, const Command& c, uint64_t, CommandReport& r) {
    CandidateZ0 cz = candidate_Z0(pf.cx(c.args[0]));
    r.text.push_back("cover: " + obj_to_string(cz.cover));
    r.text.push_back(std::string("kernel zero: ") + (cz.kernel_is_zero ? "true" : "false"));
    std::vector<std::string> mults;
    for (size_t m : cz.socle_mult) mults.push_back(std::to_string(m));
    r.text.push_back("socle multiplicities: " + join(mults, " "));
    r.json.emplace_back("cover", jarr_nums(cz.cover.verts));
    r.json.emplace_back("kernel_is_zero", jbool(cz.kernel_is_zero));
    r.json.emplace_back("socle_multiplicities", jarr_nums(cz.socle_mult));
}

void h_d0_shape(const ProblemFile& pf, const Command& c, uint64_t seed, CommandReport& r) {
    HeadMap a = decode_head_map(pf, c.args[0]);
    HeadMap b = decode_head_map(pf, c.args[1]);
    HeadMap cc = decode_head_map(pf, c.args[2]);
    HeadMap d = decode_head_map(pf, c.args[3]);
    if (a.head != b.head || cc.head != d.head)
        throw CfError("d0-shape: the two blocks of each head row must share their domain");
    if (!complex_equal(a.target, cc.target) || !complex_equal(b.target, d.target))
        throw CfError("d0-shape: the two blocks of each column must share their codomain");
    D0ShapeReport rep =
        d0_shape_check(a.head, cc.head, a.target, b.target, a.d0, b.d0, cc.d0, d.d0, seed);
    r.text.push_back("verdict: " + rep.verdict);
    r.text.push_back("pattern: " + std::to_string(rep.pattern));
    r.text.push_back(std::string("zero blocks: a=") + (rep.a_zero ? "true" : "false") +
                     " b=" + (rep.b_zero ? "true" : "false") +
                     " c=" + (rep.c_zero ? "true" : "false") +
                     " d=" + (rep.d_zero ? "true" : "false"));
    r.text.push_back(std::string("indecomposable: ") + (rep.indecomposable ? "true" : "false"));
    r.text.push_back(std::string("hypothesis: ") + (rep.hypothesis_ok ? "true" : "false"));
    r.json.emplace_back("verdict", json_quote(rep.verdict));
    r.json.emplace_back("pattern", jnum(rep.pattern));
    r.json.emplace_back("a_zero", jbool(rep.a_zero));
    r.json.emplace_back("b_zero", jbool(rep.b_zero));
    r.json.emplace_back("c_zero", jbool(rep.c_zero));
    r.json.emplace_back("d_zero", jbool(rep.d_zero));
    r.json.emplace_back("indecomposable", jbool(rep.indecomposable));
    r.json.emplace_back("hypothesis_ok", jbool(rep.hypothesis_ok));
}

void h_classify_indec(const ProblemFile& pf, const Command& c, uint64_t seed, CommandReport& r) {
    int n = std::stoi(c.args[1]);
    Classification cl = classify_indecomposable(pf.cx(c.args[0]), n, seed);
    if (cl.kind == Classification::Kind::Shift) {
        r.text.push_back("kind: shift");
        r.text.push_back("shift by: " + std::to_string(cl.shift_by));
        r.text.push_back("base: " + complex_to_string(cl.base));
        r.json.emplace_back("kind", json_quote("shift"));
        r.json.emplace_back("shift_by", jnum(cl.shift_by));
        r.json.emplace_back("base", json_quote(serialize_complex(*pf.A, "base", cl.base)));
    } else {
        r.text.push_back("kind: left-enlargement");
        r.text.push_back("bases: " + std::to_string(cl.bases.size()));
        std::vector<std::string> arr;
        for (size_t k = 0; k < cl.bases.size(); ++k) {
            r.text.push_back("base " + std::to_string(k) + ": multiplicity " +
                             std::to_string(cl.base_multiplicity[k]) + ", " +
                             complex_to_string(cl.bases[k]));
            arr.push_back(
                jobj({{"multiplicity", jnum(cl.base_multiplicity[k])},
                      {"display", json_quote(complex_to_string(cl.bases[k]))},
                      {"block", json_quote(serialize_complex(
                                    *pf.A, "base" + std::to_string(k), cl.bases[k]))}}));
        }
        r.json.emplace_back("kind", json_quote("left-enlargement"));
        r.json.emplace_back("bases", jarr(arr));
    }
}

void h_split_common(const ProblemFile& pf, const Command& c, uint64_t, CommandReport& r) {
    CommonSplit cs = split_common(pf.mp(c.args[0]));
    std::vector<std::string> degs;
    for (size_t k = 0; k < cs.degrees.size(); ++k) {
        const DegreeSplit& s = cs.degrees[k];
        int deg = cs.lo + static_cast<int>(k);
        r.text.push_back("degree " + std::to_string(deg) + ": common " +
                         obj_to_string(s.common) + ", dom rest " + index_list(s.dom_rest) +
                         ", cod rest " + index_list(s.cod_rest));
        std::vector<std::string> res;
        for (const MorEntry& en : dump_entries(*pf.A, s.residual)) {
            r.text.push_back("residual " + std::to_string(deg) + " " + entry_text(en));
            res.push_back(entry_json(en));
        }
        degs.push_back(jobj({{"degree", jnum(deg)},
                             {"common", jarr_nums(s.common.verts)},
                             {"dom_rest", jarr_nums(s.dom_rest)},
                             {"cod_rest", jarr_nums(s.cod_rest)},
                             {"residual", jarr(res)}}));
    }
    r.json.emplace_back("lo", jnum(cs.lo));
    r.json.emplace_back("degrees", jarr(degs));
}

void h_classify_map(const ProblemFile& pf, const Command& c, uint64_t seed, CommandReport& r) {
    ClassificationResult cl = classify_method(pf.mp(c.args[0]), seed);
    r.text.push_back(std::string("kind: ") + map_kind_name(cl.kind));
    r.text.push_back("pivot: " + (cl.pivot ? std::to_string(*cl.pivot) : std::string("none")));
    std::vector<std::string> comps;
    for (size_t k = 0; k < cl.entry_types.size(); ++k) {
        int deg = cl.lo + static_cast<int>(k);
        r.text.push_back("component " + std::to_string(deg) + ": " +
                         entry_type_name(cl.entry_types[k]));
        comps.push_back(jobj({{"degree", jnum(deg)},
                              {"type", json_quote(entry_type_name(cl.entry_types[k]))}}));
    }
    r.json.emplace_back("kind", json_quote(map_kind_name(cl.kind)));
    r.json.emplace_back("pivot", cl.pivot ? jnum(*cl.pivot) : std::string("null"));
    r.json.emplace_back("components", jarr(comps));
}

void h_check_f_shape(const ProblemFile& pf, const Command& c, uint64_t seed, CommandReport& r) {
    FShapeReport rep = check_F_shape(pf.mp(c.args[0]), seed);
    r.text.push_back("note: " + rep.note);
    r.text.push_back(std::string("shape confirmed: ") + (rep.shape_confirmed ? "true" : "false"));
    r.text.push_back(std::string("common equals base: ") +
                     (rep.common_is_base ? "true" : "false"));
    r.text.push_back(std::string("residual radical: ") +
                     (rep.residual_radical ? "true" : "false"));
    r.text.push_back(std::string("degenerate: ") + (rep.degenerate ? "true" : "false"));
    r.text.push_back(std::string("section-like: ") + (rep.section_like ? "true" : "false"));
    r.text.push_back(std::string("retraction-like: ") + (rep.retraction_like ? "true" : "false"));
    r.text.push_back("base: " + complex_to_string(rep.base));
    r.text.push_back("dom rest: " + complex_to_string(rep.dom_rest));
    r.text.push_back("cod rest: " + complex_to_string(rep.cod_rest));
    std::vector<std::string> res;
    const ChainMap& g = rep.residual;
    for (int i = g.lo; i <= std::max(g.X.hi(), g.Y.hi()); ++i)
        for (const MorEntry& en : dump_entries(*pf.A, chain_comp_at(g, i))) {
            r.text.push_back("residual " + std::to_string(i) + " " + entry_text(en));
            res.push_back("[" + std::to_string(i) + "," + entry_json(en).substr(1));
        }
    r.json.emplace_back("note", json_quote(rep.note));
    r.json.emplace_back("shape_confirmed", jbool(rep.shape_confirmed));
    r.json.emplace_back("common_is_base", jbool(rep.common_is_base));
    r.json.emplace_back("residual_radical", jbool(rep.residual_radical));
    r.json.emplace_back("degenerate", jbool(rep.degenerate));
    r.json.emplace_back("section_like", jbool(rep.section_like));
    r.json.emplace_back("retraction_like", jbool(rep.retraction_like));
    r.json.emplace_back("base", json_quote(serialize_complex(*pf.A, "base", rep.base)));
    r.json.emplace_back("dom_rest",
                        json_quote(serialize_complex(*pf.A, "dom_rest", rep.dom_rest)));
    r.json.emplace_back("cod_rest",
                        json_quote(serialize_complex(*pf.A, "cod_rest", rep.cod_rest)));
    r.json.emplace_back("residual", jarr(res));
}

void h_refute_irreducible(const ProblemFile& pf, const Command& c, uint64_t, CommandReport& r) {
    WitnessReport w =
        verify_nonirreducible_witness(pf.mp(c.args[0]), pf.mp(c.args[1]), pf.mp(c.args[2]));
    r.text.push_back("verdict: " + w.verdict);
    r.text.push_back(std::string("witnessed: ") + (w.witnessed ? "true" : "false"));
    r.text.push_back(std::string("h1 section: ") + (w.h1_section ? "true" : "false"));
    r.text.push_back(std::string("h2 retraction: ") + (w.h2_retraction ? "true" : "false"));
    r.json.emplace_back("verdict", json_quote(w.verdict));
    r.json.emplace_back("witnessed", jbool(w.witnessed));
    r.json.emplace_back("h1_section", jbool(w.h1_section));
    r.json.emplace_back("h2_retraction", jbool(w.h2_retraction));
}

void h_restrict(const ProblemFile& pf, const Command& c, uint64_t, CommandReport& r) {
    RestrictionType t =
        restriction_type(pf.mp(c.args[0]), std::stoi(c.args[1]), std::stoi(c.args[2]));
    r.text.push_back(std::string("type: ") + restriction_type_name(t));
    r.json.emplace_back("type", json_quote(restriction_type_name(t)));
}

struct VerbHandler {
    const char* verb;
    Handler fn;
};

const VerbHandler kHandlers[] = {
    {"validate", h_validate},
    {"hom", h_hom},
    {"homotopy-hom", h_homotopy_hom},
    {"decompose", h_decompose},
    {"diagonalize", h_diagonalize},
    {"enlarge", h_enlarge},
    {"summand-test", h_summand_test},
    {"indec-diagonal", h_indec_diagonal},
    {"candidate-z0", h_candidate_z0},
    {"d0-shape", h_d0_shape},
    {"classify-indec", h_classify_indec},
    {"split-common", h_split_common},
    {"classify-map", h_classify_map},
    {"check-f-shape", h_check_f_shape},
    {"refute-irreducible", h_refute_irreducible},
    {"restrict", h_restrict},
};

bool is_property_violation(const std::string& msg) {
    return msg.find("internal check failed") != std::string::npos ||
           msg.find("cone decomposed") != std::string::npos ||
           msg.find("property violation") != std::string::npos;
}

} // namespace

// ------------------------------------------------------------------- running

Report run_problem(const ProblemFile& pf, uint64_t seed) {
    Report rep;
    for (const Command& c : pf.commands) {
        CommandReport cr;
        cr.heading = c.verb;
        for (const std::string& a : c.args) cr.heading += " " + a;
        Handler fn = nullptr;
        for (const VerbHandler& h : kHandlers)
            if (c.verb == h.verb) fn = h.fn;
        auto t0 = std::chrono::steady_clock::now();
        try {
            if (!fn) throw CfError("unknown command '" + c.verb + "'");
            fn(pf, c, seed, cr);
        } catch (const CfError& e) {
            cr.ok = false;
            cr.error = e.what();
            cr.property_violation = is_property_violation(cr.error);
            cr.text.clear();
            cr.json.clear();
        }
        auto t1 = std::chrono::steady_clock::now();
        cr.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rep.commands.push_back(std::move(cr));
    }
    rep.exit_code = 0;
    for (const CommandReport& cr : rep.commands)
        if (!cr.ok) rep.exit_code = std::max(rep.exit_code, cr.property_violation ? 3 : 2);
    return rep;
}

// ----------------------------------------------------------------- rendering

std::string Report::render_text(const ProblemFile& pf) const {
    std::ostringstream s;
    s << "cforge report\n";
    s << "algebra: p=" << pf.A->field().p() << " vertices=" << pf.A->vertices()
      << " arrows=" << pf.A->arrows().size() << "\n";
    s << "complexes: " << pf.complexes.size() << " maps: " << pf.maps.size()
      << " commands: " << commands.size() << "\n";
    for (size_t k = 0; k < commands.size(); ++k) {
        const CommandReport& cr = commands[k];
        s << "\n== " << (k + 1) << " " << cr.heading << "\n";
        s << "status: " << (cr.ok ? "ok" : (cr.property_violation ? "property-violation"
                                                                  : "error"))
          << "\n";
        if (cr.ok)
            for (const std::string& line : cr.text) s << line << "\n";
        else
            s << "error: " << cr.error << "\n";
    }
    s << "\nexit: " << exit_code << "\n";
    return s.str();
}

std::string Report::render_json(const ProblemFile& pf) const {
    std::vector<std::string> arrows;
    for (const Arrow& a : pf.A->arrows())
        arrows.push_back("[" + json_quote(a.name) + "," + std::to_string(a.src) + "," +
                         std::to_string(a.tgt) + "]");
    std::vector<std::string> cmds;
    for (size_t k = 0; k < commands.size(); ++k) {
        const CommandReport& cr = commands[k];
        std::vector<std::pair<std::string, std::string>> kv;
        kv.emplace_back("index", std::to_string(k + 1));
        kv.emplace_back("command", json_quote(cr.heading));
        kv.emplace_back("status", json_quote(cr.ok ? "ok" : "error"));
        if (cr.ok) {
            kv.emplace_back("result", jobj(cr.json));
        } else {
            kv.emplace_back("error", json_quote(cr.error));
            kv.emplace_back("property_violation", jbool(cr.property_violation));
        }
        cmds.push_back(jobj(kv));
    }
    std::string alg = jobj({{"prime", std::to_string(pf.A->field().p())},
                            {"vertices", std::to_string(pf.A->vertices())},
                            {"arrows", jarr(arrows)}});
    return jobj({{"algebra", alg},
                 {"complexes", std::to_string(pf.complexes.size())},
                 {"maps", std::to_string(pf.maps.size())},
                 {"commands", jarr(cmds)},
                 {"exit", std::to_string(exit_code)}}) +
           "\n";
}

} // namespace cforge
