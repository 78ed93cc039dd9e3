// cforge: batch front-end for the chain-complex toolkit.
//
//   cforge run <file> [--prime P] [--seed N] [--json]
//   cforge fixtures list
//
// The report goes to standard output and is byte-for-byte deterministic for
// identical inputs; per-command timings and diagnostics go to standard
// error.  Exit codes: 0 success, 1 usage/parse error, 2 a command failed,
// 3 an after-the-fact engine check failed (property violation).

#include "cforge/problem.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace cforge;

namespace {

int usage() {
    std::cerr << "usage: cforge run <file> [--prime P] [--seed N] [--json]\n"
              << "       cforge fixtures list\n";
    return 1;
}

std::vector<fs::path> fixture_dir_candidates(const char* argv0) {
    std::vector<fs::path> cands;
    if (const char* env = std::getenv("CFORGE_FIXTURES")) cands.emplace_back(env);
    cands.emplace_back("fixtures");
    std::error_code ec;
    fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (ec && argv0 && *argv0) exe = fs::path(argv0);
    if (!exe.empty()) {
        cands.push_back(exe.parent_path() / "fixtures");
        cands.push_back(exe.parent_path().parent_path() / "fixtures");
    }
    return cands;
}

int list_fixtures(const char* argv0) {
    for (const fs::path& dir : fixture_dir_candidates(argv0)) {
        std::error_code ec;
        if (!fs::is_directory(dir, ec)) continue;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir, ec))
            if (entry.path().extension() == ".cforge") files.push_back(entry.path());
        if (ec) continue;
        std::sort(files.begin(), files.end(),
                  [](const fs::path& a, const fs::path& b) { return a.stem() < b.stem(); });
        for (const fs::path& f : files)
            std::cout << f.stem().string() << ": " << f.string() << "\n";
        return 0;
    }
    std::cerr << "cforge: no fixtures directory found (set CFORGE_FIXTURES or run from the "
                 "repository root)\n";
    return 1;
}

int run_file(int argc, char** argv) {
    std::string file;
    std::optional<uint32_t> prime;
    uint64_t seed = kDefaultSeed;
    bool json = false;
    for (int i = 2; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--json") {
            json = true;
        } else if (a == "--prime" || a == "--seed") {
            if (i + 1 >= argc) return usage();
            char* end = nullptr;
            unsigned long long v = std::strtoull(argv[++i], &end, 10);
            if (!end || *end) return usage();
            if (a == "--prime")
                prime = static_cast<uint32_t>(v);
            else
                seed = v;
        } else if (!a.empty() && a[0] == '-') {
            return usage();
        } else if (file.empty()) {
            file = a;
        } else {
            return usage();
        }
    }
    if (file.empty()) return usage();

    ProblemFile pf;
    try {
        pf = parse_problem_file(file, prime);
    } catch (const CfError& e) {
        // ParseError messages already carry "line L, column C"
        std::cerr << file << ": error: " << e.what() << "\n";
        return 1;
    }

    Report rep = run_problem(pf, seed);
    std::cout << (json ? rep.render_json(pf) : rep.render_text(pf));
    for (size_t k = 0; k < rep.commands.size(); ++k)
        std::fprintf(stderr, "timing: %zu %s %.3f ms\n", k + 1,
                     rep.commands[k].heading.c_str(), rep.commands[k].ms);
    return rep.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage();
    std::string mode = argv[1];
    if (mode == "run") return run_file(argc, argv);
    if (mode == "fixtures") {
        if (argc != 3 || std::strcmp(argv[2], "list") != 0) return usage();
        return list_fixtures(argv[0]);
    }
    return usage();
}
