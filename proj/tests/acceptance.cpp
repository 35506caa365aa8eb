// Release gate: runs the twelve acceptance checks and prints one line each.
// Exit 0 when all pass, 1 otherwise. --quick shrinks the heaviest sweeps.
#include "omegacalc/verify.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            quick = true;
        } else {
            std::fprintf(stderr, "usage: acceptance [--quick]\n");
            return 2;
        }
    }
    bool all = true;
    for (const auto& r : omegacalc::run_all(quick)) {
        std::printf("%s %2d %-30s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "all acceptance checks passed" : "ACCEPTANCE FAILURES PRESENT");
    return all ? 0 : 1;
}
