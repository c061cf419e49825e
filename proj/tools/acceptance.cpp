// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any criterion fails.
#include <cstdio>

#include "CLI11.hpp"
#include "quivq/acceptance.hpp"
#include "quivq/random.hpp"

int main(int argc, char** argv) {
    CLI::App app{"quivq acceptance criteria"};
    quivq::AcceptanceOptions opts;
    opts.seed = quivq::kDefaultSeed;
    bool verbose = false;
    app.add_option("--seed", opts.seed, "sampler seed");
    app.add_option("--filter", opts.filter, "run only criteria whose tag contains this");
    app.add_flag("-v,--verbose", verbose, "list every item");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (const auto& c : quivq::run_acceptance(opts)) {
        bool pass = c.pass();
        all = all && pass;
        std::size_t ok = 0;
        for (const auto& it : c.items) ok += it.pass;
        std::printf("%s %d %s (%zu/%zu items, %.2fs, budget %.0fs)\n", pass ? "PASS" : "FAIL", c.criterion,
                    c.title.c_str(), ok, c.items.size(), c.seconds, c.budget);
        for (const auto& it : c.items) {
            if (!verbose && it.pass) continue;
            std::printf("    %s %s%s%s\n", it.pass ? "ok  " : "FAIL", it.name.c_str(), it.detail.empty() ? "" : ": ",
                        it.detail.c_str());
        }
    }
    return all ? 0 : 1;
}
