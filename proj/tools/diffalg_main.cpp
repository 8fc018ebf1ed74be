#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>

#include "diffalg/scenario.hpp"

namespace {

const char* const kCorpusFiles[] = {"ex3_1.scn",  "ex3_3.scn",  "ex3_4.scn", "ex3_6a.scn",
                                    "ex3_6b.scn", "ex4_3.scn",  "ex4_7q.scn",
                                    "ex4_11.scn", "ex4_13.scn", "ex4_14.scn"};

std::string resolve_corpus_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DIFFALG_SCENARIO_DIR")) return env;
#ifdef DIFFALG_DEFAULT_CORPUS_DIR
    if (std::filesystem::exists(DIFFALG_DEFAULT_CORPUS_DIR)) return DIFFALG_DEFAULT_CORPUS_DIR;
#endif
    return "scenarios";
}

int print_report(const diffalg::Report& report, bool machine) {
    std::cout << (machine ? report.machine_text() : report.human_text());
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diffalg: exact verification engine for derivations, differentials and "
                 "homological invariants of quotient rings"};
    app.require_subcommand(1);

    diffalg::RunOptions options;
    long bound = 12;
    int ext_bound = -1;
    int frobenius_max = 3;
    bool machine = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--bound", bound, "graded degree bound (scaled by the max weight)");
        cmd->add_option("--ext-bound", ext_bound,
                        "Ext vanishing bound (default: 10 artinian, 5 graded)");
        cmd->add_option("--frobenius-max", frobenius_max, "largest Frobenius iterate checked");
        cmd->add_flag("--machine", machine, "emit the machine-readable report");
    };

    std::string file;
    CLI::App* run = app.add_subcommand("run", "run one scenario file");
    run->add_option("file", file, "scenario file")->required();
    add_common(run);

    std::string dir;
    CLI::App* corpus = app.add_subcommand("corpus", "run the shipped golden corpus");
    corpus->add_option("--dir", dir, "directory holding the corpus scenarios");
    add_common(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    options.bound = bound;
    if (ext_bound > 0) {
        options.ext_bound_artinian = ext_bound;
        options.ext_bound_graded = ext_bound;
    }
    options.frobenius_max = frobenius_max;

    try {
        if (run->parsed()) {
            diffalg::Scenario s = diffalg::parse_scenario_file(file);
            return print_report(diffalg::run_scenario(s, options), machine);
        }
        // corpus: scenarios run concurrently, reports printed in order
        std::string base = resolve_corpus_dir(dir);
        std::vector<std::future<diffalg::Report>> futures;
        for (const char* name : kCorpusFiles) {
            std::string path = base + "/" + name;
            futures.push_back(std::async(std::launch::async, [path, options] {
                return diffalg::run_scenario(diffalg::parse_scenario_file(path), options);
            }));
        }
        int exit_code = 0;
        for (auto& f : futures)
            if (print_report(f.get(), machine) != 0) exit_code = 1;
        if (!machine) std::cout << (exit_code == 0 ? "corpus: PASS\n" : "corpus: FAIL\n");
        return exit_code;
    } catch (const diffalg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const diffalg::algebra_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
