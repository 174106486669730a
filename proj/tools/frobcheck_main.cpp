#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "frobcheck/dsl.hpp"
#include "frobcheck/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"frobcheck: exact verification of Frobenius monoidal structure"};
    app.require_subcommand(1);

    std::string file;
    std::string report_mode = "text";
    size_t max_dim = 0;
    bool fail_fast = false;

    CLI::App* run = app.add_subcommand("run", "parse a spec file and run its checks");
    run->add_option("file", file, "spec file to run")->required();
    run->add_option("--report", report_mode, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    CLI::Option* md_opt = run->add_option("--max-dim", max_dim, "cap on grid dimensions");
    run->add_flag("--fail-fast", fail_fast, "stop at the first fail or error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (md_opt->count() == 0) {
        if (const char* env = std::getenv("FROBCHECK_MAX_DIM")) {
            char* end = nullptr;
            const unsigned long v = std::strtoul(env, &end, 10);
            if (end == env || *end != '\0') {
                std::cerr << "frobcheck: FROBCHECK_MAX_DIM is not a number: " << env << "\n";
                return 2;
            }
            max_dim = static_cast<size_t>(v);
        }
    }

    std::ifstream in(file);
    if (!in) {
        std::cerr << "frobcheck: cannot open " << file << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    try {
        const frobcheck::SpecModel model = frobcheck::parse_spec(buf.str());
        frobcheck::RunOptions opts;
        opts.max_dim = max_dim;
        opts.fail_fast = fail_fast;
        const frobcheck::Report rep = frobcheck::run_checks(model, opts);
        std::cout << frobcheck::format_report(rep, report_mode);
        return frobcheck::exit_code_for(rep);
    } catch (const frobcheck::ParseError& ex) {
        std::cerr << "frobcheck: " << file << ": " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "frobcheck: " << ex.what() << "\n";
        return 2;
    }
}
