// bixlin: admissibility of Takens linearization for periodic heteroclinic
// chains in Bianchi IX, via exact continued-fraction and resonance data.
//
// Exit codes for `analyze`: 0 admissible, 1 blocked, 2 input error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bixlin/report.hpp"

namespace {

using namespace bixlin;

int cmd_analyze(const std::string& cf, long smoothness, const std::string& format) {
    Format f = format_from_str(format);
    CFWord word = canonicalize(CFWord::parse(cf));
    ChainReport rep;
    if (word.purely_periodic()) {
        rep = chain_verdict(word.period, smoothness);
    } else {
        // Genuinely pre-periodic word: report this single base point.
        rep.period = word.period;
        rep.smoothness = smoothness;
        rep.base_reports.push_back(basepoint_verdict(word, smoothness));
        rep.admissible = rep.base_reports.front().linearizable;
    }
    std::cout << render_chain(rep, f);
    return rep.admissible ? 0 : 1;
}

int cmd_appendix(const std::string& section, long smoothness, const std::string& format) {
    std::cout << render_appendix(appendix_sections(section, smoothness), format_from_str(format));
    return 0;
}

int cmd_sweep(const SweepOptions& opt, const std::string& format) {
    std::cout << render_sweep(sweep(opt), format_from_str(format));
    return 0;
}

int cmd_verify(const VerifyOptions& opt) {
    VerifyResult res = run_verify(opt);
    std::cout << res.log;
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Takens-linearization admissibility for Bianchi IX periodic chains"};
    app.require_subcommand(1);

    std::string cf;
    long smoothness = 1;
    std::string format = "text";

    CLI::App* analyze = app.add_subcommand("analyze", "verdict for a chain or base point");
    analyze->add_option("--cf", cf, "word: 'a,b' periodic or 'm;a,b' pre-periodic")->required();
    analyze->add_option("--smoothness", smoothness, "smoothness parameter (default 1)");
    analyze->add_option("--format", format, "text|csv|json");

    std::string section = "all";
    CLI::App* appendix = app.add_subcommand("appendix", "regenerate the appendix tables");
    appendix->add_option("--section", section, "a1|a2|a3|a4|all");
    appendix->add_option("--smoothness", smoothness, "smoothness parameter (default 1)");
    appendix->add_option("--format", format, "text|csv|json");

    SweepOptions sopt;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verdicts over period words");
    sweep_cmd->add_option("--max-period", sopt.max_period_len, "max period length (1..4)")
        ->required();
    sweep_cmd->add_option("--max-entry", sopt.max_entry, "max entry value (1..30)")->required();
    sweep_cmd->add_option("--min-entry", sopt.min_entry, "min entry value (default 1)");
    sweep_cmd->add_flag("--admissible-only", sopt.admissible_only, "keep admissible chains only");
    sweep_cmd->add_option("--smoothness", sopt.smoothness, "smoothness parameter (default 1)");
    sweep_cmd->add_option("--format", format, "text|csv|json");

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "identity/oracle/coefficient checks");
    verify->add_option("--oracle-order", vopt.oracle_order, "brute-force bound (default 30)");
    verify->add_option("--section", vopt.section, "a1|a2|a3|a4|all");
    verify->add_option("--smoothness", vopt.smoothness, "smoothness parameter (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(cf, smoothness, format);
        if (*appendix) return cmd_appendix(section, smoothness, format);
        if (*sweep_cmd) return cmd_sweep(sopt, format);
        if (*verify) return cmd_verify(vopt);
    } catch (const bixlin::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const bixlin::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const bixlin::TaubPointError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const bixlin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
