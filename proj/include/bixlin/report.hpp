#pragma once

// Rendering (text/csv/json), appendix table regeneration, chain sweeps, and
// the self-verification pass (exact identity, oracle minimality, closed-form
// vs recursion agreement).

#include <string>
#include <vector>

#include "bixlin/snc.hpp"

namespace bixlin {

enum class Format { text, csv, json };

Format format_from_str(const std::string& s);

std::string render_chain(const ChainReport& rep, Format f);
ChainReport parse_chain_json(const std::string& text);

// --- appendix tables ---

struct AppendixRow {
    CFWord word;
    long m;
    Int alpha, beta;
    Int k1, k2, k3;  // family-signed raw vector, as printed in the tables
    CoeffVector family_coeffs;
    int family_sign;
};

struct AppendixBlock {
    std::vector<std::string> header_lines;
    std::vector<AppendixRow> rows;
};

struct AppendixSection {
    std::string id;  // "a1".."a4"
    std::string title;
    std::vector<AppendixBlock> blocks;
};

AppendixSection appendix_section(const std::string& id, long smoothness = 1);
std::vector<AppendixSection> appendix_sections(const std::string& selector, long smoothness = 1);
std::string render_appendix(const std::vector<AppendixSection>& sections, Format f);

// --- sweeps ---

struct SweepRow {
    std::vector<long> period;
    bool admissible = false;
    long base_count = 0;
    std::vector<std::string> blocked_words;
    long gcd_anomalies = 0;  // base points whose raw k had a common factor
};

struct SweepOptions {
    long max_period_len = 2;
    long max_entry = 3;
    long min_entry = 1;
    bool admissible_only = false;
    long smoothness = 1;
};

std::vector<SweepRow> sweep(const SweepOptions& opt);
std::string render_sweep(const std::vector<SweepRow>& rows, Format f);

// --- verification ---

struct VerifyOptions {
    long oracle_order = 30;
    std::string section = "all";
    long smoothness = 1;
};

struct VerifyResult {
    bool ok = false;
    int exit_code = 0;  // 0 ok, 1 verification failure, 2 configuration error
    long rows_total = 0;
    long rows_confirmed = 0;  // oracle minimality fully confirmed
    long rows_bounded = 0;    // reduced order beyond the oracle bound
    std::string log;
};

VerifyResult run_verify(const VerifyOptions& opt);

constexpr long kDefaultOracleOrder = 30;

}  // namespace bixlin
