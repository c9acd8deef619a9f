#include <regex>
#include <set>
#include <sstream>

#include "bixlin/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bixlin;
using nlohmann::json;

namespace {

bool base_reports_equal(const BasePointReport& a, const BasePointReport& b) {
    return a.word == b.word && a.u_value == b.u_value && a.c_raw == b.c_raw &&
           a.c_reduced == b.c_reduced && a.k_raw == b.k_raw && a.k_reduced == b.k_reduced &&
           a.common_factor == b.common_factor && a.order == b.order &&
           a.rsc_holds == b.rsc_holds && a.alpha == b.alpha && a.beta == b.beta &&
           a.linearizable == b.linearizable && a.reason == b.reason &&
           a.boundary == b.boundary && a.rsc_zero_component == b.rsc_zero_component;
}

std::vector<long> extract_longs(const std::string& text, const std::regex& re) {
    std::vector<long> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
         it != std::sregex_iterator(); ++it)
        out.push_back(std::stol((*it)[1]));
    return out;
}

}  // namespace

TEST_CASE("json rendering round-trips field for field") {
    for (const std::vector<long>& period :
         {std::vector<long>{2, 3}, std::vector<long>{3}, std::vector<long>{1, 1, 2}}) {
        ChainReport rep = chain_verdict(period, 1);
        std::string text = render_chain(rep, Format::json);
        ChainReport back = parse_chain_json(text);
        CHECK(back.period == rep.period);
        CHECK(back.smoothness == rep.smoothness);
        CHECK(back.admissible == rep.admissible);
        CHECK(back.def33 == rep.def33);
        REQUIRE(back.base_reports.size() == rep.base_reports.size());
        for (std::size_t i = 0; i < rep.base_reports.size(); ++i)
            CHECK(base_reports_equal(back.base_reports[i], rep.base_reports[i]));
        CHECK(render_chain(back, Format::json) == text);
    }
}

TEST_CASE("text, csv and json carry the same numeric content") {
    ChainReport rep = chain_verdict({2, 4}, 1);
    std::string text = render_chain(rep, Format::text);
    std::string csv = render_chain(rep, Format::csv);
    json j = json::parse(render_chain(rep, Format::json));

    std::vector<long> text_alpha = extract_longs(text, std::regex("alpha=(-?\\d+)"));
    std::vector<long> text_order = extract_longs(text, std::regex("order=(-?\\d+)"));
    REQUIRE(text_alpha.size() == rep.base_reports.size());

    std::vector<long> json_alpha, json_order, csv_alpha, csv_order;
    for (const json& p : j.at("base_points")) {
        json_alpha.push_back(p.at("alpha").get<long>());
        json_order.push_back(p.at("order").get<long>());
    }
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::string cell;
        bool quoted = false;
        for (char ch : line) {
            if (ch == '"') quoted = !quoted;
            else if (ch == ',' && !quoted) { cells.push_back(cell); cell.clear(); }
            else cell += ch;
        }
        cells.push_back(cell);
        REQUIRE(cells.size() == 21);
        csv_alpha.push_back(std::stol(cells[16]));
        csv_order.push_back(std::stol(cells[14]));
    }
    CHECK(text_alpha == json_alpha);
    CHECK(text_alpha == csv_alpha);
    CHECK(text_order == json_order);
    CHECK(text_order == csv_order);
}

TEST_CASE("appendix spot values") {
    AppendixSection a1 = appendix_section("a1");
    REQUIRE(a1.blocks.size() == 9);
    const AppendixRow& a9m4 = a1.blocks[8].rows[3];
    CHECK(a9m4.alpha == 38);
    CHECK(a9m4.beta == 6);
    CHECK(a9m4.k1 == 21);
    CHECK(a9m4.k2 == 21);
    CHECK(a9m4.k3 == -1);

    AppendixSection a3 = appendix_section("a3");
    // consistency block a=b=c=3, first variant, m=2
    const AppendixRow& c3m2 = a3.blocks[9].rows[1];
    CHECK(c3m2.alpha == 19);
    CHECK(c3m2.beta == 4);
    CHECK(c3m2.k1 == -10);
    CHECK(c3m2.k2 == -30);
    CHECK(c3m2.k3 == 10);

    AppendixSection a4 = appendix_section("a4");
    const AppendixRow& pre5 = a4.blocks[0].rows[4];
    CHECK(pre5.alpha == 61);
    CHECK(pre5.beta == 8);
    CHECK(pre5.k1 == -33);
    CHECK(pre5.k2 == -17);
    CHECK(pre5.k3 == -2);
    const AppendixRow& sign_flip = a4.blocks[0].rows[3];  // m=4: all-negative k
    CHECK(sign_flip.k1 == -17);
    CHECK(sign_flip.k2 == -5);
    CHECK(sign_flip.k3 == -2);

    CHECK_THROWS_AS(appendix_section("a9"), ConfigError);
}

TEST_CASE("appendix rendering is byte-stable") {
    std::string once = render_appendix(appendix_sections("all"), Format::text);
    std::string twice = render_appendix(appendix_sections("all"), Format::text);
    CHECK(once == twice);
    CHECK(once.find("m= 4 alpha= 38 beta= 6 k1= 21 k2= 21 k3= -1") != std::string::npos);
}

TEST_CASE("sweep over single-entry periods: all blocked") {
    SweepOptions opt;
    opt.max_period_len = 1;
    opt.max_entry = 9;
    std::vector<SweepRow> rows = sweep(opt);
    REQUIRE(rows.size() == 9);
    for (const SweepRow& r : rows) {
        CHECK(!r.admissible);
        CHECK(!r.blocked_words.empty());
    }
}

TEST_CASE("admissible pairs up to 12 are exactly the divisibility-free ones") {
    SweepOptions opt;
    opt.max_period_len = 2;
    opt.max_entry = 12;
    opt.admissible_only = true;
    std::vector<SweepRow> rows = sweep(opt);
    std::set<std::pair<long, long>> got;
    for (const SweepRow& r : rows) {
        REQUIRE(r.period.size() == 2);  // no single-entry chain is admissible
        got.insert({r.period[0], r.period[1]});
    }
    std::set<std::pair<long, long>> expected;
    for (long a = 2; a <= 12; ++a)
        for (long b = a + 1; b <= 12; ++b)
            if (two_periodic_admissible(a, b)) expected.insert({a, b});
    CHECK(got == expected);
}

TEST_CASE("sweep length 3 includes the (1,1,2) chain as admissible") {
    SweepOptions opt;
    opt.max_period_len = 3;
    opt.max_entry = 3;
    std::vector<SweepRow> rows = sweep(opt);
    bool found = false;
    for (const SweepRow& r : rows) {
        if (r.period == std::vector<long>{1, 1, 2}) {
            found = true;
            CHECK(r.admissible);
            CHECK(r.base_count == 4);
        }
        if (r.period == std::vector<long>{1}) CHECK(!r.admissible);
    }
    CHECK(found);
    CHECK_THROWS_AS(sweep(SweepOptions{.max_period_len = 9}), ConfigError);
}

TEST_CASE("verify confirms the appendix sections") {
    VerifyOptions opt;
    opt.section = "a1";
    VerifyResult res = run_verify(opt);
    CHECK(res.ok);
    CHECK(res.exit_code == 0);
    CHECK(res.rows_total == 45);
    // rows whose reduced order exceeds the default bound 30 (e.g. a=9, m=4
    // with order 43) are verified hit-free rather than confirmed minimal
    CHECK(res.rows_confirmed == 38);
    CHECK(res.rows_bounded == 7);
}

TEST_CASE("verify flags an oracle bound below a confirmable order") {
    VerifyOptions opt;
    opt.section = "a1";
    opt.oracle_order = 2;  // u = sqrt(2) in a1 has a known order-4 resonance
    VerifyResult res = run_verify(opt);
    CHECK(!res.ok);
    CHECK(res.exit_code == 2);
    CHECK(res.log.find("configuration error") != std::string::npos);
}
