#include "doctest.h"
#include "oracles.hpp"
#include "theta/errors.hpp"
#include "theta/report.hpp"

using namespace theta;

namespace {

Report report_of(Series s, int n, const std::string& label, std::uint64_t cap = kDefaultCap) {
    return build_report(Catalog::builtin().lookup(s, n, label), cap);
}

}  // namespace

TEST_CASE("reports") {
    auto ev = report_of(Series::E, 7, "EV");
    CHECK(ev.components == 2);
    CHECK(ev.split);
    CHECK(ev.inner);
    CHECK(ev.dims.k == 63);
    CHECK(ev.weyl_order == std::to_string(oracle::weyl_order(Series::E, 7)));
    CHECK(ev.demazure == true);

    auto ai = report_of(Series::A, 2, "AI");
    CHECK(ai.components == 1);
    CHECK(ai.poincare == std::vector<std::string>{"1", "2", "2", "1"});

    auto g = report_of(Series::G, 2, "G");
    CHECK(g.degrees == std::vector<int>{2, 6});
    CHECK(g.weyl_order == "12");
    CHECK(g.r == 2);
    CHECK(g.codim == 2);
}

TEST_CASE("large little Weyl groups give partial reports") {
    auto e8 = report_of(Series::E, 8, "EVIII");
    CHECK_FALSE(e8.weyl_order);
    CHECK_FALSE(e8.poincare);
    CHECK(e8.weyl_order_predicted == "696729600");
    REQUIRE(e8.warnings.size() == 1);
    CHECK(e8.warnings[0].find("W_A too large") == 0);
    CHECK(e8.degrees == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(e8.components == 1);
    CHECK(report_to_text(e8).find("W_A too large") != std::string::npos);

    auto small = report_of(Series::B, 4, "BI(4)", 100);
    CHECK_FALSE(small.weyl_order);
    CHECK(small.components == 2);
}

TEST_CASE("JSON round trip") {
    for (const auto& t : catalog_types(5))
        for (const auto& e : Catalog::builtin().list(t.series, t.rank)) {
            Report r = build_report(e);
            CHECK(report_from_json(report_to_json(r)) == r);
        }
    Report partial = report_of(Series::E, 8, "EIX", 10);
    CHECK(report_from_json(report_to_json(partial, -1)) == partial);
}

TEST_CASE("malformed JSON") {
    CHECK_THROWS_AS(report_from_json("{"), ReportFormatError);
    CHECK_THROWS_AS(report_from_json("{\"schema\": 1}"), ReportFormatError);
    std::string j = report_to_json(report_of(Series::A, 1, "AI"));
    j.replace(j.find("\"schema\": 1"), 11, "\"schema\": 9");
    CHECK_THROWS_AS(report_from_json(j), ReportFormatError);
}

TEST_CASE("text output") {
    std::string text = report_to_text(report_of(Series::C, 3, "CII(1,2)"));
    CHECK(text.find("BC1") != std::string::npos);
    CHECK(text.find("sp(2)+sp(4)") != std::string::npos);
    CHECK(text.find("components    1") != std::string::npos);
}
