#include "doctest.h"
#include "oracles.hpp"
#include "theta/errors.hpp"
#include "theta/nilcomp.hpp"
#include "theta/report.hpp"
#include "theta/verify.hpp"

using namespace theta;

namespace {

ComponentReport count_of(Series s, int n, const std::string& label) {
    auto e = Catalog::builtin().lookup(s, n, label);
    return component_count(*e.satake, restrict(e.satake));
}

}  // namespace

TEST_CASE("split groups") {
    struct Row {
        Series s;
        int n;
        const char* label;
        int count;
    };
    const Row rows[] = {
        {Series::A, 1, "AI", 2},     {Series::A, 2, "AI", 1},     {Series::A, 5, "AI", 2},
        {Series::A, 6, "AI", 1},     {Series::B, 3, "BI(3)", 2},  {Series::B, 4, "BI(4)", 2},
        {Series::C, 3, "CI", 2},     {Series::D, 4, "DI(4,4)", 4}, {Series::D, 5, "DI(5,5)", 2},
        {Series::E, 6, "EI", 1},     {Series::E, 7, "EV", 2},     {Series::E, 8, "EVIII", 1},
        {Series::F, 4, "FI", 1},     {Series::G, 2, "G", 1},
    };
    for (const auto& row : rows) {
        CAPTURE(row.label);
        auto c = count_of(row.s, row.n, row.label);
        CHECK(c.method == CountMethod::SplitFormula);
        CHECK(c.count == row.count);
        CHECK(c.count == c.z_mod_z2.order());
    }
}

TEST_CASE("quasi-split groups") {
    CHECK(count_of(Series::A, 4, "AIII(2,3)").count == 1);
    CHECK(count_of(Series::A, 5, "AIII(3,3)").count == 2);
    CHECK(count_of(Series::D, 5, "DI(4,6)").count == 2);
    CHECK(count_of(Series::D, 6, "DI(5,7)").count == 1);
    auto e6 = count_of(Series::E, 6, "EII");
    CHECK(e6.method == CountMethod::QuasiSplitFormula);
    CHECK(e6.count == 1);
}

TEST_CASE("counts agree with the catalog and with the divisibility bound") {
    for (const auto& t : catalog_types(8))
        for (const auto& e : Catalog::builtin().list(t.series, t.rank)) {
            CAPTURE(e.label);
            CAPTURE(t.name());
            auto c = component_count(*e.satake, restrict(e.satake));
            CHECK(c.count == e.expected_components);
            CHECK(c.count == proposition_count(e));
            CHECK(c.z_cap_a_mod_squares.order() % c.count == 0);
        }
}

TEST_CASE("centre of the simply connected group") {
    auto e = Catalog::builtin().lookup(Series::D, 4, "DI(4,4)");
    auto rrs = restrict(e.satake);
    CenterData cd = center_data(*e.satake, rrs);
    CHECK(cd.z.to_string() == "Z/2 x Z/2");
    CHECK(cd.z.order() == oracle::det(cartan_matrix(Series::D, 4)));
    auto e7 = Catalog::builtin().lookup(Series::E, 7, "EVII");
    auto cd7 = center_data(*e7.satake, restrict(e7.satake));
    CHECK(cd7.z.order() == 2);
    CHECK(cd7.z_cap_a.order() == 2);
}

TEST_CASE("weighted diagrams") {
    auto e = Catalog::builtin().lookup(Series::E, 7, "EVI");
    auto om = omega(*e.satake, restrict(e.satake));
    CHECK(om.diagram.to_string() == "2 2 2 0 2 0 / 0");
    auto split = Catalog::builtin().lookup(Series::D, 5, "DI(5,5)");
    CHECK(omega(*split.satake, restrict(split.satake)).diagram.to_string() == "2 2 2 / 2 2");
    auto a = Catalog::builtin().lookup(Series::A, 3, "AI");
    CHECK(omega(*a.satake, restrict(a.satake)).diagram.to_string() == "2 2 2");
}

TEST_CASE("reductive ambients are rejected") {
    auto a2 = std::make_shared<const RootSystem>(RootSystem::build(Series::A, 2));
    SatakeInvolution::Options opts;
    opts.central_split_dim = 1;
    auto inv = std::make_shared<const SatakeInvolution>(a2, std::vector<int>{}, std::vector<int>{0, 1}, opts);
    CHECK_THROWS_AS(center_data(*inv, restrict(inv)), NotSimplyConnectedError);
    SatakeInvolution::Options adj;
    adj.simply_connected = false;
    auto inv2 = std::make_shared<const SatakeInvolution>(a2, std::vector<int>{}, std::vector<int>{0, 1}, adj);
    CHECK_THROWS_AS(component_count(*inv2, restrict(inv2)), NotSimplyConnectedError);
}

TEST_CASE("orthogonal decompositions of w0") {
    auto fixtures = builtin_decompositions();
    CHECK(fixtures.size() >= 13);
    bool e6a1 = false;
    for (const auto& d : fixtures) {
        CAPTURE(d.name);
        auto rs = RootSystem::build(d.series, d.rank);
        auto rep = verify_w0_decomposition(d, rs);
        CHECK(rep.ok());
        for (std::size_t i = 0; i < d.betas.size(); ++i)
            for (std::size_t j = i + 1; j < d.betas.size(); ++j) CHECK(rs.inner(d.betas[i], d.betas[j]) == 0);
        e6a1 = e6a1 || (d.series == Series::E && d.rank == 6 && d.target == OrthogonalDecomposition::Target::LongestTimesSimple);
    }
    CHECK(e6a1);

    // a non-orthogonal pair is caught
    auto bad = fixtures.front();
    auto rs = RootSystem::build(bad.series, bad.rank);
    bad.betas.push_back(rs.root(0));
    CHECK_FALSE(verify_w0_decomposition(bad, rs).ok());
}
