#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "theta/errors.hpp"
#include "theta/report.hpp"
#include "theta/restricted.hpp"
#include "theta/satake.hpp"

using namespace theta;

namespace {

std::vector<InvolutionClassEntry> all_entries() {
    std::vector<InvolutionClassEntry> out;
    for (const auto& t : catalog_types(8))
        for (auto& e : Catalog::builtin().list(t.series, t.rank)) out.push_back(e);
    return out;
}

}  // namespace

TEST_CASE("every catalog entry is a valid involution") {
    for (const auto& e : all_entries()) {
        CAPTURE(e.label);
        CAPTURE(e.rank);
        ValidationReport rep = validate(*e.satake);
        CHECK(rep.ok());
        const RootSystem& rs = e.satake->ambient();
        auto perm = theta_star_permutation(*e.satake);
        for (std::size_t a = 0; a < rs.size(); ++a) CHECK(perm[perm[a]] == a);
    }
}

TEST_CASE("k dimensions agree with the names of the fixed algebras") {
    for (const auto& e : all_entries()) {
        CAPTURE(e.label);
        CAPTURE(e.rank);
        KPDimensions d = kp_dimensions(*e.satake);
        CHECK(d.g == e.rank + static_cast<int>(oracle::root_count(e.series, e.rank)));
        CHECK(d.k == oracle::algebra_dim(e.fixed_algebra_name));
        CHECK(d.k + d.p == d.g);
        CHECK(d.m - d.a == d.k - d.p);
    }
}

TEST_CASE("restricted root types match the catalog") {
    for (const auto& e : all_entries()) {
        CAPTURE(e.label);
        CAPTURE(e.rank);
        RestrictedRootSystem rrs = restrict(e.satake);
        CHECK(rrs.type() == e.expected_phi_a);
        CHECK(rrs.r() == kp_dimensions(*e.satake).a);
        int total = 0;
        for (const auto& r : rrs.roots()) total += r.multiplicity;
        CHECK(total == static_cast<int>(e.satake->ambient().size() - e.satake->compact_roots().size()));
    }
}

TEST_CASE("split and quasi-split flags") {
    std::set<std::string> split;
    for (const auto& e : all_entries()) {
        CHECK(e.is_split == e.satake->is_split());
        if (e.is_split) split.insert(std::string(1, series_char(e.series)) + std::to_string(e.rank) + " " + e.label);
    }
    CHECK(split.count("A5 AI"));
    CHECK(split.count("B3 BI(3)"));
    CHECK(split.count("C4 CI"));
    CHECK(split.count("D6 DI(6,6)"));
    CHECK(split.count("E7 EV"));
    CHECK(split.count("G2 G"));
    // exactly one split class per type
    CHECK(split.size() == catalog_types(8).size());
}

TEST_CASE("catalog listings") {
    auto e6 = Catalog::builtin().list(Series::E, 6);
    bool qs = false, outer = false;
    for (const auto& e : e6) {
        qs = qs || (e.is_quasi_split && !e.is_split);
        outer = outer || !e.satake->is_inner();
    }
    CHECK(qs);
    CHECK(outer);
    auto a1 = Catalog::builtin().list(Series::A, 1);
    REQUIRE(a1.size() == 1);
    CHECK(a1[0].label == "AI");
    bool inner = false;
    outer = false;
    for (const auto& e : Catalog::builtin().list(Series::D, 4)) (e.satake->is_inner() ? inner : outer) = true;
    CHECK(inner);
    CHECK(outer);
    CHECK_THROWS_AS(Catalog::builtin().list(Series::D, 3), InvalidTypeError);
    try {
        Catalog::builtin().lookup(Series::E, 7, "EX");
        FAIL("lookup should throw");
    } catch (const UnknownLabelError& err) {
        CHECK(err.available().size() == 3);
    }
}

TEST_CASE("identify recovers catalog entries") {
    for (const auto& e : all_entries()) {
        auto found = Catalog::builtin().identify(*e.satake);
        REQUIRE(found);
        CHECK(found->label == e.label);
    }
}

TEST_CASE("malformed Satake data") {
    auto a3 = std::make_shared<const RootSystem>(RootSystem::build(Series::A, 3));
    // psi must preserve the diagram
    SatakeInvolution bad(a3, {}, {1, 0, 2});
    CHECK_FALSE(validate(bad).ok());
    // I must be psi-stable
    SatakeInvolution unstable(a3, {0}, {2, 1, 0});
    CHECK_FALSE(validate(unstable).ok());
    CHECK_THROWS_AS(restrict(std::make_shared<const SatakeInvolution>(unstable)), InvalidInvolutionError);
    CHECK_THROWS_AS(SatakeInvolution(a3, {5}, {0, 1, 2}), InvalidInvolutionError);
}

TEST_CASE("catalog parser") {
    const char* text = "A n>=2 T({p}) p=1..n-1 I=- psi=id k=sl(2) phiA=A{n} components=1\n";
    Catalog c = Catalog::parse(text);
    CHECK(c.list(Series::A, 3).size() == 2);
    CHECK(c.list(Series::A, 3)[1].label == "T(2)");
    CHECK_THROWS_AS(Catalog::parse("A n>=1 X I=(( psi=id\n"), CatalogFormatError);
}
