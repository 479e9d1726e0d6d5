#include "doctest.h"
#include "oracles.hpp"
#include "theta/errors.hpp"
#include "theta/lattice.hpp"
#include "theta/report.hpp"
#include "theta/rootsys.hpp"

using namespace theta;

TEST_CASE("root counts and highest roots") {
    for (const auto& t : catalog_types(8)) {
        RootSystem rs = RootSystem::build(t.series, t.rank);
        CAPTURE(t.name());
        CHECK(rs.size() == oracle::root_count(t.series, t.rank));
        CHECK(rs.num_positive() * 2 == rs.size());
        for (int i = 0; i < t.rank; ++i) CHECK(rs.root(rs.simple(i)) == [&] {
            Root r(t.rank, 0);
            r[i] = 1;
            return r;
        }());
        // the highest root has the largest height and is dominant
        const Root& hr = rs.root(rs.highest_root());
        for (int i = 0; i < t.rank; ++i) CHECK(rs.pairing(hr, rs.root(rs.simple(i))) >= 0);
    }
    CHECK(RootSystem::build(Series::E, 8).root(RootSystem::build(Series::E, 8).highest_root()) ==
          Root{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(RootSystem::build(Series::G, 2).root(RootSystem::build(Series::G, 2).highest_root()) == Root{3, 2});
}

TEST_CASE("Cartan conventions") {
    RootSystem b3 = RootSystem::build(Series::B, 3);
    CHECK(b3.cartan()(1, 2) == -2);
    CHECK(b3.cartan()(2, 1) == -1);
    RootSystem c3 = RootSystem::build(Series::C, 3);
    CHECK(c3.cartan()(1, 2) == -1);
    CHECK(c3.cartan()(2, 1) == -2);
    RootSystem g2 = RootSystem::build(Series::G, 2);
    CHECK(g2.cartan()(1, 0) == -3);
    CHECK(oracle::det(RootSystem::build(Series::E, 6).cartan()) == 3);
    CHECK(oracle::det(RootSystem::build(Series::D, 5).cartan()) == 4);
}

TEST_CASE("invalid types") {
    CHECK_THROWS_AS(RootSystem::build(Series::D, 3), InvalidTypeError);
    CHECK_THROWS_AS(RootSystem::build(Series::E, 9), InvalidTypeError);
    CHECK_THROWS_AS(parse_series("Q"), InvalidTypeError);
}

TEST_CASE("classification recovers each type") {
    for (const auto& t : catalog_types(8)) {
        auto comps = classify_cartan(cartan_matrix(t.series, t.rank));
        REQUIRE(comps.size() == 1);
        // C2 and B2 share a Cartan matrix up to relabelling
        if (t.series == Series::C && t.rank == 2) continue;
        CHECK(comps[0].type.name() == t.name());
    }
    IntMatrix a1a1 = IntMatrix::identity(2).scaled(2);
    CHECK(type_name(classify_cartan(a1a1)) == "A1+A1");
}

TEST_CASE("Weyl group enumeration against order formulas") {
    for (const auto& t : catalog_types(6)) {
        RootSystem rs = RootSystem::build(t.series, t.rank);
        auto prof = length_profile(rs, 5'000'000);
        std::uint64_t total = 0;
        for (auto c : prof) total += c;
        CAPTURE(t.name());
        CHECK(total == oracle::weyl_order(t.series, t.rank));
        CHECK(prof.size() == rs.num_positive() + 1);  // longest element has length |Phi+|
        CHECK(prof.back() == 1);
    }
    CHECK_THROWS_AS(length_profile(RootSystem::build(Series::E, 8), 1000), CapExceededError);
}

TEST_CASE("longest element") {
    for (const auto& t : catalog_types(5)) {
        RootSystem rs = RootSystem::build(t.series, t.rank);
        WeylElement w0 = rs.longest_element();
        CHECK(rs.length(w0) == static_cast<int>(rs.num_positive()));
        CHECK((w0 * w0).is_identity());
    }
}

TEST_CASE("Smith normal form and lattice quotients") {
    IntMatrix a(2, 2);
    a(0, 0) = 2; a(0, 1) = 4; a(1, 0) = 6; a(1, 1) = 8;
    SmithForm s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(s.diagonal() == IntVector{2, 4});
    CHECK(lattice_quotient(IntMatrix::identity(2), a).to_string() == "Z/2 x Z/4");
    for (const auto& t : catalog_types(8)) {
        IntMatrix c = cartan_matrix(t.series, t.rank);
        CHECK(lattice_quotient(IntMatrix::identity(t.rank), c).order() == std::abs(oracle::det(c)));
    }
    CHECK(lattice_quotient(IntMatrix::identity(4), cartan_matrix(Series::D, 4)).to_string() == "Z/2 x Z/2");
    CHECK(lattice_quotient(IntMatrix::identity(5), cartan_matrix(Series::D, 5)).to_string() == "Z/4");
    IntMatrix thin(2, 1);
    thin(0, 0) = 1;
    CHECK_THROWS_AS(lattice_quotient(IntMatrix::identity(2), thin), InfiniteQuotientError);
    auto x = solve_integer(a, IntVector{2, 6});
    REQUIRE(x);
    CHECK(a * *x == IntVector{2, 6});
    CHECK_FALSE(solve_integer(a, IntVector{1, 0}));
}
