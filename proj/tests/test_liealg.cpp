#include <random>

#include "doctest.h"
#include "theta/errors.hpp"
#include "theta/liealg.hpp"
#include "theta/report.hpp"
#include "theta/satake.hpp"

using namespace theta;

namespace {

std::shared_ptr<const ModularLieAlgebra> algebra(Series s, int n, int p) {
    return std::make_shared<const ModularLieAlgebra>(
        build_algebra(std::make_shared<const RootSystem>(RootSystem::build(s, n)), p));
}

}  // namespace

TEST_CASE("sl2") {
    auto a = algebra(Series::A, 1, 5);
    CHECK(a->dim() == 3);
    const auto& he = a->bracket_basis(0, a->e_index(0));
    REQUIRE(he.size() == 1);
    CHECK(he[0].coeff == 2);
    const auto& ef = a->bracket_basis(a->e_index(0), a->e_index(1));
    REQUIRE(ef.size() == 1);
    CHECK(ef[0].index == 0);
    CHECK(ef[0].coeff == 1);
    CHECK(a->bracket_basis(a->e_index(0), a->e_index(0)).empty());
}

TEST_CASE("structure constants") {
    auto a2 = algebra(Series::A, 2, 5);
    const auto& rs = a2->roots();
    int nonzero = 0;
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < rs.size(); ++j)
            if (int n = a2->structure_constant(i, j)) {
                CHECK(std::abs(n) == 1);
                ++nonzero;
                CHECK(a2->structure_constant(j, i) == -n);
            }
    CHECK(nonzero == 12);
    auto g2 = algebra(Series::G, 2, 5);
    int max_n = 0;
    for (std::size_t i = 0; i < g2->roots().size(); ++i)
        for (std::size_t j = 0; j < g2->roots().size(); ++j)
            max_n = std::max(max_n, std::abs(g2->structure_constant(i, j)));
    CHECK(max_n == 3);
    for (const auto& t : catalog_types(6)) {
        CAPTURE(t.name());
        CHECK(check_structure_constants(*algebra(t.series, t.rank, 7)).ok());
    }
}

TEST_CASE("Jacobi identity") {
    for (const auto& t : catalog_types(3)) {
        CAPTURE(t.name());
        CHECK(check_jacobi(*algebra(t.series, t.rank, 5), std::nullopt, 1).ok());
    }
    CHECK(check_jacobi(*algebra(Series::F, 4, 5), 2000, 7).ok());
    CHECK(check_jacobi(*algebra(Series::E, 6, 7), 2000, 7).ok());
}

TEST_CASE("invariant form") {
    for (const auto& t : catalog_types(4)) {
        CAPTURE(t.name());
        auto a = algebra(t.series, t.rank, 7);
        CHECK(check_form_invariance(*a, std::nullopt, 1).ok());
    }
    CHECK_FALSE(has_nondegenerate_form(*algebra(Series::A, 4, 5)));
    CHECK(has_nondegenerate_form(*algebra(Series::A, 4, 7)));
    CHECK(has_nondegenerate_form(*algebra(Series::B, 3, 5)));
}

TEST_CASE("bad primes") {
    auto e8 = std::make_shared<const RootSystem>(RootSystem::build(Series::E, 8));
    CHECK_THROWS_AS(build_algebra(e8, 5), BadPrimeError);
    CHECK_NOTHROW(build_algebra(e8, 7));
    auto a1 = std::make_shared<const RootSystem>(RootSystem::build(Series::A, 1));
    CHECK_THROWS_AS(build_algebra(a1, 2), BadPrimeError);
    CHECK_THROWS_AS(build_algebra(a1, 9), BadPrimeError);
}

TEST_CASE("Chevalley involution") {
    auto g2 = realize_chevalley_involution(algebra(Series::G, 2, 7));
    CHECK(g2.dim_k() == 6);
    CHECK(g2.dim_p() == 8);
    auto a1 = realize_chevalley_involution(algebra(Series::A, 1, 5));
    CHECK(a1.dim_k() == 1);
    CHECK(a1.dim_p() == 2);
    CHECK(check_involution(a1).ok());
    CHECK(check_grading(g2).ok());
    CHECK(check_automorphism(g2, std::nullopt, 1).ok());
    CHECK(check_commrels(g2).ok());
    CHECK(check_commrels(realize_chevalley_involution(algebra(Series::B, 3, 5))).ok());
}

TEST_CASE("inner involutions") {
    auto a1 = algebra(Series::A, 1, 5);
    auto t = realize_inner(a1, {1});
    CHECK(t.dim_k() == 1);
    CHECK(t.dim_p() == 2);
    CHECK(realize_inner(a1, {0}).dim_p() == 0);
    auto d4 = realize_inner(algebra(Series::D, 4, 5), {0, 0, 0, 1});
    CHECK(d4.dim_k() == 16);  // gl(4)
    CHECK(check_grading(d4).ok());
    CHECK(check_involution(d4).ok());
    CHECK_FALSE(check_commrels(d4).ok());
}

TEST_CASE("centralizers") {
    auto pair = realize_chevalley_involution(algebra(Series::B, 2, 7));
    auto z = centralizer_dims(pair, pair.algebra->zero());
    CHECK(z.k == pair.dim_k());
    CHECK(z.p == pair.dim_p());
    // h_1 + 2 h_2 is regular when p is large
    FpVector x = pair.algebra->zero();
    x[0] = 1;
    x[1] = 3;
    auto c = centralizer_dims(pair, x);
    CHECK(c.k == 0);
    CHECK(c.p == 2);
    std::mt19937_64 rng(3);
    auto y = random_p_element(pair, rng);
    auto cy = centralizer_dims(pair, y);
    CHECK(static_cast<long>(cy.k) - static_cast<long>(cy.p) ==
          static_cast<long>(pair.dim_k()) - static_cast<long>(pair.dim_p()));
}

TEST_CASE("realization specs cover catalog labels") {
    for (const auto& t : catalog_types(8))
        for (const auto& s : inner_realization_specs(t)) {
            CAPTURE(t.name());
            CAPTURE(s.label);
            CHECK_NOTHROW(Catalog::builtin().lookup(t.series, t.rank, s.label));
        }
}
