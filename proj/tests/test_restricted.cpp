#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "theta/errors.hpp"
#include "theta/report.hpp"
#include "theta/restricted.hpp"
#include "theta/weylinv.hpp"

using namespace theta;

namespace {

RestrictedRootSystem rrs_of(Series s, int n, const std::string& label) {
    return restrict(Catalog::builtin().lookup(s, n, label).satake);
}

// multiplicities of positive restricted roots, keyed by their squared length ratio
std::map<int, std::vector<int>> multiplicities(const RestrictedRootSystem& rrs) {
    const RootSystem& rs = rrs.involution().ambient();
    std::map<int, std::vector<int>> out;
    for (const auto& r : rrs.roots())
        if (r.positive) out[rs.inner(r.vec, r.vec)].push_back(r.multiplicity);
    return out;
}

}  // namespace

TEST_CASE("AIII(p,q) multiplicities") {
    // SU(p,q): short 2(q-p), middle 2, long 1
    for (int n = 3; n <= 7; ++n)
        for (int p = 1; 2 * p < n + 1; ++p) {
            const int q = n + 1 - p;
            auto rrs = rrs_of(Series::A, n, "AIII(" + std::to_string(p) + "," + std::to_string(q) + ")");
            CHECK(rrs.type() == "BC" + std::to_string(p));
            CHECK(rrs.r() == p);
            std::map<int, int> seen;
            for (const auto& r : rrs.roots())
                if (r.positive) seen[r.multiplicity]++;
            if (q - p > 1) CHECK(seen[2 * (q - p)] == p);
            CHECK(seen[1] == p);
        }
}

TEST_CASE("quaternionic and equal-rank examples") {
    auto a5 = rrs_of(Series::A, 5, "AII");
    CHECK(a5.type() == "A2");
    for (const auto& r : a5.roots()) CHECK(r.multiplicity == 4);
    auto f2 = rrs_of(Series::F, 4, "FII");
    CHECK(f2.type() == "BC1");
    auto m = multiplicities(f2);
    int total = 0;
    for (auto& [len, ms] : m)
        for (int x : ms) total += x;
    CHECK(total == 15);  // (dim p - dim a) / 1 = 16 - 1
    auto e4 = rrs_of(Series::E, 6, "EIV");
    for (const auto& r : e4.roots()) CHECK(r.multiplicity == 8);
}

TEST_CASE("Phi_A is closed under its reflections and satisfies 3-alpha exclusion") {
    for (const auto& t : catalog_types(8))
        for (const auto& e : Catalog::builtin().list(t.series, t.rank)) {
            auto rrs = restrict(e.satake);
            const RootSystem& rs = e.satake->ambient();
            CAPTURE(e.label);
            for (const auto& a : rrs.roots()) {
                Root triple(a.vec);
                for (int& x : triple) x *= 3;
                CHECK_FALSE(rrs.find(triple));
                const int aa = rs.inner(a.vec, a.vec);
                for (const auto& b : rrs.roots()) {
                    const int ab = rs.inner(a.vec, b.vec);
                    REQUIRE((2 * ab) % aa == 0);
                    Root img(b.vec);
                    for (std::size_t i = 0; i < img.size(); ++i) img[i] -= (2 * ab / aa) * a.vec[i];
                    CHECK(rrs.find(img));
                }
            }
            CHECK(check_p_good(rrs, 7).good);
        }
}

TEST_CASE("good primes") {
    auto e8 = RootSystem::build(Series::E, 8);
    CHECK_FALSE(check_p_good(e8, 5).good);
    CHECK(check_p_good(e8, 7).good);
    CHECK(check_p_good(RootSystem::build(Series::G, 2), 3).good == false);
}

TEST_CASE("baby Weyl group and Demazure identity") {
    auto rrs = rrs_of(Series::E, 6, "EII");
    BabyWeylGroup w(rrs, 5'000'000);
    CHECK(w.order() == oracle::weyl_order(Series::F, 4));
    IntPolynomial p = poincare_polynomial(w);
    CHECK(p.value_at_one() == 1152);
    CHECK(invariant_degrees(rrs).degrees == std::vector<int>{2, 6, 8, 12});
    CHECK(demazure_identity_check(invariant_degrees(rrs), p).equal);
    CHECK(degrees_from_poincare(p, 4) == std::vector<int>{2, 6, 8, 12});

    auto a2 = rrs_of(Series::A, 2, "AI");
    CHECK(poincare_polynomial(BabyWeylGroup(a2, 100)).to_string() == "1 + 2t + 2t^2 + t^3");

    auto e3 = rrs_of(Series::E, 6, "EIII");
    CHECK(invariant_degrees(e3).degrees == std::vector<int>{2, 4});

    CHECK_THROWS_AS(BabyWeylGroup(rrs_of(Series::E, 8, "EVIII"), 5'000'000), CapExceededError);
}

TEST_CASE("degree recovery rejects non-products") {
    IntPolynomial bad(std::vector<BigInt>{1, 3, 1});
    CHECK_FALSE(degrees_from_poincare(bad, 2));
    IntPolynomial g2 = IntPolynomial::geometric(2) * IntPolynomial::geometric(6);
    CHECK(degrees_from_poincare(g2, 2) == std::vector<int>{2, 6});
    CHECK(degrees_from_poincare(g2, 3) == std::vector<int>{1, 2, 6});
}

TEST_CASE("omega_alpha cases") {
    // split: every lift is fixed by -theta*, case (i)
    auto e7 = restrict(Catalog::builtin().lookup(Series::E, 7, "EV").satake);
    for (std::size_t k = 0; k < e7.basis().size(); ++k) {
        auto oa = omega_alpha(e7.involution(), e7, k);
        CHECK(oa.tag == OmegaCase::I);
        CHECK(oa.cocharacter.pairings[k] == 2);
    }
    // quasi-split A3: alpha_1 is paired with alpha_3, orthogonal, case (ii)
    auto su22 = rrs_of(Series::A, 3, "AIII(2,2)");
    CHECK(omega_alpha(su22.involution(), su22, 0).tag == OmegaCase::II);
    // AIII(1,2) in A2: alpha_1 + alpha_2 is a root, case (iii)
    auto su12 = rrs_of(Series::A, 2, "AIII(1,2)");
    auto oa = omega_alpha(su12.involution(), su12, 0);
    CHECK(oa.tag == OmegaCase::III);
    CHECK(oa.cocharacter.pairings[0] == 2);
    CHECK_THROWS_AS(omega_alpha(su12.involution(), su12, 7), LiftNotFoundError);
    for (const auto& t : catalog_types(8))
        for (const auto& e : Catalog::builtin().list(t.series, t.rank)) {
            auto rrs = restrict(e.satake);
            for (std::size_t k = 0; k < rrs.basis().size(); ++k) {
                auto o = omega_alpha(*e.satake, rrs, k);
                CHECK(o.cocharacter.pairings[k] == 2);
                for (std::size_t j = 0; j < rrs.basis().size(); ++j)
                    if (j != k) CHECK(o.cocharacter.pairings[j] == rrs.cartan()(j, k));
            }
        }
}
