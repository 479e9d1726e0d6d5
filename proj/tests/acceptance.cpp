// Acceptance runner: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "theta/liealg.hpp"
#include "theta/nilcomp.hpp"
#include "theta/report.hpp"
#include "theta/restricted.hpp"
#include "theta/verify.hpp"

using namespace theta;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::vector<InvolutionClassEntry> entries() {
    std::vector<InvolutionClassEntry> out;
    for (const auto& t : catalog_types(8))
        for (auto& e : Catalog::builtin().list(t.series, t.rank)) out.push_back(std::move(e));
    return out;
}

std::string tag(const InvolutionClassEntry& e) { return std::string(1, series_char(e.series)) + std::to_string(e.rank) + " " + e.label; }

Outcome suite(const std::string& name, std::size_t min_cases = 1) {
    Outcome o;
    SuiteResult r = run_suite(name);
    for (const auto& c : r.cases)
        if (!c.passed) o.fail(c.name + ": " + c.detail);
    if (r.cases.size() < min_cases) o.fail("only " + std::to_string(r.cases.size()) + " cases");
    o.detail = o.ok ? std::to_string(r.cases.size()) + " cases" : o.detail;
    return o;
}

// Expected counts written out from the type alone.
int split_expected(Series s, int n) {
    switch (s) {
        case Series::A: return n % 2 == 1 ? 2 : 1;
        case Series::B:
        case Series::C: return 2;
        case Series::D: return n % 2 == 0 ? 4 : 2;
        case Series::E: return n == 7 ? 2 : 1;
        default: return 1;
    }
}

int quasi_split_expected(Series s, int n) {
    if (s == Series::A || s == Series::D) return n % 2 == 1 ? 2 : 1;
    return 1;  // E6
}

Outcome split_table() {
    Outcome o;
    int split = 0, qs = 0;
    for (const auto& e : entries()) {
        if (!e.is_quasi_split) continue;
        auto c = component_count(*e.satake, restrict(e.satake));
        const int want = e.is_split ? split_expected(e.series, e.rank) : quasi_split_expected(e.series, e.rank);
        (e.is_split ? split : qs)++;
        if (!e.is_split && !(e.series == Series::A || e.series == Series::D || (e.series == Series::E && e.rank == 6)))
            o.fail(tag(e) + " is quasi-split outside A, D, E6");
        if (c.count != want) o.fail(tag(e) + ": " + std::to_string(c.count) + " != " + std::to_string(want));
    }
    // one split class per type; one quasi-split non-split class for A_n (n >= 2), D_n, E6
    const int types = static_cast<int>(catalog_types(8).size());
    if (split != types) o.fail("split classes: " + std::to_string(split));
    if (qs != 7 + 5 + 1) o.fail("quasi-split classes: " + std::to_string(qs));
    if (o.ok) o.detail = std::to_string(split) + " split, " + std::to_string(qs) + " quasi-split";
    return o;
}

Outcome w0_fixtures() {
    Outcome o = suite("w0", 13);
    bool e6a1 = false;
    for (const auto& d : builtin_decompositions())
        e6a1 = e6a1 || (d.series == Series::E && d.rank == 6 && d.conjugator &&
                        d.target == OrthogonalDecomposition::Target::LongestTimesSimple);
    if (!e6a1) o.fail("conjugated E6(a1) fixture missing");
    return o;
}

Outcome dimensions() {
    Outcome o;
    std::size_t realized = 0;
    for (const auto& t : catalog_types(8))
        for (const auto& rp : realized_pairs(t, 11)) {
            ++realized;
            KPDimensions kp = kp_dimensions(*Catalog::builtin().lookup(t.series, t.rank, rp.label).satake);
            if (static_cast<int>(rp.pair.dim_k()) != kp.k || static_cast<int>(rp.pair.dim_p()) != kp.p)
                o.fail(rp.name + " realizes dims " + std::to_string(rp.pair.dim_k()) + "/" +
                       std::to_string(rp.pair.dim_p()));
            if (kp.k != oracle::algebra_dim(Catalog::builtin().lookup(t.series, t.rank, rp.label).fixed_algebra_name))
                o.fail(rp.name + " k differs from its fixed algebra");
        }
    std::size_t n = 0;
    for (const auto& e : entries()) {
        ++n;
        KPDimensions d = kp_dimensions(*e.satake);
        if (d.m - d.a != d.k - d.p) o.fail(tag(e) + ": m - a != k - p");
    }
    if (o.ok) o.detail = std::to_string(realized) + " realizations, " + std::to_string(n) + " classes";
    return o;
}

Outcome structural() {
    Outcome o;
    std::size_t jac = 0;
    for (const auto& t : catalog_types(6)) {
        auto rs = std::make_shared<const RootSystem>(RootSystem::build(t.series, t.rank));
        ModularLieAlgebra alg = build_algebra(rs, 7);
        std::optional<std::uint64_t> samples;
        if (t.rank > 3) samples = 10'000;
        CheckResult r = check_jacobi(alg, samples, 42);
        jac += r.checked;
        if (!r.ok()) o.fail(t.name() + " Jacobi: " + r.failures.front());
    }
    for (const auto& e : entries()) {
        auto rrs = restrict(e.satake);
        const RootSystem& rs = e.satake->ambient();
        for (const auto& a : rrs.roots()) {
            const int aa = rs.inner(a.vec, a.vec);
            Root triple(a.vec);
            for (int& x : triple) x *= 3;
            if (rrs.find(triple)) o.fail(tag(e) + ": 3 alpha is a restricted root");
            for (const auto& b : rrs.roots()) {
                const int ab2 = 2 * rs.inner(b.vec, a.vec);
                if (ab2 % aa) {
                    o.fail(tag(e) + ": non-integral Cartan number");
                    continue;
                }
                Root img(b.vec);
                for (std::size_t i = 0; i < img.size(); ++i) img[i] -= (ab2 / aa) * a.vec[i];
                if (!rrs.find(img)) o.fail(tag(e) + ": Phi_A not closed under reflections");
            }
        }
        if (!check_p_good(rrs, 7).good) o.fail(tag(e) + ": not p-good at 7");
        auto c = component_count(*e.satake, rrs);
        if (c.z_cap_a_mod_squares.order() % c.count != 0) o.fail(tag(e) + ": count does not divide |(Z n A)/(Z n A)^2|");
    }
    if (o.ok) o.detail = std::to_string(jac) + " Jacobi triples";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        double bound;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "component counts match the closing classification", 10, [] { return suite("proposition"); }},
        {2, "split and quasi-split counts", 5, split_table},
        {3, "Demazure identity and degrees from the Poincare polynomial", 120, [] { return suite("poincare"); }},
        {4, "orthogonal decompositions of w0", 5, w0_fixtures},
        {5, "centralizer dimension identity", 60, [] { return suite("centdim"); }},
        {6, "grading laws", 30, [] { return suite("grading"); }},
        {7, "realized dimensions and m - a = k - p", 5, dimensions},
        {8, "Jacobi, Phi_A axioms, 3 alpha exclusion, divisibility", 60, structural},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("error: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.bound) o.fail("took " + std::to_string(s) + " s");
        failed += !o.ok;
        std::printf("%s criterion %d: %s (%.2f s, limit %.0f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.what, s,
                    c.bound, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
