#include "theta/nilcomp.hpp"

#include <sstream>

#include "theta/errors.hpp"

namespace theta {

std::string WeightedDiagram::to_string() const {
    std::ostringstream os;
    const int n = static_cast<int>(weights.size());
    auto emit = [&](const std::vector<int>& idx) {
        for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? " " : "") << weights[idx[k]];
    };
    std::vector<int> main, branch;
    if (series == Series::E && n >= 6) {
        main.push_back(0);
        for (int i = 2; i < n; ++i) main.push_back(i);
        branch.push_back(1);
    } else if (series == Series::D && n >= 4) {
        for (int i = 0; i < n - 2; ++i) main.push_back(i);
        branch = {n - 2, n - 1};
    } else {
        for (int i = 0; i < n; ++i) main.push_back(i);
    }
    emit(main);
    if (!branch.empty()) {
        os << " / ";
        emit(branch);
    }
    return os.str();
}

namespace {

// theta acting on a cocharacter given in simple-coroot coordinates.
IntVector theta_on_cocharacter(const SatakeInvolution& inv, const IntVector& y) {
    const RootSystem& rs = inv.ambient();
    IntVector out(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i) {
        if (y[i] == 0) continue;
        Root c = rs.coroot(theta_star(inv, rs.root(rs.simple(i))));
        for (int j = 0; j < rs.rank(); ++j) out[j] += y[i] * c[j];
    }
    return out;
}

void require_simply_connected(const SatakeInvolution& inv) {
    const auto& o = inv.options();
    if (!o.simply_connected || o.central_fixed_dim != 0 || o.central_split_dim != 0)
        throw NotSimplyConnectedError("centre computations need a simply connected semisimple ambient group");
}

}  // namespace

OmegaResult omega(const SatakeInvolution& inv, const RestrictedRootSystem& rrs) {
    const RootSystem& rs = inv.ambient();
    const int n = rs.rank();
    OmegaResult out;
    out.diagram.series = rs.series();
    IntVector h(n);
    for (int i = 0; i < n; ++i) h[i] = inv.is_compact(i) ? 0 : 2;
    out.diagram.weights.assign(h.begin(), h.end());

    auto y = solve_integer(rs.cartan(), h);
    if (!y) throw UnsolvableCocharacterError("weighted diagram " + out.diagram.to_string() +
                                             " has no integral cocharacter");
    out.omega.coroot_coords = *y;
    for (const auto& lift : rrs.lifts()) {
        int v = rs.pair_with_coweight(rs.root(rs.simple(lift.front())), *y);
        if (v != 2) throw InternalError("omega pairs to " + std::to_string(v) + " with a basis element of Pi");
        out.omega.pairings.push_back(v);
    }
    IntVector ty = theta_on_cocharacter(inv, *y);
    for (int i = 0; i < n; ++i)
        if (ty[i] != -(*y)[i]) throw InternalError("omega is not a cocharacter of the theta-split torus");
    return out;
}

CenterData center_data(const SatakeInvolution& inv, const RestrictedRootSystem& rrs) {
    require_simply_connected(inv);
    const RootSystem& rs = inv.ambient();
    const std::size_t n = rs.rank();
    // Coweight coordinates: P^vee = Z^n, Q^vee spanned by the columns of the Cartan matrix.
    const IntMatrix& q = rs.cartan();
    const IntMatrix id = IntMatrix::identity(n);
    const IntMatrix t = inv.theta_matrix().transpose();
    const IntMatrix t_plus = t + id, t_minus = t - id;

    CenterData cd;
    cd.z = lattice_quotient(id, q);
    cd.z_mod_squares = lattice_quotient(id, q.hcat(id.scaled(2)));

    // Z n A: cosets x + Q^vee with (T + 1) x in (T + 1) Q^vee
    SmithForm s = smith_normal_form(q);
    const IntMatrix image = t_plus * q;
    std::vector<IntVector> extra;
    IntVector a(n, 0);
    for (;;) {
        IntVector x = s.U_inv * a;
        if (lattice_contains(image, t_plus * x)) extra.push_back(x);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++a[i] < s.D(i, i)) break;
            a[i] = 0;
        }
        if (i == n) break;
    }
    const IntMatrix l_a = q.hcat(IntMatrix::from_columns(extra, n));
    cd.z_cap_a = lattice_quotient(l_a, q);
    cd.z_cap_a_mod_squares = lattice_quotient(l_a, q.hcat(l_a.scaled(2)));
    cd.tau_z = lattice_quotient(q.hcat(t_minus), q);
    cd.z_cap_a_mod_tau = lattice_quotient(l_a, q.hcat(t_minus));

    if (rrs.r0() > 0) {
        SmithForm rs_snf = smith_normal_form(rrs.cartan());
        Int det = 1;
        for (Int d : rs_snf.diagonal()) det = checked_mul(det, d);
        cd.reduced_center_order = det;
    }
    for (std::size_t k = 0; k < rrs.basis().size(); ++k)
        if (omega_alpha(inv, rrs, k).tag == OmegaCase::III) ++cd.type_iii_count;
    return cd;
}

std::pair<FiniteAbelianGroup, FiniteAbelianGroup> z_cap_a(const SatakeInvolution& inv,
                                                          const RestrictedRootSystem& rrs) {
    CenterData cd = center_data(inv, rrs);
    Int predicted = cd.reduced_center_order >> cd.type_iii_count;
    if ((predicted << cd.type_iii_count) != cd.reduced_center_order || predicted != cd.z_cap_a.order())
        throw InternalError("|Z n A| = " + std::to_string(cd.z_cap_a.order()) + " but |Z(B*)| / 2^i = " +
                            std::to_string(cd.reduced_center_order) + " / 2^" + std::to_string(cd.type_iii_count));
    return {cd.z_cap_a, cd.z_cap_a_mod_squares};
}

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::SplitFormula: return "split-formula";
        case CountMethod::QuasiSplitFormula: return "quasi-split-formula";
        case CountMethod::CaseTable: return "case-table";
    }
    return "?";
}

ComponentReport component_count(const SatakeInvolution& inv, const RestrictedRootSystem& rrs) {
    z_cap_a(inv, rrs);  // order cross-check
    CenterData cd = center_data(inv, rrs);
    ComponentReport rep;
    rep.z_mod_z2 = cd.z_mod_squares;
    rep.z_cap_a = cd.z_cap_a;
    rep.z_cap_a_mod_squares = cd.z_cap_a_mod_squares;
    rep.tau_z_order = cd.tau_z.order();
    const Int quotient = cd.z_cap_a_mod_tau.order();

    if (inv.is_split()) {
        rep.method = CountMethod::SplitFormula;
        rep.count = static_cast<int>(cd.z_mod_squares.order());
        rep.notes.push_back("split involution: components correspond to Z/Z^2");
    } else if (inv.is_quasi_split()) {
        rep.method = CountMethod::QuasiSplitFormula;
        rep.count = static_cast<int>(quotient);
        rep.notes.push_back("quasi-split involution: components correspond to (Z n A)/tau(Z)");
    } else {
        rep.method = CountMethod::CaseTable;
        if (quotient == 1) {
            rep.count = 1;
            rep.notes.push_back("(Z n A)/tau(Z) is trivial, so N is irreducible");
        } else {
            auto entry = Catalog::builtin().identify(inv);
            if (!entry) throw UncoveredClassError("Satake datum matches no catalog class; no component rule applies");
            const std::string& f = entry->family;
            const Series s = entry->series;
            if (s == Series::B && f == "BI") {
                const int m = entry->param("p");
                if (m % 2 == 0) {
                    rep.count = static_cast<int>(quotient);
                    rep.notes.push_back("so(m)+so(2n+1-m) with m even: C lies in K");
                } else {
                    rep.count = 1;
                    rep.notes.push_back("so(m)+so(2n+1-m) with m odd: C K = G^theta");
                }
            } else if (s == Series::C && f == "CII" && entry->param("p") == entry->param("q")) {
                rep.count = 1;
                rep.notes.push_back("sp(2n)+sp(2n): C contains c with c^-1 theta(c) = -1");
            } else if ((s == Series::D && f == "DI" && inv.is_inner()) || (s == Series::D && f == "DIII" && inv.is_inner()) ||
                       (s == Series::E && f == "EVII")) {
                rep.count = static_cast<int>(quotient);
                rep.notes.push_back("C is connected modulo Z(G) and there is no root of type (iii)");
            } else {
                throw UncoveredClassError("class " + entry->label + " is not covered by the component case table");
            }
        }
    }
    if (cd.z_cap_a_mod_squares.order() % rep.count != 0)
        throw InternalError("component count " + std::to_string(rep.count) + " does not divide |(Z n A)/(Z n A)^2|");
    return rep;
}

// ----------------------------------------------------------- w0 decompositions

namespace {

std::size_t reflection_index(const RootSystem& rs, const Root& r) { return rs.index_of(r); }

WeylElement product_of_reflections(const RootSystem& rs, const std::vector<Root>& roots) {
    WeylElement w = WeylElement::identity(rs.size());
    for (const Root& r : roots) w = w * rs.reflection(reflection_index(rs, r));
    return w;
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace

DecompositionReport verify_w0_decomposition(const OrthogonalDecomposition& dec, const RootSystem& rs) {
    DecompositionReport rep;
    for (const Root& b : dec.betas)
        if (!rs.find(b)) {
            rep.failures.push_back("beta " + root_to_string(b) + " is not a root");
            rep.orthogonal = rep.product = rep.mod4 = false;
            return rep;
        }
    auto check_orthogonal = [&](const std::vector<Root>& roots, const std::string& what) {
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (rs.pairing(roots[i], roots[j]) != 0) {
                    rep.orthogonal = false;
                    rep.failures.push_back(what + " " + root_to_string(roots[i]) + " and " + root_to_string(roots[j]) +
                                           " are not orthogonal");
                }
    };
    check_orthogonal(dec.betas, "betas");

    WeylElement w0 = rs.longest_element();
    WeylElement target = w0;
    if (dec.target == OrthogonalDecomposition::Target::LongestTimesSimple)
        target = w0 * rs.simple_reflection(dec.target_simple);
    WeylElement prod = product_of_reflections(rs, dec.betas);

    std::vector<Root> in_p = dec.betas;
    switch (dec.target) {
        case OrthogonalDecomposition::Target::LongestElement:
            if (!(prod == target)) {
                rep.product = false;
                rep.failures.push_back("product of reflections differs from w0");
            }
            break;
        case OrthogonalDecomposition::Target::ConjugateOfLongest:
            if (!rs.is_conjugate(prod, target)) {
                rep.product = false;
                rep.failures.push_back("product of reflections is not conjugate to w0");
            }
            break;
        case OrthogonalDecomposition::Target::LongestTimesSimple:
            if (!(prod == target)) {
                rep.product = false;
                rep.failures.push_back("product of reflections differs from w0 s_alpha" +
                                       std::to_string(dec.target_simple + 1));
            }
            break;
    }
    if (dec.conjugator) {
        if (!rs.find(*dec.conjugator)) {
            rep.product = false;
            rep.failures.push_back("conjugator " + root_to_string(*dec.conjugator) + " is not a root");
            return rep;
        }
        WeylElement sa = rs.reflection(rs.index_of(*dec.conjugator));
        std::vector<Root> gammas;
        for (const Root& b : dec.betas) gammas.push_back(rs.reflect(b, *dec.conjugator));
        if (!dec.expected_conjugates.empty() && gammas != dec.expected_conjugates) {
            rep.product = false;
            rep.failures.push_back("s_alpha(beta_i) differ from the listed roots");
        }
        check_orthogonal(gammas, "conjugated roots");
        if (!(product_of_reflections(rs, gammas) == sa * target * sa.inverse())) {
            rep.product = false;
            rep.failures.push_back("product of conjugated reflections differs from s_alpha target s_alpha^-1");
        }
        in_p = gammas;
    }
    for (const Root& b : in_p) {
        int v = 0;
        for (std::size_t i = 0; i < b.size(); ++i) v += b[i] * dec.lambda.weights[i];
        if (mod4(v) != 2) {
            rep.mod4 = false;
            rep.failures.push_back("<" + root_to_string(b) + ", lambda> = " + std::to_string(v) + " is not 2 mod 4");
        }
    }
    return rep;
}

namespace {

Root simple_root(int n, int i) {  // 1-based
    Root r(n, 0);
    r[i - 1] = 1;
    return r;
}

WeightedDiagram diagram(Series s, int n, std::vector<int> zeros) {
    WeightedDiagram d{s, std::vector<int>(n, 2)};
    for (int z : zeros) d.weights[z - 1] = 0;
    return d;
}

std::vector<Root> e7_betas(int n) {
    auto pad = [n](Root r) {
        r.resize(n, 0);
        return r;
    };
    return {pad({2, 2, 3, 4, 3, 2, 1}), pad({0, 1, 1, 2, 2, 2, 1}), pad({0, 0, 0, 0, 0, 0, 1}),
            pad({0, 1, 1, 2, 1, 0, 0}), pad({0, 1, 0, 0, 0, 0, 0}), pad({0, 0, 1, 0, 0, 0, 0}),
            pad({0, 0, 0, 0, 1, 0, 0})};
}

}  // namespace

std::vector<OrthogonalDecomposition> builtin_decompositions() {
    using T = OrthogonalDecomposition::Target;
    std::vector<OrthogonalDecomposition> out;
    for (int n = 2; n <= 7; ++n) {
        OrthogonalDecomposition d{"A" + std::to_string(n), Series::A, n, {}, T::ConjugateOfLongest, -1, std::nullopt, {}, {}};
        for (int i = 1; i <= n; i += 2)
            if (i <= n - (n % 2 == 0 ? 1 : 0)) d.betas.push_back(simple_root(n, i));
        d.lambda = diagram(Series::A, n, {});
        out.push_back(d);
    }
    for (int n = 2; n <= 6; ++n) {
        OrthogonalDecomposition d{"B" + std::to_string(n), Series::B, n, {}, T::LongestElement, -1, std::nullopt, {}, {}};
        for (int i = 1; i <= n; ++i) {
            Root r(n, 0);
            if (i % 2 == 1) {
                r[i - 1] = 1;
                for (int j = i + 1; j <= n; ++j) r[j - 1] = 2;
            } else {
                r[i - 2] = 1;
            }
            d.betas.push_back(r);
        }
        d.lambda = diagram(Series::B, n, {});
        out.push_back(d);
    }
    for (int n = 2; n <= 6; ++n) {
        OrthogonalDecomposition d{"C" + std::to_string(n), Series::C, n, {}, T::LongestElement, -1, std::nullopt, {}, {}};
        for (int i = 1; i <= n - 1; ++i) {
            Root r(n, 0);
            for (int j = i; j <= n - 1; ++j) r[j - 1] = 2;
            r[n - 1] = 1;
            d.betas.push_back(r);
        }
        d.betas.push_back(simple_root(n, n));
        d.lambda = diagram(Series::C, n, {});
        out.push_back(d);
    }
    out.push_back({"F4", Series::F, 4, {{2, 3, 4, 2}, {0, 1, 2, 2}, {0, 1, 2, 0}, {0, 1, 0, 0}}, T::LongestElement,
                   -1, std::nullopt, {}, diagram(Series::F, 4, {})});
    out.push_back({"G2", Series::G, 2, {{3, 2}, {1, 0}}, T::LongestElement, -1, std::nullopt, {},
                   diagram(Series::G, 2, {})});
    out.push_back({"E6(reg)", Series::E, 6,
                   {{1, 2, 2, 3, 2, 1}, {1, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 0}, {0, 0, 0, 1, 0, 0}},
                   T::LongestElement, -1, std::nullopt, {}, diagram(Series::E, 6, {})});
    out.push_back({"E6(a1)", Series::E, 6,
                   {{1, 2, 2, 3, 2, 1}, {1, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 0}},
                   T::LongestTimesSimple, 3, Root{1, 1, 2, 3, 2, 1},
                   {{0, 1, 0, 0, 0, 0}, {0, -1, -1, -2, -1, 0}, {-1, -1, -1, -2, -1, -1}},
                   diagram(Series::E, 6, {4})});
    const std::vector<std::pair<std::string, std::vector<int>>> e_orbits{{"reg", {}}, {"a1", {4}}, {"a2", {4, 6}}};
    for (const auto& [tag, zeros] : e_orbits)
        out.push_back({"E7(" + tag + ")", Series::E, 7, e7_betas(7), T::LongestElement, -1, std::nullopt, {},
                       diagram(Series::E, 7, zeros)});
    for (const auto& [tag, zeros] : e_orbits) {
        auto betas = e7_betas(8);
        betas.insert(betas.begin(), Root{2, 3, 4, 6, 5, 4, 3, 2});
        out.push_back({"E8(" + tag + ")", Series::E, 8, betas, T::LongestElement, -1, std::nullopt, {},
                       diagram(Series::E, 8, zeros)});
    }
    return out;
}

}  // namespace theta
