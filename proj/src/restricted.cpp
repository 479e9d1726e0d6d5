#include "theta/restricted.hpp"

#include <algorithm>
#include <map>

#include "theta/errors.hpp"
#include "theta/lattice.hpp"

namespace theta {

namespace {

Root sub(const Root& a, const Root& b) {
    Root r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Root scaled(const Root& a, int k) {
    Root r(a);
    for (int& x : r) x *= k;
    return r;
}

bool coords_nonnegative(const Root& r) {
    for (int x : r)
        if (x < 0) return false;
    return true;
}

}  // namespace

std::optional<std::size_t> RestrictedRootSystem::find(const Root& v) const {
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i].vec == v) return i;
    return std::nullopt;
}

int RestrictedRootSystem::cartan_integer(std::size_t a, std::size_t b) const {
    const RootSystem& rs = inv_->ambient();
    int ab = rs.inner(roots_[a].vec, roots_[b].vec), bb = rs.inner(roots_[b].vec, roots_[b].vec);
    if ((2 * ab) % bb != 0) throw InternalError("restricted Cartan number is not integral");
    return 2 * ab / bb;
}

std::string RestrictedRootSystem::reduced_type() const { return canonical_type_name(type_name(reduced_)); }

std::string RestrictedRootSystem::type() const { return canonical_type_name([&] {
    std::string out;
    for (std::size_t c = 0; c < reduced_.size(); ++c) {
        if (!out.empty()) out += "+";
        out += component_names_[c];
    }
    return out.empty() ? std::string("0") : out;
}()); }

std::size_t RestrictedRootSystem::num_reduced_positive() const {
    std::size_t n = 0;
    for (const auto& r : roots_)
        if (r.positive && r.indivisible) ++n;
    return n;
}

RestrictedRootSystem restrict(std::shared_ptr<const SatakeInvolution> inv) {
    ValidationReport rep = validate(*inv);
    if (!rep.ok()) {
        std::string msg = "invalid Satake data:";
        for (const auto& f : rep.failures) msg += " " + f + ";";
        throw InvalidInvolutionError(msg);
    }
    const RootSystem& rs = inv->ambient();
    const int n = rs.rank();
    RestrictedRootSystem out;
    out.inv_ = inv;
    out.r_ = kp_dimensions(*inv).a;

    const auto theta = theta_star_permutation(*inv);
    std::vector<bool> in_phi_i(rs.size(), false);
    for (std::size_t a : inv->compact_roots()) in_phi_i[a] = true;

    std::map<Root, std::size_t> index;
    for (std::size_t a = 0; a < rs.size(); ++a) {
        if (in_phi_i[a]) continue;
        Root lam = sub(rs.root(a), rs.root(theta[a]));
        auto [it, fresh] = index.emplace(lam, out.roots_.size());
        if (fresh) out.roots_.push_back({lam, 0, coords_nonnegative(lam), true});
        out.roots_[it->second].multiplicity++;
    }
    for (auto& r : out.roots_) {
        bool even = std::all_of(r.vec.begin(), r.vec.end(), [](int x) { return x % 2 == 0; });
        if (even) {
            Root half(r.vec);
            for (int& x : half) x /= 2;
            if (index.count(half)) r.indivisible = false;
        }
        if (index.count(scaled(r.vec, 2))) out.non_reduced_ = true;
    }

    // basis Pi from the non-compact simple roots
    std::map<Root, std::size_t> basis_pos;
    for (int i = 0; i < n; ++i) {
        if (inv->is_compact(i)) continue;
        Root lam = sub(rs.root(rs.simple(i)), rs.root(theta[rs.simple(i)]));
        auto [it, fresh] = basis_pos.emplace(lam, out.basis_.size());
        if (fresh) {
            out.basis_.push_back(index.at(lam));
            out.lifts_.emplace_back();
        }
        out.lifts_[it->second].push_back(i);
    }

    const std::size_t r0 = out.basis_.size();
    std::vector<IntVector> cols;
    for (std::size_t b : out.basis_) cols.emplace_back(out.roots_[b].vec.begin(), out.roots_[b].vec.end());
    IntMatrix pi_matrix = IntMatrix::from_columns(cols, n);
    for (const auto& r : out.roots_) {
        auto c = solve_integer(pi_matrix, IntVector(r.vec.begin(), r.vec.end()));
        if (!c) throw InternalError("restricted root " + root_to_string(r.vec) + " is not an integral combination of Pi");
        out.pi_coords_.push_back(*c);
    }

    out.cartan_ = IntMatrix(r0, r0);
    for (std::size_t i = 0; i < r0; ++i)
        for (std::size_t j = 0; j < r0; ++j) out.cartan_(i, j) = out.cartan_integer(out.basis_[i], out.basis_[j]);
    out.reduced_ = classify_cartan(out.cartan_);

    for (const auto& comp : out.reduced_) {
        bool doubled = false;
        for (std::size_t k = 0; k < out.roots_.size() && !doubled; ++k) {
            if (!out.roots_[k].indivisible) continue;
            const IntVector& c = out.pi_coords_[k];
            bool supported = false;
            for (int node : comp.nodes)
                if (c[node] != 0) supported = true;
            if (supported && index.count(scaled(out.roots_[k].vec, 2))) doubled = true;
        }
        out.component_names_.push_back(doubled ? "BC" + std::to_string(comp.type.rank) : comp.type.name());
    }
    return out;
}

// --------------------------------------------------------------- baby Weyl

BabyWeylGroup::BabyWeylGroup(const RestrictedRootSystem& rrs, std::uint64_t cap) : cap_(cap) {
    system_ = std::make_shared<const RootSystem>(RootSystem::from_cartan(rrs.cartan()));
    order_ = weyl_group_order(system_->components());
    if (order_ > cap)
        throw CapExceededError("W_A of type " + rrs.reduced_type() + " has order " + std::to_string(order_) +
                                   ", above the enumeration cap " + std::to_string(cap),
                               order_, cap);
    std::size_t reduced_count = 0;
    for (const auto& r : rrs.roots())
        if (r.indivisible) ++reduced_count;
    if (reduced_count != system_->size())
        throw InternalError("Phi_A^* has " + std::to_string(reduced_count) + " roots but its Cartan matrix gives " +
                            std::to_string(system_->size()));
    for (std::size_t a = 0; a < system_->size(); ++a) {
        const Root& c = system_->root(a);
        std::optional<std::size_t> hit;
        for (std::size_t k = 0; k < rrs.roots().size() && !hit; ++k) {
            if (!rrs.roots()[k].indivisible) continue;
            const IntVector& pc = rrs.pi_coords()[k];
            if (std::equal(c.begin(), c.end(), pc.begin(), pc.end())) hit = k;
        }
        if (!hit) throw InternalError("root " + root_to_string(c) + " of the Cartan model is missing from Phi_A^*");
        root_map_.push_back(*hit);
    }
}

std::vector<std::uint64_t> BabyWeylGroup::length_profile() const { return theta::length_profile(*system_, cap_); }

BabyWeylGroup baby_weyl(const RestrictedRootSystem& rrs, std::uint64_t cap) { return BabyWeylGroup(rrs, cap); }

// -------------------------------------------------------------- good primes

GoodPrimeCheck check_p_good(const RootSystem& rs, int p) {
    GoodPrimeCheck res;
    for (const auto& comp : rs.components()) {
        // highest root of the component: the positive root of largest height supported on it
        std::size_t best = rs.size();
        int best_h = -1;
        for (std::size_t a = 0; a < rs.num_positive(); ++a) {
            const Root& r = rs.root(a);
            bool inside = true;
            for (int i = 0; i < rs.rank() && inside; ++i)
                if (r[i] != 0 && std::find(comp.nodes.begin(), comp.nodes.end(), i) == comp.nodes.end()) inside = false;
            if (inside && rs.height(a) > best_h) {
                best_h = rs.height(a);
                best = a;
            }
        }
        const Root& hr = rs.root(best);
        for (std::size_t k = 0; k < comp.nodes.size(); ++k) {
            int c = hr[comp.nodes[k]];
            if (c >= p) {
                res.good = false;
                res.witness = "coefficient " + std::to_string(c) + " of simple root " + std::to_string(k + 1) +
                              " in the highest root of " + comp.type.name() + " is not below p = " + std::to_string(p);
                return res;
            }
        }
    }
    return res;
}

GoodPrimeCheck check_p_good(const RestrictedRootSystem& rrs, int p) {
    for (const auto& r : rrs.roots())
        if (rrs.find(scaled(r.vec, 3))) return {false, "3 * " + root_to_string(r.vec) + " is a restricted root"};
    return check_p_good(RootSystem::from_cartan(rrs.cartan()), p);
}

// ------------------------------------------------------------------- omega

std::string to_string(OmegaCase c) {
    switch (c) {
        case OmegaCase::I: return "i";
        case OmegaCase::II: return "ii";
        case OmegaCase::III: return "iii";
    }
    return "?";
}

int pair_root_cocharacter(const RootSystem& rs, const Root& r, const IntVector& y) {
    return rs.pair_with_coweight(r, y);
}

OmegaAlpha omega_alpha(const SatakeInvolution& inv, const RestrictedRootSystem& rrs, std::size_t k) {
    if (k >= rrs.basis().size() || rrs.lifts()[k].empty())
        throw LiftNotFoundError("no lift for basis element " + std::to_string(k) + " of Pi");
    const RootSystem& rs = inv.ambient();
    OmegaAlpha out;
    out.lift = *std::min_element(rrs.lifts()[k].begin(), rrs.lifts()[k].end());
    const Root& beta = rs.root(rs.simple(out.lift));
    Root gamma = scaled(theta_star(inv, beta), -1);
    Root bv = rs.coroot(beta), gv = rs.coroot(gamma);

    IntVector y(rs.rank(), 0);
    if (gamma == beta) {
        out.tag = OmegaCase::I;
        for (int i = 0; i < rs.rank(); ++i) y[i] = bv[i];
    } else if (rs.pairing(beta, gamma) == 0) {
        out.tag = OmegaCase::II;
        for (int i = 0; i < rs.rank(); ++i) y[i] = bv[i] + gv[i];
    } else {
        Root sum(beta);
        for (int i = 0; i < rs.rank(); ++i) sum[i] += gamma[i];
        if (!rs.find(sum) || rs.pairing(beta, gamma) != -1 || rs.pairing(gamma, beta) != -1)
            throw InternalError("lift " + root_to_string(beta) + " fits none of the three cases");
        out.tag = OmegaCase::III;
        for (int i = 0; i < rs.rank(); ++i) y[i] = 2 * (bv[i] + gv[i]);
    }
    out.cocharacter.coroot_coords = y;
    for (std::size_t j = 0; j < rrs.basis().size(); ++j) {
        const Root& lift = rs.root(rs.simple(rrs.lifts()[j].front()));
        out.cocharacter.pairings.push_back(pair_root_cocharacter(rs, lift, y));
    }
    return out;
}

}  // namespace theta
