#include "theta/satake.hpp"

#include <algorithm>
#include <set>

#include "theta/errors.hpp"
#include "theta/lattice.hpp"

namespace theta {

Root apply_matrix(const IntMatrix& m, const Root& r) {
    Root out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * r[j];
        out[i] = static_cast<int>(s);
    }
    return out;
}

namespace {

// Longest element of the parabolic subgroup generated by `gens`, as a matrix
// on simple-root coordinates.
IntMatrix parabolic_longest(const RootSystem& rs, const std::vector<int>& gens) {
    const int n = rs.rank();
    IntMatrix w = IntMatrix::identity(n);
    for (;;) {
        int ascent = -1;
        for (int i : gens) {
            // w(alpha_i) is column i; roots are sign-coherent
            for (int r = 0; r < n; ++r)
                if (w(r, i) != 0) {
                    if (w(r, i) > 0) ascent = i;
                    break;
                }
            if (ascent >= 0) break;
        }
        if (ascent < 0) return w;
        IntMatrix s = IntMatrix::identity(n);
        for (int j = 0; j < n; ++j) s(ascent, j) -= rs.cartan()(j, ascent);
        w = w * s;
    }
}

}  // namespace

SatakeInvolution::SatakeInvolution(std::shared_ptr<const RootSystem> ambient, std::vector<int> compact,
                                   std::vector<int> psi, Options options)
    : ambient_(std::move(ambient)), compact_(std::move(compact)), psi_(std::move(psi)), options_(options) {
    if (!ambient_) throw InvalidInvolutionError("missing ambient root system");
    const int n = ambient_->rank();
    in_i_.assign(n, false);
    for (int i : compact_) {
        if (i < 0 || i >= n) throw InvalidInvolutionError("compact index " + std::to_string(i) + " out of range");
        if (in_i_[i]) throw InvalidInvolutionError("compact index " + std::to_string(i) + " repeated");
        in_i_[i] = true;
    }
    std::sort(compact_.begin(), compact_.end());
    if (static_cast<int>(psi_.size()) != n) throw InvalidInvolutionError("psi must have one entry per simple root");
    std::vector<bool> hit(n, false);
    for (int v : psi_) {
        if (v < 0 || v >= n || hit[v]) throw InvalidInvolutionError("psi is not a permutation of the simple roots");
        hit[v] = true;
    }
    if (options_.central_fixed_dim < 0 || options_.central_split_dim < 0)
        throw InvalidInvolutionError("central torus dimensions must be non-negative");

    psi_m_ = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) psi_m_(psi_[i], i) = 1;
    w_i_m_ = parabolic_longest(*ambient_, compact_);
    theta_m_ = (w_i_m_ * psi_m_).scaled(-1);
}

bool SatakeInvolution::psi_is_identity() const {
    for (std::size_t i = 0; i < psi_.size(); ++i)
        if (psi_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string cycle_notation(const std::vector<int>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == static_cast<int>(i)) continue;
        out += "(";
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            out += (j == i ? "" : ",") + std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

bool SatakeInvolution::is_split() const { return compact_.empty() && psi_is_identity(); }

bool SatakeInvolution::is_inner() const {
    const RootSystem& rs = *ambient_;
    WeylElement w0 = rs.longest_element();
    for (int i = 0; i < rs.rank(); ++i) {
        std::size_t img = rs.negative(w0(rs.simple(i)));
        if (img != rs.simple(psi_[i])) return false;
    }
    return true;
}

std::vector<std::size_t> SatakeInvolution::compact_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < ambient_->size(); ++a) {
        const Root& r = ambient_->root(a);
        bool inside = true;
        for (int i = 0; i < ambient_->rank() && inside; ++i)
            if (r[i] != 0 && !in_i_[i]) inside = false;
        if (inside) out.push_back(a);
    }
    return out;
}

Root theta_star(const SatakeInvolution& inv, const Root& a) {
    const RootSystem& rs = inv.ambient();
    rs.index_of(a);
    Root img = apply_matrix(inv.theta_matrix(), a);
#ifndef NDEBUG
    // -w_I psi and -psi w_I must agree
    Root other = apply_matrix((inv.psi_matrix() * inv.w_i_matrix()).scaled(-1), a);
    if (other != img) throw InternalError("theta*: -w_I psi and -psi w_I disagree");
#endif
    if (!rs.find(img)) throw RootNotFoundError("theta* maps " + root_to_string(a) + " outside the root system");
    return img;
}

std::vector<std::size_t> theta_star_permutation(const SatakeInvolution& inv) {
    const RootSystem& rs = inv.ambient();
    std::vector<std::size_t> perm(rs.size());
    for (std::size_t a = 0; a < rs.size(); ++a) perm[a] = rs.index_of(apply_matrix(inv.theta_matrix(), rs.root(a)));
    return perm;
}

ValidationReport validate(const SatakeInvolution& inv) {
    ValidationReport rep;
    const RootSystem& rs = inv.ambient();
    const int n = rs.rank();
    const auto& psi = inv.psi();

    bool cartan_ok = true;
    for (int i = 0; i < n && cartan_ok; ++i)
        for (int j = 0; j < n; ++j)
            if (rs.cartan()(psi[i], psi[j]) != rs.cartan()(i, j)) {
                cartan_ok = false;
                break;
            }
    if (!cartan_ok) rep.failures.push_back("psi does not preserve the Cartan matrix");

    for (int i : inv.compact())
        if (!inv.is_compact(psi[i])) {
            rep.failures.push_back("psi does not stabilize I");
            break;
        }

    bool roots_ok = true;
    for (const Root& r : rs.roots())
        if (!rs.find(apply_matrix(inv.theta_matrix(), r))) {
            roots_ok = false;
            break;
        }
    if (!roots_ok) rep.failures.push_back("theta* does not preserve the root system");

    if (inv.theta_matrix() * inv.theta_matrix() != IntMatrix::identity(n))
        rep.failures.push_back("theta* is not an involution");

    for (std::size_t a : inv.compact_roots())
        if (apply_matrix(inv.theta_matrix(), rs.root(a)) != rs.root(a)) {
            rep.failures.push_back("theta* is not the identity on Phi_I");
            break;
        }

    if (inv.w_i_matrix() * inv.psi_matrix() != inv.psi_matrix() * inv.w_i_matrix())
        rep.failures.push_back("-w_I psi and -psi w_I disagree");
    return rep;
}

KPDimensions kp_dimensions(const SatakeInvolution& inv) {
    const RootSystem& rs = inv.ambient();
    const int n = rs.rank();
    const auto& opt = inv.options();
    const int phi = static_cast<int>(rs.size());
    const int phi_i = static_cast<int>(inv.compact_roots().size());
    const int torus = n + opt.central_fixed_dim + opt.central_split_dim;

    KPDimensions d;
    const int minus_one_rank = n - static_cast<int>(rational_rank(inv.theta_matrix() + IntMatrix::identity(n)));
    d.a = minus_one_rank + opt.central_split_dim;
    d.g = torus + phi;
    d.p = d.a + (phi - phi_i) / 2;
    d.k = d.g - d.p;
    d.m = (torus - d.a) + phi_i;
    return d;
}

}  // namespace theta
