#include "theta/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "theta/errors.hpp"

namespace theta {

namespace {

Int abs_int(Int x) { return x < 0 ? -x : x; }

struct SnfState {
    IntMatrix a, u, u_inv, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
        for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv(r, i), u_inv(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row_i += k * row_j
    void add_row(std::size_t i, std::size_t j, Int k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = checked_add(a(i, c), checked_mul(k, a(j, c)));
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = checked_add(u(i, c), checked_mul(k, u(j, c)));
        // inverse: col_j -= k * col_i
        for (std::size_t r = 0; r < u_inv.rows(); ++r)
            u_inv(r, j) = checked_add(u_inv(r, j), checked_mul(-k, u_inv(r, i)));
    }
    // col_i += k * col_j
    void add_col(std::size_t i, std::size_t j, Int k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = checked_add(a(r, i), checked_mul(k, a(r, j)));
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) = checked_add(v(r, i), checked_mul(k, v(r, j)));
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
        for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, i) = -u_inv(r, i);
    }
};

}  // namespace

IntVector SmithForm::diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

SmithForm smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows(), n = input.cols();
    SnfState s{input, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // pivot: smallest nonzero absolute value in the remaining block
        for (;;) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (s.a(i, j) != 0 && (pi == m || abs_int(s.a(i, j)) < abs_int(s.a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) goto done;
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);

            bool clean = true;
            const Int piv = s.a(t, t);
            for (std::size_t i = t + 1; i < m; ++i) {
                Int q = s.a(i, t) / piv;
                s.add_row(i, t, -q);
                if (s.a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                Int q = s.a(t, j) / piv;
                s.add_col(j, t, -q);
                if (s.a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s.a(i, j) % piv != 0) {
                        s.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (s.a(t, t) < 0) s.negate_row(t);
    }
done:
    SmithForm out{s.u, s.u_inv, s.v, s.a, 0};
    for (std::size_t i = 0; i < std::min(m, n); ++i)
        if (out.D(i, i) != 0) ++out.rank;
    return out;
}

std::size_t rational_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw InternalError("solve_integer: shape mismatch");
    SmithForm s = smith_normal_form(a);
    IntVector c = s.U * b;
    IntVector y(a.cols(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < s.rank) {
            Int d = s.D(i, i);
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
    SmithForm s = smith_normal_form(generators);
    IntMatrix basis(generators.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < generators.rows(); ++i) basis(i, j) = checked_mul(s.U_inv(i, j), s.D(j, j));
    return basis;
}

bool lattice_contains(const IntMatrix& generators, const IntVector& v) {
    return solve_integer(generators, v).has_value();
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors) {
    for (Int f : invariant_factors) {
        if (f <= 0) throw InternalError("invariant factors must be positive");
        if (f > 1) factors_.push_back(f);
    }
    for (std::size_t i = 1; i < factors_.size(); ++i)
        if (factors_[i] % factors_[i - 1] != 0) throw InternalError("invariant factors do not form a divisibility chain");
}

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (Int f : factors_) o = checked_mul(o, f);
    return o;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << factors_[i];
    }
    return os.str();
}

FiniteAbelianGroup lattice_quotient(const IntMatrix& generators, const IntMatrix& sublattice) {
    if (generators.rows() != sublattice.rows()) throw LatticeError("lattice_quotient: ambient dimensions differ");
    IntMatrix basis = lattice_basis(generators);
    const std::size_t k = basis.cols();
    IntMatrix coords(k, sublattice.cols());
    for (std::size_t j = 0; j < sublattice.cols(); ++j) {
        auto x = solve_integer(basis, sublattice.column(j));
        if (!x) throw LatticeError("lattice_quotient: sublattice is not contained in the lattice");
        for (std::size_t i = 0; i < k; ++i) coords(i, j) = (*x)[i];
    }
    SmithForm s = smith_normal_form(coords);
    if (s.rank < k) {
        int free_rank = static_cast<int>(k - s.rank);
        throw InfiniteQuotientError("lattice quotient is infinite (free rank " + std::to_string(free_rank) + ")",
                                    free_rank);
    }
    std::vector<Int> factors;
    for (std::size_t i = 0; i < s.rank; ++i) factors.push_back(s.D(i, i));
    return FiniteAbelianGroup(factors);
}

}  // namespace theta
