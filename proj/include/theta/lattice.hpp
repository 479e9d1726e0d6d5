#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/matrix.hpp"

namespace theta {

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
    IntMatrix U;
    IntMatrix U_inv;
    IntMatrix V;
    IntMatrix D;
    std::size_t rank = 0;
    IntVector diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

// Integer solution of a * x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

// Basis (as columns) of the lattice spanned by the columns of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);

bool lattice_contains(const IntMatrix& generators, const IntVector& v);

class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    // Factors equal to 1 are dropped; the rest must form a divisibility chain.
    explicit FiniteAbelianGroup(std::vector<Int> invariant_factors);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    Int order() const;
    bool trivial() const { return factors_.empty(); }
    // "1", "Z/2", "Z/2 x Z/2", ...
    std::string to_string() const;

    bool operator==(const FiniteAbelianGroup& o) const = default;

private:
    std::vector<Int> factors_;
};

// Quotient of the lattice spanned by the columns of `generators` by the
// lattice spanned by the columns of `sublattice`.
FiniteAbelianGroup lattice_quotient(const IntMatrix& generators, const IntMatrix& sublattice);

}  // namespace theta
