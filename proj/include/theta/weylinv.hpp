#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "theta/restricted.hpp"
#include "theta/rootsys.hpp"

namespace theta {

using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial in t, ascending coefficients, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial from_counts(const std::vector<std::uint64_t>& counts);
    static IntPolynomial constant(const BigInt& c);
    // 1 + t + ... + t^(d-1)
    static IntPolynomial geometric(int d);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    BigInt coeff(int i) const;
    BigInt value_at_one() const;

    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;  // "1 + 2t + 2t^2 + t^3"

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

struct DegreeProfile {
    std::vector<int> degrees;  // ascending
    BigInt product() const;
};

// Degrees of the basic invariants of the Weyl group of a simple type.
std::vector<int> degrees_for_type(CartanType t);
// Degrees of Phi_A^* plus (r - r0) ones.
DegreeProfile invariant_degrees(const RestrictedRootSystem& rrs);
DegreeProfile invariant_degrees(const std::vector<ComponentType>& comps, int r);

IntPolynomial poincare_polynomial(const BabyWeylGroup& w);
IntPolynomial poincare_polynomial(const RootSystem& rs, std::uint64_t cap);

struct DemazureCheck {
    bool equal = false;
    IntPolynomial poincare;
    IntPolynomial product;  // prod (1 - t^d) / (1 - t)
    IntPolynomial diff;     // poincare - product
};

DemazureCheck demazure_identity_check(const DegreeProfile& profile, const IntPolynomial& poincare);

// Recovers the multiset of degrees d with P(t) (1-t)^r = prod (1 - t^d),
// or nullopt when P does not factor that way with exactly r factors.
std::optional<std::vector<int>> degrees_from_poincare(const IntPolynomial& p, int r);

}  // namespace theta
