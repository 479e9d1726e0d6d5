#include "theta/weylinv.hpp"

#include <algorithm>
#include <sstream>

#include "theta/errors.hpp"

namespace theta {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_counts(const std::vector<std::uint64_t>& counts) {
    std::vector<BigInt> c(counts.begin(), counts.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::geometric(int d) {
    if (d < 1) throw InternalError("geometric polynomial needs d >= 1");
    return IntPolynomial(std::vector<BigInt>(d, BigInt(1)));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::value_at_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        BigInt c = coeffs_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << 't';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

BigInt DegreeProfile::product() const {
    BigInt p = 1;
    for (int d : degrees) p *= d;
    return p;
}

std::vector<int> degrees_for_type(CartanType t) {
    const int n = t.rank;
    std::vector<int> d;
    switch (t.series) {
        case Series::A:
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            break;
        case Series::B:
        case Series::C:
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            break;
        case Series::D:
            for (int i = 1; i <= n - 1; ++i) d.push_back(2 * i);
            d.push_back(n);
            break;
        case Series::E:
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            else if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case Series::F: d = {2, 6, 8, 12}; break;
        case Series::G: d = {2, 6}; break;
    }
    if (static_cast<int>(d.size()) != n) throw UnclassifiedTypeError("no degree table for " + t.name());
    std::sort(d.begin(), d.end());
    return d;
}

DegreeProfile invariant_degrees(const std::vector<ComponentType>& comps, int r) {
    DegreeProfile p;
    int r0 = 0;
    for (const auto& c : comps) {
        auto d = degrees_for_type(c.type);
        p.degrees.insert(p.degrees.end(), d.begin(), d.end());
        r0 += c.type.rank;
    }
    if (r < r0) throw InternalError("dim A is smaller than the rank of Phi_A^*");
    p.degrees.insert(p.degrees.end(), r - r0, 1);
    std::sort(p.degrees.begin(), p.degrees.end());
    return p;
}

DegreeProfile invariant_degrees(const RestrictedRootSystem& rrs) {
    return invariant_degrees(rrs.reduced_components(), rrs.r());
}

IntPolynomial poincare_polynomial(const RootSystem& rs, std::uint64_t cap) {
    return IntPolynomial::from_counts(length_profile(rs, cap));
}

IntPolynomial poincare_polynomial(const BabyWeylGroup& w) { return IntPolynomial::from_counts(w.length_profile()); }

DemazureCheck demazure_identity_check(const DegreeProfile& profile, const IntPolynomial& poincare) {
    DemazureCheck c;
    c.poincare = poincare;
    c.product = IntPolynomial::constant(1);
    for (int d : profile.degrees) c.product = c.product * IntPolynomial::geometric(d);
    c.diff = poincare - c.product;
    c.equal = c.diff.is_zero();
    return c;
}

std::optional<std::vector<int>> degrees_from_poincare(const IntPolynomial& p, int r) {
    // q = p * (1 - t)^r must be a product of factors (1 - t^d)
    IntPolynomial one_minus_t(std::vector<BigInt>{1, -1});
    IntPolynomial q = p;
    for (int i = 0; i < r; ++i) q = q * one_minus_t;
    std::vector<int> degrees;
    while (!(q == IntPolynomial::constant(1))) {
        if (q.is_zero() || q.coeff(0) != 1) return std::nullopt;
        int k = 1;
        while (q.coeff(k) == 0) ++k;
        if (q.coeff(k) >= 0) return std::nullopt;
        // divide by (1 - t^k): s_i = q_i + s_{i-k}
        const int deg = q.degree();
        if (deg < k) return std::nullopt;
        std::vector<BigInt> s(deg - k + 1, BigInt(0));
        for (int i = 0; i <= deg - k; ++i) s[i] = q.coeff(i) + (i >= k ? s[i - k] : BigInt(0));
        IntPolynomial quotient(std::move(s));
        std::vector<BigInt> f(k + 1, BigInt(0));
        f[0] = 1;
        f[k] = -1;
        if (!(quotient * IntPolynomial(std::move(f)) == q)) return std::nullopt;
        degrees.push_back(k);
        q = quotient;
        if (static_cast<int>(degrees.size()) > r) return std::nullopt;
    }
    if (static_cast<int>(degrees.size()) != r) return std::nullopt;
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace theta
