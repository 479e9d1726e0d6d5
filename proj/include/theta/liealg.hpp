#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "theta/rootsys.hpp"

namespace theta {

using FpVector = std::vector<std::uint32_t>;

// Rank over F_p of the given vectors.
std::size_t rank_mod_p(std::vector<FpVector> rows, std::uint32_t p);

struct BracketTerm {
    std::uint32_t index;
    int coeff;
};

// Chevalley basis h_1..h_n, e_beta (beta in root order) with integral
// structure constants, reduced mod p for vector arithmetic.
class ModularLieAlgebra {
public:
    const RootSystem& roots() const { return *rs_; }
    std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }
    std::uint32_t prime() const { return p_; }
    std::size_t dim() const { return dim_; }
    int rank() const { return rs_->rank(); }

    std::size_t h_index(int i) const { return static_cast<std::size_t>(i); }
    std::size_t e_index(std::size_t root) const { return rs_->rank() + root; }
    bool is_cartan(std::size_t basis) const { return basis < static_cast<std::size_t>(rs_->rank()); }
    std::size_t root_of(std::size_t basis) const { return basis - rs_->rank(); }
    std::string basis_label(std::size_t i) const;

    // N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; 0 when a + b is not a root.
    int structure_constant(std::size_t a, std::size_t b) const;
    // Integral bracket of two basis elements.
    const std::vector<BracketTerm>& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    FpVector zero() const { return FpVector(dim_, 0); }
    FpVector unit(std::size_t i) const;
    FpVector bracket(const FpVector& x, const FpVector& y) const;
    // Columns [x, b] for b in `basis`, as rows for rank computations.
    std::vector<FpVector> ad_images(const FpVector& x, const std::vector<FpVector>& basis) const;

private:
    friend ModularLieAlgebra build_algebra(std::shared_ptr<const RootSystem> rs, int p);
    std::shared_ptr<const RootSystem> rs_;
    std::uint32_t p_ = 0;
    std::size_t dim_ = 0;
    std::vector<int> n_;  // size() x size() structure constants
    std::vector<std::vector<BracketTerm>> table_;
};

// Throws BadPrimeError if p is not a prime >= 3 exceeding every highest-root coefficient.
ModularLieAlgebra build_algebra(std::shared_ptr<const RootSystem> rs, int p);

struct CheckResult {
    std::uint64_t checked = 0;
    std::vector<std::string> failures;  // first few only
    std::uint64_t failure_count = 0;
    bool ok() const { return failure_count == 0; }
    void fail(std::string msg);
};

// Exhaustive when samples is empty.
CheckResult check_jacobi(const ModularLieAlgebra& alg, std::optional<std::uint64_t> samples, std::uint64_t seed);
// |N_{a,b}| = q + 1 for every root pair with a + b a root, and [e_b, e_-b] = h_b.
CheckResult check_structure_constants(const ModularLieAlgebra& alg);

// Integral invariant form on the Chevalley basis, scaled so that the long
// root vectors pair to 1: kappa(h_i, h_j) = c <a_i, a_j^vee> / d_i and
// kappa(e_a, e_-a) = c / d_a with c the largest symmetrizer entry.
std::vector<std::vector<std::int64_t>> invariant_form(const ModularLieAlgebra& alg);
// kappa([x, y], z) = kappa(x, [y, z]) on all basis triples (sampled when given).
CheckResult check_form_invariance(const ModularLieAlgebra& alg, std::optional<std::uint64_t> samples,
                                  std::uint64_t seed);
// True when kappa stays non-degenerate mod p. Fails for A_n with p | n + 1,
// where the Chevalley form has a centre.
bool has_nondegenerate_form(const ModularLieAlgebra& alg);

struct SignedImage {
    std::size_t index;
    int sign;
};

struct SymmetricPairRealization {
    enum class Kind { Inner, Chevalley };
    std::shared_ptr<const ModularLieAlgebra> algebra;
    Kind kind = Kind::Inner;
    std::vector<Int> mu;                // fundamental-coweight coordinates, inner only
    std::vector<SignedImage> dtheta;    // image of each basis element
    std::vector<FpVector> k_basis;
    std::vector<FpVector> p_basis;

    FpVector apply_theta(const FpVector& x) const;
    std::size_t dim_k() const { return k_basis.size(); }
    std::size_t dim_p() const { return p_basis.size(); }
};

// d theta(e_a) = (-1)^<a, mu> e_a, identity on the Cartan subalgebra.
SymmetricPairRealization realize_inner(std::shared_ptr<const ModularLieAlgebra> alg, std::vector<Int> mu);
// e_a -> -e_{-a}, h -> -h. Throws InternalError if this is not an automorphism.
SymmetricPairRealization realize_chevalley_involution(std::shared_ptr<const ModularLieAlgebra> alg);

CheckResult check_automorphism(const SymmetricPairRealization& pair, std::optional<std::uint64_t> samples,
                               std::uint64_t seed);
CheckResult check_involution(const SymmetricPairRealization& pair);
// [k,k] in k, [k,p] in p, [p,p] in k on all basis pairs.
CheckResult check_grading(const SymmetricPairRealization& pair);

struct CentralizerDims {
    std::size_t k = 0;
    std::size_t p = 0;
};

// x given in p_basis coordinates.
FpVector p_element(const SymmetricPairRealization& pair, const FpVector& coords);
CentralizerDims centralizer_dims(const SymmetricPairRealization& pair, const FpVector& x);
FpVector random_p_element(const SymmetricPairRealization& pair, std::mt19937_64& rng);

// Relations among the sl2-triples E_a = e_a, F_a = d theta(E_a), H_a = [E_a, F_a]
// over the simple roots; Chevalley realizations only.
CheckResult check_commrels(const SymmetricPairRealization& pair);

// Inner involutions Ad(mu(-1)) with mu a fundamental coweight of a node whose
// highest-root coefficient is 1 or 2, and the catalog class each one realizes.
struct InnerRealizationSpec {
    int node;  // 0-based
    int coefficient;
    std::string label;
};
std::vector<InnerRealizationSpec> inner_realization_specs(CartanType type);

}  // namespace theta
