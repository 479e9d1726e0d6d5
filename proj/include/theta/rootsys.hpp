#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "theta/matrix.hpp"

namespace theta {

enum class Series { A, B, C, D, E, F, G };

char series_char(Series s);
Series parse_series(const std::string& s);  // throws InvalidTypeError

struct CartanType {
    Series series;
    int rank;
    std::string name() const;  // e.g. "E7"
    bool operator==(const CartanType&) const = default;
};

bool is_valid_type(Series s, int rank);
// Cartan matrix with entry (i, j) = <alpha_i, alpha_j^vee>, Bourbaki numbering.
IntMatrix cartan_matrix(Series s, int rank);

using Root = std::vector<int>;

struct RootHash {
    std::size_t operator()(const Root& r) const noexcept;
};

std::string root_to_string(const Root& r);

// Element of the Weyl group, stored as a permutation of root indices.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::vector<std::uint16_t> perm, std::optional<std::vector<int>> word = std::nullopt)
        : perm_(std::move(perm)), word_(std::move(word)) {}

    static WeylElement identity(std::size_t n);

    std::size_t operator()(std::size_t root) const { return perm_[root]; }
    const std::vector<std::uint16_t>& perm() const { return perm_; }
    // Word over simple reflections (0-based), when known.
    const std::optional<std::vector<int>>& word() const { return word_; }
    bool is_identity() const;

    // (a * b)(x) = a(b(x)); words concatenate.
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }

private:
    std::vector<std::uint16_t> perm_;
    std::optional<std::vector<int>> word_;
};

// One component of a classified Cartan matrix; nodes[k] is the input index
// playing the role of Bourbaki node k+1.
struct ComponentType {
    CartanType type;
    std::vector<int> nodes;
};

// Classify a (possibly reducible) Cartan matrix. Throws UnclassifiedTypeError.
std::vector<ComponentType> classify_cartan(const IntMatrix& cartan);
std::string type_name(const std::vector<ComponentType>& comps);

class RootSystem {
public:
    // Simple type of the given series and rank.
    static RootSystem build(Series series, int rank);
    // Any (possibly reducible) Cartan matrix; the series is taken from the
    // classification when the matrix is irreducible.
    static RootSystem from_cartan(const IntMatrix& cartan);

    int rank() const { return rank_; }
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<ComponentType>& components() const { return components_; }
    bool irreducible() const { return components_.size() == 1; }
    // The simple type this system was built as, if it was built from a type.
    const std::optional<CartanType>& declared_type() const { return declared_; }
    // Only meaningful for irreducible systems.
    Series series() const { return declared_ ? declared_->series : components_.front().type.series; }
    std::string name() const { return declared_ ? declared_->name() : type_name(components_); }

    std::size_t size() const { return roots_.size(); }
    std::size_t num_positive() const { return num_positive_; }
    const Root& root(std::size_t i) const { return roots_[i]; }
    const std::vector<Root>& roots() const { return roots_; }
    std::optional<std::size_t> find(const Root& r) const;
    std::size_t index_of(const Root& r) const;  // throws RootNotFoundError
    std::size_t simple(int i) const { return static_cast<std::size_t>(i); }
    std::size_t negative(std::size_t i) const { return i < num_positive_ ? i + num_positive_ : i - num_positive_; }
    bool is_positive(std::size_t i) const { return i < num_positive_; }
    int height(std::size_t i) const;
    std::size_t highest_root() const;  // irreducible systems only

    // Symmetrizer: (alpha_i, alpha_i) = 2 * d_i, shortest roots of each component have d = 1.
    const std::vector<int>& symmetrizer() const { return d_; }
    int inner(const Root& a, const Root& b) const;  // integral invariant form
    // <a, b^vee> = 2 (a,b) / (b,b)
    int pairing(std::size_t a, std::size_t b) const { return pairing_[a * roots_.size() + b]; }
    int pairing(const Root& a, const Root& b) const;
    // Coroot of r in the simple-coroot basis.
    Root coroot(const Root& r) const;
    // <r, y> for y in the simple-coroot basis.
    int pair_with_coweight(const Root& r, const std::vector<Int>& y) const;

    Root reflect(const Root& a, const Root& b) const;  // s_b(a)
    WeylElement reflection(std::size_t root_index) const;
    WeylElement simple_reflection(int i) const;
    WeylElement from_word(const std::vector<int>& word) const;
    WeylElement longest_element() const;
    int length(const WeylElement& w) const;
    Root apply(const WeylElement& w, const Root& r) const { return roots_[w(index_of(r))]; }
    bool is_conjugate(const WeylElement& x, const WeylElement& y) const;

private:
    void init(const IntMatrix& cartan);

    int rank_ = 0;
    std::optional<CartanType> declared_;
    IntMatrix cartan_;
    std::vector<ComponentType> components_;
    std::vector<int> d_;
    std::vector<Root> roots_;
    std::size_t num_positive_ = 0;
    std::unordered_map<Root, std::size_t, RootHash> index_;
    std::vector<int> pairing_;
};

// Order of the Weyl group from the classical formulas.
std::uint64_t weyl_group_order(const std::vector<ComponentType>& comps);

// Compact element representation used during enumeration: images of the
// simple roots, column j = w(alpha_j).
// The view is only valid during the visitor call.
struct WeylMatrix {
    int rank = 0;
    const std::int8_t* cols = nullptr;  // rank * rank, column-major
    const std::int8_t* image(int j) const { return cols + j * rank; }
};

WeylElement to_weyl_element(const RootSystem& rs, const WeylMatrix& m);

// Visits every element exactly once in order of length (BFS). Returns the
// number of elements. Throws CapExceededError before enumeration if the
// predicted order exceeds `cap`.
std::uint64_t enumerate_weyl(const RootSystem& rs, std::uint64_t cap,
                             const std::function<void(const WeylMatrix&, int)>& visit);

// Number of elements of each length.
std::vector<std::uint64_t> length_profile(const RootSystem& rs, std::uint64_t cap);

}  // namespace theta
