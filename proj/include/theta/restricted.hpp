#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "theta/rootsys.hpp"
#include "theta/satake.hpp"

namespace theta {

struct RestrictedRoot {
    Root vec;  // alpha - theta*(alpha), in simple-root coordinates of Phi_S
    int multiplicity = 0;
    bool positive = false;
    bool indivisible = true;  // member of Phi_A^*
};

class RestrictedRootSystem {
public:
    const std::vector<RestrictedRoot>& roots() const { return roots_; }
    std::optional<std::size_t> find(const Root& v) const;

    // Basis Pi, as indices into roots(), in order of the smallest lifting simple root.
    const std::vector<std::size_t>& basis() const { return basis_; }
    // lifts()[k]: simple roots of Delta_S \ I restricting to basis element k.
    const std::vector<std::vector<int>>& lifts() const { return lifts_; }
    // Coordinates of a restricted root with respect to Pi.
    const std::vector<IntVector>& pi_coords() const { return pi_coords_; }

    // 2 (a, b) / (b, b) computed from the invariant form of Phi_S.
    int cartan_integer(std::size_t a, std::size_t b) const;
    // Cartan matrix of Phi_A^* on the basis Pi, (i, j) = <pi_i, pi_j^vee>.
    const IntMatrix& cartan() const { return cartan_; }

    int r() const { return r_; }
    int r0() const { return static_cast<int>(basis_.size()); }
    bool non_reduced() const { return non_reduced_; }
    // Components of Phi_A^* (node k of a component refers to basis element nodes[k]).
    const std::vector<ComponentType>& reduced_components() const { return reduced_; }
    std::string reduced_type() const;  // e.g. "B2", "C3"
    // Type of Phi_A, with "BC_n" for non-reduced components, canonicalized.
    std::string type() const;
    // Number of restricted roots in Phi_A^*, positive ones.
    std::size_t num_reduced_positive() const;

    const SatakeInvolution& involution() const { return *inv_; }

private:
    friend RestrictedRootSystem restrict(std::shared_ptr<const SatakeInvolution> inv);

    std::shared_ptr<const SatakeInvolution> inv_;
    std::vector<RestrictedRoot> roots_;
    std::vector<std::size_t> basis_;
    std::vector<std::vector<int>> lifts_;
    std::vector<IntVector> pi_coords_;
    IntMatrix cartan_;
    std::vector<ComponentType> reduced_;
    std::vector<std::string> component_names_;
    int r_ = 0;
    bool non_reduced_ = false;
};

// Throws InvalidInvolutionError when the involution does not validate.
RestrictedRootSystem restrict(std::shared_ptr<const SatakeInvolution> inv);

// Little Weyl group W_A, realized as the Weyl group of Phi_A^* on Pi.
class BabyWeylGroup {
public:
    BabyWeylGroup(const RestrictedRootSystem& rrs, std::uint64_t cap);

    const RootSystem& system() const { return *system_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t cap() const { return cap_; }
    // Map from roots of system() to restricted-root indices of Phi_A^*.
    const std::vector<std::size_t>& root_map() const { return root_map_; }
    // Counts of elements by length; enumerates, so it honours the cap.
    std::vector<std::uint64_t> length_profile() const;

private:
    std::shared_ptr<const RootSystem> system_;
    std::vector<std::size_t> root_map_;
    std::uint64_t order_ = 1;
    std::uint64_t cap_ = 0;
};

// Throws CapExceededError when the predicted order is above the cap.
BabyWeylGroup baby_weyl(const RestrictedRootSystem& rrs, std::uint64_t cap);

struct GoodPrimeCheck {
    bool good = true;
    std::string witness;  // violating coefficient, or a 3-alpha violation
};

GoodPrimeCheck check_p_good(const RestrictedRootSystem& rrs, int p);
// Same test for an ordinary root system (highest-root coefficients).
GoodPrimeCheck check_p_good(const RootSystem& rs, int p);

struct RestrictedCocharacter {
    IntVector coroot_coords;  // in the simple-coroot basis of Phi_S
    std::vector<int> pairings;  // <pi_k, y> for each element of Pi
};

enum class OmegaCase { I, II, III };
std::string to_string(OmegaCase c);

struct OmegaAlpha {
    RestrictedCocharacter cocharacter;
    OmegaCase tag = OmegaCase::I;
    int lift = 0;  // simple root of Phi_S used as beta
};

// omega_alpha for the basis element `k` of Pi. Throws LiftNotFoundError.
OmegaAlpha omega_alpha(const SatakeInvolution& inv, const RestrictedRootSystem& rrs, std::size_t k);

// Pairing <r, y> of a root of Phi_S with a cocharacter in coroot coordinates.
int pair_root_cocharacter(const RootSystem& rs, const Root& r, const IntVector& y);

}  // namespace theta
