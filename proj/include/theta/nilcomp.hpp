#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/lattice.hpp"
#include "theta/restricted.hpp"
#include "theta/rootsys.hpp"
#include "theta/satake.hpp"

namespace theta {

struct WeightedDiagram {
    Series series = Series::A;
    std::vector<int> weights;  // Bourbaki order
    // Layout: E types list alpha_1, alpha_3, ..., alpha_n then "/ alpha_2";
    // D types list alpha_1 .. alpha_{n-2} then "/ alpha_{n-1} alpha_n".
    std::string to_string() const;
    bool operator==(const WeightedDiagram&) const = default;
};

struct OmegaResult {
    RestrictedCocharacter omega;
    WeightedDiagram diagram;
};

// Throws UnsolvableCocharacterError when the diagram has no integral solution.
OmegaResult omega(const SatakeInvolution& inv, const RestrictedRootSystem& rrs);

// Finite groups attached to the centre of the simply connected group.
struct CenterData {
    FiniteAbelianGroup z;               // Z = P^vee / Q^vee
    FiniteAbelianGroup z_mod_squares;   // Z / Z^2
    FiniteAbelianGroup z_cap_a;         // Z n A
    FiniteAbelianGroup z_cap_a_mod_squares;
    FiniteAbelianGroup tau_z;           // {z theta(z)^-1}
    FiniteAbelianGroup z_cap_a_mod_tau; // (Z n A) / tau(Z)
    Int reduced_center_order = 1;       // |Z(B*)| from the Cartan matrix of Phi_A^*
    int type_iii_count = 0;
};

// Throws NotSimplyConnectedError for non-simply-connected or reductive ambients.
CenterData center_data(const SatakeInvolution& inv, const RestrictedRootSystem& rrs);

// (Z n A, (Z n A)/(Z n A)^2); the order is cross-checked against |Z(B*)| / 2^i.
std::pair<FiniteAbelianGroup, FiniteAbelianGroup> z_cap_a(const SatakeInvolution& inv,
                                                          const RestrictedRootSystem& rrs);

enum class CountMethod { SplitFormula, QuasiSplitFormula, CaseTable };
std::string to_string(CountMethod m);

struct ComponentReport {
    int count = 0;
    CountMethod method = CountMethod::CaseTable;
    FiniteAbelianGroup z_mod_z2;
    FiniteAbelianGroup z_cap_a;
    FiniteAbelianGroup z_cap_a_mod_squares;
    Int tau_z_order = 1;
    std::vector<std::string> notes;
};

// Number of irreducible components of the nilpotent cone in p. Throws
// UncoveredClassError when no rule applies.
ComponentReport component_count(const SatakeInvolution& inv, const RestrictedRootSystem& rrs);

struct OrthogonalDecomposition {
    enum class Target {
        LongestElement,          // product equals w_0
        ConjugateOfLongest,      // product is conjugate to w_0
        LongestTimesSimple,      // product equals w_0 s_{alpha_k}, checked after conjugation
    };
    std::string name;
    Series series = Series::A;
    int rank = 0;
    std::vector<Root> betas;
    Target target = Target::LongestElement;
    int target_simple = -1;           // k for LongestTimesSimple (0-based)
    std::optional<Root> conjugator;   // alpha with gamma_i = s_alpha(beta_i)
    std::vector<Root> expected_conjugates;
    WeightedDiagram lambda;
};

struct DecompositionReport {
    bool orthogonal = true;
    bool product = true;
    bool mod4 = true;
    std::vector<std::string> failures;
    bool ok() const { return orthogonal && product && mod4 && failures.empty(); }
};

DecompositionReport verify_w0_decomposition(const OrthogonalDecomposition& dec, const RootSystem& rs);
std::vector<OrthogonalDecomposition> builtin_decompositions();

}  // namespace theta
