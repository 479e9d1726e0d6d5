#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "theta/matrix.hpp"
#include "theta/rootsys.hpp"

namespace theta {

// Involution of a simple group described by Satake data: the compact simple
// roots I and a diagram automorphism psi. theta*(a) = -w_I(psi(a)).
class SatakeInvolution {
public:
    struct Options {
        int central_fixed_dim = 0;  // central torus on which theta is trivial
        int central_split_dim = 0;  // central torus on which theta is inversion
        bool simply_connected = true;
    };

    // `compact` and `psi` use 0-based simple-root indices. Throws
    // InvalidInvolutionError on malformed shapes (out of range, psi not a
    // permutation); semantic conditions are left to validate().
    SatakeInvolution(std::shared_ptr<const RootSystem> ambient, std::vector<int> compact, std::vector<int> psi,
                     Options options);
    SatakeInvolution(std::shared_ptr<const RootSystem> ambient, std::vector<int> compact, std::vector<int> psi)
        : SatakeInvolution(std::move(ambient), std::move(compact), std::move(psi), Options{}) {}

    const RootSystem& ambient() const { return *ambient_; }
    std::shared_ptr<const RootSystem> ambient_ptr() const { return ambient_; }
    const std::vector<int>& compact() const { return compact_; }
    bool is_compact(int simple) const { return in_i_[simple]; }
    const std::vector<int>& psi() const { return psi_; }
    const Options& options() const { return options_; }

    bool is_quasi_split() const { return compact_.empty(); }
    bool is_split() const;
    bool psi_is_identity() const;
    // psi equals the opposition involution -w_0 on the simple roots.
    bool is_inner() const;

    // Linear maps on simple-root coordinates (columns = images of alpha_i).
    const IntMatrix& psi_matrix() const { return psi_m_; }
    const IntMatrix& w_i_matrix() const { return w_i_m_; }
    const IntMatrix& theta_matrix() const { return theta_m_; }  // -w_I psi

    // Indices of the roots of Phi_I.
    std::vector<std::size_t> compact_roots() const;

private:
    std::shared_ptr<const RootSystem> ambient_;
    std::vector<int> compact_;
    std::vector<bool> in_i_;
    std::vector<int> psi_;
    Options options_;
    IntMatrix psi_m_, w_i_m_, theta_m_;
};

// 1-based cycle notation of a 0-based permutation: "id", "(1,6)(3,5)".
std::string cycle_notation(const std::vector<int>& perm);

Root apply_matrix(const IntMatrix& m, const Root& r);

// theta*(a). Throws RootNotFoundError when `a` (or its image) is not a root.
Root theta_star(const SatakeInvolution& inv, const Root& a);
// theta* as a permutation of root indices. Throws RootNotFoundError if
// theta* does not preserve the root set.
std::vector<std::size_t> theta_star_permutation(const SatakeInvolution& inv);

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

ValidationReport validate(const SatakeInvolution& inv);

struct KPDimensions {
    int g = 0, k = 0, p = 0, a = 0, m = 0;
    bool operator==(const KPDimensions&) const = default;
};

KPDimensions kp_dimensions(const SatakeInvolution& inv);

// ------------------------------------------------------------------ catalog

struct InvolutionClassEntry {
    std::string label;   // e.g. "AIII(2,3)"
    std::string family;  // label without parameters, e.g. "AIII"
    Series series;
    int rank;
    std::map<std::string, int> params;  // template variables (n, p, q, ...)
    std::shared_ptr<const SatakeInvolution> satake;
    std::string fixed_algebra_name;
    bool is_split = false;
    bool is_quasi_split = false;
    std::string expected_phi_a;  // canonical type name of Phi_A (e.g. "BC2", "C3")
    int expected_components = 0;
    int line = 0;  // source line in the catalog text

    int param(const std::string& name) const;
};

class Catalog {
public:
    // Parses the line-oriented template format documented in docs/catalog_format.md.
    static Catalog parse(std::string_view text);
    static const Catalog& builtin();

    // Entries for a simple type, in catalog order. Throws InvalidTypeError.
    std::vector<InvolutionClassEntry> list(Series series, int rank) const;
    // Throws UnknownLabelError listing the available labels.
    InvolutionClassEntry lookup(Series series, int rank, const std::string& label) const;
    // Catalog entry with the same compact set and diagram automorphism.
    std::optional<InvolutionClassEntry> identify(const SatakeInvolution& inv) const;

    struct Record;

private:
    std::vector<std::shared_ptr<const Record>> records_;
};

// Normalized type name: rank one B/C/BC names become "A1"/"BC1", C2 becomes "B2".
std::string canonical_type_name(const std::string& name);

}  // namespace theta
