#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "theta/satake.hpp"

namespace theta {

inline constexpr std::uint64_t kDefaultCap = 5'000'000;
inline constexpr int kReportSchema = 1;

// Simple types covered by the catalog up to the given rank.
std::vector<CartanType> catalog_types(int max_rank = 8);

struct RestrictedRootEntry {
    std::vector<Int> coords;  // coordinates in Pi
    int multiplicity = 0;
    bool operator==(const RestrictedRootEntry&) const = default;
};

struct Report {
    int schema = kReportSchema;
    std::string series;
    int rank = 0;
    std::string label;
    std::string fixed_algebra;
    bool split = false;
    bool quasi_split = false;
    bool inner = false;
    std::vector<int> compact;  // 1-based
    std::vector<int> psi;      // 1-based images
    KPDimensions dims;
    std::string restricted_type;  // Phi_A
    std::string reduced_type;     // Phi_A^*
    int r = 0;
    std::vector<RestrictedRootEntry> positive_roots;
    std::string weyl_order_predicted;
    std::optional<std::string> weyl_order;  // empty when W_A is too large to enumerate
    std::vector<int> degrees;
    std::optional<std::vector<std::string>> poincare;  // ascending coefficients
    std::optional<bool> demazure;
    std::string omega_diagram;
    std::vector<Int> omega;  // simple-coroot coordinates
    int components = 0;
    std::string component_method;
    std::string z_mod_z2;
    std::string z_cap_a;
    std::string z_cap_a_mod_squares;
    std::vector<std::string> notes;
    int codim = 0;
    std::vector<std::string> warnings;

    bool operator==(const Report&) const = default;
};

Report build_report(const InvolutionClassEntry& entry, std::uint64_t cap = kDefaultCap);

std::string report_to_json(const Report& r, int indent = 2);
// Throws ReportFormatError on malformed input or a schema mismatch.
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace theta
