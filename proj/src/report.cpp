#include "theta/report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"
#include "theta/errors.hpp"
#include "theta/nilcomp.hpp"
#include "theta/restricted.hpp"
#include "theta/weylinv.hpp"

namespace theta {

using nlohmann::json;

std::vector<CartanType> catalog_types(int max_rank) {
    std::vector<CartanType> out;
    for (Series s : {Series::A, Series::B, Series::C, Series::D})
        for (int n = 1; n <= max_rank; ++n)
            if (is_valid_type(s, n)) out.push_back({s, n});
    for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Series::E, n});
    if (max_rank >= 4) out.push_back({Series::F, 4});
    if (max_rank >= 2) out.push_back({Series::G, 2});
    return out;
}

Report build_report(const InvolutionClassEntry& entry, std::uint64_t cap) {
    const SatakeInvolution& inv = *entry.satake;
    Report rep;
    rep.series = std::string(1, series_char(entry.series));
    rep.rank = entry.rank;
    rep.label = entry.label;
    rep.fixed_algebra = entry.fixed_algebra_name;
    rep.split = inv.is_split();
    rep.quasi_split = inv.is_quasi_split();
    rep.inner = inv.is_inner();
    for (int i : inv.compact()) rep.compact.push_back(i + 1);
    for (int i : inv.psi()) rep.psi.push_back(i + 1);
    rep.dims = kp_dimensions(inv);

    RestrictedRootSystem rrs = restrict(entry.satake);
    rep.restricted_type = rrs.type();
    rep.reduced_type = rrs.reduced_type();
    rep.r = rrs.r();
    for (std::size_t k = 0; k < rrs.roots().size(); ++k) {
        const auto& root = rrs.roots()[k];
        if (root.positive) rep.positive_roots.push_back({rrs.pi_coords()[k], root.multiplicity});
    }

    DegreeProfile degrees = invariant_degrees(rrs);
    rep.degrees = degrees.degrees;
    rep.weyl_order_predicted = std::to_string(weyl_group_order(rrs.reduced_components()));
    try {
        BabyWeylGroup w(rrs, cap);
        IntPolynomial p = poincare_polynomial(w);
        rep.weyl_order = p.value_at_one().str();
        std::vector<std::string> coeffs;
        for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
        rep.poincare = coeffs;
        rep.demazure = demazure_identity_check(degrees, p).equal;
    } catch (const CapExceededError& e) {
        rep.warnings.push_back("W_A too large: predicted order " + std::to_string(e.predicted_order()) +
                               " exceeds the enumeration cap " + std::to_string(e.cap()));
    }

    OmegaResult om = omega(inv, rrs);
    rep.omega_diagram = om.diagram.to_string();
    rep.omega = om.omega.coroot_coords;

    ComponentReport cc = component_count(inv, rrs);
    rep.components = cc.count;
    rep.component_method = to_string(cc.method);
    rep.z_mod_z2 = cc.z_mod_z2.to_string();
    rep.z_cap_a = cc.z_cap_a.to_string();
    rep.z_cap_a_mod_squares = cc.z_cap_a_mod_squares.to_string();
    rep.notes = cc.notes;
    rep.codim = rrs.r();
    return rep;
}

namespace {

json dims_json(const KPDimensions& d) { return {{"g", d.g}, {"k", d.k}, {"p", d.p}, {"a", d.a}, {"m", d.m}}; }

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
    const json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

}  // namespace

std::string report_to_json(const Report& r, int indent) {
    json roots = json::array();
    for (const auto& e : r.positive_roots) roots.push_back({{"coords", e.coords}, {"multiplicity", e.multiplicity}});
    json j = {
        {"schema", r.schema},
        {"series", r.series},
        {"rank", r.rank},
        {"label", r.label},
        {"fixed_algebra", r.fixed_algebra},
        {"split", r.split},
        {"quasi_split", r.quasi_split},
        {"inner", r.inner},
        {"compact", r.compact},
        {"psi", r.psi},
        {"dims", dims_json(r.dims)},
        {"restricted_type", r.restricted_type},
        {"reduced_type", r.reduced_type},
        {"r", r.r},
        {"positive_restricted_roots", roots},
        {"weyl_order_predicted", r.weyl_order_predicted},
        {"weyl_order", optional_json(r.weyl_order)},
        {"degrees", r.degrees},
        {"poincare", optional_json(r.poincare)},
        {"demazure", optional_json(r.demazure)},
        {"omega_diagram", r.omega_diagram},
        {"omega", r.omega},
        {"components", r.components},
        {"component_method", r.component_method},
        {"z_mod_z2", r.z_mod_z2},
        {"z_cap_a", r.z_cap_a},
        {"z_cap_a_mod_squares", r.z_cap_a_mod_squares},
        {"notes", r.notes},
        {"codim", r.codim},
        {"warnings", r.warnings},
    };
    return j.dump(indent);
}

Report report_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        Report r;
        r.schema = j.at("schema").get<int>();
        if (r.schema != kReportSchema) throw ReportFormatError("unsupported report schema " + std::to_string(r.schema));
        r.series = j.at("series").get<std::string>();
        r.rank = j.at("rank").get<int>();
        r.label = j.at("label").get<std::string>();
        r.fixed_algebra = j.at("fixed_algebra").get<std::string>();
        r.split = j.at("split").get<bool>();
        r.quasi_split = j.at("quasi_split").get<bool>();
        r.inner = j.at("inner").get<bool>();
        r.compact = j.at("compact").get<std::vector<int>>();
        r.psi = j.at("psi").get<std::vector<int>>();
        const json& d = j.at("dims");
        r.dims = {d.at("g").get<int>(), d.at("k").get<int>(), d.at("p").get<int>(), d.at("a").get<int>(),
                  d.at("m").get<int>()};
        r.restricted_type = j.at("restricted_type").get<std::string>();
        r.reduced_type = j.at("reduced_type").get<std::string>();
        r.r = j.at("r").get<int>();
        for (const auto& e : j.at("positive_restricted_roots"))
            r.positive_roots.push_back({e.at("coords").get<std::vector<Int>>(), e.at("multiplicity").get<int>()});
        r.weyl_order_predicted = j.at("weyl_order_predicted").get<std::string>();
        r.weyl_order = optional_from<std::string>(j, "weyl_order");
        r.degrees = j.at("degrees").get<std::vector<int>>();
        r.poincare = optional_from<std::vector<std::string>>(j, "poincare");
        r.demazure = optional_from<bool>(j, "demazure");
        r.omega_diagram = j.at("omega_diagram").get<std::string>();
        r.omega = j.at("omega").get<std::vector<Int>>();
        r.components = j.at("components").get<int>();
        r.component_method = j.at("component_method").get<std::string>();
        r.z_mod_z2 = j.at("z_mod_z2").get<std::string>();
        r.z_cap_a = j.at("z_cap_a").get<std::string>();
        r.z_cap_a_mod_squares = j.at("z_cap_a_mod_squares").get<std::string>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        r.codim = j.at("codim").get<int>();
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw ReportFormatError(std::string("malformed report: ") + e.what());
    }
}

namespace {

std::string join(const std::vector<int>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string poincare_text(const std::vector<std::string>& c) {
    std::vector<BigInt> coeffs;
    for (const auto& s : c) coeffs.emplace_back(s);
    return IntPolynomial(coeffs).to_string();
}

}  // namespace

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    auto row = [&](const std::string& key, const std::string& value) {
        os << std::left << std::setw(14) << key << value << '\n';
    };
    row("class", r.label + " on " + r.series + std::to_string(r.rank) + ", k = " + r.fixed_algebra);
    std::string flags = r.inner ? "inner" : "outer";
    if (r.split) flags += ", split";
    else if (r.quasi_split) flags += ", quasi-split";
    row("type", flags);
    std::vector<int> psi;
    for (int i : r.psi) psi.push_back(i - 1);
    row("satake", "I = {" + join(r.compact, ",") + "}, psi = " + cycle_notation(psi));
    row("dims", "g " + std::to_string(r.dims.g) + ", k " + std::to_string(r.dims.k) + ", p " +
                    std::to_string(r.dims.p) + ", a " + std::to_string(r.dims.a) + ", m " + std::to_string(r.dims.m));
    row("Phi_A", r.restricted_type + " (reduced " + r.reduced_type + "), r = " + std::to_string(r.r));
    std::string mult;
    if (r.positive_roots.size() <= 12) {
        for (const auto& e : r.positive_roots) {
            if (!mult.empty()) mult += ", ";
            mult += root_to_string(std::vector<int>(e.coords.begin(), e.coords.end())) + ":" +
                    std::to_string(e.multiplicity);
        }
    } else {
        std::map<int, int> by_mult;
        for (const auto& e : r.positive_roots) ++by_mult[e.multiplicity];
        for (const auto& [m, count] : by_mult)
            mult += (mult.empty() ? "" : ", ") + std::to_string(count) + " positive roots of multiplicity " +
                    std::to_string(m);
    }
    row("multiplicity", mult.empty() ? "-" : mult);
    if (r.weyl_order) row("|W_A|", *r.weyl_order);
    else row("|W_A|", "W_A too large (predicted " + r.weyl_order_predicted + ")");
    row("degrees", join(r.degrees));
    if (r.poincare) row("poincare", poincare_text(*r.poincare));
    else row("poincare", "W_A too large");
    if (r.demazure) row("demazure", *r.demazure ? "holds" : "FAILS");
    row("omega", r.omega_diagram);
    row("components", std::to_string(r.components) + " (" + r.component_method + ")");
    row("Z/Z^2", r.z_mod_z2);
    row("Z n A", r.z_cap_a + ", mod squares " + r.z_cap_a_mod_squares);
    for (const auto& n : r.notes) row("note", n);
    row("codim N", std::to_string(r.codim));
    for (const auto& w : r.warnings) row("warning", w);
    return os.str();
}

}  // namespace theta
