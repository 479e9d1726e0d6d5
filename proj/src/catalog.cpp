#include <algorithm>
#include <cctype>
#include <sstream>

#include "expr.hpp"
#include "theta/errors.hpp"
#include "theta/satake.hpp"

namespace theta {

namespace detail {
extern const std::string_view builtin_catalog_text;
}

struct Catalog::Record {
    int line = 0;
    Series series = Series::A;
    std::string rank_cond;
    std::string label;
    // variable definitions in order; `range` set when the value is lo..hi
    struct Var {
        std::string name, value;
        bool range = false;
    };
    std::vector<Var> vars;
    std::string when = "1";
    std::string compact, psi, k, phi_a, components;
};

namespace {

using detail::Env;
using detail::eval_expr;
using detail::substitute;

[[noreturn]] void format_error(int line, const std::string& why) {
    throw CatalogFormatError("catalog line " + std::to_string(line) + ": " + why);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::vector<int> parse_index_set(const std::string& text, const Env& env, int n, int line) {
    std::vector<int> out;
    if (text == "-") return out;
    for (const std::string& item : split(text, ',')) {
        std::size_t dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(static_cast<int>(eval_expr(item, env)));
            continue;
        }
        std::string hi_part = item.substr(dots + 2);
        long long step = 1;
        std::size_t colon = hi_part.rfind(':');
        if (colon != std::string::npos && hi_part.find('?') == std::string::npos) {
            step = eval_expr(hi_part.substr(colon + 1), env);
            hi_part = hi_part.substr(0, colon);
        }
        if (step <= 0) format_error(line, "index range step must be positive");
        long long lo = eval_expr(item.substr(0, dots), env), hi = eval_expr(hi_part, env);
        for (long long v = lo; v <= hi; v += step) out.push_back(static_cast<int>(v));
    }
    for (int& v : out) {
        if (v < 1 || v > n) format_error(line, "simple root index " + std::to_string(v) + " out of range");
        v -= 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> parse_psi(const std::string& text, const Env& env, int n, int line) {
    std::vector<int> psi(n);
    for (int i = 0; i < n; ++i) psi[i] = i;
    if (text == "id") return psi;
    if (text == "rev") {
        for (int i = 0; i < n; ++i) psi[i] = n - 1 - i;
        return psi;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') format_error(line, "psi must be 'id', 'rev' or cycles like (1,6)(3,5)");
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) format_error(line, "unterminated cycle in psi");
        std::vector<int> cyc;
        for (const std::string& e : split(std::string_view(text).substr(pos + 1, close - pos - 1), ',')) {
            long long v = eval_expr(e, env);
            if (v < 1 || v > n) format_error(line, "psi index out of range");
            cyc.push_back(static_cast<int>(v - 1));
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) psi[cyc[k]] = cyc[(k + 1) % cyc.size()];
        pos = close + 1;
    }
    return psi;
}

}  // namespace

int InvolutionClassEntry::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw InternalError("class " + label + " has no parameter '" + name + "'");
    return it->second;
}

std::string canonical_type_name(const std::string& name) {
    if (name.find('+') != std::string::npos) {
        std::string out;
        for (const std::string& part : split(name, '+')) out += (out.empty() ? "" : "+") + canonical_type_name(part);
        return out;
    }
    if (name == "B1" || name == "C1") return "A1";
    if (name == "C2") return "B2";
    if (name == "D3") return "A3";
    return name;
}

Catalog Catalog::parse(std::string_view text) {
    Catalog cat;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() < 3) format_error(line_no, "expected 'series rank-condition label field...'");
        auto rec = std::make_shared<Record>();
        rec->line = line_no;
        try {
            rec->series = parse_series(tok[0]);
        } catch (const InvalidTypeError&) {
            format_error(line_no, "unknown series '" + tok[0] + "'");
        }
        rec->rank_cond = tok[1];
        rec->label = tok[2];
        bool has_range = false;
        for (std::size_t i = 3; i < tok.size(); ++i) {
            std::size_t eq = tok[i].find('=');
            if (eq == std::string::npos || eq == 0) format_error(line_no, "field '" + tok[i] + "' is not key=value");
            std::string key = tok[i].substr(0, eq), value = tok[i].substr(eq + 1);
            if (key == "when") rec->when = value;
            else if (key == "I") rec->compact = value;
            else if (key == "psi") rec->psi = value;
            else if (key == "k") rec->k = value;
            else if (key == "phiA") rec->phi_a = value;
            else if (key == "components") rec->components = value;
            else {
                if (!std::all_of(key.begin(), key.end(), [](char c) { return std::islower(static_cast<unsigned char>(c)); }) ||
                    key == "n")
                    format_error(line_no, "unknown field '" + key + "'");
                Record::Var v{key, value, value.find("..") != std::string::npos};
                if (v.range && has_range) format_error(line_no, "at most one ranged parameter per record");
                has_range = has_range || v.range;
                rec->vars.push_back(v);
            }
        }
        for (const auto* f : {&rec->compact, &rec->psi, &rec->k, &rec->phi_a, &rec->components})
            if (f->empty()) format_error(line_no, "missing one of the fields I, psi, k, phiA, components");
        cat.records_.push_back(rec);
    }
    return cat;
}

const Catalog& Catalog::builtin() {
    static const Catalog cat = parse(detail::builtin_catalog_text);
    return cat;
}

std::vector<InvolutionClassEntry> Catalog::list(Series series, int rank) const {
    if (!is_valid_type(series, rank))
        throw InvalidTypeError("invalid simple type " + std::string(1, series_char(series)) + std::to_string(rank));
    auto ambient = std::make_shared<const RootSystem>(RootSystem::build(series, rank));
    std::vector<InvolutionClassEntry> out;
    for (const auto& rec : records_) {
        if (rec->series != series) continue;
        Env base{{"n", rank}};
        if (!eval_expr(rec->rank_cond, base)) continue;

        // expand the ranged parameter, if any
        std::vector<Env> envs{base};
        for (const auto& v : rec->vars) {
            std::vector<Env> next;
            for (Env env : envs) {
                if (v.range) {
                    std::size_t dots = v.value.find("..");
                    long long lo = eval_expr(v.value.substr(0, dots), env);
                    long long hi = eval_expr(v.value.substr(dots + 2), env);
                    for (long long x = lo; x <= hi; ++x) {
                        env[v.name] = x;
                        next.push_back(env);
                    }
                } else {
                    env[v.name] = eval_expr(v.value, env);
                    next.push_back(env);
                }
            }
            envs = std::move(next);
        }
        for (const Env& env : envs) {
            if (!eval_expr(rec->when, env)) continue;
            InvolutionClassEntry e;
            e.line = rec->line;
            e.series = series;
            e.rank = rank;
            e.label = substitute(rec->label, env);
            e.family = e.label.substr(0, e.label.find('('));
            for (const auto& [k, v] : env) e.params[k] = static_cast<int>(v);
            auto compact = parse_index_set(rec->compact, env, rank, rec->line);
            auto psi = parse_psi(rec->psi, env, rank, rec->line);
            e.satake = std::make_shared<const SatakeInvolution>(ambient, compact, psi);
            e.fixed_algebra_name = substitute(rec->k, env);
            e.is_quasi_split = e.satake->is_quasi_split();
            e.is_split = e.satake->is_split();
            e.expected_phi_a = canonical_type_name(substitute(rec->phi_a, env));
            e.expected_components = static_cast<int>(eval_expr(substitute(rec->components, env), env));
            for (const auto& prev : out)
                if (prev.label == e.label) format_error(rec->line, "duplicate label " + e.label);
            out.push_back(std::move(e));
        }
    }
    return out;
}

InvolutionClassEntry Catalog::lookup(Series series, int rank, const std::string& label) const {
    auto entries = list(series, rank);
    std::vector<std::string> labels;
    for (auto& e : entries) {
        if (e.label == label) return e;
        labels.push_back(e.label);
    }
    std::string msg = "no class '" + label + "' for " + std::string(1, series_char(series)) + std::to_string(rank);
    throw UnknownLabelError(msg, labels);
}

std::optional<InvolutionClassEntry> Catalog::identify(const SatakeInvolution& inv) const {
    const RootSystem& rs = inv.ambient();
    // only systems in the standard numbering can be matched
    if (!rs.declared_type()) return std::nullopt;
    const CartanType t = *rs.declared_type();
    for (auto& e : list(t.series, t.rank))
        if (e.satake->compact() == inv.compact() && e.satake->psi() == inv.psi()) return e;
    return std::nullopt;
}

}  // namespace theta
