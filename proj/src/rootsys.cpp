#include "theta/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "theta/errors.hpp"

namespace theta {

char series_char(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

Series parse_series(const std::string& s) {
    if (s.size() == 1) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (c >= 'A' && c <= 'G') return static_cast<Series>(c - 'A');
    }
    throw InvalidTypeError("unknown series '" + s + "' (expected one of A..G)");
}

std::string CartanType::name() const { return std::string(1, series_char(series)) + std::to_string(rank); }

bool is_valid_type(Series s, int n) {
    switch (s) {
        case Series::A: return n >= 1;
        case Series::B: return n >= 2;
        case Series::C: return n >= 2;
        case Series::D: return n >= 4;
        case Series::E: return n >= 6 && n <= 8;
        case Series::F: return n == 4;
        case Series::G: return n == 2;
    }
    return false;
}

IntMatrix cartan_matrix(Series s, int n) {
    if (!is_valid_type(s, n))
        throw InvalidTypeError("invalid simple type " + std::string(1, series_char(s)) + std::to_string(n));
    IntMatrix c(n, n);
    auto link = [&](int i, int j) {  // 1-based simply laced edge
        c(i - 1, j - 1) = -1;
        c(j - 1, i - 1) = -1;
    };
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    switch (s) {
        case Series::A:
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case Series::B:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            c(n - 2, n - 1) = -2;  // alpha_n short
            c(n - 1, n - 2) = -1;
            break;
        case Series::C:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            c(n - 2, n - 1) = -1;  // alpha_n long
            c(n - 1, n - 2) = -2;
            break;
        case Series::D:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case Series::E:
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < n; ++i) link(i, i + 1);
            break;
        case Series::F:
            link(1, 2);
            c(1, 2) = -2;
            c(2, 1) = -1;
            link(3, 4);
            break;
        case Series::G:
            c(0, 1) = -1;  // alpha_1 short
            c(1, 0) = -3;
            break;
    }
    return c;
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : r) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
    return h;
}

std::string root_to_string(const Root& r) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------- WeylElement

WeylElement WeylElement::identity(std::size_t n) {
    std::vector<std::uint16_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    return WeylElement(std::move(p), std::vector<int>{});
}

bool WeylElement::is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != i) return false;
    return true;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (perm_.size() != o.perm_.size()) throw InternalError("composing Weyl elements of different systems");
    std::vector<std::uint16_t> p(perm_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = perm_[o.perm_[i]];
    std::optional<std::vector<int>> w;
    if (word_ && o.word_) {
        w = *word_;
        w->insert(w->end(), o.word_->begin(), o.word_->end());
    }
    return WeylElement(std::move(p), std::move(w));
}

WeylElement WeylElement::inverse() const {
    std::vector<std::uint16_t> p(perm_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[perm_[i]] = static_cast<std::uint16_t>(i);
    std::optional<std::vector<int>> w;
    if (word_) w = std::vector<int>(word_->rbegin(), word_->rend());
    return WeylElement(std::move(p), std::move(w));
}

// ------------------------------------------------------------- classification

namespace {

bool match_template(const IntMatrix& cartan, const std::vector<int>& nodes, const IntMatrix& tmpl,
                    std::vector<int>& assign, std::vector<bool>& used, std::size_t k) {
    if (k == nodes.size()) return true;
    for (std::size_t c = 0; c < nodes.size(); ++c) {
        if (used[c]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < k && ok; ++prev) {
            int a = nodes[c], b = assign[prev];
            if (cartan(a, b) != tmpl(k, prev) || cartan(b, a) != tmpl(prev, k)) ok = false;
        }
        if (!ok) continue;
        used[c] = true;
        assign[k] = nodes[c];
        if (match_template(cartan, nodes, tmpl, assign, used, k + 1)) return true;
        used[c] = false;
    }
    return false;
}

std::vector<int> type_symmetrizer(CartanType t) {
    const int n = t.rank;
    std::vector<int> d(n, 1);
    switch (t.series) {
        case Series::B:
            for (int i = 0; i < n - 1; ++i) d[i] = 2;
            break;
        case Series::C:
            d[n - 1] = 2;
            break;
        case Series::F:
            d[0] = d[1] = 2;
            break;
        case Series::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

}  // namespace

std::vector<ComponentType> classify_cartan(const IntMatrix& cartan) {
    const int n = static_cast<int>(cartan.rows());
    if (cartan.cols() != cartan.rows()) throw UnclassifiedTypeError("Cartan matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && cartan(i, j) != 2) throw UnclassifiedTypeError("Cartan matrix diagonal must be 2");
            if (i != j && (cartan(i, j) > 0 || ((cartan(i, j) == 0) != (cartan(j, i) == 0))))
                throw UnclassifiedTypeError("invalid off-diagonal Cartan entries");
        }
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> groups;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = static_cast<int>(groups.size());
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (int j = 0; j < n; ++j)
                if (comp[j] < 0 && cartan(nodes[k], j) != 0) {
                    comp[j] = comp[s];
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        groups.push_back(nodes);
    }
    std::vector<ComponentType> out;
    for (const auto& nodes : groups) {
        const int k = static_cast<int>(nodes.size());
        bool found = false;
        for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
            if (!is_valid_type(s, k)) continue;
            IntMatrix tmpl = cartan_matrix(s, k);
            std::vector<int> assign(k);
            std::vector<bool> used(k, false);
            if (match_template(cartan, nodes, tmpl, assign, used, 0)) {
                out.push_back({{s, k}, assign});
                found = true;
                break;
            }
        }
        if (!found) throw UnclassifiedTypeError("Cartan matrix component of rank " + std::to_string(k) +
                                                " matches no finite type");
    }
    return out;
}

std::string type_name(const std::vector<ComponentType>& comps) {
    if (comps.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? "+" : "") + comps[i].type.name();
    return s;
}

// ----------------------------------------------------------------- RootSystem

RootSystem RootSystem::build(Series series, int rank) {
    RootSystem rs;
    rs.init(cartan_matrix(series, rank));
    rs.declared_ = CartanType{series, rank};
    return rs;
}

RootSystem RootSystem::from_cartan(const IntMatrix& cartan) {
    RootSystem rs;
    rs.init(cartan);
    return rs;
}

void RootSystem::init(const IntMatrix& cartan) {
    rank_ = static_cast<int>(cartan.rows());
    cartan_ = cartan;
    components_ = classify_cartan(cartan);
    d_.assign(rank_, 1);
    for (const auto& c : components_) {
        auto d = type_symmetrizer(c.type);
        for (std::size_t k = 0; k < c.nodes.size(); ++k) d_[c.nodes[k]] = d[k];
    }

    // positive roots by height, using root strings through simple roots
    std::unordered_set<Root, RootHash> known;
    std::vector<Root> level, positives;
    for (int i = 0; i < rank_; ++i) {
        Root r(rank_, 0);
        r[i] = 1;
        level.push_back(r);
        known.insert(r);
    }
    while (!level.empty()) {
        positives.insert(positives.end(), level.begin(), level.end());
        std::vector<Root> next;
        for (const Root& b : level) {
            for (int i = 0; i < rank_; ++i) {
                int p = 0;
                Root g = b;
                for (;;) {
                    g[i] -= 1;
                    if (!known.count(g)) break;
                    ++p;
                }
                int pair = 0;
                for (int j = 0; j < rank_; ++j) pair += b[j] * static_cast<int>(cartan_(j, i));
                if (p - pair > 0) {
                    Root up = b;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        level = std::move(next);
    }
    auto height_of = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
    std::sort(positives.begin(), positives.end(), [&](const Root& a, const Root& b) {
        int ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    num_positive_ = positives.size();
    roots_ = positives;
    for (const Root& r : positives) {
        Root neg(r);
        for (int& x : neg) x = -x;
        roots_.push_back(neg);
    }
    if (roots_.size() > 65535) throw InternalError("root system too large");
    index_.clear();
    for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;

    const std::size_t n = roots_.size();
    pairing_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) pairing_[a * n + b] = pairing(roots_[a], roots_[b]);
}

std::optional<std::size_t> RootSystem::find(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t RootSystem::index_of(const Root& r) const {
    auto i = find(r);
    if (!i) throw RootNotFoundError("vector " + root_to_string(r) + " is not a root of " + name());
    return *i;
}

int RootSystem::height(std::size_t i) const { return std::accumulate(roots_[i].begin(), roots_[i].end(), 0); }

std::size_t RootSystem::highest_root() const {
    if (!irreducible()) throw InternalError("highest root requested for a reducible system");
    return num_positive_ - 1;
}

int RootSystem::inner(const Root& a, const Root& b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * static_cast<int>(cartan_(i, j)) * d_[j];
    }
    return s;
}

int RootSystem::pairing(const Root& a, const Root& b) const {
    int bb = inner(b, b);
    if (bb == 0) throw InternalError("pairing against the zero vector");
    int ab = 2 * inner(a, b);
    if (ab % bb != 0) throw InternalError("non-integral Cartan number");
    return ab / bb;
}

Root RootSystem::coroot(const Root& r) const {
    int half = inner(r, r) / 2;
    Root c(rank_);
    for (int j = 0; j < rank_; ++j) {
        int num = r[j] * d_[j];
        if (num % half != 0) throw InternalError("non-integral coroot coordinate");
        c[j] = num / half;
    }
    return c;
}

int RootSystem::pair_with_coweight(const Root& r, const std::vector<Int>& y) const {
    Int s = 0;
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) s += static_cast<Int>(r[j]) * cartan_(j, i) * y[i];
    return static_cast<int>(s);
}

Root RootSystem::reflect(const Root& a, const Root& b) const {
    int k = pairing(a, b);
    Root r(a);
    for (int i = 0; i < rank_; ++i) r[i] -= k * b[i];
    return r;
}

WeylElement RootSystem::reflection(std::size_t root_index) const {
    if (root_index >= roots_.size()) throw RootNotFoundError("root index out of range");
    const Root& b = roots_[root_index];
    std::vector<std::uint16_t> p(roots_.size());
    for (std::size_t a = 0; a < roots_.size(); ++a) {
        Root r(roots_[a]);
        int k = pairing(a, root_index);
        for (int i = 0; i < rank_; ++i) r[i] -= k * b[i];
        p[a] = static_cast<std::uint16_t>(index_of(r));
    }
    std::optional<std::vector<int>> word;
    if (root_index < static_cast<std::size_t>(rank_)) word = std::vector<int>{static_cast<int>(root_index)};
    return WeylElement(std::move(p), std::move(word));
}

WeylElement RootSystem::simple_reflection(int i) const {
    if (i < 0 || i >= rank_) throw RootNotFoundError("simple root index out of range");
    return reflection(static_cast<std::size_t>(i));
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
    WeylElement w = WeylElement::identity(roots_.size());
    for (int i : word) w = w * simple_reflection(i);
    return w;
}

WeylElement RootSystem::longest_element() const {
    std::vector<WeylElement> s;
    for (int i = 0; i < rank_; ++i) s.push_back(simple_reflection(i));
    WeylElement w = WeylElement::identity(roots_.size());
    for (;;) {
        int ascent = -1;
        for (int i = 0; i < rank_ && ascent < 0; ++i)
            if (is_positive(w(simple(i)))) ascent = i;
        if (ascent < 0) return w;
        w = w * s[ascent];
    }
}

int RootSystem::length(const WeylElement& w) const {
    int l = 0;
    for (std::size_t i = 0; i < num_positive_; ++i)
        if (!is_positive(w(i))) ++l;
    return l;
}

bool RootSystem::is_conjugate(const WeylElement& x, const WeylElement& y) const {
    struct PermHash {
        std::size_t operator()(const std::vector<std::uint16_t>& p) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (auto v : p) h = (h ^ v) * 1099511628211ull;
            return h;
        }
    };
    std::vector<WeylElement> s;
    for (int i = 0; i < rank_; ++i) s.push_back(simple_reflection(i));
    std::unordered_set<std::vector<std::uint16_t>, PermHash> seen{x.perm()};
    std::vector<WeylElement> frontier{x};
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            if (w == y) return true;
            for (const auto& si : s) {
                WeylElement c = si * w * si;
                if (seen.insert(c.perm()).second) next.push_back(c);
            }
        }
        if (seen.size() > 2000000) throw InternalError("conjugacy class search exceeded its bound");
        frontier = std::move(next);
    }
    return false;
}

// ------------------------------------------------------------------ ordering

std::uint64_t weyl_group_order(const std::vector<ComponentType>& comps) {
    std::uint64_t total = 1;
    auto mul = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw InternalError("Weyl group order overflows 64 bits");
        return r;
    };
    auto fact = [&](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f = mul(f, static_cast<std::uint64_t>(i));
        return f;
    };
    for (const auto& c : comps) {
        const int n = c.type.rank;
        std::uint64_t o = 1;
        switch (c.type.series) {
            case Series::A: o = fact(n + 1); break;
            case Series::B:
            case Series::C: o = mul(std::uint64_t{1} << n, fact(n)); break;
            case Series::D: o = mul(std::uint64_t{1} << (n - 1), fact(n)); break;
            case Series::E: o = n == 6 ? 51840 : n == 7 ? 2903040 : 696729600; break;
            case Series::F: o = 1152; break;
            case Series::G: o = 12; break;
        }
        total = mul(total, o);
    }
    return total;
}

WeylElement to_weyl_element(const RootSystem& rs, const WeylMatrix& m) {
    const int n = rs.rank();
    std::vector<std::uint16_t> p(rs.size());
    Root img(n);
    for (std::size_t a = 0; a < rs.size(); ++a) {
        std::fill(img.begin(), img.end(), 0);
        const Root& r = rs.root(a);
        for (int j = 0; j < n; ++j)
            if (r[j])
                for (int i = 0; i < n; ++i) img[i] += r[j] * m.image(j)[i];
        p[a] = static_cast<std::uint16_t>(rs.index_of(img));
    }
    return WeylElement(std::move(p));
}

namespace {

bool column_negative(const std::int8_t* col, int n) {
    for (int i = 0; i < n; ++i)
        if (col[i] != 0) return col[i] < 0;
    return false;
}

}  // namespace

std::uint64_t enumerate_weyl(const RootSystem& rs, std::uint64_t cap,
                             const std::function<void(const WeylMatrix&, int)>& visit) {
    const std::uint64_t predicted = weyl_group_order(rs.components());
    if (predicted > cap)
        throw CapExceededError("Weyl group of " + rs.name() + " has order " + std::to_string(predicted) +
                                   ", above the enumeration cap " + std::to_string(cap),
                               predicted, cap);
    const int n = rs.rank();
    if (n == 0) {
        visit(WeylMatrix{0, nullptr}, 0);
        return 1;
    }
    const std::size_t stride = static_cast<std::size_t>(n) * n;
    std::vector<std::int8_t> level(stride, 0), next;
    for (int j = 0; j < n; ++j) level[j * n + j] = 1;
    std::vector<int> cartan(stride);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cartan[i * n + j] = static_cast<int>(rs.cartan()(i, j));

    std::uint64_t count = 0;
    std::vector<std::int8_t> u(stride);
    for (int len = 0; !level.empty(); ++len) {
        next.clear();
        const std::size_t size = level.size() / stride;
        for (std::size_t e = 0; e < size; ++e) {
            const std::int8_t* w = level.data() + e * stride;
            visit(WeylMatrix{n, w}, len);
            if (++count > predicted) throw InternalError("Weyl enumeration produced too many elements");
            for (int t = 0; t < n; ++t) {
                const std::int8_t* wt = w + t * n;
                if (column_negative(wt, n)) continue;
                // u = w s_t: u(alpha_j) = w(alpha_j) - <alpha_j, alpha_t^vee> w(alpha_t)
                bool keep = true;
                for (int j = 0; j < n && keep; ++j) {
                    const int c = j == t ? 2 : cartan[j * n + t];
                    for (int i = 0; i < n; ++i) u[j * n + i] = static_cast<std::int8_t>(w[j * n + i] - c * wt[i]);
                    if (j < t && column_negative(u.data() + j * n, n)) keep = false;
                }
                if (keep) next.insert(next.end(), u.begin(), u.end());
            }
        }
        level.swap(next);
    }
    if (count != predicted)
        throw InternalError("Weyl enumeration found " + std::to_string(count) + " elements, expected " +
                            std::to_string(predicted));
    return count;
}

std::vector<std::uint64_t> length_profile(const RootSystem& rs, std::uint64_t cap) {
    std::vector<std::uint64_t> prof;
    enumerate_weyl(rs, cap, [&](const WeylMatrix&, int len) {
        if (static_cast<std::size_t>(len) >= prof.size()) prof.resize(len + 1, 0);
        ++prof[len];
    });
    return prof;
}

}  // namespace theta
