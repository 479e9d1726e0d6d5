#include "theta/liealg.hpp"

#include <algorithm>
#include <boost/rational.hpp>

#include "theta/errors.hpp"

namespace theta {

namespace {

using Rational = boost::rational<std::int64_t>;

std::uint32_t to_fp(std::int64_t c, std::uint32_t p) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Root add(const Root& a, const Root& b) {
    Root r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Root sub(const Root& a, const Root& b) {
    Root r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// Structure constants by the extraspecial-pair method: N > 0 on extraspecial
// pairs, N_{-a,-b} = -N_{a,b}, everything else forced by the standard identities.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs) : rs_(rs), npos_(rs.num_positive()), pos_(npos_ * npos_, 0) {
        for (std::size_t x = 0; x < npos_; ++x) fill(x);
    }

    int operator()(std::size_t r, std::size_t s) const {
        auto sum = rs_.find(add(rs_.root(r), rs_.root(s)));
        if (!sum) return 0;
        const bool rp = rs_.is_positive(r), sp = rs_.is_positive(s);
        if (rp && sp) {
            int v = pos_[r * npos_ + s];
            if (v == 0) throw InternalError("structure constant requested before it was determined");
            return v;
        }
        if (!rp && !sp) return -(*this)(rs_.negative(r), rs_.negative(s));
        if (!rp) return -(*this)(s, r);
        // r positive, s negative; t = -(r + s)
        const std::size_t t = rs_.negative(*sum);
        if (rs_.is_positive(t)) return scale((*this)(t, r), norm(t), norm(s));
        return scale(-(*this)(rs_.negative(s), rs_.negative(t)), norm(t), norm(r));
    }

private:
    int norm(std::size_t a) const { return rs_.inner(rs_.root(a), rs_.root(a)); }

    static int scale(int v, int num, int den) {
        if ((v * num) % den != 0) throw InternalError("non-integral structure constant");
        return v * num / den;
    }

    int chain_q(std::size_t a, std::size_t b) const {  // max q with b - q a a root
        int q = 0;
        Root r = rs_.root(b);
        for (;;) {
            r = sub(r, rs_.root(a));
            if (!rs_.find(r)) return q;
            ++q;
        }
    }

    Rational term(std::size_t a, std::size_t b, std::size_t c, std::size_t d, const Root& diff) const {
        auto k = rs_.find(diff);
        if (!k) return Rational(0);
        return Rational((*this)(a, b) * (*this)(c, d), norm(*k));
    }

    void fill(std::size_t x) {
        std::vector<std::pair<std::size_t, std::size_t>> special;
        for (std::size_t a = 0; a < npos_; ++a) {
            auto b = rs_.find(sub(rs_.root(x), rs_.root(a)));
            if (b && rs_.is_positive(*b) && a < *b) special.emplace_back(a, *b);
        }
        if (special.empty()) return;
        const auto [a, b] = special.front();
        set(a, b, chain_q(a, b) + 1);
        const int nab = pos_[a * npos_ + b];
        for (std::size_t k = 1; k < special.size(); ++k) {
            const auto [g, d] = special[k];
            const std::size_t ng = rs_.negative(g), nd = rs_.negative(d);
            Rational s = term(b, ng, a, nd, sub(rs_.root(b), rs_.root(g))) +
                         term(ng, a, b, nd, sub(rs_.root(a), rs_.root(g)));
            Rational v = s * norm(x) / nab;
            if (v.denominator() != 1) throw InternalError("non-integral structure constant");
            set(g, d, static_cast<int>(v.numerator()));
        }
    }

    void set(std::size_t a, std::size_t b, int v) {
        pos_[a * npos_ + b] = v;
        pos_[b * npos_ + a] = -v;
    }

    const RootSystem& rs_;
    std::size_t npos_;
    std::vector<int> pos_;
};

void axpy(FpVector& acc, std::uint64_t scale, const std::vector<BracketTerm>& terms, std::uint32_t p) {
    for (const auto& t : terms) acc[t.index] = static_cast<std::uint32_t>((acc[t.index] + scale * to_fp(t.coeff, p)) % p);
}

}  // namespace

std::size_t rank_mod_p(std::vector<FpVector> rows, std::uint32_t p) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        // inverse by Fermat
        std::uint64_t inv = 1, base = rows[rank][c];
        for (std::uint32_t e = p - 2; e; e >>= 1, base = base * base % p)
            if (e & 1) inv = inv * base % p;
        for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const std::uint64_t f = rows[r][c];
            if (!f) continue;
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
        }
        ++rank;
    }
    return rank;
}

std::string ModularLieAlgebra::basis_label(std::size_t i) const {
    if (is_cartan(i)) return "h" + std::to_string(i + 1);
    return "e" + root_to_string(rs_->root(root_of(i)));
}

int ModularLieAlgebra::structure_constant(std::size_t a, std::size_t b) const { return n_[a * rs_->size() + b]; }

FpVector ModularLieAlgebra::unit(std::size_t i) const {
    FpVector v(dim_, 0);
    v[i] = 1;
    return v;
}

FpVector ModularLieAlgebra::bracket(const FpVector& x, const FpVector& y) const {
    FpVector acc(dim_, 0);
    std::vector<std::size_t> ys;
    for (std::size_t j = 0; j < dim_; ++j)
        if (y[j]) ys.push_back(j);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (std::size_t j : ys) axpy(acc, static_cast<std::uint64_t>(x[i]) * y[j] % p_, table_[i * dim_ + j], p_);
    }
    return acc;
}

std::vector<FpVector> ModularLieAlgebra::ad_images(const FpVector& x, const std::vector<FpVector>& basis) const {
    std::vector<FpVector> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(bracket(x, b));
    return out;
}

ModularLieAlgebra build_algebra(std::shared_ptr<const RootSystem> rs, int p) {
    if (!is_prime(p)) throw BadPrimeError(std::to_string(p) + " is not prime");
    if (p < 3) throw BadPrimeError("p = 2 is excluded");
    for (const auto& comp : rs->components()) {
        RootSystem simple = RootSystem::build(comp.type.series, comp.type.rank);
        const Root& hr = simple.root(simple.highest_root());
        for (std::size_t k = 0; k < hr.size(); ++k)
            if (hr[k] >= p)
                throw BadPrimeError("p = " + std::to_string(p) + " is bad for " + comp.type.name() + ": alpha" +
                                    std::to_string(k + 1) + " has coefficient " + std::to_string(hr[k]) +
                                    " in the highest root");
    }

    ModularLieAlgebra alg;
    alg.rs_ = rs;
    alg.p_ = static_cast<std::uint32_t>(p);
    const int n = rs->rank();
    const std::size_t nr = rs->size();
    alg.dim_ = n + nr;

    StructureConstants nc(*rs);
    alg.n_.assign(nr * nr, 0);
    for (std::size_t a = 0; a < nr; ++a)
        for (std::size_t b = 0; b < nr; ++b) alg.n_[a * nr + b] = nc(a, b);

    const std::size_t dim = alg.dim_;
    alg.table_.assign(dim * dim, {});
    for (int i = 0; i < n; ++i)
        for (std::size_t b = 0; b < nr; ++b) {
            int c = 0;
            for (int j = 0; j < n; ++j) c += rs->root(b)[j] * static_cast<int>(rs->cartan()(j, i));
            if (!c) continue;
            const auto e = static_cast<std::uint32_t>(n + b);
            alg.table_[i * dim + e].push_back({e, c});
            alg.table_[e * dim + i].push_back({e, -c});
        }
    for (std::size_t a = 0; a < nr; ++a)
        for (std::size_t b = 0; b < nr; ++b) {
            auto& cell = alg.table_[(n + a) * dim + (n + b)];
            if (b == rs->negative(a)) {
                Root h = rs->coroot(rs->root(a));
                for (int i = 0; i < n; ++i)
                    if (h[i]) cell.push_back({static_cast<std::uint32_t>(i), h[i]});
            } else if (int v = alg.n_[a * nr + b]) {
                auto s = rs->find(add(rs->root(a), rs->root(b)));
                cell.push_back({static_cast<std::uint32_t>(n + *s), v});
            }
        }
    return alg;
}

void CheckResult::fail(std::string msg) {
    ++failure_count;
    if (failures.size() < 10) failures.push_back(std::move(msg));
}

CheckResult check_jacobi(const ModularLieAlgebra& alg, std::optional<std::uint64_t> samples, std::uint64_t seed) {
    CheckResult res;
    const std::size_t dim = alg.dim();
    std::vector<std::int64_t> acc(dim, 0);
    auto cyclic = [&](std::size_t x, std::size_t y, std::size_t z) {
        for (const auto& t : alg.bracket_basis(y, z))
            for (const auto& u : alg.bracket_basis(x, t.index)) acc[u.index] += static_cast<std::int64_t>(t.coeff) * u.coeff;
    };
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
        std::fill(acc.begin(), acc.end(), 0);
        cyclic(i, j, k);
        cyclic(j, k, i);
        cyclic(k, i, j);
        ++res.checked;
        if (std::any_of(acc.begin(), acc.end(), [](std::int64_t v) { return v != 0; }))
            res.fail("Jacobi fails on (" + alg.basis_label(i) + ", " + alg.basis_label(j) + ", " + alg.basis_label(k) + ")");
    };
    if (!samples) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) check(i, j, k);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
        for (std::uint64_t s = 0; s < *samples; ++s) {
            std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
            check(i, j, k);
        }
    }
    return res;
}

CheckResult check_structure_constants(const ModularLieAlgebra& alg) {
    CheckResult res;
    const RootSystem& rs = alg.roots();
    for (std::size_t a = 0; a < rs.size(); ++a) {
        for (std::size_t b = 0; b < rs.size(); ++b) {
            if (b == rs.negative(a) || a == b) continue;
            if (!rs.find(add(rs.root(a), rs.root(b)))) continue;
            ++res.checked;
            int q = 0;
            while (rs.find(sub(rs.root(b), [&] {
                Root m(rs.root(a));
                for (int& c : m) c *= q + 1;
                return m;
            }())))
                ++q;
            if (std::abs(alg.structure_constant(a, b)) != q + 1)
                res.fail("|N(" + root_to_string(rs.root(a)) + ", " + root_to_string(rs.root(b)) +
                         ")| = " + std::to_string(std::abs(alg.structure_constant(a, b))) + ", expected " +
                         std::to_string(q + 1));
        }
        ++res.checked;
        const auto& h = alg.bracket_basis(alg.e_index(a), alg.e_index(rs.negative(a)));
        Root cv = rs.coroot(rs.root(a));
        Root got(rs.rank(), 0);
        for (const auto& t : h) got[t.index] = t.coeff;
        if (got != cv) res.fail("[e_b, e_-b] != h_b for b = " + root_to_string(rs.root(a)));
    }
    return res;
}

std::vector<std::vector<std::int64_t>> invariant_form(const ModularLieAlgebra& alg) {
    const RootSystem& rs = alg.roots();
    const int n = rs.rank();
    const auto& d = rs.symmetrizer();
    const std::int64_t c = *std::max_element(d.begin(), d.end());
    std::vector<std::vector<std::int64_t>> k(alg.dim(), std::vector<std::int64_t>(alg.dim(), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k[i][j] = c * rs.cartan()(i, j) / d[i];
    for (std::size_t a = 0; a < rs.size(); ++a) {
        const int da = rs.inner(rs.root(a), rs.root(a)) / 2;
        k[alg.e_index(a)][alg.e_index(rs.negative(a))] = c / da;
    }
    return k;
}

CheckResult check_form_invariance(const ModularLieAlgebra& alg, std::optional<std::uint64_t> samples,
                                  std::uint64_t seed) {
    CheckResult res;
    const auto k = invariant_form(alg);
    auto pair = [&](const std::vector<BracketTerm>& terms, std::size_t z, bool left) {
        std::int64_t v = 0;
        for (const auto& t : terms) v += t.coeff * (left ? k[t.index][z] : k[z][t.index]);
        return v;
    };
    auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
        ++res.checked;
        if (pair(alg.bracket_basis(x, y), z, true) != pair(alg.bracket_basis(y, z), x, false))
            res.fail("kappa([" + alg.basis_label(x) + ", " + alg.basis_label(y) + "], " + alg.basis_label(z) + ") differs");
    };
    const std::size_t dim = alg.dim();
    if (!samples) {
        for (std::size_t x = 0; x < dim; ++x)
            for (std::size_t y = 0; y < dim; ++y)
                for (std::size_t z = 0; z < dim; ++z) check(x, y, z);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
        for (std::uint64_t s = 0; s < *samples; ++s) {
            std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
            check(x, y, z);
        }
    }
    return res;
}

bool has_nondegenerate_form(const ModularLieAlgebra& alg) {
    std::vector<FpVector> rows;
    for (const auto& row : invariant_form(alg)) {
        FpVector r(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) r[i] = to_fp(row[i], alg.prime());
        rows.push_back(std::move(r));
    }
    return rank_mod_p(std::move(rows), alg.prime()) == alg.dim();
}

// ------------------------------------------------------------- realizations

FpVector SymmetricPairRealization::apply_theta(const FpVector& x) const {
    const std::uint32_t p = algebra->prime();
    FpVector y(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        y[dtheta[i].index] = dtheta[i].sign > 0 ? x[i] : p - x[i];
    }
    return y;
}

SymmetricPairRealization realize_inner(std::shared_ptr<const ModularLieAlgebra> alg, std::vector<Int> mu) {
    const RootSystem& rs = alg->roots();
    if (static_cast<int>(mu.size()) != rs.rank()) throw InternalError("coweight has the wrong rank");
    SymmetricPairRealization out;
    out.algebra = alg;
    out.kind = SymmetricPairRealization::Kind::Inner;
    out.mu = std::move(mu);
    for (int i = 0; i < rs.rank(); ++i) {
        out.dtheta.push_back({alg->h_index(i), 1});
        out.k_basis.push_back(alg->unit(alg->h_index(i)));
    }
    for (std::size_t a = 0; a < rs.size(); ++a) {
        Int v = 0;
        for (int i = 0; i < rs.rank(); ++i) v += rs.root(a)[i] * out.mu[i];
        const int sign = (v % 2 == 0) ? 1 : -1;
        out.dtheta.push_back({alg->e_index(a), sign});
        (sign > 0 ? out.k_basis : out.p_basis).push_back(alg->unit(alg->e_index(a)));
    }
    return out;
}

SymmetricPairRealization realize_chevalley_involution(std::shared_ptr<const ModularLieAlgebra> alg) {
    const RootSystem& rs = alg->roots();
    const std::uint32_t p = alg->prime();
    SymmetricPairRealization out;
    out.algebra = alg;
    out.kind = SymmetricPairRealization::Kind::Chevalley;
    for (int i = 0; i < rs.rank(); ++i) {
        out.dtheta.push_back({alg->h_index(i), -1});
        out.p_basis.push_back(alg->unit(alg->h_index(i)));
    }
    for (std::size_t a = 0; a < rs.size(); ++a) out.dtheta.push_back({alg->e_index(rs.negative(a)), -1});
    for (std::size_t a = 0; a < rs.num_positive(); ++a) {
        FpVector k = alg->unit(alg->e_index(a)), q = alg->unit(alg->e_index(a));
        k[alg->e_index(rs.negative(a))] = p - 1;
        q[alg->e_index(rs.negative(a))] = 1;
        out.k_basis.push_back(std::move(k));
        out.p_basis.push_back(std::move(q));
    }
    CheckResult aut = check_automorphism(out, std::nullopt, 0);
    if (!aut.ok()) throw InternalError("Chevalley involution is not an automorphism: " + aut.failures.front());
    return out;
}

CheckResult check_automorphism(const SymmetricPairRealization& pair, std::optional<std::uint64_t> samples,
                               std::uint64_t seed) {
    CheckResult res;
    const ModularLieAlgebra& alg = *pair.algebra;
    const std::size_t dim = alg.dim();
    std::vector<std::int64_t> lhs(dim), rhs(dim);
    auto check = [&](std::size_t i, std::size_t j) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& t : alg.bracket_basis(i, j)) lhs[pair.dtheta[t.index].index] += pair.dtheta[t.index].sign * t.coeff;
        const auto& ti = pair.dtheta[i];
        const auto& tj = pair.dtheta[j];
        for (const auto& t : alg.bracket_basis(ti.index, tj.index)) rhs[t.index] += ti.sign * tj.sign * t.coeff;
        ++res.checked;
        if (lhs != rhs) res.fail("theta[" + alg.basis_label(i) + ", " + alg.basis_label(j) + "] != [theta, theta]");
    };
    if (!samples) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) check(i, j);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
        for (std::uint64_t s = 0; s < *samples; ++s) {
            std::size_t i = pick(rng), j = pick(rng);
            check(i, j);
        }
    }
    return res;
}

CheckResult check_involution(const SymmetricPairRealization& pair) {
    CheckResult res;
    for (std::size_t i = 0; i < pair.dtheta.size(); ++i) {
        const auto& a = pair.dtheta[i];
        const auto& b = pair.dtheta[a.index];
        ++res.checked;
        if (b.index != i || a.sign * b.sign != 1)
            res.fail("theta^2 moves " + pair.algebra->basis_label(i));
    }
    for (const auto& v : pair.k_basis)
        if (pair.apply_theta(v) != v) res.fail("k basis vector is not theta-fixed");
    const std::uint32_t p = pair.algebra->prime();
    for (const auto& v : pair.p_basis) {
        FpVector neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = v[i] ? p - v[i] : 0;
        if (pair.apply_theta(v) != neg) res.fail("p basis vector is not in the -1 eigenspace");
    }
    if (pair.dim_k() + pair.dim_p() != pair.algebra->dim()) res.fail("dim k + dim p != dim g");
    return res;
}

CheckResult check_grading(const SymmetricPairRealization& pair) {
    CheckResult res;
    const ModularLieAlgebra& alg = *pair.algebra;
    const std::uint32_t p = alg.prime();
    auto run = [&](const std::vector<FpVector>& xs, const std::vector<FpVector>& ys, int eps, const char* law) {
        for (const auto& x : xs)
            for (const auto& y : ys) {
                FpVector z = alg.bracket(x, y);
                FpVector tz = pair.apply_theta(z);
                if (eps < 0)
                    for (auto& v : z) v = v ? p - v : 0;
                ++res.checked;
                if (tz != z) res.fail(std::string(law) + " fails");
            }
    };
    run(pair.k_basis, pair.k_basis, 1, "[k,k] in k");
    run(pair.k_basis, pair.p_basis, -1, "[k,p] in p");
    run(pair.p_basis, pair.p_basis, 1, "[p,p] in k");
    return res;
}

FpVector p_element(const SymmetricPairRealization& pair, const FpVector& coords) {
    const std::uint32_t p = pair.algebra->prime();
    FpVector x = pair.algebra->zero();
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k]) continue;
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = static_cast<std::uint32_t>((x[i] + static_cast<std::uint64_t>(coords[k]) * pair.p_basis[k][i]) % p);
    }
    return x;
}

CentralizerDims centralizer_dims(const SymmetricPairRealization& pair, const FpVector& x) {
    const ModularLieAlgebra& alg = *pair.algebra;
    FpVector v = p_element(pair, x);
    CentralizerDims d;
    d.k = pair.dim_k() - rank_mod_p(alg.ad_images(v, pair.k_basis), alg.prime());
    d.p = pair.dim_p() - rank_mod_p(alg.ad_images(v, pair.p_basis), alg.prime());
    return d;
}

FpVector random_p_element(const SymmetricPairRealization& pair, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> coef(0, pair.algebra->prime() - 1);
    FpVector c(pair.dim_p());
    for (auto& v : c) v = coef(rng);
    return c;
}

CheckResult check_commrels(const SymmetricPairRealization& pair) {
    CheckResult res;
    if (pair.kind != SymmetricPairRealization::Kind::Chevalley) {
        res.fail("commutation relations are only instantiated for Chevalley realizations");
        return res;
    }
    const ModularLieAlgebra& alg = *pair.algebra;
    const RootSystem& rs = alg.roots();
    const std::uint32_t p = alg.prime();
    const int n = rs.rank();
    std::vector<FpVector> E, F, H;
    for (int i = 0; i < n; ++i) {
        E.push_back(alg.unit(alg.e_index(rs.simple(i))));
        F.push_back(pair.apply_theta(E.back()));
        H.push_back(alg.bracket(E.back(), F.back()));
    }
    auto scaled = [&](FpVector v, std::int64_t c) {
        for (auto& x : v) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * to_fp(c, p) % p);
        return v;
    };
    auto is_zero = [](const FpVector& v) { return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return !x; }); };
    auto expect = [&](bool ok, const std::string& what) {
        ++res.checked;
        if (!ok) res.fail(what);
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const std::string tag = " for (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ")";
            const Int c = rs.cartan()(b, a);  // <beta, alpha^vee>
            expect(is_zero(alg.bracket(H[a], H[b])), "(a) [H,H] != 0" + tag);
            expect(alg.bracket(H[a], E[b]) == scaled(E[b], -c), "(b) [H_a,E_b] != -<b,a> E_b" + tag);
            expect(alg.bracket(H[a], F[b]) == scaled(F[b], c), "(c) [H_a,F_b] != <b,a> F_b" + tag);
            if (a == b) continue;
            expect(is_zero(alg.bracket(E[a], F[b])), "(d) [E_a,F_b] != 0" + tag);
            FpVector xe = E[b], xf = F[b];
            for (Int k = 0; k < 1 - c; ++k) {
                xe = alg.bracket(E[a], xe);
                xf = alg.bracket(F[a], xf);
            }
            expect(is_zero(xe) && is_zero(xf), "(e) Serre relation fails" + tag);
        }
    // (f) on every basis vector: (ad E)^p = (ad F)^p = 0, (ad H)^p = ad H
    for (int a = 0; a < n; ++a)
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            FpVector xe = alg.unit(i), xf = xe, xh = xe;
            for (std::uint32_t k = 0; k < p; ++k) {
                xe = alg.bracket(E[a], xe);
                xf = alg.bracket(F[a], xf);
                xh = alg.bracket(H[a], xh);
            }
            expect(is_zero(xe) && is_zero(xf) && xh == alg.bracket(H[a], alg.unit(i)),
                   "(f) p-th powers fail for alpha" + std::to_string(a + 1) + " on " + alg.basis_label(i));
        }
    return res;
}

std::vector<InnerRealizationSpec> inner_realization_specs(CartanType type) {
    RootSystem rs = RootSystem::build(type.series, type.rank);
    const Root& hr = rs.root(rs.highest_root());
    const int n = type.rank;
    auto pq = [](const std::string& fam, int p, int q) {
        return fam + "(" + std::to_string(std::min(p, q)) + "," + std::to_string(std::max(p, q)) + ")";
    };
    std::vector<InnerRealizationSpec> out;
    for (int i = 0; i < n; ++i) {
        const int c = hr[i], j = i + 1;
        if (c != 1 && c != 2) continue;
        std::string label;
        switch (type.series) {
            case Series::A: label = n == 1 ? "AI" : pq("AIII", j, n + 1 - j); break;
            case Series::B: label = "BI(" + std::to_string(std::min(2 * j, 2 * n + 1 - 2 * j)) + ")"; break;
            case Series::C: label = j == n ? "CI" : pq("CII", j, n - j); break;
            case Series::D:
                if (j == 1) label = pq("DI", 2, 2 * n - 2);
                else if (j >= n - 1) label = "DIII";
                else label = pq("DI", 2 * j, 2 * n - 2 * j);
                break;
            case Series::E:
                if (n == 6) label = (j == 1 || j == 6) ? "EIII" : "EII";
                else if (n == 7) label = j == 7 ? "EVII" : j == 2 ? "EV" : "EVI";
                else label = j == 1 ? "EVIII" : "EIX";
                break;
            case Series::F: label = j == 1 ? "FI" : "FII"; break;
            case Series::G: label = "G"; break;
        }
        out.push_back({i, c, label});
    }
    return out;
}

}  // namespace theta
