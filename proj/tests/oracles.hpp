#pragma once
// Independent reference computations used as test oracles.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/matrix.hpp"
#include "theta/rootsys.hpp"

namespace oracle {

inline std::size_t root_count(theta::Series s, int n) {
    switch (s) {
        case theta::Series::A: return n * (n + 1);
        case theta::Series::B:
        case theta::Series::C: return 2 * n * n;
        case theta::Series::D: return 2 * n * (n - 1);
        case theta::Series::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
        case theta::Series::F: return 48;
        case theta::Series::G: return 12;
    }
    return 0;
}

inline std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::uint64_t weyl_order(theta::Series s, int n) {
    switch (s) {
        case theta::Series::A: return factorial(n + 1);
        case theta::Series::B:
        case theta::Series::C: return (std::uint64_t{1} << n) * factorial(n);
        case theta::Series::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
        case theta::Series::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case theta::Series::F: return 1152;
        case theta::Series::G: return 12;
    }
    return 0;
}

// Dimension of a fixed-point algebra from its name: so(n), sp(2n), sl(n),
// gl(n), s(gl(p)+gl(q)), e6, e7, f4, and "k" for a one-dimensional centre.
inline int algebra_dim(const std::string& name) {
    if (name.rfind("s(", 0) == 0 && name.back() == ')') return algebra_dim(name.substr(2, name.size() - 3)) - 1;
    int total = 0;
    std::size_t pos = 0;
    while (pos < name.size()) {
        std::size_t end = pos;
        int depth = 0;
        while (end < name.size() && !(name[end] == '+' && depth == 0)) {
            depth += name[end] == '(' ? 1 : name[end] == ')' ? -1 : 0;
            ++end;
        }
        const std::string t = name.substr(pos, end - pos);
        pos = end + 1;
        if (t == "k") { total += 1; continue; }
        if (t == "e6") { total += 78; continue; }
        if (t == "e7") { total += 133; continue; }
        if (t == "f4") { total += 52; continue; }
        const auto open = t.find('(');
        const int n = std::stoi(t.substr(open + 1));
        const std::string f = t.substr(0, open);
        if (f == "so") total += n * (n - 1) / 2;
        else if (f == "sp") total += n * (n + 1) / 2;
        else if (f == "sl") total += n * n - 1;
        else if (f == "gl") total += n * n;
        else throw std::invalid_argument("unknown algebra " + t);
    }
    return total;
}

// Exact determinant by fraction-free elimination.
inline std::int64_t det(const theta::IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[r], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

}  // namespace oracle
