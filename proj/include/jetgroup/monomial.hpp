#pragma once

#include <numeric>
#include <vector>

namespace jetgroup {

// exponent vector (alpha_1, ..., alpha_n)
using Monomial = std::vector<int>;

inline int mono_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// graded order: degree ascending, then lexicographic descending,
// so x^2 precedes x*y precedes y^2 within one degree
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return a > b;
    }
};

// all degree-d monomials in n variables, in MonoLess order
inline std::vector<Monomial> all_monomials(int n, int d) {
    std::vector<Monomial> out;
    Monomial m(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
            m[static_cast<std::size_t>(var)] = left;
            out.push_back(m);
            m[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, left - e);
        }
        m[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace jetgroup
