#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "scalar.hpp"

namespace jetgroup {

template <ScalarRing S>
using Poly = std::map<Monomial, S, MonoLess>;

namespace detail {

template <ScalarRing S>
void poly_add_term(Poly<S>& p, const Monomial& m, const S& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = p.try_emplace(m, v);
    if (!inserted) {
        it->second = it->second + v;
        if (it->second.is_zero()) p.erase(it);
    }
}

// product truncated to total degree <= cap; degree bounds are checked
// before any scalar multiplication happens
template <ScalarRing S>
Poly<S> poly_mul_trunc(const Poly<S>& a, const Poly<S>& b, int cap) {
    Poly<S> r;
    if (b.empty()) return r;
    const int vb = mono_degree(b.begin()->first);
    for (const auto& [ma, ca] : a) {
        const int da = mono_degree(ma);
        if (da + vb > cap) break;
        for (const auto& [mb, cb] : b) {
            if (da + mono_degree(mb) > cap) break;
            poly_add_term(r, mono_mul(ma, mb), ca * cb);
        }
    }
    return r;
}

}  // namespace detail

// element of K[[x_1..x_n]]^n with zero constant term, carried modulo S_order
// (all parts of degree > order dropped); parts are sparse monomial maps
template <ScalarRing S>
class Series {
public:
    Series(int n, int order, S domain)
        : n_(n), order_(order), dom_(std::move(domain)), comp_(static_cast<std::size_t>(n)) {
        if (n < 1) throw PreconditionFailed("series needs at least one variable");
        if (order < 1) throw PreconditionFailed("truncation order must be at least 1");
    }

    static Series identity(int n, int order, const S& domain) {
        Series s(n, order, domain);
        for (int i = 0; i < n; ++i) {
            Monomial m(static_cast<std::size_t>(n), 0);
            m[static_cast<std::size_t>(i)] = 1;
            s.comp_[static_cast<std::size_t>(i)].emplace(std::move(m), domain.one_like());
        }
        return s;
    }

    int vars() const { return n_; }
    int order() const { return order_; }
    const S& domain() const { return dom_; }
    const Poly<S>& component(int i) const {
        return comp_.at(static_cast<std::size_t>(i));
    }

    S coeff(int i, const Monomial& m) const {
        const auto& c = component(i);
        auto it = c.find(m);
        return it == c.end() ? dom_.zero_like() : it->second;
    }

    void set_coeff(int i, Monomial m, S v) {
        check_slot(i, m);
        auto& c = comp_[static_cast<std::size_t>(i)];
        if (v.is_zero())
            c.erase(m);
        else
            c.insert_or_assign(std::move(m), std::move(v));
    }

    void add_coeff(int i, const Monomial& m, const S& v) {
        check_slot(i, m);
        detail::poly_add_term(comp_[static_cast<std::size_t>(i)], m, v);
    }

    // same coefficients, new truncation order; parts above it are dropped
    Series with_order(int order) const {
        Series s(n_, order, dom_);
        for (int i = 0; i < n_; ++i)
            for (const auto& [m, v] : comp_[static_cast<std::size_t>(i)]) {
                if (mono_degree(m) > order) break;
                s.comp_[static_cast<std::size_t>(i)].emplace(m, v);
            }
        return s;
    }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (!c.empty()) return false;
        return true;
    }

    bool has_part(int k) const {
        for (const auto& c : comp_)
            for (const auto& [m, v] : c) {
                int d = mono_degree(m);
                if (d == k) return true;
                if (d > k) break;
            }
        return false;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.n_ == b.n_ && a.order_ == b.order_ && a.dom_.same_domain(b.dom_) &&
               a.comp_ == b.comp_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    void check_slot(int i, const Monomial& m) const {
        if (i < 0 || i >= n_) throw DimensionMismatch("component index out of range");
        if (static_cast<int>(m.size()) != n_)
            throw DimensionMismatch("monomial has wrong variable count");
        const int d = mono_degree(m);
        if (d < 1 || d > order_)
            throw DegreeOutOfRange("monomial degree " + std::to_string(d) +
                                   " outside 1.." + std::to_string(order_));
    }

    int n_;
    int order_;
    S dom_;
    std::vector<Poly<S>> comp_;
};

// one homogeneous slice phi_k: an n-vector of degree-k forms
template <ScalarRing S>
struct HomPart {
    int n;
    int degree;
    S dom;
    std::vector<Poly<S>> comp;

    HomPart(int n_, int degree_, S dom_)
        : n(n_), degree(degree_), dom(std::move(dom_)), comp(static_cast<std::size_t>(n_)) {
        if (degree_ < 1) throw PreconditionFailed("homogeneous degree must be at least 1");
    }

    bool is_zero() const {
        for (const auto& c : comp)
            if (!c.empty()) return false;
        return true;
    }

    void add_term(int i, const Monomial& m, const S& v) {
        if (static_cast<int>(m.size()) != n)
            throw DimensionMismatch("monomial has wrong variable count");
        if (mono_degree(m) != degree)
            throw DegreeOutOfRange("term degree differs from part degree");
        detail::poly_add_term(comp.at(static_cast<std::size_t>(i)), m, v);
    }

    friend HomPart operator-(const HomPart& u) {
        HomPart r(u.n, u.degree, u.dom);
        for (int i = 0; i < u.n; ++i)
            for (const auto& [m, v] : u.comp[static_cast<std::size_t>(i)])
                r.comp[static_cast<std::size_t>(i)].emplace(m, -v);
        return r;
    }

    friend HomPart operator+(const HomPart& a, const HomPart& b) {
        if (a.n != b.n || a.degree != b.degree)
            throw DimensionMismatch("homogeneous parts differ in shape");
        HomPart r = a;
        for (int i = 0; i < b.n; ++i)
            for (const auto& [m, v] : b.comp[static_cast<std::size_t>(i)])
                detail::poly_add_term(r.comp[static_cast<std::size_t>(i)], m, v);
        return r;
    }

    friend HomPart operator-(const HomPart& a, const HomPart& b) { return a + (-b); }

    friend bool operator==(const HomPart& a, const HomPart& b) {
        return a.n == b.n && a.degree == b.degree && a.comp == b.comp;
    }
    friend bool operator!=(const HomPart& a, const HomPart& b) { return !(a == b); }
};

template <ScalarRing S>
HomPart<S> part_of(const Series<S>& f, int k) {
    if (k < 1 || k > f.order())
        throw DegreeOutOfRange("part degree " + std::to_string(k) + " outside 1.." +
                               std::to_string(f.order()));
    HomPart<S> part(f.vars(), k, f.domain());
    for (int i = 0; i < f.vars(); ++i)
        for (const auto& [m, v] : f.component(i)) {
            const int d = mono_degree(m);
            if (d > k) break;
            if (d == k) part.comp[static_cast<std::size_t>(i)].emplace(m, v);
        }
    return part;
}

template <ScalarRing S>
void add_part_in_place(Series<S>& f, const HomPart<S>& u) {
    if (u.n != f.vars()) throw DimensionMismatch("part has wrong variable count");
    for (int i = 0; i < u.n; ++i)
        for (const auto& [m, v] : u.comp[static_cast<std::size_t>(i)])
            f.add_coeff(i, m, v);
}

template <ScalarRing S>
Series<S> to_series(const HomPart<S>& u, int order) {
    Series<S> s(u.n, order, u.dom);
    add_part_in_place(s, u);
    return s;
}

template <ScalarRing S>
Series<S> truncate(const Series<S>& f, int m) {
    if (m < 1 || m > f.order())
        throw DegreeOutOfRange("truncation order " + std::to_string(m) + " outside 1.." +
                               std::to_string(f.order()));
    return f.with_order(m);
}

template <ScalarRing S>
Series<S> add(const Series<S>& a, const Series<S>& b) {
    if (a.vars() != b.vars()) throw DimensionMismatch("series variable counts differ");
    if (!a.domain().same_domain(b.domain()))
        throw DomainMismatch("series scalar domains differ");
    Series<S> r = a.with_order(std::min(a.order(), b.order()));
    for (int i = 0; i < b.vars(); ++i)
        for (const auto& [m, v] : b.component(i)) {
            if (mono_degree(m) > r.order()) break;
            r.add_coeff(i, m, v);
        }
    return r;
}

template <ScalarRing S>
Series<S> negate(const Series<S>& a) {
    Series<S> r(a.vars(), a.order(), a.domain());
    for (int i = 0; i < a.vars(); ++i)
        for (const auto& [m, v] : a.component(i)) r.set_coeff(i, m, -v);
    return r;
}

template <ScalarRing S>
Series<S> sub(const Series<S>& a, const Series<S>& b) {
    return add(a, negate(b));
}

template <ScalarRing S>
Series<S> scale(const S& c, const Series<S>& a) {
    Series<S> r(a.vars(), a.order(), a.domain());
    for (int i = 0; i < a.vars(); ++i)
        for (const auto& [m, v] : a.component(i)) r.set_coeff(i, m, c * v);
    return r;
}

// f(g) with both treated as exact polynomials, truncated to degree <= cap;
// memoizes truncated powers of each component of g and whole-monomial
// substitutions shared across components of f
template <ScalarRing S>
Series<S> compose_trunc(const Series<S>& f, const Series<S>& g, int cap) {
    if (f.vars() != g.vars()) throw DimensionMismatch("composition variable counts differ");
    if (!f.domain().same_domain(g.domain()))
        throw DomainMismatch("composition scalar domains differ");
    if (cap < 1) throw PreconditionFailed("composition cap must be at least 1");

    const int n = f.vars();
    std::vector<std::vector<Poly<S>>> pw(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Poly<S> base;  // exponent 1, dropped to the cap like every other power
        for (const auto& [m, v] : g.component(j)) {
            if (mono_degree(m) > cap) break;
            base.emplace(m, v);
        }
        pw[static_cast<std::size_t>(j)].push_back(std::move(base));
    }

    auto power_of = [&](int j, int e) -> const Poly<S>& {
        auto& v = pw[static_cast<std::size_t>(j)];
        while (static_cast<int>(v.size()) < e)
            v.push_back(detail::poly_mul_trunc(v.back(), v.front(), cap));
        return v[static_cast<std::size_t>(e - 1)];
    };

    std::map<Monomial, Poly<S>, MonoLess> subst;
    auto substitute = [&](const Monomial& m) -> const Poly<S>& {
        auto it = subst.find(m);
        if (it != subst.end()) return it->second;
        Poly<S> acc;
        bool started = false;
        for (int j = 0; j < static_cast<int>(m.size()); ++j) {
            const int e = m[static_cast<std::size_t>(j)];
            if (e == 0) continue;
            const Poly<S>& p = power_of(j, e);
            acc = started ? detail::poly_mul_trunc(acc, p, cap) : p;
            started = true;
        }
        return subst.emplace(m, std::move(acc)).first->second;
    };

    Series<S> out(n, cap, f.domain());
    for (int i = 0; i < n; ++i) {
        for (const auto& [m, c] : f.component(i)) {
            if (mono_degree(m) > cap) break;
            for (const auto& [mm, vv] : substitute(m)) out.add_coeff(i, mm, c * vv);
        }
    }
    return out;
}

// the group law: substitution product truncated to min(orders)
template <ScalarRing S>
Series<S> compose(const Series<S>& f, const Series<S>& g) {
    return compose_trunc(f, g, std::min(f.order(), g.order()));
}

// f^m as a polynomial, truncated to cap; m >= 1
template <ScalarRing S>
Series<S> power_trunc(const Series<S>& f, int m, int cap) {
    if (m < 1) throw PreconditionFailed("power_trunc needs a positive exponent");
    Series<S> acc = f.with_order(cap);
    for (int i = 1; i < m; ++i) acc = compose_trunc(acc, f, cap);
    return acc;
}

template <ScalarRing S>
Matrix<S> jacobian(const Series<S>& f) {
    Matrix<S> a(f.vars(), f.domain());
    const HomPart<S> lin = part_of(f, 1);
    for (int i = 0; i < f.vars(); ++i)
        for (const auto& [m, v] : lin.comp[static_cast<std::size_t>(i)])
            for (int j = 0; j < f.vars(); ++j)
                if (m[static_cast<std::size_t>(j)] == 1) a.at(i, j) = v;
    return a;
}

template <ScalarRing S>
Series<S> linear_series(const Matrix<S>& a, int order, const S& domain) {
    Series<S> s(a.dim(), order, domain);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            Monomial m(static_cast<std::size_t>(a.dim()), 0);
            m[static_cast<std::size_t>(j)] = 1;
            s.set_coeff(i, std::move(m), a.at(i, j));
        }
    return s;
}

// componentwise linear action: (A f)_i = sum_j A_ij f_j;
// equals composing the linear series of A on the left
template <ScalarRing S>
Series<S> apply_linear(const Matrix<S>& a, const Series<S>& f) {
    if (a.dim() != f.vars()) throw DimensionMismatch("matrix and series sizes differ");
    Series<S> r(f.vars(), f.order(), f.domain());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const S& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (const auto& [m, v] : f.component(j)) r.add_coeff(i, m, aij * v);
        }
    return r;
}

template <ScalarRing S>
HomPart<S> apply_linear(const Matrix<S>& a, const HomPart<S>& u) {
    if (a.dim() != u.n) throw DimensionMismatch("matrix and part sizes differ");
    HomPart<S> r(u.n, u.degree, u.dom);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const S& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (const auto& [m, v] : u.comp[static_cast<std::size_t>(j)])
                detail::poly_add_term(r.comp[static_cast<std::size_t>(i)], m, aij * v);
        }
    return r;
}

template <ScalarRing S>
bool is_identity(const Series<S>& f) {
    return f == Series<S>::identity(f.vars(), f.order(), f.domain());
}

// gcd of {k - 1 : phi_k != 0, k >= 2}; 0 when phi = phi_1
template <ScalarRing S>
long t_invariant(const Series<S>& f) {
    long g = 0;
    for (int i = 0; i < f.vars(); ++i)
        for (const auto& [m, v] : f.component(i)) {
            const int d = mono_degree(m);
            if (d >= 2) g = std::gcd(g, static_cast<long>(d - 1));
        }
    return g;
}

}  // namespace jetgroup
