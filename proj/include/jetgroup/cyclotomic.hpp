#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace jetgroup {

namespace detail {

using RatPoly = std::vector<Rational>;  // coefficients, low degree first

inline void poly_trim(RatPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// returns {quotient, remainder}; divisor must be nonzero
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw DivisionByNonUnit("polynomial division by zero");
    RatPoly q;
    if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
    const Rational lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        Rational c = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
        if (a.size() >= b.size() && a.size() - b.size() == shift)
            throw InternalError("polynomial division made no progress");
    }
    return {std::move(q), std::move(a)};
}

}  // namespace detail

// monic p-th cyclotomic polynomial, by exact division of x^p - 1
// by the product of the d-th cyclotomic polynomials over proper divisors d | p
inline std::vector<Rational> cyclotomic_polynomial(int p) {
    if (p < 1) throw PreconditionFailed("cyclotomic_polynomial needs p >= 1");
    static std::map<int, detail::RatPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    std::vector<int> stack{p};
    while (!stack.empty()) {
        int q = stack.back();
        if (cache.count(q)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (int d = 1; d < q; ++d)
            if (q % d == 0 && !cache.count(d)) {
                stack.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        stack.pop_back();
        detail::RatPoly xq_minus_1(q + 1);
        xq_minus_1[0] = Rational(-1);
        xq_minus_1[q] = Rational(1);
        detail::RatPoly divisor{Rational(1)};
        for (int d = 1; d < q; ++d)
            if (q % d == 0) divisor = detail::poly_mul(divisor, cache.at(d));
        auto [quot, rem] = detail::poly_divmod(xq_minus_1, divisor);
        self_check(rem.empty(), "cyclotomic division left a remainder");
        cache.emplace(q, std::move(quot));
    }
    return cache.at(p);
}

struct CyclotomicContext {
    int p;
    std::vector<Rational> modulus;  // Phi_p, monic, low degree first
    int degree;                     // Euler totient of p

    static std::shared_ptr<const CyclotomicContext> make(int p) {
        auto mod = cyclotomic_polynomial(p);
        auto ctx = std::make_shared<CyclotomicContext>();
        ctx->p = p;
        ctx->degree = static_cast<int>(mod.size()) - 1;
        ctx->modulus = std::move(mod);
        return ctx;
    }
};

using CycloCtx = std::shared_ptr<const CyclotomicContext>;

class Cyclotomic {
public:
    explicit Cyclotomic(CycloCtx ctx)
        : ctx_(std::move(ctx)), c_(static_cast<std::size_t>(ctx_->degree)) {}

    Cyclotomic(CycloCtx ctx, const Rational& r) : Cyclotomic(std::move(ctx)) {
        c_[0] = r;
    }

    // coordinates of 1, w, w^2, ... — reduced on construction
    Cyclotomic(CycloCtx ctx, std::vector<Rational> coords)
        : ctx_(std::move(ctx)), c_(std::move(coords)) {
        reduce();
    }

    static Cyclotomic omega(const CycloCtx& ctx) {
        std::vector<Rational> c(static_cast<std::size_t>(ctx->degree));
        if (ctx->degree == 1) {
            c[0] = -ctx->modulus[0];  // x = -m0 mod (x + m0)
        } else {
            c[1] = Rational(1);
        }
        return Cyclotomic(ctx, std::move(c));
    }

    const CycloCtx& context() const { return ctx_; }
    int p() const { return ctx_->p; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    const Rational& rational_part() const { return c_[0]; }
    bool is_integral() const {
        for (const auto& x : c_)
            if (!x.is_integer()) return false;
        return true;
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_domain(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_domain(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) {
        check_domain(o);
        std::vector<Rational> prod(2 * c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                prod[i + j] += c_[i] * o.c_[j];
        }
        c_ = std::move(prod);
        reduce();
        return *this;
    }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    // extended Euclid against the modulus; total on nonzero elements
    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByNonUnit("inverse of zero");
        detail::RatPoly r0 = ctx_->modulus;
        detail::RatPoly r1(c_.begin(), c_.end());
        detail::poly_trim(r1);
        detail::RatPoly s0{}, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r2] = detail::poly_divmod(r0, r1);
            detail::RatPoly s2 = detail::poly_sub(s0, detail::poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        self_check(r0.size() == 1, "element not invertible mod cyclotomic polynomial");
        const Rational g_inv = r0[0].inverse();
        std::vector<Rational> out(c_.size());
        for (std::size_t i = 0; i < s0.size() && i < out.size(); ++i)
            out[i] = s0[i] * g_inv;
        Cyclotomic result(ctx_, std::move(out));
        self_check((result * *this).is_one(), "inverse round-trip failed");
        return result;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.ctx_->p == b.ctx_->p && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        return a.c_ < b.c_;
    }

    Cyclotomic zero_like() const { return Cyclotomic(ctx_); }
    Cyclotomic one_like() const { return Cyclotomic(ctx_, Rational(1)); }
    Cyclotomic from_int_like(long n) const { return Cyclotomic(ctx_, Rational(n)); }
    bool same_domain(const Cyclotomic& o) const { return ctx_->p == o.ctx_->p; }

    std::string str() const {
        const std::string sym = ctx_->p == 4 ? "i" : "w";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            Rational a = c_[i];
            if (out.empty()) {
                if (a.sign() < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            if (i == 0) {
                out += a.str();
            } else {
                if (!a.is_one()) out += a.str() + "*";
                out += sym;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_domain(const Cyclotomic& o) const {
        if (ctx_->p != o.ctx_->p)
            throw DomainMismatch("mixed cyclotomic orders " + std::to_string(ctx_->p) +
                                 " and " + std::to_string(o.ctx_->p));
    }

    void reduce() {
        const auto deg = static_cast<std::size_t>(ctx_->degree);
        if (c_.size() < deg) {
            c_.resize(deg);
            return;
        }
        for (std::size_t i = c_.size(); i-- > deg;) {
            if (c_[i].is_zero()) continue;
            const Rational c = c_[i];
            const std::size_t shift = i - deg;
            for (std::size_t j = 0; j <= deg; ++j)
                c_[shift + j] -= c * ctx_->modulus[j];
        }
        c_.resize(deg);
    }

    CycloCtx ctx_;
    std::vector<Rational> c_;
};

inline Cyclotomic omega_power(const CycloCtx& ctx, long j) {
    long e = j % ctx->p;
    if (e < 0) e += ctx->p;
    Cyclotomic r(ctx, Rational(1));
    Cyclotomic w = Cyclotomic::omega(ctx);
    for (long i = 0; i < e; ++i) r *= w;
    return r;
}

// sum of w^{-ki} for i = 0..p-1, computed literally and asserted
// against the closed form: p when p | k, else 0
inline Cyclotomic root_of_unity_sum(const CycloCtx& ctx, long k) {
    Cyclotomic sum(ctx);
    for (int i = 0; i < ctx->p; ++i) sum += omega_power(ctx, -k * i);
    const bool divides = ((k % ctx->p) + ctx->p) % ctx->p == 0;
    Cyclotomic expected =
        divides ? Cyclotomic(ctx, Rational(ctx->p)) : Cyclotomic(ctx);
    self_check(sum == expected, "root-of-unity sum disagrees with closed form");
    return sum;
}

}  // namespace jetgroup
