#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "error.hpp"

namespace jetgroup {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(BigInt(std::to_string(n))) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByNonUnit("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_string(const std::string& text) {
        mpq_class v;
        if (v.set_str(text, 10) != 0)
            throw ParseError("bad rational literal: " + text);
        if (v.get_den() == 0) throw ParseError("zero denominator: " + text);
        v.canonicalize();
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByNonUnit("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByNonUnit("inverse of zero");
        return Rational(1) / *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    // domain plumbing: all rationals live in the one field Q
    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    Rational from_int_like(long n) const { return Rational(n); }
    bool same_domain(const Rational&) const { return true; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

}  // namespace jetgroup
