#pragma once

#include <concepts>
#include <string>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "sympoly.hpp"

namespace jetgroup {

template <class S>
concept ScalarRing = requires(const S& a, const S& b, long n) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a.inverse() } -> std::convertible_to<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<S>;
    { a.one_like() } -> std::convertible_to<S>;
    { a.from_int_like(n) } -> std::convertible_to<S>;
    { a.same_domain(b) } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr const char* domain_name = "rational";

    static Rational from_bigint(const Rational&, const BigInt& n) { return Rational(n); }

    // the only roots of unity in Q are 1 and -1
    static Rational primitive_root(const Rational& ex, int p) {
        if (p == 1) return ex.one_like();
        if (p == 2) return -ex.one_like();
        throw PreconditionFailed("rational domain has no primitive root of order " +
                                 std::to_string(p));
    }

    static Rational named_value(const Rational&, const std::string& name) {
        throw ParseError("unknown symbol in rational context: " + name);
    }

    static bool is_integral(const Rational& x) { return x.is_integer(); }
};

template <>
struct ScalarTraits<Cyclotomic> {
    static constexpr const char* domain_name = "cyclotomic";

    static Cyclotomic from_bigint(const Cyclotomic& ex, const BigInt& n) {
        return Cyclotomic(ex.context(), Rational(n));
    }

    static Cyclotomic primitive_root(const Cyclotomic& ex, int p) {
        const int q = ex.context()->p;
        if (p < 1 || q % p != 0)
            throw PreconditionFailed("no root of order " + std::to_string(p) +
                                     " in cyclotomic field of order " + std::to_string(q));
        return omega_power(ex.context(), q / p);
    }

    static Cyclotomic named_value(const Cyclotomic& ex, const std::string& name) {
        if (name == "w" || (name == "i" && ex.context()->p == 4))
            return Cyclotomic::omega(ex.context());
        throw ParseError("unknown symbol in cyclotomic context: " + name);
    }

    static bool is_integral(const Cyclotomic& x) { return x.is_integral(); }
};

template <>
struct ScalarTraits<SymPoly> {
    static constexpr const char* domain_name = "symbolic";

    static SymPoly from_bigint(const SymPoly& ex, const BigInt& n) {
        return SymPoly(ex.table(), Cyclotomic(ex.table()->ctx, Rational(n)));
    }

    static SymPoly primitive_root(const SymPoly& ex, int p) {
        Cyclotomic probe(ex.table()->ctx);
        return SymPoly(ex.table(), ScalarTraits<Cyclotomic>::primitive_root(probe, p));
    }

    static SymPoly named_value(const SymPoly& ex, const std::string& name) {
        const auto& tab = ex.table();
        if (name == "w" || (name == "i" && tab->ctx->p == 4))
            return SymPoly(tab, Cyclotomic::omega(tab->ctx));
        int idx = tab->index_of(name);
        if (idx < 0) throw ParseError("unknown symbol: " + name);
        return SymPoly::symbol(tab, idx);
    }

    static bool is_integral(const SymPoly& x) { return x.is_integral(); }
};

template <ScalarRing S>
S primitive_root_of_unity(const S& exemplar, int p) {
    return ScalarTraits<S>::primitive_root(exemplar, p);
}

}  // namespace jetgroup
