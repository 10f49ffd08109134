#pragma once

// Shared helpers for the test binaries: deterministic random instances and
// terse builders for one-variable rational series.

#include <vector>

#include <jetgroup/jetgroup.hpp>

namespace tu {

using jetgroup::verify::detail::random_element;
using jetgroup::verify::detail::random_hom_part;
using jetgroup::verify::detail::random_invertible;
using jetgroup::verify::detail::Rng;

// one-variable series from the coefficient list of x, x^2, ...
inline jetgroup::Series<jetgroup::Rational> series1(
    const std::vector<long>& coeffs, int order = 0) {
    using namespace jetgroup;
    const int ord = order > 0 ? order : static_cast<int>(coeffs.size());
    Series<Rational> s(1, ord, Rational());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            s.set_coeff(0, Monomial{static_cast<int>(i) + 1}, Rational(coeffs[i]));
    return s;
}

inline jetgroup::Rational frac(long n, long d = 1) {
    return {jetgroup::BigInt(n), jetgroup::BigInt(d)};
}

}  // namespace tu
