#pragma once

#include <optional>
#include <string>
#include <utility>

#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace jetgroup {

// invertible truncated series: the linear part must be a unit, which is
// checked eagerly by computing its exact inverse at construction
template <ScalarRing S>
class GroupElement {
public:
    explicit GroupElement(Series<S> s)
        : s_(std::move(s)), lin_(jacobian(s_)), lin_inv_(lin_.inverse()) {}

    const Series<S>& series() const { return s_; }
    const Matrix<S>& linear() const { return lin_; }
    const Matrix<S>& linear_inverse() const { return lin_inv_; }
    int vars() const { return s_.vars(); }
    int order() const { return s_.order(); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.s_ == b.s_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) {
        return !(a == b);
    }

private:
    Series<S> s_;
    Matrix<S> lin_;
    Matrix<S> lin_inv_;
};

template <ScalarRing S>
GroupElement<S> compose(const GroupElement<S>& f, const GroupElement<S>& g) {
    return GroupElement<S>(compose(f.series(), g.series()));
}

// inverse by the degree-by-degree recurrence
//   psi_1 = phi_1^{-1},  psi_{k+1} = -phi_1^{-1} (phi(psi_{<=k}))_{k+1},
// recomputing only the top slice of the composition at each step
template <ScalarRing S>
GroupElement<S> invert(const GroupElement<S>& g) {
    const Series<S>& phi = g.series();
    const int order = phi.order();
    Series<S> psi = linear_series(g.linear_inverse(), order, phi.domain());
    for (int k = 1; k < order; ++k) {
        HomPart<S> slice = part_of(compose_trunc(phi, psi, k + 1), k + 1);
        if (slice.is_zero()) continue;
        add_part_in_place(psi, apply_linear(g.linear_inverse(), -slice));
    }
    return GroupElement<S>(psi);
}

template <ScalarRing S>
GroupElement<S> power(const GroupElement<S>& g, long m) {
    if (m < 0) return power(invert(g), -m);
    Series<S> acc =
        Series<S>::identity(g.vars(), g.order(), g.series().domain());
    for (long i = 0; i < m; ++i) acc = compose(acc, g.series());
    return GroupElement<S>(acc);
}

struct OrderResult {
    enum class Kind {
        periodic,
        matrix_not_periodic_within_bound,
        series_not_periodic,
    };

    Kind kind;
    long order = 0;         // set when periodic
    long matrix_order = 0;  // set unless the matrix search hit the bound

    bool is_periodic() const { return kind == Kind::periodic; }

    std::string reason() const {
        switch (kind) {
            case Kind::periodic: return "";
            case Kind::matrix_not_periodic_within_bound:
                return "matrix_not_periodic_within_bound";
            case Kind::series_not_periodic: return "series_not_periodic";
        }
        return "";
    }
};

// ord(phi) in characteristic zero equals ord(phi_1) when finite, so the
// matrix order t is located first and a single series check decides;
// phi_1^t = I with phi^t != id certifies phi has infinite order
template <ScalarRing S>
OrderResult order_of(const GroupElement<S>& g, long bound = 1000) {
    if (bound < 1) throw PreconditionFailed("order search bound must be positive");
    long t = 0;
    Matrix<S> acc = g.linear();
    for (long i = 1; i <= bound; ++i) {
        if (acc.is_identity()) {
            t = i;
            break;
        }
        acc = acc * g.linear();
    }
    if (t == 0)
        return {OrderResult::Kind::matrix_not_periodic_within_bound, 0, 0};
    if (is_identity(power(g, t).series()))
        return {OrderResult::Kind::periodic, t, t};
    return {OrderResult::Kind::series_not_periodic, 0, t};
}

// with phi_1 = psi_1 = id and phi, psi inverse to each other mod S_k,
// the two products agree one degree further up; both sides are computed
template <ScalarRing S>
bool one_sided_inverse_symmetry_check(const GroupElement<S>& f,
                                      const GroupElement<S>& g, int k) {
    if (k < 1) throw PreconditionFailed("degree must be at least 1");
    if (f.order() < k + 1 || g.order() < k + 1)
        throw PreconditionFailed("operands must carry degree k+1");
    if (!f.linear().is_identity() || !g.linear().is_identity())
        throw PreconditionFailed("linear parts must be the identity");
    const Series<S>& phi = f.series();
    const Series<S>& psi = g.series();
    if (!is_identity(compose_trunc(phi, psi, k).with_order(k)) ||
        !is_identity(compose_trunc(psi, phi, k).with_order(k)))
        throw PreconditionFailed("operands are not inverse to each other mod S_k");
    const HomPart<S> fg = part_of(compose_trunc(phi, psi, k + 1), k + 1);
    const HomPart<S> gf = part_of(compose_trunc(psi, phi, k + 1), k + 1);
    return fg == gf;
}

// n * sum_{i=m+1}^{k} C(n+i-1, i): the dimension of the kernel subgroup
// G_{k,m}(n,K); m = 0 gives the full group dimension
inline BigInt dim_G(long k, long m, long n) {
    if (n < 1) throw PreconditionFailed("dimension needs n >= 1");
    if (m < 0 || m > k) throw PreconditionFailed("need 0 <= m <= k");
    BigInt sum(0);
    for (long i = m + 1; i <= k; ++i) sum += binomial(n + i - 1, i);
    return BigInt(n) * sum;
}

}  // namespace jetgroup
