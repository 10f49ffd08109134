#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "series.hpp"

namespace jetgroup {

// a diagonal matrix diag(w^{lambda_1}, ..., w^{lambda_n}) of exact order p
struct DiagonalSpec {
    int p;
    std::vector<long> lambda;

    DiagonalSpec(int p_, std::vector<long> lambda_)
        : p(p_), lambda(std::move(lambda_)) {
        if (p < 2) throw PreconditionFailed("period must be at least 2");
        if (lambda.empty()) throw PreconditionFailed("lambda must be nonempty");
        long g = 0;
        for (long l : lambda) g = std::gcd(g, l);
        if (std::gcd(g, static_cast<long>(p)) != 1)
            throw PreconditionFailed(
                "lambda must be coprime to the period for the diagonal to have exact order p");
    }

    int vars() const { return static_cast<int>(lambda.size()); }

    // lambda_i - <lambda, alpha> modulo p
    long defect(int i, const Monomial& alpha) const {
        long dot = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j)
            dot += lambda[j] * alpha[j];
        long d = (lambda[static_cast<std::size_t>(i)] - dot) % p;
        return d < 0 ? d + p : d;
    }

    bool resonant(int i, const Monomial& alpha) const { return defect(i, alpha) == 0; }

    long pairing(const Monomial& alpha) const {
        long dot = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j)
            dot += lambda[j] * alpha[j];
        return dot;
    }
};

template <ScalarRing S>
S root_power(const S& omega, int p, long e) {
    long r = e % p;
    if (r < 0) r += p;
    S acc = omega.one_like();
    for (long i = 0; i < r; ++i) acc = acc * omega;
    return acc;
}

template <ScalarRing S>
Matrix<S> diagonal_of(const DiagonalSpec& spec, const S& domain) {
    const S omega = primitive_root_of_unity(domain, spec.p);
    std::vector<S> diag;
    diag.reserve(spec.lambda.size());
    for (long l : spec.lambda) diag.push_back(root_power(omega, spec.p, l));
    return Matrix<S>::diagonal(diag);
}

// which slots of a homogeneous degree blocked a diagonal extension
template <ScalarRing S>
struct ResonanceReport {
    using Slot = std::pair<int, Monomial>;

    int degree = 0;
    std::vector<Slot> resonant;
    std::map<Slot, S> forced;
    std::map<Slot, S> obstruction;  // nonzero residuals at non-resonant slots

    bool solvable() const { return obstruction.empty(); }
};

class ObstructionErrorBase : public Error {
public:
    ObstructionErrorBase(int degree, const std::string& what)
        : Error("obstruction", what), degree_(degree) {}

    int degree() const { return degree_; }

private:
    int degree_;
};

template <ScalarRing S>
class ObstructionError : public ObstructionErrorBase {
public:
    explicit ObstructionError(ResonanceReport<S> report)
        : ObstructionErrorBase(report.degree, describe(report)),
          report_(std::move(report)) {}

    const ResonanceReport<S>& report() const { return report_; }

private:
    static std::string describe(const ResonanceReport<S>& r) {
        std::ostringstream os;
        os << "seeds admit no periodic extension at degree " << r.degree << ": "
           << r.obstruction.size() << " non-resonant slot(s) carry nonzero residuals";
        return os.str();
    }

    ResonanceReport<S> report_;
};

// free homogeneous data for the generators, keyed by degree
template <ScalarRing S>
using PeriodicSeedSet = std::map<int, HomPart<S>>;

// true iff phi^p = id mod S_k and no proper divisor of p already gives id
template <ScalarRing S>
bool check_periodic(const GroupElement<S>& g, long p) {
    if (p < 1) throw PreconditionFailed("period must be positive");
    Series<S> acc = g.series();
    for (long j = 1; j < p; ++j) acc = compose(acc, g.series());
    return is_identity(acc);
}

// closed form of R(u) = sum_{i=0}^{p-1} phi_1^i u phi_1^{p-1-i} for
// phi_1 = diag(w^lambda): slot (i, alpha) is killed unless resonant,
// where it is scaled by p * w^{-<lambda,alpha>}
template <ScalarRing S>
HomPart<S> resonance_operator_R(const DiagonalSpec& spec, const HomPart<S>& u) {
    if (u.n != spec.vars()) throw DimensionMismatch("part size differs from lambda");
    const S omega = primitive_root_of_unity(u.dom, spec.p);
    const S p_scalar = u.dom.from_int_like(spec.p);
    HomPart<S> r(u.n, u.degree, u.dom);
    for (int i = 0; i < u.n; ++i)
        for (const auto& [m, v] : u.comp[static_cast<std::size_t>(i)]) {
            if (!spec.resonant(i, m)) continue;
            const S factor = p_scalar * root_power(omega, spec.p, -spec.pairing(m));
            r.add_term(i, m, factor * v);
        }
    return r;
}

// t(u) = phi_1 u - u phi_1, the commutator with the diagonal linear part;
// slot (i, alpha) is scaled by w^{lambda_i} - w^{<lambda,alpha>}
template <ScalarRing S>
HomPart<S> resonance_operator_t(const DiagonalSpec& spec, const HomPart<S>& u) {
    if (u.n != spec.vars()) throw DimensionMismatch("part size differs from lambda");
    const S omega = primitive_root_of_unity(u.dom, spec.p);
    HomPart<S> r(u.n, u.degree, u.dom);
    for (int i = 0; i < u.n; ++i)
        for (const auto& [m, v] : u.comp[static_cast<std::size_t>(i)]) {
            const S factor =
                root_power(omega, spec.p, spec.lambda[static_cast<std::size_t>(i)]) -
                root_power(omega, spec.p, spec.pairing(m));
            r.add_term(i, m, factor * v);
        }
    return r;
}

namespace detail {

template <ScalarRing S>
void check_seed_shape(const PeriodicSeedSet<S>& seeds, int n, int order) {
    for (const auto& [d, part] : seeds) {
        if (d < 2 || d > order)
            throw BadSeedDegree("seed degree " + std::to_string(d) + " outside 2.." +
                                std::to_string(order));
        if (part.degree != d)
            throw BadSeedDegree("seed part at key " + std::to_string(d) +
                                " has degree " + std::to_string(part.degree));
        if (part.n != n)
            throw BadSeedDegree("seed part at degree " + std::to_string(d) +
                                " has wrong variable count");
    }
}

}  // namespace detail

// phi = w id + seeds + forced parts, where each degree d = pk+1 is forced
// by phi_d = -(w/p) ((phi_{<=d-1})^p)_d; every degree is re-checked by
// requiring the degree-d slice of (phi_{<=d})^p to vanish
template <ScalarRing S>
GroupElement<S> gen_periodic_scalar(int p, int n, const PeriodicSeedSet<S>& seeds,
                                    int order, const S& domain) {
    if (p < 2) throw PreconditionFailed("period must be at least 2");
    if (n < 1) throw PreconditionFailed("need at least one variable");
    detail::check_seed_shape(seeds, n, order);
    for (const auto& [d, part] : seeds)
        if ((d - 1) % p == 0)
            throw BadSeedDegree("degree " + std::to_string(d) +
                                " is forced by the period, not free");

    const S omega = primitive_root_of_unity(domain, p);
    const S minus_omega_over_p = -(omega * domain.from_int_like(p).inverse());

    Series<S> phi = scale(omega, Series<S>::identity(n, order, domain));
    for (int d = 2; d <= order; ++d) {
        if ((d - 1) % p == 0) {
            const HomPart<S> rhs = part_of(power_trunc(phi, p, d), d);
            HomPart<S> forced(n, d, domain);
            for (int i = 0; i < n; ++i)
                for (const auto& [m, v] : rhs.comp[static_cast<std::size_t>(i)])
                    forced.add_term(i, m, minus_omega_over_p * v);
            add_part_in_place(phi, forced);
        } else if (auto it = seeds.find(d); it != seeds.end()) {
            add_part_in_place(phi, it->second);
        }
        self_check(part_of(power_trunc(phi, p, d), d).is_zero(),
                   "p-th power slice failed to vanish at degree " + std::to_string(d));
    }
    return GroupElement<S>(phi);
}

// phi_1 = diag(w^lambda); degree by degree, resonant slots of phi_d are
// forced to -(w^{<lambda,alpha>}/p) times the p-th power slice, seeds fill
// non-resonant slots, and any nonzero residual at a non-resonant slot
// aborts with the full report
template <ScalarRing S>
GroupElement<S> gen_periodic_diagonal(const DiagonalSpec& spec,
                                      const PeriodicSeedSet<S>& seeds, int order,
                                      const S& domain) {
    const int n = spec.vars();
    detail::check_seed_shape(seeds, n, order);
    for (const auto& [d, part] : seeds)
        for (int i = 0; i < n; ++i)
            for (const auto& [m, v] : part.comp[static_cast<std::size_t>(i)])
                if (spec.resonant(i, m))
                    throw BadSeedDegree("seed touches a resonant slot at degree " +
                                        std::to_string(d));

    const S omega = primitive_root_of_unity(domain, spec.p);
    const S p_inv = domain.from_int_like(spec.p).inverse();

    Series<S> phi = linear_series(diagonal_of(spec, domain), order, domain);
    for (int d = 2; d <= order; ++d) {
        const HomPart<S> rhs = part_of(power_trunc(phi, spec.p, d), d);
        ResonanceReport<S> report;
        report.degree = d;
        for (const auto& m : all_monomials(n, d))
            for (int i = 0; i < n; ++i)
                if (spec.resonant(i, m)) report.resonant.emplace_back(i, m);
        HomPart<S> forced(n, d, domain);
        for (int i = 0; i < n; ++i)
            for (const auto& [m, v] : rhs.comp[static_cast<std::size_t>(i)]) {
                if (spec.resonant(i, m)) {
                    const S value =
                        -(root_power(omega, spec.p, spec.pairing(m)) * p_inv) * v;
                    forced.add_term(i, m, value);
                    report.forced.emplace(std::make_pair(i, m), value);
                } else {
                    report.obstruction.emplace(std::make_pair(i, m), v);
                }
            }
        if (!report.solvable()) throw ObstructionError<S>(std::move(report));
        add_part_in_place(phi, forced);
        if (auto it = seeds.find(d); it != seeds.end()) add_part_in_place(phi, it->second);
        self_check(part_of(power_trunc(phi, spec.p, d), d).is_zero(),
                   "p-th power slice failed to vanish at degree " + std::to_string(d));
    }
    return GroupElement<S>(phi);
}

// psi^{-1} diag(w^lambda) psi: p-periodic by construction
template <ScalarRing S>
GroupElement<S> gen_periodic_conjugate(const DiagonalSpec& spec,
                                       const GroupElement<S>& psi) {
    if (psi.vars() != spec.vars())
        throw DimensionMismatch("conjugating series size differs from lambda");
    if (!psi.linear().is_identity())
        throw PreconditionFailed("conjugating series must have identity linear part");
    const S& domain = psi.series().domain();
    const Series<S> d =
        linear_series(diagonal_of(spec, domain), psi.order(), domain);
    return GroupElement<S>(compose(compose(invert(psi).series(), d), psi.series()));
}

// the constructive conjugacy: psi with psi_1 = id and psi phi = phi_1 psi,
// built degree by degree from a = (psi_{<=d-1} phi)_d by dividing each
// non-resonant slot by w^{lambda_i} - w^{<lambda,alpha>}; a nonzero
// resonant slot certifies the input was not p-periodic
template <ScalarRing S>
GroupElement<S> build_conjugator(const GroupElement<S>& g, const DiagonalSpec& spec) {
    const int n = g.vars();
    const int order = g.order();
    const S& domain = g.series().domain();
    if (spec.vars() != n) throw DimensionMismatch("lambda size differs from series");
    if (jacobian(g.series()) != diagonal_of(spec, domain))
        throw PreconditionFailed("linear part is not the declared diagonal");

    const S omega = primitive_root_of_unity(domain, spec.p);
    Series<S> psi = Series<S>::identity(n, order, domain);
    for (int d = 2; d <= order; ++d) {
        const HomPart<S> a = part_of(compose_trunc(psi, g.series(), d), d);
        HomPart<S> u(n, d, domain);
        for (int i = 0; i < n; ++i)
            for (const auto& [m, v] : a.comp[static_cast<std::size_t>(i)]) {
                if (spec.resonant(i, m))
                    throw NotPeriodicInput(
                        "resonant slot carries a nonzero value at degree " +
                        std::to_string(d) + "; the input is not p-periodic");
                const S denom =
                    root_power(omega, spec.p, spec.lambda[static_cast<std::size_t>(i)]) -
                    root_power(omega, spec.p, spec.pairing(m));
                u.add_term(i, m, v * denom.inverse());
            }
        add_part_in_place(psi, u);
    }
    GroupElement<S> result{psi};
    self_check(compose(psi, g.series()) ==
                   compose(linear_series(g.linear(), order, domain), psi),
               "conjugator does not intertwine with the linear part");
    return result;
}

// A^{-1} phi A with A acting as a linear change of coordinates
template <ScalarRing S>
GroupElement<S> matrix_conjugate(const GroupElement<S>& g, const Matrix<S>& a) {
    const S& domain = g.series().domain();
    const Series<S> left = linear_series(a.inverse(), g.order(), domain);
    const Series<S> right = linear_series(a, g.order(), domain);
    return GroupElement<S>(compose(compose(left, g.series()), right));
}

}  // namespace jetgroup
