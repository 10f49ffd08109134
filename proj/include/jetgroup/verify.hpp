#pragma once

// Self-contained verification suites shared by the CLI `verify` command and
// the acceptance runner.  Every suite is deterministic for a fixed seed and
// returns a pass/fail result with a short human-readable detail line.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "expr.hpp"
#include "group.hpp"
#include "periodic.hpp"
#include "relations.hpp"

namespace jetgroup::verify {

struct SuiteResult {
    std::string name;
    bool pass = false;
    double ms = 0.0;
    std::string detail;
};

namespace detail {

// Deterministic across standard libraries (uniform_int_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long pick(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

struct Check {
    bool ok = true;
    int count = 0;
    std::string detail;

    void require(bool cond, const std::string& what) {
        ++count;
        if (ok && !cond) {
            ok = false;
            detail = what;
        }
    }
};

template <typename Body>
SuiteResult timed(const std::string& name, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Check ck;
    try {
        body(ck);
    } catch (const std::exception& e) {
        ck.ok = false;
        ck.detail = std::string("unexpected exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    SuiteResult r;
    r.name = name;
    r.pass = ck.ok;
    r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.detail = ck.ok ? std::to_string(ck.count) + " checks" : ck.detail;
    return r;
}

template <ScalarRing S>
Matrix<S> random_invertible(Rng& rng, int n, const S& dom) {
    for (;;) {
        Matrix<S> m(n, dom);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = dom.from_int_like(rng.pick(-3, 3));
        try {
            m.inverse();
            return m;
        } catch (const SingularMatrix&) {
        }
    }
}

// random element with integer coefficients; degrees below min_degree (other
// than the linear part) stay zero
template <ScalarRing S>
Series<S> random_element(Rng& rng, int n, int order, const S& dom,
                         bool identity_linear, int min_degree = 2) {
    Series<S> s = identity_linear
                      ? Series<S>::identity(n, order, dom)
                      : linear_series(random_invertible(rng, n, dom), order, dom);
    for (int d = std::max(2, min_degree); d <= order; ++d)
        for (int i = 0; i < n; ++i)
            for (const auto& m : all_monomials(n, d)) {
                const long c = rng.pick(-3, 3);
                if (c != 0) s.set_coeff(i, m, dom.from_int_like(c));
            }
    return s;
}

template <ScalarRing S>
HomPart<S> random_hom_part(Rng& rng, int n, int degree, const S& dom) {
    HomPart<S> u(n, degree, dom);
    for (int i = 0; i < n; ++i)
        for (const auto& m : all_monomials(n, degree)) {
            const long c = rng.pick(-3, 3);
            if (c != 0) u.add_term(i, m, dom.from_int_like(c));
        }
    return u;
}

template <ScalarRing S>
Matrix<S> matrix_pow(const Matrix<S>& a, int e) {
    Matrix<S> acc = Matrix<S>::identity(a.dim(), a.domain());
    for (int i = 0; i < e; ++i) acc = acc * a;
    return acc;
}

// u composed with a linear map on the right: u(A x)
template <ScalarRing S>
HomPart<S> hom_right_compose(const HomPart<S>& u, const Matrix<S>& a) {
    const Series<S> us = to_series(u, u.degree);
    const Series<S> la = linear_series(a, u.degree, u.dom);
    return part_of(compose_trunc(us, la, u.degree), u.degree);
}

inline DiagonalSpec random_diagonal_spec(Rng& rng, int p, int n) {
    for (;;) {
        std::vector<long> lambda;
        for (int i = 0; i < n; ++i) lambda.push_back(rng.pick(1, p));
        try {
            return DiagonalSpec(p, lambda);
        } catch (const PreconditionFailed&) {
        }
    }
}

// ---- independent inversion oracle: undetermined coefficients ------------
//
// Solves (f o psi) = id degree by degree as a linear system in the unknown
// coefficients of each homogeneous part of psi, using the symbolic domain to
// assemble the equations and exact Gaussian elimination to solve them.
// Shares no code path with the inversion recurrence.

inline std::vector<Rational> solve_square(std::vector<std::vector<Rational>> m) {
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < rows; ++col) {
        int piv = -1;
        for (int r = col; r < rows; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularMatrix("inversion system is singular");
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(piv)]);
        auto& prow = m[static_cast<std::size_t>(col)];
        const Rational inv = prow[static_cast<std::size_t>(col)].inverse();
        for (auto& x : prow) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == col) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            const Rational f = row[static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c <= static_cast<std::size_t>(rows); ++c)
                row[c] -= f * prow[c];
        }
    }
    std::vector<Rational> sol;
    sol.reserve(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        sol.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(rows)]);
    return sol;
}

inline Series<SymPoly> embed_rational_series(const Series<Rational>& f,
                                             const SymTab& tab, int order) {
    Series<SymPoly> s(f.vars(), order, SymPoly(tab));
    for (int i = 0; i < f.vars(); ++i)
        for (const auto& [m, c] : f.component(i)) {
            if (mono_degree(m) > order) break;
            s.set_coeff(i, m, SymPoly(tab, Cyclotomic(tab->ctx, c)));
        }
    return s;
}

inline Series<Rational> invert_by_linear_solve(const Series<Rational>& f) {
    const int n = f.vars();
    const int order = f.order();
    const auto ctx = CyclotomicContext::make(1);
    Series<Rational> psi(n, order, Rational());

    for (int d = 1; d <= order; ++d) {
        std::vector<std::pair<int, Monomial>> slots;
        for (int i = 0; i < n; ++i)
            for (const auto& m : all_monomials(n, d)) slots.emplace_back(i, m);
        const int un = static_cast<int>(slots.size());

        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(un));
        for (int j = 0; j < un; ++j) names.push_back("u" + std::to_string(j));
        const auto tab = SymbolTable::make(std::move(names), ctx);
        const SymPoly sdom{tab};

        const Series<SymPoly> fs = embed_rational_series(f, tab, d);
        Series<SymPoly> ps = embed_rational_series(psi, tab, d);
        for (int j = 0; j < un; ++j)
            ps.set_coeff(slots[static_cast<std::size_t>(j)].first,
                         slots[static_cast<std::size_t>(j)].second,
                         SymPoly::symbol(tab, j));

        Series<SymPoly> slice = compose_trunc(fs, ps, d);
        if (d == 1)
            slice = sub(slice, Series<SymPoly>::identity(n, d, sdom));
        std::vector<std::vector<Rational>> system;
        system.reserve(static_cast<std::size_t>(un));
        for (const auto& [i, m] : slots) {
            std::vector<Rational> row(static_cast<std::size_t>(un) + 1, Rational());
            const SymPoly cell = slice.coeff(i, m);
            for (const auto& [e, c] : cell.terms()) {
                const int ed = expo_degree(e);
                self_check(ed <= 1, "inversion system must be affine");
                self_check(c.is_rational(), "inversion system must stay rational");
                if (ed == 0) {
                    row[static_cast<std::size_t>(un)] -= c.rational_part();
                } else {
                    for (int j = 0; j < un; ++j)
                        if (e[static_cast<std::size_t>(j)] == 1) {
                            row[static_cast<std::size_t>(j)] += c.rational_part();
                            break;
                        }
                }
            }
            system.push_back(std::move(row));
        }
        const std::vector<Rational> sol = solve_square(std::move(system));
        for (int j = 0; j < un; ++j)
            psi.set_coeff(slots[static_cast<std::size_t>(j)].first,
                          slots[static_cast<std::size_t>(j)].second,
                          sol[static_cast<std::size_t>(j)]);
    }
    return psi;
}

inline SymPoly parse_row(const std::string& text, const SymTab& tab) {
    return parse_scalar(text, SymPoly(tab));
}

}  // namespace detail

// C1: the inverse of x + a x^2 carries signed Catalan coefficients
inline SuiteResult run_quadratic_inverse(std::uint64_t) {
    return detail::timed("quadratic-inverse", [](detail::Check& ck) {
        const auto ctx = CyclotomicContext::make(1);
        const auto tab = SymbolTable::make({"a"}, ctx);
        const SymPoly dom{tab};
        const SymPoly a = SymPoly::symbol(tab, 0);

        Series<SymPoly> f(1, 6, dom);
        f.set_coeff(0, Monomial{1}, dom.one_like());
        f.set_coeff(0, Monomial{2}, a);
        const GroupElement<SymPoly> g{f};
        const GroupElement<SymPoly> inv = invert(g);

        const long catalan_signed[] = {1, -1, 2, -5, 14, -42};
        Series<SymPoly> expected(1, 6, dom);
        SymPoly apow = dom.one_like();
        for (int d = 1; d <= 6; ++d) {
            expected.set_coeff(0, Monomial{d},
                               apow * dom.from_int_like(catalan_signed[d - 1]));
            apow = apow * a;
        }
        ck.require(inv.series() == expected, "inverse series mismatch");
        ck.require(is_identity(compose(g, inv).series()), "f(f^-1) is not the identity");
        ck.require(is_identity(compose(inv, g).series()), "f^-1(f) is not the identity");
    });
}

// C2: the integer sequence carried by the unit-seeded two-periodic generator
inline SuiteResult run_c_sequence(std::uint64_t) {
    return detail::timed("c-sequence", [](detail::Check& ck) {
        const std::vector<BigInt> cs = c_sequence(6);
        const long expected[] = {-1, 2, -13, 145, -2328, 49784};
        ck.require(cs.size() == 6, "sequence length mismatch");
        for (std::size_t i = 0; i < cs.size(); ++i)
            ck.require(cs[i] == BigInt(expected[i]),
                       "c[" + std::to_string(i) + "] mismatch, got " + cs[i].get_str());
    });
}

namespace detail {

inline void check_table_rows(
    Check& ck, int p, int max_degree,
    const std::vector<std::pair<int, std::string>>& expected) {
    const RelationTable t = relation_table(p, max_degree);
    ck.require(static_cast<int>(t.rows.size()) == static_cast<int>(expected.size()),
               "row count mismatch");
    for (const auto& [d, text] : expected) {
        auto it = t.rows.find(d);
        if (it == t.rows.end()) {
            ck.require(false, "missing row at degree " + std::to_string(d));
            continue;
        }
        ck.require(it->second == parse_row(text, t.symbols),
                   "row at degree " + std::to_string(d) + " mismatch: got " +
                       it->second.str());
    }
}

}  // namespace detail

// C3: forced coefficients of the two-periodic scalar family through degree 11
inline SuiteResult run_table_p2(std::uint64_t) {
    return detail::timed("table-p2", [](detail::Check& ck) {
        detail::check_table_rows(
            ck, 2, 11,
            {{3, "-a2^2"},
             {5, "2*a2^4 - 3*a2*a4"},
             {7, "-13*a2^6 + 18*a2^3*a4 - 2*a4^2 - 4*a2*a6"},
             {9, "145*a2^8 - 221*a2^5*a4 + 50*a2^2*a4^2 + 35*a2^3*a6 - 5*a4*a6 "
                 "- 5*a2*a8"},
             {11, "-2328*a2^10 + 3879*a2^7*a4 - 1263*a2^4*a4^2 - 561*a2^5*a6 "
                  "+ 55*a2*a4^3 + 171*a2^2*a4*a6 + 61*a2^3*a8 - 3*a6^2 - 6*a4*a8 "
                  "- 6*a2*a10"}});
    });
}

// C4: forced coefficients of the three-periodic scalar family through degree 10
inline SuiteResult run_table_p3(std::uint64_t) {
    return detail::timed("table-p3", [](detail::Check& ck) {
        detail::check_table_rows(
            ck, 3, 10,
            {{4, "(1-4*w)/3*a2^3 + (-7-8*w)/3*a2*a3"},
             {7, "(116-68*w)/9*a2^6 + (-154-332*w)/9*a2^4*a3 + (-79-41*w)/9*a2^2*a3^2 "
                 "+ (-1-4*w)*a3^3 + (4-8*w)*a2^2*a5 + (-13-11*w)/3*a3*a5 "
                 "+ (-10-14*w)/3*a2*a6"},
             {10, "(22586+5656*w)/27*a2^9 + (1461-14576*w)/9*a2^7*a3 "
                  "+ (-8395-7798*w)/9*a2^5*a3^2 + (-1199-4882*w)/27*a2^3*a3^3 "
                  "+ (1247-182*w)/3*a2^5*a5 + (-340-258*w)/3*a2*a3^4 "
                  "+ (-2131-4319*w)/9*a2^3*a3*a5 + (-103-1154*w)/9*a2^4*a6 "
                  "+ (-338+80*w)/9*a2*a3^2*a5 + (-545-361*w)/9*a2^2*a3*a6 "
                  "+ (-7-22*w)*a3^2*a6 + (7-15*w)*a2*a5^2 + (10-12*w)*a2^2*a8 "
                  "+ (-16-17*w)/3*a5*a6 + (-19-14*w)/3*a3*a8 + (-13-20*w)/3*a2*a9"}});
    });
}

// C5: forced coefficients of the four-periodic scalar family through degree 9
inline SuiteResult run_table_p4(std::uint64_t) {
    return detail::timed("table-p4", [](detail::Check& ck) {
        detail::check_table_rows(
            ck, 4, 9,
            {{5, "(-3+5*w)/2*a2^4 + (12+5*w)/2*a2^2*a3 + (-3*w)/2*a3^2 "
                 "+ (1-3*w)*a2*a4"},
             {9, "(743+118*w)/4*a2^8 + (-35-578*w)*a2^6*a3 + (-3504+1307*w)/8*a2^4*a3^2 "
                 "+ (-345+23*w)/2*a2^5*a4 + (172+215*w)/4*a2^2*a3^3 "
                 "+ (119+332*w)/2*a2^3*a3*a4 + (-65*w)/8*a3^4 + (2+99*w)/2*a2*a3^2*a4 "
                 "+ (33-25*w)/2*a2^2*a4^2 + (-35+25*w)*a2^3*a6 + (32-7*w)/2*a3*a4^2 "
                 "+ (32+11*w)*a2*a3*a6 + (24+27*w)/2*a2^2*a7 + (-1-5*w)*a4*a6 "
                 "- 5*w*a3*a7 + (3-5*w)*a2*a8"}});
    });
}

// C6: recurrence inversion vs both round trips and the linear-solve oracle
inline SuiteResult run_inversion_roundtrip(std::uint64_t seed) {
    return detail::timed("inversion-roundtrip", [seed](detail::Check& ck) {
        detail::Rng rng(seed);
        struct Shape {
            int count, n, kmin, kmax;
        };
        const Shape shapes[] = {{40, 1, 2, 8}, {40, 2, 2, 7}, {20, 3, 2, 4}};
        for (const auto& sh : shapes)
            for (int t = 0; t < sh.count; ++t) {
                const int k = static_cast<int>(rng.pick(sh.kmin, sh.kmax));
                const Series<Rational> f =
                    detail::random_element(rng, sh.n, k, Rational(), false);
                const GroupElement<Rational> g{f};
                const GroupElement<Rational> psi = invert(g);
                ck.require(is_identity(compose(g, psi).series()),
                           "right inverse fails at n=" + std::to_string(sh.n) +
                               " k=" + std::to_string(k));
                ck.require(is_identity(compose(psi, g).series()),
                           "left inverse fails at n=" + std::to_string(sh.n) +
                               " k=" + std::to_string(k));
                ck.require(psi.series() == detail::invert_by_linear_solve(f),
                           "oracle disagrees at n=" + std::to_string(sh.n) +
                               " k=" + std::to_string(k));
            }
    });
}

// C7: tail-supported elements commute when the tail starts at or past half
// the truncation order; the known shallow pair does not commute
inline SuiteResult run_commutativity(std::uint64_t seed) {
    return detail::timed("commutativity", [seed](detail::Check& ck) {
        detail::Rng rng(seed);
        for (int t = 0; t < 50; ++t) {
            const int n = static_cast<int>(rng.pick(1, 3));
            const int k = static_cast<int>(rng.pick(3, 8));
            const int m = static_cast<int>(rng.pick((k + 1) / 2, k - 1));
            const Series<Rational> f =
                detail::random_element(rng, n, k, Rational(), true, m + 1);
            const Series<Rational> g =
                detail::random_element(rng, n, k, Rational(), true, m + 1);
            ck.require(compose(f, g) == compose(g, f),
                       "pair at k=" + std::to_string(k) + " m=" + std::to_string(m) +
                           " n=" + std::to_string(n) + " fails to commute");
        }
        // depth 1 inside truncation order 3 is below the half-way threshold
        Series<Rational> f(2, 3, Rational());
        f.set_coeff(0, Monomial{1, 0}, Rational(1));
        f.set_coeff(0, Monomial{0, 2}, Rational(1));
        f.set_coeff(1, Monomial{0, 1}, Rational(1));
        Series<Rational> g(2, 3, Rational());
        g.set_coeff(0, Monomial{1, 0}, Rational(1));
        g.set_coeff(1, Monomial{0, 1}, Rational(1));
        g.set_coeff(1, Monomial{2, 0}, Rational(1));
        ck.require(compose(f, g) != compose(g, f),
                   "shallow-tail counterexample unexpectedly commutes");
    });
}

// C8: conjugates of periodic diagonal maps have exactly the diagonal's order
inline SuiteResult run_order_theorem(std::uint64_t seed) {
    return detail::timed("order-theorem", [seed](detail::Check& ck) {
        detail::Rng rng(seed);
        const int ps[] = {2, 3, 4, 6};
        for (int t = 0; t < 20; ++t) {
            const int p = ps[rng.pick(0, 3)];
            const int n = static_cast<int>(rng.pick(1, 3));
            const int k = static_cast<int>(rng.pick(4, 7));
            const DiagonalSpec spec = detail::random_diagonal_spec(rng, p, n);
            const auto ctx = CyclotomicContext::make(p);
            const Cyclotomic dom{ctx};
            const Series<Cyclotomic> psi =
                detail::random_element(rng, n, k, dom, true);
            const GroupElement<Cyclotomic> g =
                gen_periodic_conjugate(spec, GroupElement<Cyclotomic>{psi});
            ck.require(check_periodic(g, p),
                       "conjugate is not periodic at p=" + std::to_string(p));
            const OrderResult r = order_of(g);
            ck.require(r.is_periodic() && r.order == p,
                       "order mismatch at p=" + std::to_string(p));
            if (!is_identity(psi)) {
                const OrderResult bare = order_of(GroupElement<Cyclotomic>{psi});
                ck.require(bare.kind == OrderResult::Kind::series_not_periodic,
                           "tail with identity linear part reported periodic");
            }
        }
    });
}

// C9: the constructed conjugator intertwines the element with its linear part
inline SuiteResult run_conjugator_roundtrip(std::uint64_t seed) {
    return detail::timed("conjugator-roundtrip", [seed](detail::Check& ck) {
        detail::Rng rng(seed);
        const int ps[] = {2, 3, 4, 6};
        for (int t = 0; t < 20; ++t) {
            const int p = ps[rng.pick(0, 3)];
            const int n = static_cast<int>(rng.pick(1, 3));
            const int k = static_cast<int>(rng.pick(4, 6));
            const DiagonalSpec spec = detail::random_diagonal_spec(rng, p, n);
            const auto ctx = CyclotomicContext::make(p);
            const Cyclotomic dom{ctx};
            const Series<Cyclotomic> seed_psi =
                detail::random_element(rng, n, k, dom, true);
            const GroupElement<Cyclotomic> g =
                gen_periodic_conjugate(spec, GroupElement<Cyclotomic>{seed_psi});
            const GroupElement<Cyclotomic> u = build_conjugator(g, spec);
            ck.require(u.linear().is_identity(), "conjugator linear part is not id");
            const Series<Cyclotomic> lin =
                linear_series(g.linear(), k, dom);
            ck.require(compose(u.series(), g.series()) == compose(lin, u.series()),
                       "intertwining identity fails at p=" + std::to_string(p));
            const GroupElement<Cyclotomic> back =
                gen_periodic_conjugate(spec, u);
            ck.require(back.series() == g.series(),
                       "reconjugation does not reproduce the element");
        }
    });
}

// C10: averaging operator closed form vs its literal sum, and R o t = 0
inline SuiteResult run_resonance(std::uint64_t seed) {
    return detail::timed("resonance", [seed](detail::Check& ck) {
        detail::Rng rng(seed);
        const int ps[] = {2, 3, 4, 6};
        for (int t = 0; t < 30; ++t) {
            const int p = ps[rng.pick(0, 3)];
            const int n = static_cast<int>(rng.pick(1, 3));
            const int d = static_cast<int>(rng.pick(2, 5));
            const DiagonalSpec spec = detail::random_diagonal_spec(rng, p, n);
            const auto ctx = CyclotomicContext::make(p);
            const Cyclotomic dom{ctx};
            const Matrix<Cyclotomic> diag = diagonal_of(spec, dom);
            const HomPart<Cyclotomic> u = detail::random_hom_part(rng, n, d, dom);

            HomPart<Cyclotomic> literal(n, d, dom);
            for (int j = 0; j < p; ++j)
                literal = literal +
                          apply_linear(detail::matrix_pow(diag, j),
                                       detail::hom_right_compose(
                                           u, detail::matrix_pow(diag, p - 1 - j)));
            ck.require(literal == resonance_operator_R(spec, u),
                       "closed form differs from literal sum at p=" +
                           std::to_string(p));
            const HomPart<Cyclotomic> rt =
                resonance_operator_R(spec, resonance_operator_t(spec, u));
            ck.require(rt.is_zero(), "R o t is nonzero at p=" + std::to_string(p));
        }
    });
}

// C11: structural identities of the substitution product
inline SuiteResult run_composition_identities(std::uint64_t seed) {
    return detail::timed("composition-identities", [seed](detail::Check& ck) {
        detail::Rng rng(seed);
        const Rational dom;

        // associativity, jacobian multiplicativity, inverse anti-morphism
        for (int t = 0; t < 30; ++t) {
            const int n = static_cast<int>(rng.pick(1, 3));
            const int k = static_cast<int>(rng.pick(2, 5));
            const GroupElement<Rational> f{detail::random_element(rng, n, k, dom, false)};
            const GroupElement<Rational> g{detail::random_element(rng, n, k, dom, false)};
            const GroupElement<Rational> h{detail::random_element(rng, n, k, dom, false)};
            ck.require(compose(compose(f, g), h) == compose(f, compose(g, h)),
                       "associativity fails");
            ck.require(compose(f, g).linear() == f.linear() * g.linear(),
                       "linear part of a product is not the matrix product");
            ck.require(invert(compose(f, g)) == compose(invert(g), invert(f)),
                       "inverse of a product is not the reversed product");
        }

        // top-degree split of a product one order higher
        for (int t = 0; t < 30; ++t) {
            const int n = static_cast<int>(rng.pick(1, 3));
            const int k = static_cast<int>(rng.pick(2, 4));
            const Series<Rational> f = detail::random_element(rng, n, k + 1, dom, false);
            const Series<Rational> g = detail::random_element(rng, n, k + 1, dom, false);
            const Series<Rational> lhs = compose(f, g);
            Series<Rational> rhs =
                compose_trunc(truncate(f, k), truncate(g, k), k + 1);
            add_part_in_place(rhs, apply_linear(jacobian(f), part_of(g, k + 1)));
            add_part_in_place(
                rhs, detail::hom_right_compose(part_of(f, k + 1), jacobian(g)));
            ck.require(lhs == rhs, "top-degree split fails at k=" + std::to_string(k));
        }

        // top-degree perturbation expands linearly through conjugated copies
        for (int t = 0; t < 30; ++t) {
            const int n = static_cast<int>(rng.pick(1, 3));
            const int k = static_cast<int>(rng.pick(2, 4));
            const int m = static_cast<int>(rng.pick(1, 4));
            const Series<Rational> f = detail::random_element(rng, n, k + 1, dom, false);
            const HomPart<Rational> u = detail::random_hom_part(rng, n, k + 1, dom);
            Series<Rational> fu = f;
            add_part_in_place(fu, u);
            const Matrix<Rational> j1 = jacobian(f);
            HomPart<Rational> sum(n, k + 1, dom);
            for (int i = 0; i < m; ++i)
                sum = sum + apply_linear(detail::matrix_pow(j1, i),
                                         detail::hom_right_compose(
                                             u, detail::matrix_pow(j1, m - 1 - i)));
            ck.require(part_of(power_trunc(fu, m, k + 1), k + 1) ==
                           part_of(power_trunc(f, m, k + 1), k + 1) + sum,
                       "perturbation expansion fails at m=" + std::to_string(m));
        }

        // powers of id + top part stay linear in the exponent
        for (int t = 0; t < 30; ++t) {
            const int n = static_cast<int>(rng.pick(1, 3));
            const int k = static_cast<int>(rng.pick(2, 5));
            const int m = static_cast<int>(rng.pick(2, 5));
            const HomPart<Rational> u = detail::random_hom_part(rng, n, k, dom);
            Series<Rational> f = Series<Rational>::identity(n, k, dom);
            add_part_in_place(f, u);
            const GroupElement<Rational> fe{f};
            Series<Rational> expected = Series<Rational>::identity(n, k, dom);
            for (int i = 0; i < m; ++i) add_part_in_place(expected, u);
            ck.require(power(fe, m).series() == expected,
                       "power of id + top part is not id + m * top");
        }

        // mutual inverses mod degree k agree at degree k+1 in either order
        for (int t = 0; t < 30; ++t) {
            const int n = static_cast<int>(rng.pick(1, 3));
            const int k = static_cast<int>(rng.pick(2, 4));
            const GroupElement<Rational> f{
                detail::random_element(rng, n, k + 1, dom, true)};
            Series<Rational> gs = truncate(invert(f).series(), k).with_order(k + 1);
            add_part_in_place(gs, detail::random_hom_part(rng, n, k + 1, dom));
            const GroupElement<Rational> g{gs};
            ck.require(one_sided_inverse_symmetry_check(f, g, k),
                       "products of near-inverses differ at degree " +
                           std::to_string(k + 1));
        }

        // the support-period invariant survives inversion
        for (int t = 0; t < 30; ++t) {
            const int n = static_cast<int>(rng.pick(1, 3));
            const int m = static_cast<int>(rng.pick(1, 4));
            const int j = static_cast<int>(rng.pick(1, 3));
            const int k = m * j + 1;
            Series<Rational> f =
                detail::random_element(rng, n, k, dom, t % 2 == 0);
            for (int d = 2; d <= k; ++d) {
                if ((d - 1) % m == 0) continue;
                for (int i = 0; i < n; ++i)
                    for (const auto& mo : all_monomials(n, d))
                        f.set_coeff(i, mo, dom.zero_like());
            }
            Monomial top(static_cast<std::size_t>(n), 0);
            top[0] = k;
            f.set_coeff(0, top, dom.from_int_like(2));
            const GroupElement<Rational> fe{f};
            ck.require(t_invariant(fe.series()) == t_invariant(invert(fe).series()),
                       "support period changes under inversion");
        }
    });
}

// C12: integer seeds keep every generated two-periodic coefficient integral
inline SuiteResult run_integrality(std::uint64_t seed) {
    return detail::timed("integrality", [seed](detail::Check& ck) {
        detail::Rng rng(seed);
        for (int t = 0; t < 20; ++t) {
            const int order = static_cast<int>(rng.pick(7, 12));
            PeriodicSeedSet<Rational> seeds;
            for (int d = 2; d <= order; d += 2) {
                const long c = rng.pick(-4, 4);
                if (c == 0) continue;
                HomPart<Rational> u(1, d, Rational());
                u.add_term(0, Monomial{d}, Rational(c));
                seeds.emplace(d, std::move(u));
            }
            const GroupElement<Rational> g =
                gen_periodic_scalar(2, 1, seeds, order, Rational());
            ck.require(check_periodic(g, 2), "generated element is not 2-periodic");
            bool integral = true;
            for (const auto& [m, c] : g.series().component(0))
                integral = integral && ScalarTraits<Rational>::is_integral(c);
            ck.require(integral, "non-integer coefficient from integer seeds");
        }
    });
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

inline const std::vector<std::pair<std::string, SuiteFn>>& all_suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> v = {
        {"quadratic-inverse", &run_quadratic_inverse},
        {"c-sequence", &run_c_sequence},
        {"table-p2", &run_table_p2},
        {"table-p3", &run_table_p3},
        {"table-p4", &run_table_p4},
        {"inversion-roundtrip", &run_inversion_roundtrip},
        {"commutativity", &run_commutativity},
        {"order-theorem", &run_order_theorem},
        {"conjugator-roundtrip", &run_conjugator_roundtrip},
        {"resonance", &run_resonance},
        {"composition-identities", &run_composition_identities},
        {"integrality", &run_integrality},
    };
    return v;
}

inline std::vector<SuiteResult> run_suites(const std::string& name,
                                           std::uint64_t seed) {
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const auto& [_, fn] : all_suites()) out.push_back(fn(seed));
        return out;
    }
    for (const auto& [n, fn] : all_suites())
        if (n == name) {
            out.push_back(fn(seed));
            return out;
        }
    throw PreconditionFailed("unknown suite: " + name);
}

}  // namespace jetgroup::verify
