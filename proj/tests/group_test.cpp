#include <gtest/gtest.h>

#include <jetgroup/jetgroup.hpp>

#include "testutil.hpp"

namespace {

using namespace jetgroup;

TEST(Group, MembershipRequiresInvertibleLinearPart) {
    Series<Rational> f = tu::series1({0, 1, 1});  // no x term
    EXPECT_THROW(GroupElement<Rational>{f}, SingularMatrix);
    Series<Rational> g(2, 3, Rational());
    g.set_coeff(0, Monomial{1, 0}, Rational(1));
    g.set_coeff(1, Monomial{1, 0}, Rational(2));  // rank 1
    EXPECT_THROW(GroupElement<Rational>{g}, SingularMatrix);
}

TEST(Group, QuadraticInverseCarriesSignedCatalans) {
    const GroupElement<Rational> f{tu::series1({1, 1}, 8)};
    const Series<Rational> inv = invert(f).series();
    EXPECT_EQ(inv, tu::series1({1, -1, 2, -5, 14, -42, 132, -429}));
}

TEST(Group, InverseRoundTrips) {
    tu::Rng rng(7201);
    for (int t = 0; t < 25; ++t) {
        const int n = static_cast<int>(rng.pick(1, 3));
        const int k = static_cast<int>(rng.pick(1, 6));
        const GroupElement<Rational> g{
            tu::random_element(rng, n, k, Rational(), false)};
        const GroupElement<Rational> inv = invert(g);
        EXPECT_TRUE(is_identity(compose(g, inv).series()));
        EXPECT_TRUE(is_identity(compose(inv, g).series()));
        EXPECT_EQ(invert(inv), g);
    }
}

TEST(Group, PowerLaws) {
    tu::Rng rng(7202);
    for (int t = 0; t < 15; ++t) {
        const int n = static_cast<int>(rng.pick(1, 2));
        const int k = static_cast<int>(rng.pick(2, 5));
        const GroupElement<Rational> g{
            tu::random_element(rng, n, k, Rational(), false)};
        EXPECT_TRUE(is_identity(power(g, 0).series()));
        EXPECT_EQ(power(g, 1), g);
        EXPECT_EQ(power(g, -1), invert(g));
        const long a = rng.pick(-3, 3), b = rng.pick(-3, 3);
        EXPECT_EQ(power(g, a + b), compose(power(g, a), power(g, b)));
    }
}

TEST(Group, OrderOfLinearScalings) {
    // x -> -x has order 2
    Series<Rational> neg(1, 5, Rational());
    neg.set_coeff(0, Monomial{1}, Rational(-1));
    const OrderResult r2 = order_of(GroupElement<Rational>{neg});
    EXPECT_TRUE(r2.is_periodic());
    EXPECT_EQ(r2.order, 2);
    EXPECT_EQ(r2.matrix_order, 2);

    // x -> 2x has infinite order; the bound is reported, not an order
    Series<Rational> dbl(1, 5, Rational());
    dbl.set_coeff(0, Monomial{1}, Rational(2));
    const OrderResult rinf = order_of(GroupElement<Rational>{dbl}, 50);
    EXPECT_FALSE(rinf.is_periodic());
    EXPECT_EQ(rinf.kind, OrderResult::Kind::matrix_not_periodic_within_bound);
    EXPECT_EQ(rinf.reason(), "matrix_not_periodic_within_bound");
}

TEST(Group, OrderOfUnipotentTail) {
    // identity linear part + tail: matrix order 1 but series is not periodic
    const OrderResult r = order_of(GroupElement<Rational>{tu::series1({1, 1, 0})});
    EXPECT_FALSE(r.is_periodic());
    EXPECT_EQ(r.kind, OrderResult::Kind::series_not_periodic);
    EXPECT_EQ(r.matrix_order, 1);
}

TEST(Group, OrderOfConjugatedInvolution) {
    // psi = x + x^2, phi = psi^-1 o (-id) o psi = -x - 2x^2 - 4x^3 mod deg 3
    const DiagonalSpec spec(2, {1});
    const GroupElement<Rational> psi{tu::series1({1, 1, 0})};
    const GroupElement<Rational> g = gen_periodic_conjugate(spec, psi);
    EXPECT_EQ(g.series(), tu::series1({-1, -2, -4}));
    const OrderResult r = order_of(g);
    EXPECT_TRUE(r.is_periodic());
    EXPECT_EQ(r.order, 2);
}

TEST(Group, NearInverseSymmetryPreconditions) {
    const GroupElement<Rational> f{tu::series1({1, 1, 0})};
    const GroupElement<Rational> scaled{tu::series1({2, 1, 0})};
    EXPECT_THROW(one_sided_inverse_symmetry_check(scaled, f, 2), PreconditionFailed);
    // not mutual inverses mod degree 2
    EXPECT_THROW(one_sided_inverse_symmetry_check(f, f, 2), PreconditionFailed);
    const GroupElement<Rational> g{tu::series1({1, -1, 0})};
    EXPECT_TRUE(one_sided_inverse_symmetry_check(f, g, 2));
}

TEST(Group, SubgroupDimensionFormula) {
    // n * sum_{i=m+1}^{k} C(n+i-1, i)
    EXPECT_EQ(dim_G(3, 1, 2), BigInt(14));  // 2 * (3 + 4)
    EXPECT_EQ(dim_G(1, 0, 3), BigInt(9));   // the general linear group
    EXPECT_EQ(dim_G(2, 0, 2), BigInt(10));  // 2 * (2 + 3)
    EXPECT_EQ(dim_G(7, 3, 1), BigInt(4));   // one variable: k - m
    EXPECT_EQ(dim_G(4, 2, 3), BigInt(75));  // 3 * (10 + 15)
    EXPECT_EQ(dim_G(3, 3, 2), BigInt(0));
    EXPECT_EQ(dim_G(0, 0, 1), BigInt(0));
    EXPECT_THROW(dim_G(3, 4, 1), PreconditionFailed);
    EXPECT_THROW(dim_G(3, -1, 1), PreconditionFailed);
    EXPECT_THROW(dim_G(3, 1, 0), PreconditionFailed);
}

TEST(Group, ComposeRespectsDomains) {
    const auto c3 = Cyclotomic(CyclotomicContext::make(3));
    Series<Cyclotomic> f = Series<Cyclotomic>::identity(1, 3, c3);
    const auto c4 = Cyclotomic(CyclotomicContext::make(4));
    Series<Cyclotomic> g = Series<Cyclotomic>::identity(1, 3, c4);
    EXPECT_THROW(compose(GroupElement<Cyclotomic>{f}, GroupElement<Cyclotomic>{g}),
                 DomainMismatch);
}

}  // namespace
