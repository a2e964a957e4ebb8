#include <gtest/gtest.h>

#include "cremfol/families.hpp"
#include "cremfol/forms.hpp"
#include "cremfol/parser.hpp"
#include "cremfol/sampling.hpp"

using namespace cremfol;

namespace {

SymbolTablePtr xyz() {
    static SymbolTablePtr t = make_table({"x", "y", "z"});
    return t;
}

MPoly P(const std::string& src, const SymbolTablePtr& t = xyz()) { return parse_poly(src, t); }

Proj1Form F(const std::string& src, const SymbolTablePtr& t = xyz()) {
    return parse_proj_form(src, t);
}

/// Random Euler-null form: a*(y dZ - z dY) + b*(z dX - x dZ) + c*(x dY - y dX).
Proj1Form random_euler_form(Rng& rng, const SymbolTablePtr& t, int deg) {
    auto random_homog = [&](int d) {
        MPoly out(t);
        for (int i = 0; i < 4; ++i) {
            Monomial m(t->size());
            int e0 = (int)rng.integer(0, d);
            int e1 = (int)rng.integer(0, d - e0);
            m.set_exp(0, e0);
            m.set_exp(1, e1);
            m.set_exp(2, d - e0 - e1);
            out.add_term(m, rng.rational());
        }
        return out;
    };
    while (true) {
        MPoly a = random_homog(deg), b = random_homog(deg), c = random_homog(deg);
        MPoly x = MPoly::variable(t, "x"), y = MPoly::variable(t, "y"), z = MPoly::variable(t, "z");
        MPoly A = c * y - b * z;
        MPoly B = a * z - c * x;
        MPoly C = b * x - a * y;
        if (A.is_zero() && B.is_zero() && C.is_zero()) continue;
        return Proj1Form(A, B, C);
    }
}

}  // namespace

TEST(EulerContract, PencilAndOmega1) {
    EXPECT_TRUE(euler_contract(F("[-1*y, x, 0]")).is_zero());
    Proj1Form omega1p = F("[x^2*z - y^3, x*y^2, -1*x^3]");
    EXPECT_TRUE(euler_contract(omega1p).is_zero());
    EXPECT_THROW(F("[x, 0, 0]"), std::invalid_argument);
}

TEST(Wedge11, AntisymmetryAndBasis) {
    Proj1Form w = F("[x^2*z - y^3, x*y^2, -1*x^3]");
    EXPECT_TRUE(wedge11(w, w).is_zero());
    // dX wedge dY = (0, 0, 1) on raw triples
    auto t = xyz();
    Proj2Form basis = wedge11_raw(MPoly::constant(t, Rational(1)), MPoly::zero(t), MPoly::zero(t),
                                  MPoly::zero(t), MPoly::constant(t, Rational(1)), MPoly::zero(t));
    EXPECT_TRUE(basis.P.is_zero());
    EXPECT_TRUE(basis.Q.is_zero());
    EXPECT_EQ(basis.R, MPoly::constant(t, Rational(1)));
}

TEST(Wedge11, BilinearAntisymmetricProperty) {
    Rng rng(3);
    auto t = xyz();
    for (int i = 0; i < 10; ++i) {
        Proj1Form w = random_euler_form(rng, t, 1);
        Proj1Form e = random_euler_form(rng, t, 2);
        Proj2Form we = wedge11(w, e);
        Proj2Form ew = wedge11(e, w);
        EXPECT_EQ(we.P, -ew.P);
        EXPECT_EQ(we.Q, -ew.Q);
        EXPECT_EQ(we.R, -ew.R);
        Rational s = rng.rational(true);
        Proj2Form ws = wedge11(w * s, e);
        EXPECT_EQ(ws.P, we.P * s);
        EXPECT_EQ(ws.Q, we.Q * s);
        EXPECT_EQ(ws.R, we.R * s);
    }
}

TEST(Homogenize, PencilExact) {
    Aff1Form pencil(P("-1*y"), P("x"));  // x dy - y dx
    Proj1Form h = homogenize_affine(pencil);
    EXPECT_EQ(h.coefficient_degree(), 1);
    EXPECT_EQ(h.A(), P("-1*y"));
    EXPECT_EQ(h.B(), P("x"));
    EXPECT_TRUE(h.C().is_zero());
}

TEST(Homogenize, DisplayedModels) {
    // Omega1 = x^2 dx + y^2 (x dy - y dx)
    Proj1Form o1 = family_form("Omega1");
    Proj1Form expected1 = F("[x^2*z - y^3, x*y^2, -1*x^3]", o1.table());
    EXPECT_EQ(o1.A() * expected1.B(), o1.B() * expected1.A());
    EXPECT_TRUE(wedge11(o1, expected1).is_zero());
    EXPECT_EQ(o1.coefficient_degree(), 3);

    // the dz coefficient is -(x^3 + xyz + y^3): the only Euler-null
    // completion of the affine model, and the one with a lone singularity
    Proj1Form o4 = family_form("Omega4");
    Proj1Form expected4 = F(
        "[x*(x*z + y^2), x*z^2 + y^2*z - x^2*y, -1*(x^3 + x*y*z + y^3)]", o4.table());
    EXPECT_TRUE(wedge11(o4, expected4).is_zero());
    EXPECT_EQ(o4.coefficient_degree(), 3);
}

TEST(Homogenize, RoundTripUpToScalar) {
    Rng rng(17);
    auto t = xyz();
    for (int i = 0; i < 10; ++i) {
        MPoly a(t), b(t);
        for (int k = 0; k < 4; ++k) {
            Monomial m(t->size());
            m.set_exp(0, (std::uint32_t)rng.integer(0, 2));
            m.set_exp(1, (std::uint32_t)rng.integer(0, 2));
            a.add_term(m, rng.rational());
            Monomial m2(t->size());
            m2.set_exp(0, (std::uint32_t)rng.integer(0, 2));
            m2.set_exp(1, (std::uint32_t)rng.integer(0, 2));
            b.add_term(m2, rng.rational());
        }
        if (a.is_zero() && b.is_zero()) continue;
        Aff1Form aff(a, b);
        Proj1Form h = homogenize_affine(aff);
        Aff1Form back = dehomogenize(h);
        // equal up to a nonzero rational scalar: cross multiply
        EXPECT_TRUE((back.a.num() * b - back.b.num() * a).is_zero());
        EXPECT_FALSE(back.a.num().is_zero() && back.b.num().is_zero());
    }
}

TEST(ExteriorDerivativeAffine, Basics) {
    auto t = xyz();
    Aff1Form xdy(MPoly::zero(t), P("x"));
    EXPECT_EQ(exterior_derivative_affine(xdy), RationalFn::of(MPoly::constant(t, Rational(1))));
    Aff1Form pencil(P("-1*y"), P("x"));
    EXPECT_EQ(exterior_derivative_affine(pencil),
              RationalFn::of(MPoly::constant(t, Rational(2))));
}

TEST(IsClosed, SeparatedLogarithmicForm) {
    auto t = xyz();
    // dx/(x(1+x)) - dy/(y(1+y))
    Aff1Form w(RationalFn(MPoly::constant(t, Rational(1)), P("x*(1 + x)")),
               RationalFn(MPoly::constant(t, Rational(-1)), P("y*(1 + y)")));
    EXPECT_TRUE(is_closed(w));
    Aff1Form xdy(MPoly::zero(t), P("x"));
    EXPECT_FALSE(is_closed(xdy));
}

TEST(IsClosed, Omega8SeparatedAtSampledParameters) {
    Rng rng(29);
    auto t = xyz();
    int checked = 0;
    while (checked < 4) {
        Rational a = rng.rational(), b = rng.rational(true);
        Rational disc = b * b - a * b + 1;
        if (is_zero(disc)) continue;
        ++checked;
        std::map<std::string, Rational> bind{{"a", a}, {"b", b}};
        Aff1Form w8 = family_affine("omega8", bind);
        MPoly p = w8.a.num().lift_to(t);  // b*(...y...)
        MPoly q = w8.b.num().lift_to(t);  // (...x...)
        // omega8 / (p(y) q(x)) = dx/q(x) + dy/p(y), closed by separation
        Aff1Form sep(RationalFn(p, p * q), RationalFn(q, p * q));
        EXPECT_TRUE(is_closed(sep));
    }
}

TEST(Sl2Triplet, ClosedFormCase) {
    auto t = xyz();
    Aff1Form closed(RationalFn(MPoly::constant(t, Rational(1)), P("x*(1 + x)")),
                    RationalFn(MPoly::constant(t, Rational(-1)), P("y*(1 + y)")));
    EXPECT_TRUE(sl2_triplet_check(closed, std::nullopt, std::nullopt));
    Aff1Form not_closed(MPoly::zero(t), P("x"));
    EXPECT_FALSE(sl2_triplet_check(not_closed, std::nullopt, std::nullopt));
}

TEST(Sl2Triplet, RiccatiSymbolicCoefficients) {
    // a, b, c polynomials in x with opaque coefficient parameters
    auto t = make_table({"x", "y", "z"}, {"p0", "p1", "p2", "q0", "q1", "r0", "r1"});
    RationalFn a = RationalFn::of(parse_poly("p0 + p1*x + p2*x^2", t));
    RationalFn b = RationalFn::of(parse_poly("q0 + q1*x", t));
    RationalFn c = RationalFn::of(parse_poly("r0 + r1*x", t));
    RiccatiTriplet trip = riccati_triplet(a, b, c);
    EXPECT_TRUE(sl2_triplet_check(trip.theta0, trip.theta1, trip.theta2));
}

TEST(Sl2Triplet, RiccatiExamples) {
    auto t = xyz();
    RationalFn zero = RationalFn::zero(t);
    RationalFn one = RationalFn::of(MPoly::constant(t, Rational(1)));
    // a=b=0, c=1: theta0 = dy - dx, theta1 = theta2 = 0
    RiccatiTriplet t1 = riccati_triplet(zero, zero, one);
    EXPECT_EQ(t1.theta0.a, RationalFn::of(MPoly::constant(t, Rational(-1))));
    EXPECT_EQ(t1.theta0.b, one);
    EXPECT_FALSE(t1.theta1.has_value());
    EXPECT_FALSE(t1.theta2.has_value());
    // a=1, b=0, c=0: theta0 = dy - y^2 dx, theta1 = -2y dx, theta2 = -2 dx
    RiccatiTriplet t2 = riccati_triplet(one, zero, zero);
    EXPECT_EQ(t2.theta0.a, RationalFn::of(P("-1*y^2"))) << t2.theta0.to_string();
    ASSERT_TRUE(t2.theta1.has_value());
    EXPECT_EQ(t2.theta1->a, RationalFn::of(P("-2*y")));
    ASSERT_TRUE(t2.theta2.has_value());
    EXPECT_EQ(t2.theta2->a, RationalFn::of(MPoly::constant(t, Rational(-2))));
    EXPECT_TRUE(sl2_triplet_check(t2.theta0, t2.theta1, t2.theta2));
}

TEST(Sl2Triplet, RandomRiccatiProperty) {
    Rng rng(31);
    auto t = xyz();
    for (int i = 0; i < 20; ++i) {
        MPoly ap(t), bp(t), cp(t);
        for (int k = 0; k <= 2; ++k) {
            ap.add_term(Monomial::unit(3, 0, k), rng.rational());
            bp.add_term(Monomial::unit(3, 0, k), rng.rational());
            cp.add_term(Monomial::unit(3, 0, k), rng.rational());
        }
        if (ap.is_zero() && bp.is_zero() && cp.is_zero()) continue;
        RiccatiTriplet trip =
            riccati_triplet(RationalFn::of(ap), RationalFn::of(bp), RationalFn::of(cp));
        EXPECT_TRUE(sl2_triplet_check(trip.theta0, trip.theta1, trip.theta2));
    }
}

TEST(Integrability, FormWedgeDerivativeVanishes) {
    // automatic in two dimensions given the Euler identity
    Rng rng(37);
    auto t = xyz();
    for (int deg = 1; deg <= 3; ++deg)
        for (int i = 0; i < 6; ++i)
            EXPECT_TRUE(wedge_with_derivative(random_euler_form(rng, t, deg)).is_zero());
}

TEST(RationalFn, CrossMultiplicationEquality) {
    auto t = xyz();
    RationalFn half_x(P("x"), MPoly::constant(t, Rational(2)));
    RationalFn also(P("2*x"), MPoly::constant(t, Rational(4)));
    EXPECT_EQ(half_x, also);
    EXPECT_THROW(RationalFn(P("x"), MPoly::zero(t)), std::domain_error);
}
