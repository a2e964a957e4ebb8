#include <gtest/gtest.h>

#include "cremfol/families.hpp"
#include "cremfol/parser.hpp"
#include "cremfol/ratmap.hpp"
#include "cremfol/sampling.hpp"

using namespace cremfol;

namespace {

SymbolTablePtr xyz() {
    static SymbolTablePtr t = make_table({"x", "y", "z"});
    return t;
}

MPoly P(const std::string& src, const SymbolTablePtr& t = xyz()) { return parse_poly(src, t); }

}  // namespace

TEST(MakeLinear, IdentityAndErrors) {
    QMatrix id{{Rational(1), Rational(0), Rational(0)},
               {Rational(0), Rational(1), Rational(0)},
               {Rational(0), Rational(0), Rational(1)}};
    EXPECT_TRUE(is_identity_proj(make_linear(xyz(), id)));
    QMatrix rank2{{Rational(1), Rational(0), Rational(0)},
                  {Rational(0), Rational(1), Rational(0)},
                  {Rational(1), Rational(1), Rational(0)}};
    EXPECT_THROW(make_linear(xyz(), rank2), std::domain_error);
}

TEST(MakeLinear, RhoTableEntry) {
    RatMap l2 = rho_letter(xyz(), 2);  // (y+z : z : x)
    EXPECT_EQ(l2.component(0), P("y + z"));
    EXPECT_EQ(l2.component(1), P("z"));
    EXPECT_EQ(l2.component(2), P("x"));
    EXPECT_EQ(l2.degree(), 1);
}

TEST(Builtins, DisplayedComponents) {
    EXPECT_EQ(sigma_map(xyz()).to_string(), "(y*z : x*z : x*y)");
    EXPECT_EQ(rho_map(xyz()).component(1), P("z^2"));
    EXPECT_EQ(tau_map(xyz()).component(2), P("y^2 - x*z"));
    EXPECT_EQ(psi_cubic_map(xyz()).component(0), P("x*z^2 + y^3"));
}

TEST(Builtins, PhiParameterExclusions) {
    EXPECT_NO_THROW(phi_ab_map(xyz(), Rational(0), Rational(1)));
    EXPECT_THROW(phi_ab_map(xyz(), Rational(2), Rational(1)), std::domain_error);
    // b^2 - a*b + 1 = 0 at (a, b) = (5/2, 2)
    EXPECT_THROW(phi_ab_map(xyz(), make_rational(5, 2), Rational(2)), std::domain_error);
}

TEST(ComposeReduce, Involutions) {
    RatMap s = sigma_map(xyz()), r = rho_map(xyz()), t = tau_map(xyz());
    EXPECT_TRUE(is_identity_proj(compose_reduce(s, s)));
    EXPECT_TRUE(is_identity_proj(compose_reduce(r, r)));
    EXPECT_TRUE(is_identity_proj(compose_reduce(t, t)));
}

TEST(ComposeReduce, LinearInverses) {
    Rng rng(41);
    for (int i = 0; i < 10; ++i) {
        RatMap l = rng.random_automorphism(xyz());
        EXPECT_TRUE(is_identity_proj(compose_reduce(l, inverse_linear(l))));
    }
}

TEST(IsIdentityProj, ScalarMultiples) {
    EXPECT_TRUE(is_identity_proj(parse_map_literal("(2*x : 2*y : 2*z)", xyz())));
    EXPECT_FALSE(is_identity_proj(parse_map_literal("(y : x : z)", xyz())));
}

TEST(Words, RhoFactorization) {
    EXPECT_TRUE(verify_word(rho_word(xyz()), rho_map(xyz())));
}

TEST(Words, TauFactorization) {
    EXPECT_TRUE(verify_word(tau_word(xyz()), tau_map(xyz())));
}

TEST(Words, PsiFactorization) {
    EXPECT_TRUE(verify_word(psi_word(xyz()), psi_cubic_map(xyz())));
}

TEST(Words, WrongTargetFails) {
    EXPECT_FALSE(verify_word(rho_word(xyz()), tau_map(xyz())));
}

TEST(PullbackRaw, IdentityAndDegrees) {
    Proj1Form w = parse_proj_form("[x^2*z - y^3, x*y^2, -1*x^3]", xyz());
    Proj1Form back = pullback_raw(identity_map(xyz()), w);
    EXPECT_EQ(back.A(), w.A());
    EXPECT_EQ(back.B(), w.B());
    EXPECT_EQ(back.C(), w.C());
    // degree m*k + k - 1 for m = 3, k = 2
    Proj1Form raw = pullback_raw(sigma_map(xyz()), w);
    EXPECT_EQ(raw.coefficient_degree(), 7);
    EXPECT_TRUE(euler_contract(raw).is_zero());
}

TEST(PullbackRaw, EulerPreservedOnRandomInputs) {
    Rng rng(43);
    for (int i = 0; i < 8; ++i) {
        Foliation f = sample_quadratic_foliation(rng);
        RatMap phi = rng.random_automorphism(xyz());
        EXPECT_TRUE(euler_contract(pullback_raw(phi, f.form())).is_zero());
        EXPECT_TRUE(euler_contract(pullback_raw(sigma_map(xyz()), f.form())).is_zero());
    }
}

TEST(PullbackRaw, Functoriality) {
    Rng rng(47);
    RatMap s = sigma_map(xyz());
    for (int i = 0; i < 5; ++i) {
        Foliation f = sample_quadratic_foliation(rng);
        RatMap l = rng.random_automorphism(xyz());
        RatMap composed = compose_reduce(l, s);  // l after s
        Foliation direct = Foliation::from_form(pullback_raw(composed, f.form()));
        // (l o s)* = s* o l*
        Foliation stepwise =
            Foliation::from_form(pullback_raw(s, Foliation::from_form(pullback_raw(l, f.form())).form()));
        EXPECT_TRUE(wedge11(direct.form(), stepwise.form()).is_zero());
        EXPECT_EQ(direct.degree(), stepwise.degree());
    }
}
