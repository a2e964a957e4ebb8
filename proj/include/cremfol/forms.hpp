#ifndef CREMFOL_FORMS_HPP
#define CREMFOL_FORMS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "gcd.hpp"
#include "mpoly.hpp"

namespace cremfol {

inline MPoly euler_contract_raw(const MPoly& A, const MPoly& B, const MPoly& C) {
    auto t = A.table();
    if (t->geometric_count() != 3)
        throw std::invalid_argument("projective forms need three geometric variables");
    return MPoly::variable(t, SymbolId{0}) * A + MPoly::variable(t, SymbolId{1}) * B +
           MPoly::variable(t, SymbolId{2}) * C;
}

/// Homogeneous 1-form A dX + B dY + C dZ on the projective plane.  The
/// constructor enforces the descent conditions: coefficients homogeneous of a
/// common degree in the geometric variables, not all zero, and the Euler
/// contraction X·A + Y·B + Z·C = 0.
class Proj1Form {
public:
    Proj1Form(MPoly A, MPoly B, MPoly C) : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
        require_compatible(A_.table(), B_.table());
        require_compatible(A_.table(), C_.table());
        if (A_.is_zero() && B_.is_zero() && C_.is_zero())
            throw std::invalid_argument("zero 1-form");
        auto geo = A_.table()->geometric_ids();
        std::optional<unsigned long> deg;
        for (const MPoly* p : {&A_, &B_, &C_}) {
            if (p->is_zero()) continue;
            auto d = p->homogeneous_degree(geo);
            if (!d) throw std::invalid_argument("coefficients not homogeneous");
            if (deg && *deg != *d) throw std::invalid_argument("coefficient degrees differ");
            deg = d;
        }
        degree_ = (long)*deg;
        if (!euler_contract_raw(A_, B_, C_).is_zero())
            throw std::invalid_argument("Euler contraction X*A + Y*B + Z*C does not vanish");
    }

    const MPoly& A() const { return A_; }
    const MPoly& B() const { return B_; }
    const MPoly& C() const { return C_; }
    const SymbolTablePtr& table() const { return A_.table(); }

    /// Common degree of the coefficients in the geometric variables.
    long coefficient_degree() const { return degree_; }

    bool is_numeric() const { return A_.is_numeric() && B_.is_numeric() && C_.is_numeric(); }

    Monomial geometric_content() const {
        auto geo = table()->geometric_ids();
        Monomial m(table()->size());
        bool first = true;
        for (const MPoly* p : {&A_, &B_, &C_}) {
            if (p->is_zero()) continue;
            Monomial c = p->content_monomial(geo);
            m = first ? c : Monomial::gcd(m, c);
            first = false;
        }
        return m;
    }

    Proj1Form divide_by_monomial(const Monomial& m) const {
        return Proj1Form(A_.divide_by_monomial(m), B_.divide_by_monomial(m),
                         C_.divide_by_monomial(m));
    }

    Proj1Form operator*(const Rational& s) const { return Proj1Form(A_ * s, B_ * s, C_ * s); }

    bool operator==(const Proj1Form& o) const { return A_ == o.A_ && B_ == o.B_ && C_ == o.C_; }

    std::string to_string() const {
        return "[" + A_.to_string() + ", " + B_.to_string() + ", " + C_.to_string() + "]";
    }

private:
    MPoly A_, B_, C_;
    long degree_ = 0;
};

inline MPoly euler_contract(const Proj1Form& w) {
    return euler_contract_raw(w.A(), w.B(), w.C());
}

/// 2-form P dY∧dZ + Q dZ∧dX + R dX∧dY; the zero 2-form is allowed.
struct Proj2Form {
    MPoly P, Q, R;
    bool is_zero() const { return P.is_zero() && Q.is_zero() && R.is_zero(); }
    std::string to_string() const {
        return "[" + P.to_string() + ", " + Q.to_string() + ", " + R.to_string() + "]";
    }
};

inline Proj2Form wedge11_raw(const MPoly& A1, const MPoly& B1, const MPoly& C1, const MPoly& A2,
                             const MPoly& B2, const MPoly& C2) {
    return Proj2Form{B1 * C2 - C1 * B2, C1 * A2 - A1 * C2, A1 * B2 - B1 * A2};
}

inline Proj2Form wedge11(const Proj1Form& w, const Proj1Form& e) {
    require_compatible(w.table(), e.table());
    return wedge11_raw(w.A(), w.B(), w.C(), e.A(), e.B(), e.C());
}

/// dω of a projective 1-form, components in the (dY∧dZ, dZ∧dX, dX∧dY) basis.
inline Proj2Form exterior_derivative(const Proj1Form& w) {
    return Proj2Form{w.C().derivative(SymbolId{1}) - w.B().derivative(SymbolId{2}),
                     w.A().derivative(SymbolId{2}) - w.C().derivative(SymbolId{0}),
                     w.B().derivative(SymbolId{0}) - w.A().derivative(SymbolId{1})};
}

/// Coefficient of dX∧dY∧dZ in ω∧dω.
inline MPoly wedge_with_derivative(const Proj1Form& w) {
    Proj2Form dw = exterior_derivative(w);
    return w.A() * dw.P + w.B() * dw.Q + w.C() * dw.R;
}

/// Quotient of polynomials with equality and zero tests by cross
/// multiplication; no reduction to lowest terms is ever required.
class RationalFn {
public:
    RationalFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        require_compatible(num_.table(), den_.table());
        if (den_.is_zero()) throw std::domain_error("zero denominator");
    }

    static RationalFn of(MPoly p) {
        auto t = p.table();
        return RationalFn(std::move(p), MPoly::constant(t, Rational(1)));
    }

    static RationalFn zero(const SymbolTablePtr& t) {
        return RationalFn(MPoly::zero(t), MPoly::constant(t, Rational(1)));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const SymbolTablePtr& table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& o) const {
        return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFn operator-(const RationalFn& o) const {
        return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFn operator*(const RationalFn& o) const {
        return RationalFn(num_ * o.num_, den_ * o.den_);
    }
    RationalFn operator-() const { return RationalFn(-num_, den_); }

    bool operator==(const RationalFn& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    /// Quotient-rule derivative: (n/d)' = (n'd - nd')/d².
    RationalFn derivative(SymbolId v) const {
        return RationalFn(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    MPoly num_, den_;
};

/// Affine 1-form a dx + b dy with rational-function coefficients in the chart
/// variables x, y.
struct Aff1Form {
    RationalFn a, b;

    Aff1Form(RationalFn a_, RationalFn b_) : a(std::move(a_)), b(std::move(b_)) {
        require_compatible(a.table(), b.table());
        if (a.is_zero() && b.is_zero()) throw std::invalid_argument("zero affine form");
    }

    Aff1Form(MPoly a_, MPoly b_) : Aff1Form(RationalFn::of(std::move(a_)), RationalFn::of(std::move(b_))) {}

    const SymbolTablePtr& table() const { return a.table(); }

    bool polynomial() const { return a.den().is_constant() && b.den().is_constant(); }

    std::string to_string() const { return "{" + a.to_string() + ", " + b.to_string() + "}"; }
};

/// The single dx∧dy coefficient of dω for ω = a dx + b dy: ∂b/∂x − ∂a/∂y.
inline RationalFn exterior_derivative_affine(const Aff1Form& w) {
    return w.b.derivative(SymbolId{0}) - w.a.derivative(SymbolId{1});
}

inline bool is_closed(const Aff1Form& w) { return exterior_derivative_affine(w).is_zero(); }

/// dx∧dy coefficient of ω∧η for affine 1-forms.
inline RationalFn wedge_affine(const Aff1Form& w, const Aff1Form& e) {
    return w.a * e.b - w.b * e.a;
}

/// Homogenization recipe: substitute x = X/Z, y = Y/Z with
/// dx = (Z dX − X dZ)/Z², clear the minimal power of Z, then strip the
/// monomial content, so the result is always reduced up to non-monomial
/// factors of the input.
inline Proj1Form homogenize_affine(const Aff1Form& w) {
    if (!w.polynomial())
        throw std::invalid_argument("homogenize_affine expects polynomial coefficients");
    MPoly a = w.a.num() / w.a.den().constant_value();
    MPoly b = w.b.num() / w.b.den().constant_value();
    auto t = a.table();
    if (t->geometric_count() != 3)
        throw std::invalid_argument("homogenize_affine needs x, y, z in the table");
    std::vector<SymbolId> geo = t->geometric_ids();
    long m = std::max(a.degree_over(geo), b.degree_over(geo));
    if (m < 0) throw std::invalid_argument("zero form");
    auto homogenize_to = [&](const MPoly& p) {
        MPoly out(t);
        for (const auto& [mono, c] : p.terms()) {
            Monomial lifted = mono;
            lifted.set_exp(SymbolId{2}, (std::uint32_t)(m - (long)mono.degree_over(geo)));
            out.add_term(lifted, c);
        }
        return out;
    };
    MPoly ah = homogenize_to(a);
    MPoly bh = homogenize_to(b);
    MPoly z = MPoly::variable(t, SymbolId{2});
    MPoly x = MPoly::variable(t, SymbolId{0});
    MPoly y = MPoly::variable(t, SymbolId{1});
    Proj1Form raw(z * ah, z * bh, -(x * ah + y * bh));
    return raw.divide_by_monomial(raw.geometric_content());
}

/// Restriction to the chart z = 1 (dx, dy coefficients).
inline Aff1Form dehomogenize(const Proj1Form& w) {
    auto t = w.table();
    std::map<SymbolId, MPoly> at_z1{{SymbolId{2}, MPoly::constant(t, Rational(1))}};
    return Aff1Form(w.A().substitute(at_z1), w.B().substitute(at_z1));
}

/// sl(2;C)-triplet identities: dθ₀ = θ₀∧θ₁, dθ₁ = θ₀∧θ₂, dθ₂ = θ₁∧θ₂.
/// The zero 1-form is admitted for θ₁, θ₂ (closed and transversely affine
/// cases); std::nullopt encodes it.
using MaybeAff1Form = std::optional<Aff1Form>;

inline RationalFn ext_d_or_zero(const MaybeAff1Form& w, const SymbolTablePtr& t) {
    return w ? exterior_derivative_affine(*w) : RationalFn::zero(t);
}

inline RationalFn wedge_or_zero(const MaybeAff1Form& w, const MaybeAff1Form& e,
                                const SymbolTablePtr& t) {
    if (!w || !e) return RationalFn::zero(t);
    return wedge_affine(*w, *e);
}

inline bool sl2_triplet_check(const Aff1Form& t0, const MaybeAff1Form& t1,
                              const MaybeAff1Form& t2) {
    auto t = t0.table();
    MaybeAff1Form m0 = t0;
    return exterior_derivative_affine(t0) == wedge_or_zero(m0, t1, t) &&
           ext_d_or_zero(t1, t) == wedge_or_zero(m0, t2, t) &&
           ext_d_or_zero(t2, t) == wedge_or_zero(t1, t2, t);
}

/// Triplet attached to the Riccati form dy − (a(x)y² + b(x)y + c(x)) dx.
struct RiccatiTriplet {
    Aff1Form theta0;
    MaybeAff1Form theta1, theta2;
};

inline RiccatiTriplet riccati_triplet(const RationalFn& a, const RationalFn& b,
                                      const RationalFn& c) {
    auto t = a.table();
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw std::invalid_argument("riccati_triplet: a, b, c all zero");
    for (const RationalFn* f : {&a, &b, &c})
        if (f->num().depends_on(SymbolId{1}) || f->den().depends_on(SymbolId{1}))
            throw std::invalid_argument("riccati_triplet: coefficients must depend on x only");
    RationalFn y = RationalFn::of(MPoly::variable(t, SymbolId{1}));
    RationalFn one = RationalFn::of(MPoly::constant(t, Rational(1)));
    RationalFn two = RationalFn::of(MPoly::constant(t, Rational(2)));
    Aff1Form theta0(-(a * y * y + b * y + c), one);
    MaybeAff1Form theta1, theta2;
    RationalFn t1a = -(two * a * y + b);
    if (!t1a.is_zero()) theta1 = Aff1Form(t1a, RationalFn::zero(t));
    RationalFn t2a = -(two * a);
    if (!t2a.is_zero()) theta2 = Aff1Form(t2a, RationalFn::zero(t));
    return RiccatiTriplet{theta0, theta1, theta2};
}

}  // namespace cremfol

#endif
