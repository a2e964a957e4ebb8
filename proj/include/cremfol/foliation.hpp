#ifndef CREMFOL_FOLIATION_HPP
#define CREMFOL_FOLIATION_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "forms.hpp"
#include "gcd.hpp"
#include "ratmap.hpp"

namespace cremfol {

/// Point of the projective plane with rational homogeneous coordinates;
/// equality up to a nonzero scalar.
struct ProjPoint {
    Rational x, y, z;

    ProjPoint(Rational x_, Rational y_, Rational z_)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
        if (is_zero(x) && is_zero(y) && is_zero(z))
            throw std::invalid_argument("projective point needs a nonzero coordinate");
    }

    bool operator==(const ProjPoint& o) const {
        return is_zero(x * o.y - y * o.x) && is_zero(x * o.z - z * o.x) &&
               is_zero(y * o.z - z * o.y);
    }

    std::string to_string() const {
        return "(" + cremfol::to_string(x) + " : " + cremfol::to_string(y) + " : " +
               cremfol::to_string(z) + ")";
    }
};

/// Foliation of the projective plane: a reduced defining 1-form together
/// with its degree (coefficient degree minus one, the single source of truth
/// for every degree statement of the calculus).
class Foliation {
public:
    /// Divides the common factor out of ω and records the degree.  Numeric
    /// coefficients get the full gcd reduction; parametric ones are reduced
    /// by monomial content only and the partial reduction is flagged.
    static Foliation from_form(const Proj1Form& w) {
        Proj1Form reduced = w;
        bool changed = false;
        Monomial content = w.geometric_content();
        if (!content.is_one()) {
            reduced = reduced.divide_by_monomial(content);
            changed = true;
        }
        bool fully = reduced.is_numeric();
        if (fully) {
            MPoly g = gcd_homogeneous(gcd_homogeneous(reduced.A(), reduced.B()), reduced.C());
            if (!g.is_constant()) {
                reduced = Proj1Form(*reduced.A().trial_divide(g), *reduced.B().trial_divide(g),
                                    *reduced.C().trial_divide(g));
                changed = true;
            }
        }
        return Foliation(std::move(reduced), changed, fully);
    }

    const Proj1Form& form() const { return form_; }
    long degree() const { return form_.coefficient_degree() - 1; }
    bool reduction_performed() const { return reduction_performed_; }
    bool fully_reduced() const { return fully_reduced_; }
    const SymbolTablePtr& table() const { return form_.table(); }

private:
    Foliation(Proj1Form form, bool reduced_flag, bool fully)
        : form_(std::move(form)), reduction_performed_(reduced_flag), fully_reduced_(fully) {}

    Proj1Form form_;
    bool reduction_performed_;
    bool fully_reduced_;
};

/// Degree of a generic pullback: (d+1)k + k − 2.
inline long generic_pullback_degree(long d, long k) {
    if (k < 1) throw std::invalid_argument("map degree must be at least 1");
    return (d + 1) * k + k - 2;
}

namespace detail {

/// Parametric forms cannot be gcd-reduced; a random parameter specialization
/// certifies that the monomial reduction already produced a coprime form.
inline void check_form_fully_reduced(const Proj1Form& w, const char* what) {
    if (w.is_numeric()) return;
    auto t = w.table();
    std::mt19937_64 rng(0xf0110f0aULL);
    std::uniform_int_distribution<int> dist(2, 97);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::map<SymbolId, Rational> values;
        for (SymbolId i = t->geometric_count(); i < t->size(); ++i)
            values.emplace(i, Rational(dist(rng)));
        MPoly a = w.A().substitute_values(values);
        MPoly b = w.B().substitute_values(values);
        MPoly c = w.C().substitute_values(values);
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        MPoly g = gcd_homogeneous(gcd_homogeneous(a, b), c);
        if (!g.is_constant())
            throw std::domain_error(std::string(what) +
                                    ": parametric reduction would need non-monomial gcd");
        return;
    }
    throw std::domain_error(std::string(what) + ": parameter specialization degenerated");
}

}  // namespace detail

/// Reduced pullback of a foliation.  Parametric inputs are accepted only
/// when the reduction is purely monomial (detected by specialization).
inline Foliation pullback_foliation(const RatMap& phi, const Foliation& f) {
    Proj1Form raw = pullback_raw(phi, f.form());
    Foliation out = Foliation::from_form(raw);
    if (!out.fully_reduced()) detail::check_form_fully_reduced(out.form(), "pullback_foliation");
    return out;
}

/// Degrees along the prefix pullbacks of a factorization word, in pullback
/// order: the first entry is deg F, one entry follows each letter of degree
/// at least two, and trailing automorphisms are absorbed into the last
/// entry (they never change the degree).
inline std::vector<long> degree_sequence(const MapWord& word, const Foliation& f) {
    if (word.empty()) throw std::invalid_argument("empty word");
    std::vector<long> out{f.degree()};
    Foliation current = f;
    for (std::size_t i = 0; i < word.size(); ++i) {
        current = pullback_foliation(word[i], current);
        if (word[i].degree() >= 2) out.push_back(current.degree());
    }
    if (out.size() == 1 || word.back().degree() == 1) {
        // final automorphisms keep the degree; make the invariant visible
        if (out.back() != current.degree())
            throw std::logic_error("automorphism pullback changed the degree");
    }
    return out;
}

inline bool is_singular_at(const Foliation& f, const ProjPoint& p) {
    auto t = f.table();
    std::map<SymbolId, Rational> at{{SymbolId{0}, p.x}, {SymbolId{1}, p.y}, {SymbolId{2}, p.z}};
    return f.form().A().substitute_values(at).is_zero() &&
           f.form().B().substitute_values(at).is_zero() &&
           f.form().C().substitute_values(at).is_zero();
}

/// Radial singularity test: after translating p to the origin of an affine
/// chart, the linear part of the dual vector field (b1, −a1) must be a
/// nonzero scalar matrix.  A scalar linear part is preserved by every linear
/// chart change, so any chart containing p gives the same answer.
inline bool is_radial_at(const Foliation& f, const ProjPoint& p) {
    if (!is_singular_at(f, p)) throw std::invalid_argument("point is not singular");
    auto t = f.table();
    std::array<Rational, 3> coords{p.x, p.y, p.z};
    std::array<const MPoly*, 3> comp{&f.form().A(), &f.form().B(), &f.form().C()};
    SymbolId chart = !is_zero(p.z) ? 2 : (!is_zero(p.y) ? 1 : 0);
    SymbolId vi = (chart == 0) ? 1 : 0;
    SymbolId vj = (chart == 2) ? 1 : 2;

    std::map<SymbolId, MPoly> restrict_chart{{chart, MPoly::constant(t, Rational(1))}};
    MPoly a = comp[vi]->substitute(restrict_chart);
    MPoly b = comp[vj]->substitute(restrict_chart);

    Rational pi = coords[vi] / coords[chart];
    Rational pj = coords[vj] / coords[chart];
    std::map<SymbolId, MPoly> shift{{vi, MPoly::variable(t, vi) + MPoly::constant(t, pi)},
                                    {vj, MPoly::variable(t, vj) + MPoly::constant(t, pj)}};
    a = a.substitute(shift);
    b = b.substitute(shift);

    std::map<SymbolId, Rational> origin{{vi, Rational(0)}, {vj, Rational(0)}};
    auto linear_coeff = [&](const MPoly& g, SymbolId v) {
        return g.derivative(v).substitute_values(origin);
    };
    MPoly ai = linear_coeff(a, vi);
    MPoly aj = linear_coeff(a, vj);
    MPoly bi = linear_coeff(b, vi);
    MPoly bj = linear_coeff(b, vj);
    // dual field (b1, -a1): scalar matrix iff b_i = -a_j != 0, b_j = 0, a_i = 0
    return ai.is_zero() && bj.is_zero() && (bi + aj).is_zero() && !aj.is_zero();
}

/// True iff the two forms define the same foliation: ω ∧ η = 0.
inline bool proportional(const Proj1Form& w, const Proj1Form& e) {
    return wedge11(w, e).is_zero();
}

/// C is invariant iff C divides every component of ω ∧ dC with
/// dC = (∂C/∂X, ∂C/∂Y, ∂C/∂Z).
inline bool curve_invariant(const Foliation& f, const MPoly& curve) {
    if (curve.is_zero()) throw std::invalid_argument("zero curve");
    Proj2Form w = wedge11_raw(f.form().A(), f.form().B(), f.form().C(),
                              curve.derivative(SymbolId{0}), curve.derivative(SymbolId{1}),
                              curve.derivative(SymbolId{2}));
    for (const MPoly* comp : {&w.P, &w.Q, &w.R})
        if (!comp->is_zero() && !comp->trial_divide(curve)) return false;
    return true;
}

/// H = num/den is a rational first integral iff
/// (den·dNum − num·dDen) ∧ ω = 0 in the affine chart.
inline bool rational_first_integral_check(const Foliation& f, const RationalFn& h) {
    if (h.num().is_constant() && h.den().is_constant())
        throw std::invalid_argument("constant candidate first integral");
    Aff1Form w = dehomogenize(f.form());
    MPoly dx_part = h.den() * h.num().derivative(SymbolId{0}) - h.num() * h.den().derivative(SymbolId{0});
    MPoly dy_part = h.den() * h.num().derivative(SymbolId{1}) - h.num() * h.den().derivative(SymbolId{1});
    if (dx_part.is_zero() && dy_part.is_zero()) return false;
    Aff1Form dh(dx_part, dy_part);
    return wedge_affine(dh, w).is_zero();
}

/// R·exp(S) is a first integral iff (dR + R·dS) ∧ ω = 0.
inline bool darboux_first_integral_check(const Foliation& f, const RationalFn& r,
                                         const RationalFn& s) {
    if (r.is_zero()) throw std::invalid_argument("zero Darboux factor");
    Aff1Form w = dehomogenize(f.form());
    RationalFn cx = r.derivative(SymbolId{0}) + r * s.derivative(SymbolId{0});
    RationalFn cy = r.derivative(SymbolId{1}) + r * s.derivative(SymbolId{1});
    if (cx.is_zero() && cy.is_zero()) return false;
    return wedge_affine(Aff1Form(cx, cy), w).is_zero();
}

// ---- rational singular points with a completeness certificate -------------

struct SingularPoints {
    std::vector<ProjPoint> points;
    bool complete;  // true when the whole singular locus was certified rational
};

namespace detail {

/// Rational roots of a univariate polynomial (over the given variable) with
/// a certificate: complete=true means all complex roots are rational.
struct RationalRoots {
    std::vector<Rational> roots;
    bool complete;
};

inline RationalRoots rational_roots_univariate(MPoly p, SymbolId v) {
    RationalRoots out{{}, true};
    if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
    // strip powers of v (root zero)
    Monomial content = p.content_monomial({v});
    if (!content.is_one()) {
        out.roots.push_back(Rational(0));
        p = p.divide_by_monomial(content);
    }
    auto t = p.table();
    // deflate by candidate roots found via the rational root theorem on the
    // integer-cleared polynomial
    while (p.degree_in(v) >= 1) {
        long deg = p.degree_in(v);
        // clear denominators
        mpz_class lcm_den(1);
        for (const auto& [m, c] : p.terms()) {
            mpz_class den = c.get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        MPoly zp = p * Rational(lcm_den);
        mpz_class lead = zp.coefficient_in(v, (std::uint32_t)deg).constant_value().get_num();
        mpz_class tail = zp.coefficient_in(v, 0).constant_value().get_num();
        if (tail == 0) throw std::logic_error("zero constant term after stripping");
        auto divisors = [](mpz_class n) {
            n = abs(n);
            std::vector<mpz_class> ds;
            mpz_class i(1);
            for (; i * i <= n; ++i) {
                if (n % i == 0) {
                    ds.push_back(i);
                    ds.push_back(n / i);
                }
                if (ds.size() > 4096) break;  // give up on huge constant terms
            }
            if (i * i <= n) return std::vector<mpz_class>{};
            return ds;
        };
        std::vector<mpz_class> num_div = divisors(tail);
        std::vector<mpz_class> den_div = divisors(lead);
        if (num_div.empty() || den_div.empty()) {
            out.complete = false;
            return out;
        }
        bool found = false;
        for (const auto& nu : num_div) {
            for (const auto& de : den_div) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    Rational cand(sign > 0 ? nu : -nu, de);
                    cand.canonicalize();
                    std::map<SymbolId, Rational> at{{v, cand}};
                    if (p.substitute_values(at).is_zero()) {
                        out.roots.push_back(cand);
                        MPoly lin = MPoly::variable(t, v) - MPoly::constant(t, cand);
                        while (true) {
                            auto q = p.trial_divide(lin);
                            if (!q) break;
                            p = *q;
                        }
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            out.complete = (deg == 0);
            if (deg > 0) out.complete = false;
            return out;
        }
    }
    return out;
}

inline void push_unique(std::vector<ProjPoint>& pts, const ProjPoint& p) {
    for (const auto& q : pts)
        if (q == p) return;
    pts.push_back(p);
}

}  // namespace detail

/// All singular points with rational coordinates, found by chartwise
/// resultant elimination and rational-root extraction.  The completeness
/// flag certifies that the eliminants split over Q, in which case the list
/// provably exhausts the singular locus.
inline SingularPoints singular_points_rational(const Foliation& f) {
    if (!f.form().is_numeric())
        throw std::invalid_argument("singular_points_rational needs numeric coefficients");
    auto t = f.table();
    SymbolId X{0}, Y{1}, Z{2};
    SingularPoints out{{}, true};

    // chart z = 1: the Euler identity makes C redundant there
    std::map<SymbolId, MPoly> z1{{Z, MPoly::constant(t, Rational(1))}};
    MPoly fx = f.form().A().substitute(z1);
    MPoly fy = f.form().B().substitute(z1);
    if (fx.is_zero() && fy.is_zero())
        throw std::domain_error("non-reduced or degenerate form");
    if (fx.is_zero() || fy.is_zero()) {
        // common zeros = zeros of the other polynomial: a curve unless constant
        const MPoly& g = fx.is_zero() ? fy : fx;
        if (!g.is_constant()) throw std::domain_error("non-reduced or degenerate form");
    } else if (!fx.depends_on(Y) && !fy.depends_on(Y)) {
        MPoly g = gcd(fx, fy);
        if (!g.is_constant()) throw std::domain_error("non-reduced or degenerate form");
        // no common zeros in the chart otherwise (coprime univariate in x)
    } else {
        MPoly elim = (fx.depends_on(Y) && fy.depends_on(Y)) ? resultant(fx, fy, Y)
                                                            : (fx.depends_on(Y) ? fy : fx);
        if (elim.is_zero()) throw std::domain_error("non-reduced or degenerate form");
        if (!elim.is_constant() && elim.depends_on(X)) {
            auto xroots = detail::rational_roots_univariate(elim, X);
            if (!xroots.complete) out.complete = false;
            for (const Rational& x0 : xroots.roots) {
                std::map<SymbolId, Rational> atx{{X, x0}};
                MPoly gx = fx.substitute_values(atx);
                MPoly gy = fy.substitute_values(atx);
                if (gx.is_zero() && gy.is_zero())
                    throw std::domain_error("non-reduced or degenerate form");
                MPoly g = gx.is_zero() ? gy : (gy.is_zero() ? gx : gcd(gx, gy));
                if (g.is_constant()) continue;  // spurious eliminant root
                auto yroots = detail::rational_roots_univariate(g, Y);
                if (!yroots.complete) out.complete = false;
                for (const Rational& y0 : yroots.roots) {
                    std::map<SymbolId, Rational> at{{X, x0}, {Y, y0}};
                    if (fx.substitute_values(at).is_zero() && fy.substitute_values(at).is_zero())
                        detail::push_unique(out.points, ProjPoint(x0, y0, Rational(1)));
                }
            }
        } else if (!elim.is_constant()) {
            out.complete = false;  // eliminant degenerate in an unexpected way
        }
    }

    // line z = 0, y = 1
    std::map<SymbolId, MPoly> z0y1{{Z, MPoly::zero(t)}, {Y, MPoly::constant(t, Rational(1))}};
    std::vector<MPoly> restr;
    for (const MPoly* comp : {&f.form().A(), &f.form().B(), &f.form().C()}) {
        MPoly r = comp->substitute(z0y1);
        if (!r.is_zero()) restr.push_back(r);
    }
    if (restr.empty()) throw std::domain_error("non-reduced or degenerate form");
    MPoly g = restr[0];
    for (std::size_t i = 1; i < restr.size() && !g.is_constant(); ++i) g = gcd(g, restr[i]);
    if (!g.is_constant()) {
        if (!g.depends_on(X)) throw std::domain_error("non-reduced or degenerate form");
        auto roots = detail::rational_roots_univariate(g, X);
        if (!roots.complete) out.complete = false;
        for (const Rational& x0 : roots.roots)
            detail::push_unique(out.points, ProjPoint(x0, Rational(1), Rational(0)));
    }

    // the remaining point (1 : 0 : 0)
    {
        std::map<SymbolId, Rational> at{{X, Rational(1)}, {Y, Rational(0)}, {Z, Rational(0)}};
        bool singular = f.form().A().substitute_values(at).is_zero() &&
                        f.form().B().substitute_values(at).is_zero() &&
                        f.form().C().substitute_values(at).is_zero();
        if (singular) detail::push_unique(out.points, ProjPoint(Rational(1), Rational(0), Rational(0)));
    }
    return out;
}

}  // namespace cremfol

#endif
