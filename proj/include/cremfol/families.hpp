#ifndef CREMFOL_FAMILIES_HPP
#define CREMFOL_FAMILIES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "foliation.hpp"
#include "forms.hpp"
#include "linalg.hpp"
#include "parser.hpp"
#include "ratmap.hpp"

namespace cremfol {

// ---- symbol universes ------------------------------------------------------

inline const std::vector<std::string>& qform_parameters() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const char* block : {"a", "b", "c"})
            for (int i = 0; i <= 5; ++i) out.push_back(std::string(block) + std::to_string(i));
        return out;
    }();
    return names;
}

inline SymbolTablePtr qform_table() {
    static const SymbolTablePtr t = make_table({"x", "y", "z"}, qform_parameters());
    return t;
}

/// Total order on polynomials used to keep obstruction sets deterministic.
inline int poly_compare(const MPoly& p, const MPoly& q) {
    auto ip = p.terms().begin(), iq = q.terms().begin();
    for (; ip != p.terms().end() && iq != q.terms().end(); ++ip, ++iq) {
        int mc = Monomial::cmp_grlex(ip->first, iq->first);
        if (mc != 0) return -mc;  // larger monomial sorts first
        int cc = cmp(ip->second, iq->second);
        if (cc != 0) return cc < 0 ? 1 : -1;
    }
    if (ip != p.terms().end()) return -1;
    if (iq != q.terms().end()) return 1;
    return 0;
}

/// Finite set of nonzero parameter polynomials whose common vanishing
/// characterizes a divisibility or invariance condition.  Members are
/// normalized to leading coefficient 1, deduplicated and kept in a
/// deterministic order.
class ObstructionSet {
public:
    ObstructionSet() = default;

    explicit ObstructionSet(std::vector<MPoly> members) {
        for (auto& m : members) {
            if (m.is_zero()) continue;
            members_.push_back(m / m.leading_coefficient());
        }
        std::sort(members_.begin(), members_.end(),
                  [](const MPoly& a, const MPoly& b) { return poly_compare(a, b) < 0; });
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const std::vector<MPoly>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    /// Extract the coefficient matrix over the parameter symbols; throws when
    /// a member is not homogeneous-linear in the parameters.
    QMatrix linear_matrix() const {
        if (members_.empty()) return {};
        auto t = members_.front().table();
        std::size_t geo = t->geometric_count();
        std::size_t nparams = t->size() - geo;
        QMatrix rows;
        for (const MPoly& m : members_) {
            QVector row(nparams, Rational(0));
            for (const auto& [mono, c] : m.terms()) {
                if (mono.total_degree() != 1) throw std::domain_error("nonlinear obstruction member");
                bool placed = false;
                for (std::size_t i = geo; i < t->size(); ++i) {
                    if (mono.exp(i) == 1) {
                        row[i - geo] = c;
                        placed = true;
                        break;
                    }
                }
                if (!placed) throw std::domain_error("obstruction member involves geometric variables");
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

private:
    std::vector<MPoly> members_;
};

inline bool span_equal(const ObstructionSet& s1, const ObstructionSet& s2) {
    return same_row_space(s1.linear_matrix(), s2.linear_matrix());
}

// ---- the 18-parameter quadratic normal form --------------------------------

/// ω = q1·yz(dy/y − dz/z) + q2·xz(dz/z − dx/x) + q3·xy(dx/x − dy/y) with
/// general quadratic q1, q2, q3; Euler-null identically in the parameters.
inline Proj1Form general_quadratic_form(const SymbolTablePtr& t = qform_table()) {
    MPoly x = MPoly::variable(t, "x"), y = MPoly::variable(t, "y"), z = MPoly::variable(t, "z");
    auto quad = [&](const std::string& block) {
        MPoly p0 = MPoly::variable(t, block + "0"), p1 = MPoly::variable(t, block + "1"),
              p2 = MPoly::variable(t, block + "2"), p3 = MPoly::variable(t, block + "3"),
              p4 = MPoly::variable(t, block + "4"), p5 = MPoly::variable(t, block + "5");
        return p0 * x * x + p1 * y * y + p2 * z * z + p3 * x * y + p4 * x * z + p5 * y * z;
    };
    MPoly q1 = quad("a"), q2 = quad("b"), q3 = quad("c");
    return Proj1Form(y * q3 - z * q2, z * q1 - x * q3, x * q2 - y * q1);
}

/// Substitutes a condition list (param -> expression in the parameters) into
/// the coefficients of a form, e.g. "b3 = c4".
inline Proj1Form apply_conditions(const Proj1Form& w,
                                  const std::map<std::string, std::string>& conditions) {
    auto t = w.table();
    std::map<SymbolId, MPoly> bind;
    for (const auto& [param, expr] : conditions) bind.emplace(t->id(param), parse_poly(expr, t));
    return Proj1Form(w.A().substitute(bind), w.B().substitute(bind), w.C().substitute(bind));
}

// ---- obstruction calculus ---------------------------------------------------

/// Parameter polynomials whose common vanishing is equivalent to M dividing
/// every coefficient of φ*ω.
inline ObstructionSet monomial_div_obstructions(const RatMap& phi, const Proj1Form& w,
                                                const Monomial& M) {
    Proj1Form raw = pullback_raw(phi, w);
    auto geo = w.table()->geometric_ids();
    std::vector<MPoly> members;
    for (const MPoly* comp : {&raw.A(), &raw.B(), &raw.C()}) {
        for (auto& [mono, cofactor] : comp->collect_by(geo))
            if (!M.divides(mono)) members.push_back(cofactor);
    }
    return ObstructionSet(std::move(members));
}

/// Divisibility obstructions for a non-monomial divisor with numeric
/// coefficients: the parameter coefficients of the division remainders of
/// φ*ω by P.  A single polynomial is a Groebner basis of its ideal, so a
/// zero remainder is equivalent to exact divisibility.
inline ObstructionSet poly_div_obstructions(const RatMap& phi, const Proj1Form& w,
                                            const MPoly& P) {
    if (!P.is_numeric())
        throw std::invalid_argument("poly_div_obstructions: divisor must be numeric");
    if (P.is_zero()) throw std::domain_error("zero divisor");
    Proj1Form raw = pullback_raw(phi, w);
    auto geo = w.table()->geometric_ids();
    std::vector<MPoly> members;
    const Monomial& plm = P.leading_monomial();
    const Rational& plc = P.leading_coefficient();
    for (const MPoly* comp : {&raw.A(), &raw.B(), &raw.C()}) {
        MPoly r = *comp;
        MPoly rem(w.table());
        while (!r.is_zero()) {
            const Monomial& rlm = r.leading_monomial();
            if (plm.divides(rlm.restricted_to(geo))) {
                MPoly t = MPoly::term(w.table(), rlm / plm, r.leading_coefficient() / plc);
                r -= t * P;
            } else {
                MPoly t = MPoly::term(w.table(), rlm, r.leading_coefficient());
                rem += t;
                r -= t;
            }
        }
        for (auto& [mono, cofactor] : rem.collect_by(geo)) members.push_back(cofactor);
    }
    return ObstructionSet(std::move(members));
}

/// Parameter coefficients of φ*ω ∧ ω; common vanishing ⇔ the foliation is
/// invariant under φ.
inline ObstructionSet invariance_obstructions(const RatMap& phi, const Proj1Form& w) {
    Proj2Form wedge = wedge11(pullback_raw(phi, w), w);
    auto geo = w.table()->geometric_ids();
    std::vector<MPoly> members;
    for (const MPoly* comp : {&wedge.P, &wedge.Q, &wedge.R})
        for (auto& [mono, cofactor] : comp->collect_by(geo)) members.push_back(cofactor);
    return ObstructionSet(std::move(members));
}

/// Monomial in the geometric variables from text such as "x^2*y*z".
inline Monomial parse_monomial(const std::string& text, const SymbolTablePtr& t) {
    MPoly p = parse_poly(text, t);
    if (p.term_count() != 1 || p.leading_coefficient() != 1)
        throw std::invalid_argument("not a monomial: " + text);
    return p.leading_monomial();
}

// ---- named families of the classification ---------------------------------

struct FamilySpec {
    std::string name;
    std::vector<std::string> parameters;
    std::string dx_coeff;
    std::string dy_coeff;
};

inline const std::vector<FamilySpec>& family_registry() {
    static const std::vector<FamilySpec> specs = {
        {"omega1",
         {"kappa", "epsilon", "beta", "delta", "alpha", "gamma"},
         "y*(kappa + epsilon*y)",
         "beta*x + delta*y + alpha*x^2 + gamma*x*y"},
        {"omega2",
         {"delta", "beta", "kappa", "alpha", "epsilon", "gamma"},
         "delta + beta*y + kappa*y^2",
         "alpha + epsilon*x + gamma*x^2"},
        {"omega3",
         {"kappa", "epsilon", "lambda", "beta", "delta", "gamma", "alpha"},
         "y*(kappa + epsilon*y + lambda*y^2)",
         "beta + kappa*x + delta*y + gamma*x*y + alpha*y^2 - lambda*x*y^2"},
        {"omega4",
         {"mu", "delta", "gamma", "epsilon", "alpha", "beta", "lambda", "kappa"},
         "y*(mu + delta*x + gamma*y + epsilon*x*y)",
         "alpha + beta*x + lambda*y + delta*x^2 + kappa*x*y - epsilon*x^2*y"},
        {"omega5",
         {"lambda", "gamma", "kappa", "epsilon", "beta", "delta", "alpha"},
         "lambda + gamma*y + kappa*x*y + epsilon*y^2",
         "beta + delta*x + alpha*x^2"},
        {"omega6",
         {"delta", "alpha", "epsilon", "theta", "beta", "kappa", "mu", "lambda", "xi"},
         "-1*delta*x + alpha*y - epsilon*x^2 + theta*x*y + beta*y^2 + kappa*x^2*y + mu*x*y^2 + "
         "lambda*y^3",
         "-3*alpha*x + xi*x^2 + 2*(delta - beta)*x*y + alpha*y^2 - kappa*x^3 - mu*x^2*y - "
         "lambda*x*y^2"},
        {"omega7",
         {"alpha", "gamma", "kappa"},
         "y*(alpha + gamma*y)",
         "-1*x*(alpha + kappa*x)"},
        {"omega8",
         {"a", "b"},
         "b*(b^2 - a*b + 1 + (a - 2*b)*y + y^2)",
         "(b^2 - a*b + 1) + (a*b - 2)*x + x^2"},
        {"omega9",
         {"alpha", "beta", "gamma", "epsilon", "kappa", "lambda"},
         "-1*alpha + beta*y + gamma*y^2",
         "epsilon - 3*beta*x + kappa*y - 3*gamma*x*y + lambda*y^2"},
        {"Omega1", {}, "x^2 - y^3", "x*y^2"},
        {"Omega2", {}, "x^2 - x*y - y^3", "x^2 + x*y^2"},
        {"Omega3", {}, "x*y - x^2*y - y^3", "x^3 + x*y^2"},
        {"Omega4", {}, "x^2 + x*y^2", "x + y^2 - x^2*y"},
        {"eta_prime", {}, "y*(1 + y)", "-1*x*(1 + x)"},
        {"sigma_inv1",
         {"alpha", "beta"},
         "y*(1 + y)",
         "beta*x + alpha*y + alpha*x^2 + beta*x*y"},
        {"sigma_inv2",
         {"alpha", "beta"},
         "y*(1 - y)",
         "beta*x - alpha*y + alpha*x^2 - beta*x*y"},
        {"sigma_inv3", {"alpha", "epsilon"}, "y", "alpha + epsilon*x + alpha*x^2"},
        // completions of the two garbled displays: the full rho-invariant
        // members of the y*z^3 and z^4 families (derived by the c = +-1
        // proportionality calculus; each is exactly invariant)
        {"rho_inv1",
         {"kappa", "alpha", "delta", "gamma"},
         "kappa*y*(1 - y^2)",
         "(alpha + kappa*x)*(1 + y^2) + (delta + gamma*x)*y"},
        {"rho_inv2",
         {"kappa", "epsilon", "beta"},
         "y*(kappa + epsilon*y + kappa*y^2)",
         "(beta + kappa*x)*(1 - y^2)"},
        {"rho_inv3",
         {"alpha", "beta", "gamma", "delta"},
         "y*(1 - y)*(gamma + delta*x)",
         "(1 + y)*(alpha + beta*x + delta*x^2)"},
        {"rho_inv4",
         {"alpha", "beta", "gamma", "delta"},
         "y*(1 + y)*(gamma + delta*x)",
         "(1 - y)*(alpha + beta*x + delta*x^2)"},
        {"rho_inv5",
         {"alpha", "beta", "delta"},
         "1 - y^2",
         "beta + delta*x + alpha*x^2"},
        {"tau_inv1",
         {"epsilon", "theta", "beta", "xi"},
         "-1*epsilon*x^2 + theta*x*y + beta*y^2 + epsilon*x*y^2 - (1/2*xi + theta)*y^3",
         "x*(xi*x - 2*beta*y - epsilon*x*y + (1/2*xi + theta)*y^2)"},
        {"tau_inv2",
         {"delta", "alpha", "kappa", "mu", "lambda"},
         "-1*delta*x + alpha*y + 3/2*delta*y^2 + kappa*x^2*y + mu*x*y^2 + lambda*y^3",
         "-1*(3*alpha*x + delta*x*y - alpha*y^2 + kappa*x^3 + mu*x^2*y + lambda*x*y^2)"},
    };
    return specs;
}

inline const FamilySpec& family_spec(const std::string& name) {
    for (const auto& spec : family_registry())
        if (spec.name == name) return spec;
    throw std::out_of_range("unknown family: " + name);
}

inline SymbolTablePtr family_table(const std::string& name) {
    return make_table({"x", "y", "z"}, family_spec(name).parameters);
}

/// The displayed affine 1-form of a named family, with optional rational
/// bindings for some or all of its parameters.
inline Aff1Form family_affine(const std::string& name, const SymbolTablePtr& table,
                              const std::map<std::string, Rational>& bindings = {}) {
    const FamilySpec& spec = family_spec(name);
    MPoly a = parse_poly(spec.dx_coeff, table);
    MPoly b = parse_poly(spec.dy_coeff, table);
    if (!bindings.empty()) {
        std::map<SymbolId, Rational> by_id;
        for (const auto& [param, value] : bindings) by_id.emplace(table->id(param), value);
        a = a.substitute_values(by_id);
        b = b.substitute_values(by_id);
    }
    return Aff1Form(std::move(a), std::move(b));
}

inline Aff1Form family_affine(const std::string& name,
                              const std::map<std::string, Rational>& bindings = {}) {
    return family_affine(name, family_table(name), bindings);
}

/// Homogenized (hence reduced) defining form of a named family.
inline Proj1Form family_form(const std::string& name, const SymbolTablePtr& table,
                             const std::map<std::string, Rational>& bindings = {}) {
    if (name == "eta") {
        // displayed directly in homogeneous coordinates:
        // yz(y+z)dx - xz(x+z)dy + xy(x-y)dz
        MPoly x = MPoly::variable(table, "x"), y = MPoly::variable(table, "y"),
              z = MPoly::variable(table, "z");
        return Proj1Form(y * z * (y + z), -(x * z * (x + z)), x * y * (x - y));
    }
    return homogenize_affine(family_affine(name, table, bindings));
}

inline Proj1Form family_form(const std::string& name,
                             const std::map<std::string, Rational>& bindings = {}) {
    if (name == "eta") return family_form(name, make_table({"x", "y", "z"}));
    return family_form(name, family_table(name), bindings);
}

// ---- linear parameter systems ----------------------------------------------

/// Solution basis of a linear obstruction system over the parameter symbols.
struct LinearSolution {
    std::vector<std::string> parameters;        // column order
    std::vector<QVector> basis;                 // nullspace basis vectors
};

inline LinearSolution solve_linear_obstructions(const ObstructionSet& s,
                                                const SymbolTablePtr& t) {
    LinearSolution out;
    std::size_t geo = t->geometric_count();
    for (SymbolId i = geo; i < t->size(); ++i) out.parameters.push_back(t->name(i));
    QMatrix rows = s.linear_matrix();
    out.basis = nullspace(rows, t->size() - geo);
    return out;
}

}  // namespace cremfol

#endif
