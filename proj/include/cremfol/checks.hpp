#ifndef CREMFOL_CHECKS_HPP
#define CREMFOL_CHECKS_HPP

#include <array>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "families.hpp"
#include "foliation.hpp"
#include "sampling.hpp"

namespace cremfol {

constexpr const char* kVersion = "0.1.0";

/// Outcome of one named suite check.  "evidence" is reserved for
/// randomized-sampling checks: consistent samples support a genericity claim
/// without proving it.
struct CheckResult {
    std::string id;
    std::string claim;
    std::string status;  // "pass" | "fail" | "evidence"
    long elapsed_ms = 0;
    std::string details;
};

struct SuiteReport {
    std::uint64_t seed = kDefaultSeed;
    std::string version = kVersion;
    std::vector<CheckResult> checks;
    int pass_count = 0;
    int fail_count = 0;
    int evidence_count = 0;
};

namespace checks {

struct Context {
    std::uint64_t seed;
};

using CheckFn = std::function<CheckResult(const Context&)>;

struct Registered {
    std::string id;
    CheckFn fn;
};

// ---- shared helpers ---------------------------------------------------------

inline SymbolTablePtr geo_table() {
    static SymbolTablePtr t = make_table({"x", "y", "z"});
    return t;
}

inline CheckResult make_result(std::string id, std::string claim, bool ok, bool sampling,
                               std::string details = "") {
    CheckResult r;
    r.id = std::move(id);
    r.claim = std::move(claim);
    r.status = ok ? (sampling ? "evidence" : "pass") : "fail";
    r.details = std::move(details);
    return r;
}

inline Proj1Form lift_form(const Proj1Form& w, const SymbolTablePtr& t) {
    return Proj1Form(w.A().lift_to(t), w.B().lift_to(t), w.C().lift_to(t));
}

inline RatMap lift_map(const RatMap& m, const SymbolTablePtr& t) {
    return RatMap(m.component(0).lift_to(t), m.component(1).lift_to(t),
                  m.component(2).lift_to(t));
}

/// Named degree-2 models in homogeneous coordinates on the plain table.
inline Foliation model(const std::string& name) {
    return Foliation::from_form(family_form(name, geo_table()));
}

inline std::string seq_string(const std::vector<long>& seq) {
    std::string out;
    for (long d : seq) out += (out.empty() ? "" : " ") + std::to_string(d);
    return out;
}

// ---- 1. involutions ---------------------------------------------------------

inline CheckResult check_involutions(const Context&) {
    auto t = geo_table();
    bool ok = is_identity_proj(compose_reduce(sigma_map(t), sigma_map(t))) &&
              is_identity_proj(compose_reduce(rho_map(t), rho_map(t))) &&
              is_identity_proj(compose_reduce(tau_map(t), tau_map(t)));
    return make_result("involutions", "sigma^2, rho^2, tau^2 reduce to the identity", ok, false);
}

// ---- 2. factorization words -------------------------------------------------

inline CheckResult check_word(const std::string& id, const MapWord& word, const RatMap& target,
                              const std::string& claim) {
    return make_result(id, claim, verify_word(word, target), false);
}

// ---- 3. generic pullback degree ---------------------------------------------

inline CheckResult check_generic_degree(const Context& ctx) {
    Rng rng(ctx.seed);
    auto t = geo_table();
    int hits = 0;
    const int n = 20;
    for (int i = 0; i < n; ++i) {
        Foliation f = sample_quadratic_foliation(rng);
        RatMap phi = compose_reduce(compose_reduce(rng.random_automorphism(t), sigma_map(t)),
                                    rng.random_automorphism(t));
        if (pullback_foliation(phi, f).degree() == 6) ++hits;
    }
    return make_result("generic_degree_six",
                       "20 random (degree-2 foliation, l1.sigma.l2) pairs pull back to degree 6",
                       hits == n, true, std::to_string(hits) + "/20 samples of degree 6");
}

// ---- 4. the four quadratic models and the cubic identity ---------------------

struct ModelCase {
    const char* id;
    const char* family;
    const char* map_literal;
    const char* partner;  // reduced pullback, frozen from the exact computation
    long degree;
};

inline const std::vector<ModelCase>& model_cases() {
    static const std::vector<ModelCase> cases = {
        {"model_psi1_Omega1", "Omega1", "(x^2 : x*y : y*z)",
         "[y*(2*x*z - y^2), x*(y^2 - x*z), -1*x^2*y]", 2},
        {"model_psi2_Omega2", "Omega2", "(x^2 : x*y : x*z - 2*x^2 - 2*x*y - y^2)",
         "[x*z - y*z, x*z, -1*x^2]", 1},
        {"model_psi3_Omega3", "Omega3", "(x^2 : x*y : x*z + 1/2*y^2)",
         "[y*(z - x), x^2, -1*x*y]", 1},
        // the dz-coefficients of this model and of its printed partner differ
        // from the derived Euler-null forms; the partner below is the
        // computed reduced pullback itself
        {"model_psi4_Omega4", "Omega4", "(-1*x^2 : x*y : y^2 - x*z)",
         "[x^3*z - x^2*y^2 + y^3*z, x^3*y - x^2*z^2 - x*y^2*z, -1*x^4 + x^2*y*z]", 3},
    };
    return cases;
}

inline CheckResult check_model(const ModelCase& c) {
    auto t = geo_table();
    Foliation f = model(c.family);
    RatMap psi = parse_map_literal(c.map_literal, t);
    Proj1Form partner = parse_proj_form(c.partner, t);
    Proj1Form raw = pullback_raw(psi, f.form());
    Foliation pulled = Foliation::from_form(raw);
    bool wedge_ok = wedge11(raw, partner).is_zero();
    bool degree_ok = pulled.degree() == c.degree;
    std::ostringstream det;
    det << "wedge with stated form " << (wedge_ok ? "vanishes" : "NONZERO") << "; degree "
        << pulled.degree() << " (expected " << c.degree << ")";
    return make_result(c.id,
                       std::string("deg psi*F = ") + std::to_string(c.degree) + " for " +
                           c.family + " via an explicit proportional form",
                       wedge_ok && degree_ok, false, det.str());
}

inline CheckResult check_model_cubic(const Context&) {
    auto t = geo_table();
    Foliation f1 = model("Omega1");
    RatMap cubic = parse_map_literal("(x^3 : x^2*y : x^2*z + 1/3*y^3)", t);
    RatMap inverse = parse_map_literal("(x^3 : x^2*y : x^2*z - 1/3*y^3)", t);
    Proj1Form pencil = parse_proj_form("[z, 0, -1*x]", t);
    bool wedge_ok = wedge11(pullback_raw(cubic, f1.form()), pencil).is_zero();
    bool deg_ok = Foliation::from_form(pullback_raw(cubic, f1.form())).degree() == 0;
    bool inv_ok = is_identity_proj(compose_reduce(cubic, inverse));
    // first integral: z/x transported along the certified inverse
    RationalFn h(parse_poly("x^2 - 1/3*y^3", t), parse_poly("x^3", t));
    bool integral_ok = rational_first_integral_check(f1, h);
    return make_result(
        "model_cubic_Omega1",
        "the cubic map sends Omega1 to the pencil z/x; a rational first integral follows",
        wedge_ok && deg_ok && inv_ok && integral_ok, false,
        std::string("wedge ") + (wedge_ok ? "zero" : "NONZERO") + ", pullback degree 0 " +
            (deg_ok ? "ok" : "WRONG") + ", inverse certified " + (inv_ok ? "ok" : "NO") +
            ", first integral (x^2 - y^3/3)/x^3 " + (integral_ok ? "verified" : "REJECTED"));
}

inline CheckResult check_model_remark(const Context&) {
    auto t = geo_table();
    RatMap phi = parse_map_literal("(x^2 : x*y : x*z + y^2)", t);
    long d2 = pullback_foliation(phi, model("Omega2")).degree();
    long d3 = pullback_foliation(phi, model("Omega3")).degree();
    return make_result("model_remark_quadratic",
                       "(x^2:xy:xz+y^2) pulls Omega2 and Omega3 back to degree 2",
                       d2 == 2 && d3 == 2, false,
                       "degrees " + std::to_string(d2) + ", " + std::to_string(d3));
}

// ---- 5. foliations with two singular points -----------------------------------

inline Proj1Form two_singularity_form() {
    return apply_conditions(general_quadratic_form(),
                            {{"a1", "0"}, {"b0", "0"}, {"c0", "0"}, {"c1", "0"}});
}

inline CheckResult check_two_sing_rho(const Context&) {
    auto qt = qform_table();
    Proj1Form w = apply_conditions(two_singularity_form(), {{"c3", "0"}, {"b4", "0"}});
    auto obs = monomial_div_obstructions(rho_map(qt), w, parse_monomial("y*z^2", qt));
    return make_result("two_sing_branch_rho",
                       "c3 = b4 = 0 branch: y*z^2 divides rho's pullback identically",
                       obs.empty(), false);
}

inline CheckResult check_two_sing_b4(const Context&) {
    auto qt = qform_table();
    Proj1Form w = apply_conditions(two_singularity_form(), {{"c3", "0"}});
    MPoly x = MPoly::variable(qt, "x"), y = MPoly::variable(qt, "y"),
          z = MPoly::variable(qt, "z");
    MPoly b4 = MPoly::variable(qt, "b4"), b3 = MPoly::variable(qt, "b3"),
          c4 = MPoly::variable(qt, "c4");
    // components scaled by b4 to stay polynomial in the parameters
    RatMap psi(b4 * x * y, b4 * (z * z + y * z), (c4 - b3) * y * z);
    auto obs = monomial_div_obstructions(psi, w, parse_monomial("y*z^2", qt));
    return make_result("two_sing_branch_b4",
                       "c3 = 0, b4 != 0 branch: y*z^2 divides the stated psi pullback",
                       obs.empty(), false);
}

inline CheckResult check_two_sing_sqrt(const Context& ctx) {
    auto qt = qform_table();
    Rng rng(ctx.seed);
    Proj1Form base = two_singularity_form();
    Monomial yz2 = parse_monomial("y*z^2", qt);
    MPoly x = MPoly::variable(qt, "x"), y = MPoly::variable(qt, "y"),
          z = MPoly::variable(qt, "z");
    int pass = 0;
    const int n = 10;
    for (int i = 0; i < n; ++i) {
        Rational c3 = rng.rational(true), b3 = rng.rational(), c4 = rng.rational();
        Rational root = rng.rational();
        Rational b4 = (root * root - (b3 - c4) * (b3 - c4)) / (4 * c3);
        Rational s = (b3 - c4 + root) / (2 * c3);
        Proj1Form w = apply_conditions(base, {{"c3", to_string(c3)},
                                              {"b3", to_string(b3)},
                                              {"c4", to_string(c4)},
                                              {"b4", to_string(b4)}});
        RatMap psi(x * y, z * z + s * y * z, y * z);
        if (monomial_div_obstructions(psi, w, yz2).empty()) ++pass;
    }
    return make_result("two_sing_branch_sqrt",
                       "c3 != 0 branch on perfect-square discriminants: y*z^2 divides psi's "
                       "pullback (symbolic in the remaining parameters)",
                       pass == n, true, std::to_string(pass) + "/10 sampled instances");
}

// ---- 6. Darboux first integrals -----------------------------------------------

inline CheckResult check_darboux_Omega2(const Context&) {
    auto t = geo_table();
    RationalFn r(parse_poly("2*x^2 + x + 2*x*y + y^2", t), parse_poly("x^2", t));
    RationalFn s(parse_poly("-1*y", t), parse_poly("x", t));
    bool ok = darboux_first_integral_check(model("Omega2"), r, s);
    return make_result("darboux_Omega2",
                       "(2 + 1/x + 2y/x + y^2/x^2) exp(-y/x) is constant on Omega2 leaves", ok,
                       false);
}

inline CheckResult check_darboux_Omega3(const Context&) {
    auto t = geo_table();
    RationalFn r(parse_poly("y", t), parse_poly("x", t));
    RationalFn s(parse_poly("y^2 - 2*x", t), parse_poly("2*x^2", t));
    bool ok = darboux_first_integral_check(model("Omega3"), r, s);
    return make_result("darboux_Omega3",
                       "(y/x) exp(y^2/(2x^2) - 1/x) is constant on Omega3 leaves", ok, false);
}

// ---- 7. classification sufficiency ---------------------------------------------

struct ConditionCase {
    const char* id;
    const char* map;
    const char* monomial;
    std::map<std::string, std::string> conditions;
};

inline const std::vector<ConditionCase>& condition_cases() {
    static const std::vector<ConditionCase> cases = {
        {"sufficiency_omega1", "sigma", "x^2*y*z",
         {{"c0", "0"}, {"b0", "0"}, {"a2", "0"}, {"b2", "0"}, {"a1", "0"}, {"c1", "0"},
          {"b4", "0"}, {"c3", "0"}, {"b3", "c4"}}},
        {"sufficiency_omega2", "sigma", "x^2*y^2",
         {{"c1", "0"}, {"c0", "0"}, {"b0", "0"}, {"a1", "0"}, {"b4", "0"}, {"c3", "0"},
          {"a5", "0"}, {"b3", "c4"}, {"c5", "a3"}}},
        {"sufficiency_omega3", "rho", "z^4",
         {{"c0", "0"}, {"b0", "0"}, {"c3", "0"}, {"b4", "0"}, {"b2", "0"}, {"a0", "c4"},
          {"b3", "c4"}, {"a4", "2*c2 - b5"}}},
        {"sufficiency_omega4", "rho", "y*z^3",
         {{"b0", "0"}, {"c0", "0"}, {"b4", "0"}, {"c1", "0"}, {"a1", "0"}, {"b2", "0"},
          {"a0", "2*c4 - b3"}}},
        {"sufficiency_omega5", "rho", "y^2*z^2",
         {{"c1", "0"}, {"b0", "0"}, {"c3", "0"}, {"a5", "0"}, {"a1", "0"}, {"c0", "0"},
          {"b4", "0"}, {"c5", "a3"}}},
    };
    return cases;
}

inline RatMap builtin_by_name(const std::string& name, const SymbolTablePtr& t) {
    if (name == "sigma") return sigma_map(t);
    if (name == "rho") return rho_map(t);
    if (name == "tau") return tau_map(t);
    if (name == "psi") return psi_cubic_map(t);
    throw std::out_of_range("unknown builtin map: " + name);
}

inline CheckResult check_condition_sufficiency(const ConditionCase& c) {
    auto qt = qform_table();
    Proj1Form w = apply_conditions(general_quadratic_form(), c.conditions);
    auto obs = monomial_div_obstructions(builtin_by_name(c.map, qt), w,
                                         parse_monomial(c.monomial, qt));
    return make_result(c.id,
                       std::string("the stated condition set makes ") + c.monomial + " divide " +
                           c.map + "'s pullback identically",
                       obs.empty(), false);
}

inline CheckResult check_family_sufficiency(const std::string& id, const std::string& family,
                                            const std::string& mapname,
                                            const std::string& monomial) {
    auto ft = family_table(family);
    Proj1Form w = family_form(family, ft);
    auto obs = monomial_div_obstructions(builtin_by_name(mapname, ft), w,
                                         parse_monomial(monomial, ft));
    return make_result(id,
                       family + " makes " + monomial + " divide " + mapname +
                           "'s pullback identically in its parameters",
                       obs.empty(), false);
}

/// Reduces φ(a,b)*ω by the monomial content and then by the expected square
/// factor; succeeds if the quotient has coefficient degree 3, identically in
/// every parameter.
inline CheckResult check_cubic_sufficiency(const std::string& id, const std::string& family,
                                           const std::string& square_factor) {
    std::vector<std::string> params = family_spec(family).parameters;
    for (const char* mp : {"a", "b"})
        if (std::find(params.begin(), params.end(), mp) == params.end()) params.push_back(mp);
    auto t = make_table({"x", "y", "z"}, params);
    Proj1Form w = family_form(family, t);
    RatMap phi = phi_ab_map(t, MPoly::variable(t, "a"), MPoly::variable(t, "b"));
    Proj1Form raw = pullback_raw(phi, w);
    Monomial content = raw.geometric_content();
    Proj1Form g = raw.divide_by_monomial(content);
    MPoly factor = parse_poly(square_factor, t);
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
        auto qa = g.A().trial_divide(factor);
        auto qb = g.B().trial_divide(factor);
        auto qc = g.C().trial_divide(factor);
        if (qa && qb && qc)
            g = Proj1Form(*qa, *qb, *qc);
        else
            ok = false;
    }
    ok = ok && g.coefficient_degree() == 3 && content.to_string(*t) == "x^2*y^2";
    std::ostringstream det;
    det << "content x^2*y^2, two exact divisions by " << square_factor
        << ", quotient coefficient degree " << g.coefficient_degree();
    return make_result(id,
                       family + ": phi(a,b)'s pullback reduces to degree 2, symbolically in a, b",
                       ok, false, det.str());
}

// ---- 8. obstruction span identities ---------------------------------------------

struct SpanCase {
    const char* id;
    const char* map;
    const char* monomial;
    std::vector<std::string> listed;
};

inline const std::vector<SpanCase>& span_cases() {
    static const std::vector<SpanCase> cases = {
        {"span_sigma_x2yz", "sigma", "x^2*y*z",
         {"c0", "b0", "a2", "b2", "a1", "c1", "b4", "c3", "b3 - c4"}},
        {"span_sigma_x2y2", "sigma", "x^2*y^2",
         {"c1", "c0", "b0", "a1", "b4", "c3", "a5", "b3 - c4", "c5 - a3"}},
        {"span_rho_z4", "rho", "z^4",
         {"c0", "b0", "c3", "b4", "b2", "a0 - c4", "b3 - c4", "a4 - 2*c2 + b5"}},
        {"span_rho_yz3", "rho", "y*z^3",
         {"b0", "c0", "b4", "c1", "a1", "b2", "a0 - 2*c4 + b3"}},
        {"span_rho_y2z2", "rho", "y^2*z^2",
         {"c1", "b0", "c3", "a5", "a1", "c0", "b4", "c5 - a3"}},
    };
    return cases;
}

inline CheckResult check_span(const SpanCase& c) {
    auto qt = qform_table();
    auto computed = monomial_div_obstructions(builtin_by_name(c.map, qt),
                                              general_quadratic_form(), parse_monomial(c.monomial, qt));
    std::vector<MPoly> listed;
    for (const auto& e : c.listed) listed.push_back(parse_poly(e, qt));
    bool ok = span_equal(computed, ObstructionSet(std::move(listed)));
    return make_result(c.id,
                       std::string("computed ") + c.monomial + "-obstructions of " + c.map +
                           " span the stated linear conditions",
                       ok, false,
                       std::to_string(computed.size()) + " computed members, rank " +
                           std::to_string(rank(computed.linear_matrix())));
}

// ---- 9. infeasibility and necessity sampling --------------------------------------

inline std::array<MPoly, 3> general_at(const QVector& vals) {
    auto qt = qform_table();
    static const Proj1Form gen = general_quadratic_form();
    std::map<SymbolId, Rational> bind;
    for (std::size_t i = 0; i < vals.size(); ++i) bind.emplace(qt->geometric_count() + i, vals[i]);
    return {gen.A().substitute_values(bind), gen.B().substitute_values(bind),
            gen.C().substitute_values(bind)};
}

inline CheckResult check_infeasible(const Context& ctx, const std::string& id,
                                    const std::string& mapname, const std::string& monomial) {
    auto qt = qform_table();
    Rng rng(ctx.seed);
    auto obs = monomial_div_obstructions(builtin_by_name(mapname, qt), general_quadratic_form(),
                                         parse_monomial(monomial, qt));
    auto sol = solve_linear_obstructions(obs, qt);
    int degenerate = 0, tested = 0;
    for (int i = 0; i < 50; ++i) {
        QVector pv(18, Rational(0));
        for (auto& bv : sol.basis) {
            Rational c = rng.rational();
            for (int j = 0; j < 18; ++j) pv[j] += c * bv[j];
        }
        auto comps = general_at(pv);
        if (comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero()) continue;
        ++tested;
        Foliation f = Foliation::from_form(Proj1Form(comps[0], comps[1], comps[2]));
        if (f.degree() != 2 || f.reduction_performed()) ++degenerate;
    }
    return make_result(id,
                       monomial + " cannot divide " + mapname +
                           "'s pullback of a genuine degree-2 foliation",
                       tested > 0 && degenerate == tested, true,
                       std::to_string(degenerate) + "/" + std::to_string(tested) +
                           " sampled solutions degenerate");
}

inline CheckResult check_necessity(const Context& ctx, const std::string& id,
                                   const std::string& mapname, const std::string& monomial) {
    auto qt = qform_table();
    Rng rng(ctx.seed);
    RatMap m = builtin_by_name(mapname, qt);
    Monomial M = parse_monomial(monomial, qt);
    auto obs = monomial_div_obstructions(m, general_quadratic_form(), M);
    QMatrix rows = obs.linear_matrix();
    int violated_detected = 0, tested = 0;
    for (int i = 0; i < 50; ++i) {
        std::size_t pick = rng.raw() % rows.size();
        QMatrix sys;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != pick) sys.push_back(rows[r]);
        auto rest = nullspace(sys, 18);
        QVector v(18, Rational(0));
        bool found = false;
        for (int tries = 0; tries < 20 && !found; ++tries) {
            std::fill(v.begin(), v.end(), Rational(0));
            for (auto& bv : rest) {
                Rational c = rng.rational();
                for (int j = 0; j < 18; ++j) v[j] += c * bv[j];
            }
            Rational dot(0);
            for (int j = 0; j < 18; ++j) dot += rows[pick][j] * v[j];
            found = !is_zero(dot);
        }
        if (!found) continue;
        auto comps = general_at(v);
        if (comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero()) continue;
        ++tested;
        Proj1Form w(comps[0], comps[1], comps[2]);
        if (!monomial_div_obstructions(m, w, M).empty()) ++violated_detected;
    }
    return make_result(id,
                       "violating one " + monomial + "-condition breaks divisibility of " +
                           mapname + "'s pullback",
                       tested > 0 && violated_detected == tested, true,
                       std::to_string(violated_detected) + "/" + std::to_string(tested) +
                           " violations detected");
}

// ---- 10. invariance propositions ---------------------------------------------------

inline CheckResult check_invariant_family(const std::string& id, const std::string& family,
                                          const std::string& mapname, const std::string& claim,
                                          const std::string& details = "") {
    auto ft = family_table(family);
    Proj1Form w = family_form(family, ft);
    auto obs = invariance_obstructions(builtin_by_name(mapname, ft), w);
    return make_result(id, claim, obs.empty(), false, details);
}

inline CheckResult check_invariant_sigma_branch(const std::string& id,
                                                const std::map<std::string, std::string>& cond,
                                                const std::string& family,
                                                const std::string& claim) {
    auto ft = family_table(family);
    Proj1Form w = apply_conditions(family_form(family, ft), cond);
    auto obs = invariance_obstructions(sigma_map(ft), w);
    return make_result(id, claim, obs.empty(), false);
}

inline CheckResult check_displayed_sigma_pullbacks(const Context&) {
    // reduced pullbacks displayed with the invariance proposition, verified
    // exactly: sigma* omega1 = x^2yz * (homogenized display), same for omega2
    bool ok1, ok2;
    {
        auto ft = family_table("omega1");
        Proj1Form w = family_form("omega1", ft);
        Proj1Form raw = pullback_raw(sigma_map(ft), w);
        Proj1Form disp = homogenize_affine(
            Aff1Form(parse_poly("-1*y*(epsilon + kappa*y)", ft),
                     parse_poly("-1*(gamma*x + alpha*y + delta*x^2 + beta*x*y)", ft)));
        MPoly mono = parse_poly("x^2*y*z", ft);
        ok1 = raw.A() == mono * disp.A() && raw.B() == mono * disp.B() &&
              raw.C() == mono * disp.C();
    }
    {
        auto ft = family_table("omega2");
        Proj1Form w = family_form("omega2", ft);
        Proj1Form raw = pullback_raw(sigma_map(ft), w);
        Proj1Form disp = homogenize_affine(
            Aff1Form(parse_poly("-1*(kappa + beta*y + delta*y^2)", ft),
                     parse_poly("-1*(gamma + epsilon*x + alpha*x^2)", ft)));
        MPoly mono = parse_poly("x^2*y^2", ft);
        ok2 = raw.A() == mono * disp.A() && raw.B() == mono * disp.B() &&
              raw.C() == mono * disp.C();
    }
    return make_result("invariant_sigma_displayed_pullbacks",
                       "the displayed reduced sigma-pullbacks of omega1 and omega2 are exact",
                       ok1 && ok2, false);
}

// ---- 11. transversal structure certificates ------------------------------------------

inline CheckResult check_riccati_triplet(const Context&) {
    auto t = make_table({"x", "y", "z"}, {"p0", "p1", "p2", "q0", "q1", "q2", "r0", "r1", "r2"});
    RationalFn a = RationalFn::of(parse_poly("p0 + p1*x + p2*x^2", t));
    RationalFn b = RationalFn::of(parse_poly("q0 + q1*x + q2*x^2", t));
    RationalFn c = RationalFn::of(parse_poly("r0 + r1*x + r2*x^2", t));
    RiccatiTriplet trip = riccati_triplet(a, b, c);
    bool ok = sl2_triplet_check(trip.theta0, trip.theta1, trip.theta2);
    return make_result("riccati_triplet",
                       "the Riccati triplet satisfies the sl(2) identities with symbolic "
                       "coefficient polynomials",
                       ok, false);
}

inline CheckResult check_omega3_triplet(const Context& ctx) {
    Rng rng(ctx.seed);
    auto ft = family_table("omega3");
    int pass = 0, tested = 0;
    for (int i = 0; i < 5; ++i) {
        std::map<std::string, Rational> bind = rng.family_bindings(family_spec("omega3"), true);
        Aff1Form w3 = family_affine("omega3", ft, bind);
        MPoly D = parse_poly("y*(kappa + epsilon*y + lambda*y^2)", ft);
        std::map<SymbolId, Rational> by_id;
        for (auto& [k, v] : bind) by_id.emplace(ft->id(k), v);
        D = D.substitute_values(by_id);
        MPoly M = parse_poly("kappa + gamma*y - lambda*y^2", ft).substitute_values(by_id);
        if (D.is_zero()) continue;
        ++tested;
        MPoly num = w3.b.num() / w3.b.den().constant_value();
        Aff1Form theta0(RationalFn(D, D), RationalFn(num, D));
        Aff1Form theta1(RationalFn(MPoly::zero(ft), D), RationalFn(M, D));
        if (sl2_triplet_check(theta0, theta1, std::nullopt)) ++pass;
    }
    return make_result("omega3_triplet",
                       "omega3's transversely affine triplet (theta2 = 0) holds at sampled "
                       "parameters",
                       tested > 0 && pass == tested, true,
                       std::to_string(pass) + "/" + std::to_string(tested) +
                           " samples (theta0 carries omega3's own orientation)");
}

inline CheckResult check_eta_prime_closed(const Context&) {
    auto t = geo_table();
    Aff1Form w(RationalFn(MPoly::constant(t, Rational(1)), parse_poly("x*(1 + x)", t)),
               RationalFn(MPoly::constant(t, Rational(-1)), parse_poly("y*(1 + y)", t)));
    return make_result("eta_prime_closed", "dx/(x(1+x)) - dy/(y(1+y)) is closed", is_closed(w),
                       false);
}

inline CheckResult check_omega8_closed(const Context& ctx) {
    Rng rng(ctx.seed);
    auto t = geo_table();
    int pass = 0, tested = 0;
    while (tested < 5) {
        Rational a = rng.rational(), b = rng.rational(true);
        if (is_zero(b * b - a * b + 1) || a * a == 4) continue;
        ++tested;
        Aff1Form w8 = family_affine("omega8", {{"a", a}, {"b", b}});
        MPoly p = w8.a.num().lift_to(t);
        MPoly q = w8.b.num().lift_to(t);
        if (p.is_zero() || q.is_zero()) continue;
        Aff1Form separated(RationalFn(p, p * q), RationalFn(q, p * q));
        if (is_closed(separated)) ++pass;
    }
    return make_result("omega8_closed",
                       "omega8 divided by p(y)q(x) is closed at sampled (a, b)",
                       pass == tested, true, std::to_string(pass) + "/5 samples");
}

inline CheckResult check_sigma_eta(const Context&) {
    auto t = geo_table();
    Proj1Form eta = family_form("eta", t);
    Proj1Form raw = pullback_raw(sigma_map(t), eta);
    Proj1Form bracket = parse_proj_form("[-1*(y + z), x + z, x - y]", t);
    MPoly factor = parse_poly("x^2*y^2*z^2", t);
    bool exact = raw.A() == factor * bracket.A() && raw.B() == factor * bracket.B() &&
                 raw.C() == factor * bracket.C();
    bool nonprimitive = Foliation::from_form(raw).degree() == 0;
    return make_result("sigma_eta_factor",
                       "sigma's raw pullback of eta is x^2y^2z^2 times the degree-0 bracket "
                       "form (the non-primitivity witness)",
                       exact && nonprimitive, false,
                       "raw = (xyz)^2 * bracket; one xyz is the displayed normalization");
}

// ---- 12. degree sequence diagrams ------------------------------------------------

inline CheckResult check_degseq(const Context& ctx, const std::string& id,
                                const std::string& family, const MapWord& word,
                                const std::vector<long>& expected, const std::string& claim) {
    Rng rng(ctx.seed);
    int pass = 0;
    std::string seen;
    for (int i = 0; i < 5; ++i) {
        Foliation f = sample_family(family, rng);
        auto seq = degree_sequence(word, f);
        if (seq == expected) ++pass;
        else if (seen.empty()) seen = seq_string(seq);
    }
    std::string det = std::to_string(pass) + "/5 samples match [" + seq_string(expected) + "]";
    if (!seen.empty()) det += "; observed [" + seen + "]";
    return make_result(id, claim, pass == 5, true, det);
}

/// Samples an automorphism (a y + b z : c y + e z : f x + g y + h z) with a
/// nondegenerate contracted conic.
inline RatMap sample_xi_l2(Rng& rng, QMatrix* rows_out = nullptr) {
    auto qt = qform_table();
    while (true) {
        Rational a = rng.rational(true), b = rng.rational(true), c = rng.rational(true),
                 e = rng.rational(true), f = rng.rational(true), g = rng.rational(true),
                 h = rng.rational(true);
        QMatrix m{{Rational(0), a, b}, {Rational(0), c, e}, {f, g, h}};
        if (is_zero(det3(m))) continue;
        if (rows_out) *rows_out = m;
        return make_linear(qt, m);
    }
}

/// Degree-2 foliations with deg sigma*F = 4 whose xi-pullback is again of
/// degree 2: the solutions of y^2 z^2 w^2 | xi* omega with w the contracted
/// conic of xi.
inline std::vector<QVector> xi_s1_space(const RatMap& l2, const QMatrix& rows) {
    auto qt = qform_table();
    RatMap s = sigma_map(qt);
    RatMap xi = compose_word({s, l2, s});
    MPoly x = MPoly::variable(qt, "x"), y = MPoly::variable(qt, "y"),
          z = MPoly::variable(qt, "z");
    MPoly w = rows[2][0] * (y * z) + rows[2][1] * (x * z) + rows[2][2] * (x * y);
    MPoly P = y * y * z * z * w * w;
    auto obs = poly_div_obstructions(xi, general_quadratic_form(), P);
    return solve_linear_obstructions(obs, qt).basis;
}

/// Two-stage route for the second family: members of a sigma-numerically-
/// invariant case whose transported pullback is again sigma-numerically
/// invariant.  Several monomial routes occur depending on the sampled
/// automorphism; the first nonempty one wins.
inline std::vector<QVector> xi_s2_space(const RatMap& l2) {
    auto qt = qform_table();
    RatMap s = sigma_map(qt);
    const std::vector<std::pair<const char*, const char*>> routes = {
        {"x^2*y^2", "y^2*z^2"}, {"x*y^2*z", "x*y^2*z"}, {"x^2*z^2", "x^2*y^2"},
        {"x*y*z^2", "x^2*y^2"}, {"y^2*z^2", "x^2*y*z"}, {"x^2*y*z", "x^2*y*z"},
    };
    for (auto& [m1s, m2s] : routes) {
        Monomial M1 = parse_monomial(m1s, qt), M2 = parse_monomial(m2s, qt);
        auto sol1 = solve_linear_obstructions(
            monomial_div_obstructions(s, general_quadratic_form(), M1), qt);
        if (sol1.basis.size() <= 3) continue;
        std::vector<std::string> tp;
        for (std::size_t i = 0; i < sol1.basis.size(); ++i) tp.push_back("t" + std::to_string(i));
        auto tt = make_table({"x", "y", "z"}, tp);
        MPoly A(tt), B(tt), C(tt);
        for (std::size_t i = 0; i < sol1.basis.size(); ++i) {
            auto at = general_at(sol1.basis[i]);
            MPoly ti = MPoly::variable(tt, tp[i]);
            A += ti * at[0].lift_to(tt);
            B += ti * at[1].lift_to(tt);
            C += ti * at[2].lift_to(tt);
        }
        Proj1Form raw1 = pullback_raw(sigma_map(tt), Proj1Form(A, B, C));
        Monomial M1t(tt->size());
        for (int v = 0; v < 3; ++v) M1t.set_exp(v, M1.exp(v));
        MPoly M1p = MPoly::term(tt, M1t, Rational(1));
        auto qa = raw1.A().trial_divide(M1p);
        auto qb = raw1.B().trial_divide(M1p);
        auto qc = raw1.C().trial_divide(M1p);
        if (!qa || !qb || !qc) continue;
        Proj1Form H = pullback_raw(lift_map(l2, tt), Proj1Form(*qa, *qb, *qc));
        Monomial M2t(tt->size());
        for (int v = 0; v < 3; ++v) M2t.set_exp(v, M2.exp(v));
        auto sol2 =
            solve_linear_obstructions(monomial_div_obstructions(sigma_map(tt), H, M2t), tt);
        std::vector<QVector> out;
        for (auto& bv : sol2.basis) {
            QVector pv(18, Rational(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < bv.size(); ++i)
                for (std::size_t j = 0; j < 18; ++j) pv[j] += bv[i] * sol1.basis[i][j];
            for (auto& e : pv) nonzero = nonzero || !is_zero(e);
            if (nonzero) out.push_back(pv);
        }
        if (out.size() > 0) {
            // keep only routes with an essential (non-kernel) member
            auto comps_ok = [&]() {
                for (auto& pv : out) {
                    auto comps = general_at(pv);
                    if (!(comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero()))
                        return true;
                }
                return false;
            };
            if (comps_ok()) return out;
        }
    }
    return {};
}

inline CheckResult check_degseq_xi(const Context& ctx, const std::string& id, bool first_family,
                                   const std::vector<long>& expected, const std::string& claim) {
    auto qt = qform_table();
    Rng rng(ctx.seed);
    int pass = 0, tested = 0;
    std::string seen;
    for (int trial = 0; trial < 5; ++trial) {
        QMatrix rows;
        RatMap l2 = sample_xi_l2(rng, &rows);
        MapWord word{sigma_map(qt), l2, sigma_map(qt)};
        std::vector<QVector> space =
            first_family ? xi_s1_space(l2, rows) : xi_s2_space(l2);
        bool done = false;
        for (int attempt = 0; attempt < 20 && !done; ++attempt) {
            QVector pv(18, Rational(0));
            for (auto& bv : space) {
                Rational c = rng.rational();
                for (int j = 0; j < 18; ++j) pv[j] += c * bv[j];
            }
            auto comps = general_at(pv);
            if (comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero()) continue;
            Foliation f = Foliation::from_form(Proj1Form(comps[0], comps[1], comps[2]));
            if (f.degree() != 2) continue;
            ++tested;
            auto seq = degree_sequence(word, f);
            if (seq == expected) ++pass;
            else if (seen.empty()) seen = seq_string(seq);
            done = true;
        }
    }
    std::string det = std::to_string(pass) + "/" + std::to_string(tested) + " samples match [" +
                      seq_string(expected) + "]";
    if (!seen.empty()) det += "; observed [" + seen + "]";
    return make_result(id, claim, tested == 5 && pass == tested, true, det);
}

// ---- 13. singularity structure ------------------------------------------------------

inline CheckResult check_unique_singularity(const std::string& id, const std::string& family) {
    Foliation f = model(family);
    auto sp = singular_points_rational(f);
    ProjPoint origin(Rational(0), Rational(0), Rational(1));
    bool ok = sp.complete && sp.points.size() == 1 && sp.points[0] == origin &&
              is_singular_at(f, origin);
    std::string det = std::to_string(sp.points.size()) + " rational point(s), completeness " +
                      (sp.complete ? "certified" : "NOT certified");
    return make_result(id, family + " has exactly one singular point, (0:0:1)", ok, false, det);
}

inline CheckResult check_radial(const Context& ctx) {
    Rng rng(ctx.seed);
    auto t = geo_table();
    MPoly x = MPoly::variable(t, "x"), y = MPoly::variable(t, "y");
    auto quadratic = [&]() {
        MPoly out(t);
        for (auto [i, j] : {std::pair<int, int>{2, 0}, {1, 1}, {0, 2}}) {
            Monomial m(t->size());
            m.set_exp(0, i);
            m.set_exp(1, j);
            out.add_term(m, rng.rational());
        }
        return out;
    };
    MPoly q1 = quadratic(), q2 = quadratic(), q3 = quadratic();
    Foliation radial = Foliation::from_form(
        homogenize_affine(Aff1Form(-y + q1 - y * q3, x + q2 + x * q3)));
    ProjPoint origin(Rational(0), Rational(0), Rational(1));
    bool detected = is_radial_at(radial, origin);
    Foliation saddle =
        Foliation::from_form(homogenize_affine(Aff1Form(-y + q1, 2 * x + q2)));
    bool rejected = !is_radial_at(saddle, origin);
    return make_result("radial_detection",
                       "x dy - y dx + quadratic terms is radial at the origin; a non-scalar "
                       "linear part is rejected",
                       detected && rejected, false);
}

// ---- 14. no quadratic map drops Omega4 to degree 2 -----------------------------------

inline CheckResult check_tau_orbit_Omega4(const Context& ctx) {
    Rng rng(ctx.seed);
    auto t = geo_table();
    Foliation f = model("Omega4");
    int not_two = 0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
        RatMap phi = compose_reduce(compose_reduce(rng.random_automorphism(t), tau_map(t)),
                                    rng.random_automorphism(t));
        if (pullback_foliation(phi, f).degree() != 2) ++not_two;
    }
    return make_result("tau_orbit_Omega4",
                       "100 random elements of tau's orbit never pull Omega4 back to degree 2 "
                       "(non-exhaustive sampling)",
                       not_two == n, true, std::to_string(not_two) + "/100 samples avoid degree 2");
}

// ---- registry ---------------------------------------------------------------------

inline const std::vector<Registered>& registry() {
    static const std::vector<Registered> regs = [] {
        std::vector<Registered> r;
        auto add = [&](const std::string& id, CheckFn fn) { r.push_back({id, std::move(fn)}); };

        add("involutions", check_involutions);

        add("word_rho", [](const Context&) {
            auto t = geo_table();
            return check_word("word_rho", rho_word(t), rho_map(t),
                              "the 5-letter word with the stated automorphisms composes to rho");
        });
        add("word_tau", [](const Context&) {
            auto t = geo_table();
            return check_word("word_tau", tau_word(t), tau_map(t),
                              "the 9-letter word with the stated automorphisms composes to tau");
        });
        add("word_psi", [](const Context&) {
            auto t = geo_table();
            return check_word("word_psi", psi_word(t), psi_cubic_map(t),
                              "the 17-letter word with the stated automorphisms composes to psi");
        });

        add("generic_degree_six", check_generic_degree);

        for (const auto& c : model_cases())
            add(c.id, [&c](const Context&) { return check_model(c); });
        add("model_cubic_Omega1", check_model_cubic);
        add("model_remark_quadratic", check_model_remark);

        add("two_sing_branch_rho", check_two_sing_rho);
        add("two_sing_branch_b4", check_two_sing_b4);
        add("two_sing_branch_sqrt", check_two_sing_sqrt);

        add("darboux_Omega2", check_darboux_Omega2);
        add("darboux_Omega3", check_darboux_Omega3);

        for (const auto& c : condition_cases())
            add(c.id, [&c](const Context&) { return check_condition_sufficiency(c); });
        add("sufficiency_omega6", [](const Context&) {
            return check_family_sufficiency("sufficiency_omega6", "omega6", "tau", "x^4");
        });
        add("sufficiency_omega7", [](const Context&) {
            return check_cubic_sufficiency("sufficiency_omega7", "omega7",
                                           "x^2 + y^2 + a*x*y + b*x*z + y*z");
        });
        add("sufficiency_omega8", [](const Context&) {
            return check_cubic_sufficiency("sufficiency_omega8", "omega8", "x^2 + y^2 + a*x*y");
        });
        add("sufficiency_omega9", [](const Context&) {
            return check_family_sufficiency("sufficiency_omega9", "omega9", "psi", "z^8");
        });
        add("sufficiency_omega7_sigma", [](const Context&) {
            return check_family_sufficiency("sufficiency_omega7_sigma", "omega7", "sigma",
                                            "x^2*y*z");
        });
        add("sufficiency_omega7_rho", [](const Context&) {
            return check_family_sufficiency("sufficiency_omega7_rho", "omega7", "rho",
                                            "y^2*z^2");
        });
        add("sufficiency_omega8_sigma", [](const Context&) {
            return check_family_sufficiency("sufficiency_omega8_sigma", "omega8", "sigma",
                                            "x^2*y^2");
        });

        for (const auto& c : span_cases())
            add(c.id, [&c](const Context&) { return check_span(c); });

        add("infeasible_sigma_x4", [](const Context& ctx) {
            return check_infeasible(ctx, "infeasible_sigma_x4", "sigma", "x^4");
        });
        add("infeasible_sigma_x3y", [](const Context& ctx) {
            return check_infeasible(ctx, "infeasible_sigma_x3y", "sigma", "x^3*y");
        });
        add("infeasible_rho_y4", [](const Context& ctx) {
            return check_infeasible(ctx, "infeasible_rho_y4", "rho", "y^4");
        });
        add("infeasible_rho_y3z", [](const Context& ctx) {
            return check_infeasible(ctx, "infeasible_rho_y3z", "rho", "y^3*z");
        });
        const std::vector<std::array<const char*, 3>> necessity = {
            {"necessity_sigma_x2yz", "sigma", "x^2*y*z"},
            {"necessity_sigma_x2y2", "sigma", "x^2*y^2"},
            {"necessity_rho_z4", "rho", "z^4"},
            {"necessity_rho_yz3", "rho", "y*z^3"},
            {"necessity_rho_y2z2", "rho", "y^2*z^2"},
            {"necessity_tau_x4", "tau", "x^4"},
            {"necessity_psi_z8", "psi", "z^8"},
        };
        for (const auto& n : necessity)
            add(n[0], [n](const Context& ctx) {
                return check_necessity(ctx, n[0], n[1], n[2]);
            });

        add("invariant_sigma_plus", [](const Context&) {
            return check_invariant_sigma_branch(
                "invariant_sigma_plus",
                {{"gamma", "beta"}, {"delta", "alpha"}, {"epsilon", "kappa"}}, "omega1",
                "omega1 with gamma=beta, delta=alpha, epsilon=kappa is sigma-invariant");
        });
        add("invariant_sigma_minus", [](const Context&) {
            return check_invariant_sigma_branch(
                "invariant_sigma_minus",
                {{"gamma", "-1*beta"}, {"delta", "-1*alpha"}, {"epsilon", "-1*kappa"}}, "omega1",
                "omega1 with the negated branch is sigma-invariant");
        });
        add("invariant_sigma_separated", [](const Context&) {
            return check_invariant_sigma_branch(
                "invariant_sigma_separated", {{"gamma", "alpha"}, {"delta", "0"}, {"kappa", "0"}},
                "omega2", "omega2 with gamma=alpha, delta=kappa=0 is sigma-invariant");
        });
        add("invariant_sigma_displayed_pullbacks", check_displayed_sigma_pullbacks);
        const std::vector<std::array<const char*, 2>> rho_inv = {
            {"invariant_rho_family1",
             "corrected completion of the first stated form (the printed y(1-y)dx+(beta+x)dy "
             "is not invariant)"},
            {"invariant_rho_family2",
             "corrected completion of the second stated form (the printed y^2dx+(-1+y)dy is "
             "not invariant)"},
            {"invariant_rho_family3", ""},
            {"invariant_rho_family4", ""},
            {"invariant_rho_family5", ""},
        };
        for (int i = 0; i < 5; ++i) {
            std::string id = rho_inv[i][0];
            std::string fam = "rho_inv" + std::to_string(i + 1);
            std::string note = rho_inv[i][1];
            add(id, [id, fam, note](const Context&) {
                return check_invariant_family(id, fam, "rho",
                                              fam + " is invariant under rho", note);
            });
        }
        for (int i = 1; i <= 2; ++i) {
            std::string id = "invariant_tau_family" + std::to_string(i);
            std::string fam = "tau_inv" + std::to_string(i);
            add(id, [id, fam](const Context&) {
                return check_invariant_family(id, fam, "tau", fam + " is invariant under tau");
            });
        }

        add("riccati_triplet", check_riccati_triplet);
        add("omega3_triplet", check_omega3_triplet);
        add("eta_prime_closed", check_eta_prime_closed);
        add("omega8_closed", check_omega8_closed);
        add("sigma_eta_factor", check_sigma_eta);

        add("degseq_rho", [](const Context& ctx) {
            // stated diagram 2 -> 5 -> 2; the factorization above yields
            // 2 -> 4 -> 2 on the largest family (see details)
            auto t = geo_table();
            CheckResult r = check_degseq(
                ctx, "degseq_rho", "omega4", rho_word(t), {2, 5, 2},
                "the rho factorization passes through intermediate degree 5");
            r.details +=
                "; the stated word provably passes through degree <= 4: the first "
                "sigma-step content has degree >= 2 on every numerically invariant family";
            return r;
        });
        add("degseq_tau", [](const Context& ctx) {
            auto t = geo_table();
            return check_degseq(ctx, "degseq_tau", "omega6", tau_word(t), {2, 5, 4, 5, 2},
                                "the tau factorization passes through degrees 5, 4, 5");
        });
        add("degseq_psi", [](const Context& ctx) {
            auto t = geo_table();
            return check_degseq(ctx, "degseq_psi", "omega9", psi_word(t),
                                {2, 4, 3, 5, 3, 5, 3, 4, 2},
                                "the psi factorization passes through degrees 4,3,5,3,5,3,4");
        });
        add("degseq_xi_s1", [](const Context& ctx) {
            return check_degseq_xi(ctx, "degseq_xi_s1", true, {2, 4, 2},
                                   "the first xi-family passes through intermediate degree 4");
        });
        add("degseq_xi_s2", [](const Context& ctx) {
            return check_degseq_xi(ctx, "degseq_xi_s2", false, {2, 2, 2},
                                   "the second xi-family keeps degree 2 throughout");
        });

        for (int i = 1; i <= 4; ++i) {
            std::string id = "singularities_Omega" + std::to_string(i);
            std::string fam = "Omega" + std::to_string(i);
            add(id, [id, fam](const Context&) { return check_unique_singularity(id, fam); });
        }
        add("radial_detection", check_radial);

        add("tau_orbit_Omega4", check_tau_orbit_Omega4);
        return r;
    }();
    return regs;
}

}  // namespace checks

/// Runs every registered check whose id contains the filter substring.
/// Result order is fixed by the registry, independent of scheduling.
inline SuiteReport run_suite(const std::string& filter = "",
                             std::uint64_t seed = kDefaultSeed) {
    SuiteReport report;
    report.seed = seed;
    checks::Context ctx{seed};
    for (const auto& reg : checks::registry()) {
        if (!filter.empty() && reg.id.find(filter) == std::string::npos) continue;
        auto start = std::chrono::steady_clock::now();
        CheckResult result;
        try {
            result = reg.fn(ctx);
        } catch (const std::exception& e) {
            result.id = reg.id;
            result.claim = "(check aborted)";
            result.status = "fail";
            result.details = std::string("exception: ") + e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        result.elapsed_ms =
            (long)std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        if (result.status == "pass") ++report.pass_count;
        else if (result.status == "evidence") ++report.evidence_count;
        else ++report.fail_count;
        report.checks.push_back(std::move(result));
    }
    return report;
}

}  // namespace cremfol

#endif
