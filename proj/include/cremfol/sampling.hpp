#ifndef CREMFOL_SAMPLING_HPP
#define CREMFOL_SAMPLING_HPP

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "families.hpp"
#include "foliation.hpp"
#include "linalg.hpp"
#include "ratmap.hpp"

namespace cremfol {

constexpr std::uint64_t kDefaultSeed = 1729;

/// Deterministic source of small rationals; the raw engine output is reduced
/// by hand so that a seed pins the byte stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long integer(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small rational, numerator in [-9, 9].
    Rational rational(bool nonzero = false, long max_den = 3) {
        while (true) {
            long num = integer(-9, 9);
            if (nonzero && num == 0) continue;
            long den = integer(1, max_den);
            return make_rational(num, den);
        }
    }

    QMatrix invertible_matrix() {
        while (true) {
            QMatrix m(3, QVector(3));
            for (auto& row : m)
                for (auto& e : row) e = rational();
            if (!is_zero(det3(m))) return m;
        }
    }

    RatMap random_automorphism(const SymbolTablePtr& t) { return make_linear(t, invertible_matrix()); }

    std::map<std::string, Rational> family_bindings(const FamilySpec& spec, bool nonzero = false) {
        std::map<std::string, Rational> out;
        for (const auto& p : spec.parameters) out.emplace(p, rational(nonzero));
        return out;
    }

private:
    std::mt19937_64 eng_;
};

/// Random member of a named family with the expected reduced degree
/// (resampled on degenerate parameter draws).
inline Foliation sample_family(const std::string& name, Rng& rng, long want_degree = 2,
                               int max_attempts = 64) {
    auto t = make_table({"x", "y", "z"});
    const FamilySpec& spec = family_spec(name);
    auto ft = family_table(name);
    for (int i = 0; i < max_attempts; ++i) {
        auto bindings = rng.family_bindings(spec);
        try {
            Aff1Form bound = family_affine(name, ft, bindings);
            MPoly a = bound.a.num() / bound.a.den().constant_value();
            MPoly b = bound.b.num() / bound.b.den().constant_value();
            if (!a.is_numeric() || !b.is_numeric()) continue;
            Foliation f =
                Foliation::from_form(homogenize_affine(Aff1Form(a.lift_to(t), b.lift_to(t))));
            if (f.degree() == want_degree) return f;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error("could not sample a degree-" + std::to_string(want_degree) +
                             " member of " + name);
}

/// Random reduced foliation of the requested degree from the 18-parameter
/// quadratic normal form.
inline Foliation sample_quadratic_foliation(Rng& rng, int max_attempts = 64) {
    auto qt = qform_table();
    auto t = make_table({"x", "y", "z"});
    for (int i = 0; i < max_attempts; ++i) {
        std::map<SymbolId, Rational> values;
        for (SymbolId s = qt->geometric_count(); s < qt->size(); ++s)
            values.emplace(s, rng.rational());
        Proj1Form g = general_quadratic_form(qt);
        MPoly A = g.A().substitute_values(values);
        MPoly B = g.B().substitute_values(values);
        MPoly C = g.C().substitute_values(values);
        if (A.is_zero() && B.is_zero() && C.is_zero()) continue;
        Foliation f = Foliation::from_form(Proj1Form(A.lift_to(t), B.lift_to(t), C.lift_to(t)));
        if (f.degree() == 2 && !f.reduction_performed()) return f;
    }
    throw std::runtime_error("could not sample a reduced degree-2 foliation");
}

}  // namespace cremfol

#endif
