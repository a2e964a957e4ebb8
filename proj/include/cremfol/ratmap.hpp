#ifndef CREMFOL_RATMAP_HPP
#define CREMFOL_RATMAP_HPP

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "forms.hpp"
#include "gcd.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"

namespace cremfol {

/// Rational self-map of the projective plane: three homogeneous components of
/// equal degree without common factor.  Monomial content is always stripped;
/// the full coprimality reduction runs when the coefficients are numeric.
/// Birationality is certified externally (builtin inverse, factorization
/// word, or a caller-supplied inverse checked through compose_reduce), never
/// decided.
class RatMap {
public:
    RatMap(MPoly c0, MPoly c1, MPoly c2)
        : c_{std::move(c0), std::move(c1), std::move(c2)} {
        require_compatible(c_[0].table(), c_[1].table());
        require_compatible(c_[0].table(), c_[2].table());
        if (c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero())
            throw std::invalid_argument("zero map");
        auto geo = table()->geometric_ids();
        std::optional<unsigned long> deg;
        for (const auto& c : c_) {
            if (c.is_zero()) continue;
            auto d = c.homogeneous_degree(geo);
            if (!d) throw std::invalid_argument("map components not homogeneous");
            if (deg && *deg != *d) throw std::invalid_argument("component degrees differ");
            deg = d;
        }
        reduce();
        if (degree() < 1) throw std::invalid_argument("constant map");
    }

    const MPoly& component(std::size_t i) const { return c_.at(i); }
    const SymbolTablePtr& table() const { return c_[0].table(); }

    long degree() const {
        auto geo = table()->geometric_ids();
        for (const auto& c : c_)
            if (!c.is_zero()) return (long)*c.homogeneous_degree(geo);
        return -1;
    }

    bool is_numeric() const {
        return c_[0].is_numeric() && c_[1].is_numeric() && c_[2].is_numeric();
    }

    std::string to_string() const {
        return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() +
               ")";
    }

    bool proportional_to(const RatMap& other) const {
        require_compatible(table(), other.table());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (!(c_[i] * other.c_[j] - c_[j] * other.c_[i]).is_zero()) return false;
        return true;
    }

private:
    void reduce() {
        auto geo = table()->geometric_ids();
        Monomial content(table()->size());
        bool first = true;
        for (const auto& c : c_) {
            if (c.is_zero()) continue;
            Monomial m = c.content_monomial(geo);
            content = first ? m : Monomial::gcd(content, m);
            first = false;
        }
        if (!content.is_one())
            for (auto& c : c_) c = c.divide_by_monomial(content);
        if (is_numeric()) {
            MPoly g = gcd_homogeneous(gcd_homogeneous(c_[0], c_[1]), c_[2]);
            if (!g.is_constant())
                for (auto& c : c_) c = *c.trial_divide(g);
        }
    }

    std::array<MPoly, 3> c_;
};

inline RatMap make_linear(const SymbolTablePtr& t, const QMatrix& m) {
    if (m.size() != 3 || m[0].size() != 3) throw std::invalid_argument("expected a 3x3 matrix");
    if (is_zero(det3(m))) throw std::domain_error("singular matrix");
    std::array<MPoly, 3> c{MPoly::zero(t), MPoly::zero(t), MPoly::zero(t)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            c[i] += MPoly::variable(t, SymbolId{j}) * m[i][j];
    return RatMap(c[0], c[1], c[2]);
}

inline RatMap identity_map(const SymbolTablePtr& t) {
    return RatMap(MPoly::variable(t, SymbolId{0}), MPoly::variable(t, SymbolId{1}),
                  MPoly::variable(t, SymbolId{2}));
}

inline bool is_identity_proj(const RatMap& m) {
    if (m.degree() != 1) return false;
    return m.proportional_to(identity_map(m.table()));
}

inline RatMap inverse_linear(const RatMap& m) {
    if (m.degree() != 1) throw std::invalid_argument("inverse_linear: map is not linear");
    QMatrix mat(3, QVector(3, Rational(0)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            MPoly coeff = m.component(i).coefficient_in(SymbolId{j}, 1);
            // re-extract the scalar: component i is sum_j mat[i][j] * var_j
            Monomial unit(m.table()->size());
            auto it = coeff.terms().find(unit);
            if (it != coeff.terms().end()) mat[i][j] = it->second;
        }
    return make_linear(m.table(), inverse3(mat));
}

namespace detail {

/// After the monomial reduction inside the RatMap constructor a parametric
/// composition may still hide a non-monomial common factor; a random
/// specialization of the parameters detects that reliably.
inline void check_no_hidden_factor(const RatMap& m, const char* what) {
    if (m.is_numeric()) return;
    auto t = m.table();
    std::mt19937_64 rng(0x5eedf01dULL);
    std::uniform_int_distribution<int> dist(2, 97);
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::map<SymbolId, Rational> values;
        for (SymbolId i = t->geometric_count(); i < t->size(); ++i)
            values.emplace(i, Rational(dist(rng)));
        std::array<MPoly, 3> spec;
        bool degenerate = false;
        for (std::size_t i = 0; i < 3; ++i) {
            spec[i] = m.component(i).substitute_values(values);
            if (spec[i].is_zero()) degenerate = true;
        }
        if (degenerate) continue;
        MPoly g = gcd_homogeneous(gcd_homogeneous(spec[0], spec[1]), spec[2]);
        if (!g.is_constant())
            throw std::domain_error(std::string(what) +
                                    ": parametric input requires non-monomial reduction");
        return;
    }
}

}  // namespace detail

/// φ∘ψ with reduction by the common factor (monomial content always, full
/// gcd for numeric coefficients).
inline RatMap compose_reduce(const RatMap& phi, const RatMap& psi) {
    require_compatible(phi.table(), psi.table());
    std::map<SymbolId, MPoly> bind{{SymbolId{0}, psi.component(0)},
                                   {SymbolId{1}, psi.component(1)},
                                   {SymbolId{2}, psi.component(2)}};
    RatMap out(phi.component(0).substitute(bind), phi.component(1).substitute(bind),
               phi.component(2).substitute(bind));
    detail::check_no_hidden_factor(out, "compose_reduce");
    return out;
}

/// Word of maps, leftmost applied last (the composition reads as written:
/// l1·sigma·l2 means l1 ∘ sigma ∘ l2).
using MapWord = std::vector<RatMap>;

inline RatMap compose_word(const MapWord& word) {
    if (word.empty()) throw std::invalid_argument("empty word");
    RatMap acc = word.back();
    for (auto it = std::next(word.rbegin()); it != word.rend(); ++it)
        acc = compose_reduce(*it, acc);
    return acc;
}

inline bool verify_word(const MapWord& word, const RatMap& target) {
    return compose_word(word).proportional_to(target);
}

/// Raw (unreduced) pullback: component i of φ*ω is Σ_j ω_j(φ)·∂φ_j/∂x_i.
/// Homogeneous of degree m·k + k − 1 and Euler-null by construction.
inline Proj1Form pullback_raw(const RatMap& phi, const Proj1Form& w) {
    require_compatible(phi.table(), w.table());
    std::map<SymbolId, MPoly> bind{{SymbolId{0}, phi.component(0)},
                                   {SymbolId{1}, phi.component(1)},
                                   {SymbolId{2}, phi.component(2)}};
    std::array<MPoly, 3> at_phi = {w.A().substitute(bind), w.B().substitute(bind),
                                   w.C().substitute(bind)};
    std::array<MPoly, 3> out;
    for (SymbolId i = 0; i < 3; ++i) {
        MPoly acc = MPoly::zero(w.table());
        for (std::size_t j = 0; j < 3; ++j) acc += at_phi[j] * phi.component(j).derivative(i);
        out[i] = acc;
    }
    return Proj1Form(out[0], out[1], out[2]);
}

// ---- named maps of the quadratic and cubic calculus ----------------------

inline RatMap sigma_map(const SymbolTablePtr& t) {
    MPoly x = MPoly::variable(t, SymbolId{0}), y = MPoly::variable(t, SymbolId{1}),
          z = MPoly::variable(t, SymbolId{2});
    return RatMap(y * z, x * z, x * y);
}

inline RatMap rho_map(const SymbolTablePtr& t) {
    MPoly x = MPoly::variable(t, SymbolId{0}), y = MPoly::variable(t, SymbolId{1}),
          z = MPoly::variable(t, SymbolId{2});
    return RatMap(x * y, z * z, y * z);
}

inline RatMap tau_map(const SymbolTablePtr& t) {
    MPoly x = MPoly::variable(t, SymbolId{0}), y = MPoly::variable(t, SymbolId{1}),
          z = MPoly::variable(t, SymbolId{2});
    return RatMap(x * x, x * y, y * y - x * z);
}

inline RatMap psi_cubic_map(const SymbolTablePtr& t) {
    MPoly x = MPoly::variable(t, SymbolId{0}), y = MPoly::variable(t, SymbolId{1}),
          z = MPoly::variable(t, SymbolId{2});
    return RatMap(x * z * z + y * y * y, y * z * z, z * z * z);
}

/// phi(a,b) = (x·q : y·q : xyz) with q = x² + y² + a·xy + b·xz + yz.  The
/// excluded parameter locus is a² = 4 or b² − ab + 1 = 0 (the product
/// expansion of 2b ∈ {a ± √(a²−4)}); it is rejected for numeric a, b.
inline RatMap phi_ab_map(const SymbolTablePtr& t, const MPoly& a, const MPoly& b) {
    if (a.is_constant() && b.is_constant()) {
        Rational av = a.constant_value(), bv = b.constant_value();
        if (av * av == 4) throw std::domain_error("phi(a,b): a^2 = 4 excluded");
        if (bv * bv - av * bv + 1 == 0)
            throw std::domain_error("phi(a,b): b^2 - a*b + 1 = 0 excluded");
    }
    MPoly x = MPoly::variable(t, SymbolId{0}), y = MPoly::variable(t, SymbolId{1}),
          z = MPoly::variable(t, SymbolId{2});
    MPoly q = x * x + y * y + a * x * y + b * x * z + y * z;
    return RatMap(x * q, y * q, x * y * z);
}

inline RatMap phi_ab_map(const SymbolTablePtr& t, const Rational& a, const Rational& b) {
    return phi_ab_map(t, MPoly::constant(t, a), MPoly::constant(t, b));
}

namespace detail {
inline RatMap linear_from_rows(const SymbolTablePtr& t, std::array<std::array<long, 3>, 3> rows) {
    QMatrix m(3, QVector(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = Rational(rows[i][j]);
    return make_linear(t, m);
}
}  // namespace detail

/// Automorphism tables of the three factorization words.
inline RatMap rho_letter(const SymbolTablePtr& t, int i) {
    switch (i) {
        case 1: return detail::linear_from_rows(t, {{{0, -1, 1}, {-1, 1, 0}, {0, 1, 0}}});
        case 2: return detail::linear_from_rows(t, {{{0, 1, 1}, {0, 0, 1}, {1, 0, 0}}});
        case 3: return detail::linear_from_rows(t, {{{1, 0, 1}, {0, 1, -1}, {0, 0, 1}}});
    }
    throw std::out_of_range("rho letter index");
}

inline RatMap tau_letter(const SymbolTablePtr& t, int i) {
    switch (i) {
        case 1: return detail::linear_from_rows(t, {{{1, -1, 0}, {1, -2, 0}, {-1, 1, -1}}});
        case 2: return detail::linear_from_rows(t, {{{1, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
        case 3: return detail::linear_from_rows(t, {{{0, -1, 0}, {1, -3, 1}, {1, 0, 0}}});
        case 4: return detail::linear_from_rows(t, {{{-1, 1, 0}, {-2, 0, 1}, {2, -1, 0}}});
    }
    throw std::out_of_range("tau letter index");
}

inline RatMap psi_letter(const SymbolTablePtr& t, int i) {
    switch (i) {
        case 1: return detail::linear_from_rows(t, {{{0, -1, 1}, {0, 1, 0}, {-1, 1, 0}}});
        case 2: return detail::linear_from_rows(t, {{{0, 1, 1}, {0, 0, 1}, {1, 0, 0}}});
        case 3: return detail::linear_from_rows(t, {{{0, 0, -1}, {0, -1, 0}, {1, -1, 0}}});
        case 4: return detail::linear_from_rows(t, {{{1, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
        case 5: return detail::linear_from_rows(t, {{{0, -1, 0}, {1, -3, 1}, {1, 0, 0}}});
        case 6: return detail::linear_from_rows(t, {{{-1, 0, 0}, {0, -1, -1}, {1, 1, 0}}});
        case 7: return detail::linear_from_rows(t, {{{1, 1, 0}, {0, -1, 1}, {0, 1, 0}}});
    }
    throw std::out_of_range("psi letter index");
}

inline MapWord rho_word(const SymbolTablePtr& t) {
    RatMap s = sigma_map(t);
    return {rho_letter(t, 1), s, rho_letter(t, 2), s, rho_letter(t, 3)};
}

inline MapWord tau_word(const SymbolTablePtr& t) {
    RatMap s = sigma_map(t);
    return {tau_letter(t, 1), s, tau_letter(t, 2), s, tau_letter(t, 3),
            s, tau_letter(t, 2), s, tau_letter(t, 4)};
}

inline MapWord psi_word(const SymbolTablePtr& t) {
    RatMap s = sigma_map(t);
    return {psi_letter(t, 1), s, psi_letter(t, 2), s, psi_letter(t, 3), s, psi_letter(t, 4), s,
            psi_letter(t, 5), s, psi_letter(t, 4), s, psi_letter(t, 6), s, psi_letter(t, 2),
            s, psi_letter(t, 7)};
}

}  // namespace cremfol

#endif
