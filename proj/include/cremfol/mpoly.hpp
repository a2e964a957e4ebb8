#ifndef CREMFOL_MPOLY_HPP
#define CREMFOL_MPOLY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"
#include "symbols.hpp"

namespace cremfol {

/// Sparse exact-rational multivariate polynomial over a shared symbol table.
/// Terms are kept in descending graded-lex order; zero coefficients are never
/// stored, so the zero polynomial is the empty map and iteration order (hence
/// serialization) is deterministic.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    MPoly() = default;
    explicit MPoly(SymbolTablePtr table) : table_(std::move(table)) {}

    static MPoly zero(SymbolTablePtr table) { return MPoly(std::move(table)); }

    static MPoly constant(SymbolTablePtr table, Rational value) {
        MPoly p(std::move(table));
        if (!cremfol::is_zero(value)) p.terms_.emplace(Monomial(p.table_->size()), std::move(value));
        return p;
    }

    static MPoly variable(SymbolTablePtr table, SymbolId var, std::uint32_t e = 1) {
        MPoly p(table);
        p.terms_.emplace(Monomial::unit(table->size(), var, e), Rational(1));
        return p;
    }

    static MPoly variable(const SymbolTablePtr& table, const std::string& name,
                          std::uint32_t e = 1) {
        return variable(table, table->id(name), e);
    }

    static MPoly term(SymbolTablePtr table, Monomial m, Rational c) {
        MPoly p(std::move(table));
        if (!cremfol::is_zero(c)) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const SymbolTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() &&
               terms_.begin()->second == 1;
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("not a constant polynomial");
        return terms_.begin()->second;
    }

    const Monomial& leading_monomial() const {
        require_nonzero();
        return terms_.begin()->first;
    }

    const Rational& leading_coefficient() const {
        require_nonzero();
        return terms_.begin()->second;
    }

    /// Total degree over all symbols; -1 for the zero polynomial.
    long total_degree() const {
        return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.total_degree());
    }

    long degree_over(const std::vector<SymbolId>& vars) const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, (long)m.degree_over(vars));
        return d;
    }

    long degree_in(SymbolId var) const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, (long)m.exp(var));
        return d;
    }

    bool depends_on(SymbolId var) const {
        for (const auto& [m, c] : terms_)
            if (m.exp(var) > 0) return true;
        return false;
    }

    /// True when no parameter symbol occurs (purely geometric coefficients).
    bool is_numeric() const {
        for (const auto& [m, c] : terms_)
            for (SymbolId i = table_->geometric_count(); i < table_->size(); ++i)
                if (m.exp(i) > 0) return false;
        return true;
    }

    // ---- ring operations ----------------------------------------------

    MPoly& operator+=(const MPoly& other) {
        require_compatible(table_, other.table_);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& other) {
        require_compatible(table_, other.table_);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    MPoly operator+(const MPoly& other) const {
        MPoly out(*this);
        out += other;
        return out;
    }

    MPoly operator-(const MPoly& other) const {
        MPoly out(*this);
        out -= other;
        return out;
    }

    MPoly operator-() const {
        MPoly out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    MPoly operator*(const MPoly& other) const {
        require_compatible(table_, other.table_);
        MPoly out(table_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    MPoly& operator*=(const MPoly& other) { return *this = *this * other; }

    MPoly operator*(const Rational& s) const {
        MPoly out(table_);
        if (cremfol::is_zero(s)) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
        return out;
    }

    MPoly operator/(const Rational& s) const {
        if (cremfol::is_zero(s)) throw std::domain_error("division by zero scalar");
        return *this * (Rational(1) / s);
    }

    MPoly pow(unsigned int e) const {
        MPoly out = constant(table_, Rational(1));
        MPoly base(*this);
        while (e > 0) {
            if (e & 1u) out = out * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return out;
    }

    bool operator==(const MPoly& other) const {
        return compatible(table_, other.table_) && terms_ == other.terms_;
    }
    bool operator!=(const MPoly& other) const { return !(*this == other); }

    // ---- calculus and structure ----------------------------------------

    MPoly derivative(SymbolId var) const {
        if (var >= table_->size()) throw std::out_of_range("unknown symbol");
        MPoly out(table_);
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exp(var);
            if (e == 0) continue;
            Monomial dm = m;
            dm.set_exp(var, e - 1);
            out.add_term(dm, c * Rational(e));
        }
        return out;
    }

    MPoly derivative(const std::string& var) const { return derivative(table_->id(var)); }

    /// Exact simultaneous substitution of symbols by polynomials of the same
    /// table; unbound symbols map to themselves.
    MPoly substitute(const std::map<SymbolId, MPoly>& bindings) const {
        for (const auto& [v, p] : bindings) {
            if (v >= table_->size()) throw std::out_of_range("unknown symbol");
            require_compatible(table_, p.table_);
        }
        MPoly out(table_);
        // power caches keyed by symbol
        std::map<SymbolId, std::vector<MPoly>> powers;
        for (const auto& [m, c] : terms_) {
            MPoly t = constant(table_, c);
            Monomial residual(table_->size());
            for (SymbolId v = 0; v < table_->size(); ++v) {
                std::uint32_t e = m.exp(v);
                if (e == 0) continue;
                auto it = bindings.find(v);
                if (it == bindings.end()) {
                    residual.set_exp(v, e);
                    continue;
                }
                auto& cache = powers[v];
                if (cache.empty()) cache.push_back(constant(table_, Rational(1)));
                while (cache.size() <= e) cache.push_back(cache.back() * it->second);
                t = t * cache[e];
            }
            if (!residual.is_one()) t = t * term(table_, residual, Rational(1));
            out += t;
        }
        return out;
    }

    MPoly substitute(const std::map<std::string, MPoly>& bindings) const {
        std::map<SymbolId, MPoly> by_id;
        for (const auto& [name, p] : bindings) by_id.emplace(table_->id(name), p);
        return substitute(by_id);
    }

    MPoly substitute_values(const std::map<SymbolId, Rational>& values) const {
        std::map<SymbolId, MPoly> bindings;
        for (const auto& [v, r] : values) bindings.emplace(v, constant(table_, r));
        return substitute(bindings);
    }

    /// Degree d when every term has total degree d over the given variables
    /// (other symbols weigh zero); nullopt otherwise or for the zero poly.
    std::optional<unsigned long> homogeneous_degree(const std::vector<SymbolId>& vars) const {
        if (terms_.empty()) return std::nullopt;
        std::uint64_t d = terms_.begin()->first.degree_over(vars);
        for (const auto& [m, c] : terms_)
            if (m.degree_over(vars) != d) return std::nullopt;
        return (unsigned long)d;
    }

    /// Exact quotient p/d, or nullopt when d does not divide p.
    std::optional<MPoly> trial_divide(const MPoly& d) const {
        require_compatible(table_, d.table_);
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        MPoly q(table_);
        MPoly r(*this);
        const Monomial& dlm = d.leading_monomial();
        const Rational& dlc = d.leading_coefficient();
        while (!r.is_zero()) {
            const Monomial& rlm = r.leading_monomial();
            if (!dlm.divides(rlm)) return std::nullopt;
            MPoly t = term(table_, rlm / dlm, r.leading_coefficient() / dlc);
            q += t;
            r -= t * d;
        }
        return q;
    }

    /// Largest monomial in the given variables dividing every term.
    Monomial content_monomial(const std::vector<SymbolId>& vars) const {
        require_nonzero();
        auto it = terms_.begin();
        Monomial content = it->first.restricted_to(vars);
        for (++it; it != terms_.end(); ++it) {
            content = Monomial::gcd(content, it->first.restricted_to(vars));
            if (content.is_one()) break;
        }
        return content;
    }

    MPoly divide_by_monomial(const Monomial& m) const {
        MPoly out(table_);
        for (const auto& [mono, c] : terms_) out.terms_.emplace(mono / m, c);
        return out;
    }

    MPoly multiply_by_monomial(const Monomial& m) const {
        MPoly out(table_);
        for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
        return out;
    }

    /// Group terms by their monomial part in `vars`; each group's cofactor
    /// polynomial keeps the remaining symbols.  Deterministic (descending)
    /// group order.
    std::vector<std::pair<Monomial, MPoly>> collect_by(const std::vector<SymbolId>& vars) const {
        std::map<Monomial, MPoly, GrlexDescending> groups;
        for (const auto& [m, c] : terms_) {
            Monomial key = m.restricted_to(vars);
            auto [it, fresh] = groups.try_emplace(key, table_);
            it->second.add_term(m / key, c);
        }
        return {groups.begin(), groups.end()};
    }

    /// Coefficient of var^k viewed as a univariate polynomial in `var`.
    MPoly coefficient_in(SymbolId var, std::uint32_t k) const {
        MPoly out(table_);
        for (const auto& [m, c] : terms_) {
            if (m.exp(var) != k) continue;
            Monomial rest = m;
            rest.set_exp(var, 0);
            out.add_term(rest, c);
        }
        return out;
    }

    MPoly leading_coefficient_in(SymbolId var) const {
        long d = degree_in(var);
        if (d < 0) throw std::domain_error("zero polynomial");
        return coefficient_in(var, (std::uint32_t)d);
    }

    /// Embed into a compatible-or-larger table, matching symbols by name.
    MPoly lift_to(const SymbolTablePtr& target) const {
        if (compatible(table_, target)) {
            MPoly out = *this;
            out.table_ = target;
            return out;
        }
        MPoly out(target);
        for (const auto& [m, c] : terms_) {
            Monomial lifted(target->size());
            for (SymbolId i = 0; i < table_->size(); ++i)
                if (m.exp(i) > 0) lifted.set_exp(target->id(table_->name(i)), m.exp(i));
            out.add_term(lifted, c);
        }
        return out;
    }

    /// Canonical text form: descending term order, explicit '*' and '^',
    /// rationals as p/q, e.g. "2*x^2*y - 1/3*z^3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = abs(c);
            bool negative = sgn(c) < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            bool leading_negative = out == "-";
            first = false;
            if (m.is_one()) {
                out += cremfol::to_string(a);
            } else if (a == 1 && !leading_negative) {
                out += m.to_string(*table_);
            } else {
                // a leading '-' needs an explicit coefficient to stay parseable
                out += cremfol::to_string(a) + "*" + m.to_string(*table_);
            }
        }
        return out;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (cremfol::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (cremfol::is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial");
    }

    SymbolTablePtr table_;
    TermMap terms_;
};

inline MPoly operator*(const Rational& s, const MPoly& p) { return p * s; }

}  // namespace cremfol

#endif
