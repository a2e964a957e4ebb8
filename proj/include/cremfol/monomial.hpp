#ifndef CREMFOL_MONOMIAL_HPP
#define CREMFOL_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "symbols.hpp"

namespace cremfol {

/// Exponent vector indexed by a SymbolTable.  The table itself is carried by
/// the polynomial owning the monomial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n_symbols) : exps_(n_symbols, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t n_symbols, SymbolId var, std::uint32_t e = 1) {
        Monomial m(n_symbols);
        m.exps_[var] = e;
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    std::uint32_t exp(SymbolId i) const { return exps_[i]; }
    void set_exp(SymbolId i, std::uint32_t e) { exps_[i] = e; }

    std::uint64_t total_degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    std::uint64_t degree_over(const std::vector<SymbolId>& vars) const {
        std::uint64_t d = 0;
        for (SymbolId v : vars) d += exps_[v];
        return d;
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
        return out;
    }

    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const {
        Monomial out(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (other.exps_[i] > exps_[i]) throw std::domain_error("monomial quotient undefined");
            out.exps_[i] -= other.exps_[i];
        }
        return out;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial out(a);
        for (std::size_t i = 0; i < out.exps_.size(); ++i)
            out.exps_[i] = std::min(out.exps_[i], b.exps_[i]);
        return out;
    }

    /// Restriction to a variable subset (other exponents zeroed).
    Monomial restricted_to(const std::vector<SymbolId>& vars) const {
        Monomial out(exps_.size());
        for (SymbolId v : vars) out.exps_[v] = exps_[v];
        return out;
    }

    Monomial without(const std::vector<SymbolId>& vars) const {
        Monomial out(*this);
        for (SymbolId v : vars) out.exps_[v] = 0;
        return out;
    }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

    /// Graded lexicographic order on the fixed symbol order.
    static int cmp_grlex(const Monomial& a, const Monomial& b) {
        std::uint64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? -1 : 1;
        return 0;
    }

    std::string to_string(const SymbolTable& table) const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += table.name(i);
            if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<std::uint32_t> exps_;
};

/// Descending graded-lex comparator: map iteration starts at the leading term.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_grlex(a, b) > 0;
    }
};

}  // namespace cremfol

#endif
