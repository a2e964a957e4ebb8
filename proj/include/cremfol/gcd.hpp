#ifndef CREMFOL_GCD_HPP
#define CREMFOL_GCD_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "mpoly.hpp"

namespace cremfol {

namespace detail {

inline MPoly exact_quotient(const MPoly& p, const MPoly& d, const char* where) {
    auto q = p.trial_divide(d);
    if (!q) throw std::logic_error(std::string("inexact division in ") + where);
    return *q;
}

/// lc(b)^(deg a - deg b + 1) * a  =  q*b + prem; returns prem.
inline MPoly pseudo_remainder(const MPoly& a, const MPoly& b, SymbolId v) {
    long db = b.degree_in(v);
    if (db < 0) throw std::domain_error("pseudo-division by zero");
    MPoly lcb = b.leading_coefficient_in(v);
    MPoly r = a;
    long e = a.degree_in(v) - db + 1;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        long dr = r.degree_in(v);
        MPoly lcr = r.leading_coefficient_in(v);
        MPoly shift = MPoly::variable(r.table(), v, (std::uint32_t)(dr - db));
        r = lcb * r - lcr * shift * b;
        --e;
    }
    for (; e > 0; --e) r = r * lcb;
    return r;
}

inline std::vector<SymbolId> symbols_of(const MPoly& p) {
    std::vector<SymbolId> out;
    for (SymbolId i = 0; i < p.table()->size(); ++i)
        if (p.depends_on(i)) out.push_back(i);
    return out;
}

inline MPoly gcd_impl(const MPoly& p, const MPoly& q);

/// Content of p viewed univariately in v: gcd of the coefficient polynomials.
inline MPoly content_in(const MPoly& p, SymbolId v) {
    MPoly c(p.table());
    for (long k = 0; k <= p.degree_in(v); ++k) {
        MPoly coeff = p.coefficient_in(v, (std::uint32_t)k);
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? coeff : gcd_impl(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

/// Recursive gcd through a subresultant polynomial-remainder sequence in the
/// lowest-index variable common to both inputs, with primitive-part recovery.
inline MPoly gcd_impl(const MPoly& p, const MPoly& q) {
    auto normalize = [](const MPoly& f) { return f / f.leading_coefficient(); };
    if (p.is_zero()) return q.is_zero() ? q : normalize(q);
    if (q.is_zero()) return normalize(p);
    if (p.is_constant() || q.is_constant()) return MPoly::constant(p.table(), Rational(1));

    // shared monomial content first
    std::vector<SymbolId> all(p.table()->size());
    for (SymbolId i = 0; i < all.size(); ++i) all[i] = i;
    Monomial mc = Monomial::gcd(p.content_monomial(all), q.content_monomial(all));
    MPoly a = p.divide_by_monomial(p.content_monomial(all));
    MPoly b = q.divide_by_monomial(q.content_monomial(all));
    MPoly monomial_part = MPoly::term(p.table(), mc, Rational(1));

    if (a.is_constant() || b.is_constant()) return normalize(monomial_part);

    // main variable: lowest shared index
    SymbolId v = 0;
    bool found = false;
    for (SymbolId i = 0; i < p.table()->size() && !found; ++i)
        if (a.depends_on(i) && b.depends_on(i)) {
            v = i;
            found = true;
        }
    if (!found) return normalize(monomial_part);

    MPoly ca = content_in(a, v);
    MPoly cb = content_in(b, v);
    MPoly c = gcd_impl(ca, cb);
    a = exact_quotient(a, ca, "primitive part");
    b = exact_quotient(b, cb, "primitive part");
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);

    MPoly one = MPoly::constant(p.table(), Rational(1));
    MPoly g = one, h = one;
    while (true) {
        long delta = a.degree_in(v) - b.degree_in(v);
        MPoly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            b = one;
            break;
        }
        a = b;
        MPoly divisor = g;
        for (long i = 0; i < delta; ++i) divisor = divisor * h;
        b = exact_quotient(r, divisor, "subresultant step");
        g = a.leading_coefficient_in(v);
        if (delta > 0) {
            MPoly gd = g;
            for (long i = 1; i < delta; ++i) gd = gd * g;
            MPoly hd = one;
            for (long i = 1; i < delta; ++i) hd = hd * h;
            h = exact_quotient(gd, hd, "subresultant h");
        }
    }
    if (!b.is_constant()) b = exact_quotient(b, content_in(b, v), "primitive recovery");
    else b = one;
    return normalize(monomial_part * c * b);
}

}  // namespace detail

/// Gcd over Q[symbols], normalized to leading coefficient 1 in graded-lex
/// order.  gcd(0,0) = 0.
inline MPoly gcd(const MPoly& p, const MPoly& q) {
    require_compatible(p.table(), q.table());
    return detail::gcd_impl(p, q);
}

/// Public contract of the kernel gcd: both inputs homogeneous in the
/// geometric variables with numeric coefficients (parametric gcd is
/// unsupported by design).
inline MPoly gcd_homogeneous(const MPoly& p, const MPoly& q) {
    require_compatible(p.table(), q.table());
    if (!p.is_numeric() || !q.is_numeric())
        throw std::invalid_argument("gcd_homogeneous: parameter symbols present");
    auto geo = p.table()->geometric_ids();
    if (!p.is_zero() && !p.homogeneous_degree(geo))
        throw std::invalid_argument("gcd_homogeneous: first input not homogeneous");
    if (!q.is_zero() && !q.homogeneous_degree(geo))
        throw std::invalid_argument("gcd_homogeneous: second input not homogeneous");
    return detail::gcd_impl(p, q);
}

/// Sylvester resultant eliminating v, computed by fraction-free Bareiss
/// elimination on the Sylvester matrix.
inline MPoly resultant(const MPoly& p, const MPoly& q, SymbolId v) {
    require_compatible(p.table(), q.table());
    if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
    long m = p.degree_in(v), n = q.degree_in(v);
    if (m == 0 && n == 0) throw std::domain_error("resultant: neither input contains the variable");
    auto table = p.table();
    if (m == 0) return p.pow((unsigned)n);
    if (n == 0) return q.pow((unsigned)m);

    std::size_t size = (std::size_t)(m + n);
    MPoly zero = MPoly::zero(table);
    std::vector<std::vector<MPoly>> mat(size, std::vector<MPoly>(size, zero));
    for (long row = 0; row < n; ++row)
        for (long k = 0; k <= m; ++k)
            mat[(std::size_t)row][(std::size_t)(row + k)] = p.coefficient_in(v, (std::uint32_t)(m - k));
    for (long row = 0; row < m; ++row)
        for (long k = 0; k <= n; ++k)
            mat[(std::size_t)(n + row)][(std::size_t)(row + k)] = q.coefficient_in(v, (std::uint32_t)(n - k));

    // Bareiss: exact divisions by the previous pivot
    MPoly prev = MPoly::constant(table, Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && mat[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == size) return zero;
            std::swap(mat[k], mat[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                MPoly num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mat[i][j] = detail::exact_quotient(num, prev, "bareiss");
            }
            mat[i][k] = zero;
        }
        prev = mat[k][k];
    }
    MPoly det = mat[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

inline MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) {
    return resultant(p, q, p.table()->id(var));
}

}  // namespace cremfol

#endif
