#pragma once

#include "gessel/laurent.hpp"

#include <span>
#include <vector>

namespace gessel {

enum class Part { CT, PT, NT };

// Power series in t truncated at an inclusive order N, with Laurent
// polynomial coefficients. Every operation is exact modulo t^{N+1};
// binary operations truncate to the smaller order and equality compares
// only up to the smaller order.
class TSeries {
public:
    explicit TSeries(int trunc) : coeffs_(static_cast<std::size_t>(trunc) + 1) {}
    TSeries(int trunc, const LaurentPoly& c0) : TSeries(trunc) { coeffs_[0] = c0; }

    static TSeries constant(int trunc, const Rational& c) {
        return TSeries(trunc, LaurentPoly(c));
    }
    static TSeries one(int trunc) { return constant(trunc, Rational(1)); }

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    const LaurentPoly& at(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    void set(int n, LaurentPoly p) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(p); }

    bool is_zero() const;

    TSeries operator+(const TSeries& g) const;
    TSeries operator-(const TSeries& g) const;
    TSeries operator-() const;
    TSeries operator*(const TSeries& g) const;
    TSeries operator*(const Rational& c) const;

    // Comparison up to the smaller truncation order.
    friend bool operator==(const TSeries& f, const TSeries& g);

    // Number of walks: coefficient of x^i y^j t^n, summed over the mark slot.
    Rational coeff(std::int64_t i, std::int64_t j, int n) const;

    // Re-truncate (down or up; new orders are zero).
    TSeries truncated(int new_trunc) const;

private:
    std::vector<LaurentPoly> coeffs_; // coeffs_[n] multiplies t^n
};

// Multiplicative inverse; requires the t^0 coefficient to be the constant 1.
TSeries ts_inv(const TSeries& f);

// log(f) for f with t^0 coefficient 1; exp(g) for g with t^0 coefficient 0.
TSeries ts_log(const TSeries& f);
TSeries ts_exp(const TSeries& g);

// Termwise d/dt (truncation drops by one) and integral dt with constant 0
// (truncation rises by one).
TSeries ts_deriv_t(const TSeries& f);
TSeries ts_integrate_t(const TSeries& f);

// Apply the constant-term / nonnegative-part / negative-part operator with
// respect to a grading, coefficient by coefficient.
TSeries ts_project(const TSeries& f, Part which, const Grading& g);

// Evaluate the polynomial sum c_k * arg^k; arg must have zero t^0 coefficient.
TSeries ts_poly_eval(std::span<const TSeries> coeffs, const TSeries& arg);

// f / g where the t^0 coefficient of g is a nonzero rational constant.
TSeries ts_div_unit(const TSeries& f, const TSeries& g);

// Series of the constant terms [x^p y^0] of each t-coefficient (marks summed).
TSeries ts_extract_x(const TSeries& f, std::int64_t p);

} // namespace gessel
