#include "gessel/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gessel {

namespace {

bool is_const_one(const LaurentPoly& p) {
    return p.term_count() == 1 && p.coeff(ExponentKey{}) == 1;
}

} // namespace

bool TSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const LaurentPoly& p) { return p.is_zero(); });
}

TSeries TSeries::operator+(const TSeries& g) const {
    TSeries r(std::min(trunc(), g.trunc()));
    for (int n = 0; n <= r.trunc(); ++n) r.set(n, at(n) + g.at(n));
    return r;
}

TSeries TSeries::operator-(const TSeries& g) const { return *this + (-g); }

TSeries TSeries::operator-() const {
    TSeries r(trunc());
    for (int n = 0; n <= trunc(); ++n) r.set(n, -at(n));
    return r;
}

TSeries TSeries::operator*(const TSeries& g) const {
    TSeries r(std::min(trunc(), g.trunc()));
    for (int n = 0; n <= r.trunc(); ++n) {
        LaurentPoly c;
        for (int k = 0; k <= n; ++k) c += at(k) * g.at(n - k);
        r.set(n, std::move(c));
    }
    return r;
}

TSeries TSeries::operator*(const Rational& c) const {
    TSeries r(trunc());
    for (int n = 0; n <= trunc(); ++n) r.set(n, at(n) * c);
    return r;
}

bool operator==(const TSeries& f, const TSeries& g) {
    int n = std::min(f.trunc(), g.trunc());
    for (int k = 0; k <= n; ++k)
        if (!(f.at(k) == g.at(k))) return false;
    return true;
}

Rational TSeries::coeff(std::int64_t i, std::int64_t j, int n) const {
    if (n < 0 || n > trunc())
        throw std::invalid_argument("TSeries::coeff: order exceeds truncation");
    return at(n).coeff_xy(i, j);
}

TSeries TSeries::truncated(int new_trunc) const {
    TSeries r(new_trunc);
    for (int n = 0; n <= std::min(new_trunc, trunc()); ++n) r.set(n, at(n));
    return r;
}

TSeries ts_inv(const TSeries& f) {
    if (!is_const_one(f.at(0)))
        throw std::invalid_argument("ts_inv: t^0 coefficient must be 1");
    int N = f.trunc();
    TSeries g = TSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        LaurentPoly c;
        for (int k = 1; k <= n; ++k) c += f.at(k) * g.at(n - k);
        g.set(n, -c);
    }
    return g;
}

TSeries ts_log(const TSeries& f) {
    if (!is_const_one(f.at(0)))
        throw std::invalid_argument("ts_log: t^0 coefficient must be 1");
    int N = f.trunc();
    TSeries u = f - TSeries::one(N); // positive t-order
    TSeries r(N);
    TSeries upow = u;
    for (int k = 1; k <= N; ++k) {
        Rational c = rat(k % 2 == 1 ? 1 : -1, k);
        r = r + upow * c;
        if (k < N) upow = upow * u;
    }
    return r;
}

TSeries ts_exp(const TSeries& g) {
    if (!g.at(0).is_zero())
        throw std::invalid_argument("ts_exp: t^0 coefficient must be 0");
    int N = g.trunc();
    TSeries r = TSeries::one(N);
    TSeries gpow = TSeries::one(N);
    Rational fact(1);
    for (int k = 1; k <= N; ++k) {
        gpow = gpow * g;
        fact *= k;
        r = r + gpow * (1 / fact);
    }
    return r;
}

TSeries ts_deriv_t(const TSeries& f) {
    int N = std::max(f.trunc() - 1, 0);
    TSeries r(N);
    for (int n = 0; n <= N && n + 1 <= f.trunc(); ++n)
        r.set(n, f.at(n + 1) * Rational(n + 1));
    return r;
}

TSeries ts_integrate_t(const TSeries& f) {
    TSeries r(f.trunc() + 1);
    for (int n = 0; n <= f.trunc(); ++n) r.set(n + 1, f.at(n) * rat(1, n + 1));
    return r;
}

TSeries ts_project(const TSeries& f, Part which, const Grading& g) {
    TSeries r(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n) {
        auto s = f.at(n).split(g);
        switch (which) {
        case Part::CT: r.set(n, std::move(s.zero)); break;
        case Part::PT: r.set(n, s.zero + s.pos); break;
        case Part::NT: r.set(n, std::move(s.neg)); break;
        }
    }
    return r;
}

TSeries ts_poly_eval(std::span<const TSeries> coeffs, const TSeries& arg) {
    if (!arg.at(0).is_zero())
        throw std::invalid_argument("ts_poly_eval: argument must have zero t^0 coefficient");
    int N = arg.trunc();
    for (const TSeries& c : coeffs) N = std::min(N, c.trunc());
    TSeries r(N);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = r * arg + it->truncated(N);
    return r;
}

TSeries ts_div_unit(const TSeries& f, const TSeries& g) {
    const LaurentPoly& g0 = g.at(0);
    if (g0.term_count() != 1)
        throw std::invalid_argument("ts_div_unit: t^0 coefficient of divisor must be a constant");
    Rational a = g0.coeff(ExponentKey{});
    if (a == 0)
        throw std::invalid_argument("ts_div_unit: divisor has zero constant term");
    return f * ts_inv(g * (1 / a)) * (1 / a);
}

TSeries ts_extract_x(const TSeries& f, std::int64_t p) {
    TSeries r(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n)
        r.set(n, LaurentPoly(f.at(n).coeff_xy(p, 0)));
    return r;
}

} // namespace gessel
