#include "gessel/kernel.hpp"

#include <stdexcept>

namespace gessel {

namespace {

LaurentPoly b_poly() {
    LaurentPoly b;
    b.add_term(ExponentKey{1, 0, 0}, Rational(1));
    b.add_term(ExponentKey{-1, 0, 0}, Rational(1));
    return b;
}

Rational pow_int(long base, long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return Rational(r);
}

Rational binom(std::int64_t A, std::int64_t B) {
    if (A < 0 || B < 0 || B > A) return Rational(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(A),
                 static_cast<unsigned long>(B));
    return Rational(r);
}

// binom(A, twoB/2), with the convention that a half-integer lower index
// gives 0.
Rational binom_half(std::int64_t A, std::int64_t twoB) {
    if (twoB % 2 != 0) return Rational(0);
    return binom(A, twoB / 2);
}

Rational factorial(std::int64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational multinom(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != n) return Rational(0);
    return factorial(n) / (factorial(a) * factorial(b) * factorial(c));
}

// y - t(y^3 + by + 1) as a kernel polynomial at truncation N.
KernelPoly q2_kernel(int N) {
    LaurentPoly b = b_poly();
    TSeries c0(N), c1 = TSeries::one(N), c2(N), c3(N);
    if (N >= 1) {
        c0.set(1, LaurentPoly(Rational(-1)));
        c1.set(1, -b);
        c3.set(1, LaurentPoly(Rational(-1)));
    }
    return KernelPoly{{c0, c1, c2, c3}};
}

// 4(1 - bt)^3 - 27 t^3
TSeries q2_denominator(int N) {
    TSeries one_minus_bt = TSeries::one(N);
    if (N >= 1) one_minus_bt.set(1, -b_poly());
    TSeries D = one_minus_bt * one_minus_bt * one_minus_bt * Rational(4);
    if (N >= 3) D.set(3, D.at(3) - LaurentPoly(Rational(27)));
    return D;
}

} // namespace

Rational KernelPoly::leading() const {
    if (coeffs.size() < 2)
        throw std::invalid_argument("kernel polynomial must have a y^1 term");
    if (!coeffs[0].at(0).is_zero())
        throw std::invalid_argument("kernel polynomial: [y^0] G(y,0) must vanish");
    const LaurentPoly& c1 = coeffs[1].at(0);
    if (c1.term_count() != 1 || c1.coeff(ExponentKey{}) == 0)
        throw std::invalid_argument(
            "kernel polynomial: [y^1] G(y,0) must be a nonzero constant");
    return c1.coeff(ExponentKey{});
}

TSeries solve_positive_root(const KernelPoly& G, int N) {
    Rational a = G.leading();
    TSeries y(N);
    for (int pass = 0; pass <= N; ++pass) {
        TSeries next = y - ts_poly_eval(G.coeffs, y) * (1 / a);
        if (next == y) break;
        y = next;
    }
    return y;
}

TSeries ct_residue(const KernelPoly& F, const KernelPoly& G, int N) {
    TSeries Y = solve_positive_root(G, N);
    std::vector<TSeries> dG;
    for (std::size_t k = 1; k < G.coeffs.size(); ++k)
        dG.push_back(G.coeffs[k] * Rational(static_cast<long>(k)));
    return ts_div_unit(ts_poly_eval(F.coeffs, Y), ts_poly_eval(dG, Y));
}

TSeries q2_logderiv(int N) {
    LaurentPoly b = b_poly();
    TSeries D = q2_denominator(N);

    // (4b^3 + 27) t^2 - 8 b^2 t + 4b
    TSeries num1(N, b * Rational(4));
    if (N >= 1) num1.set(1, b * b * Rational(-8));
    if (N >= 2) num1.set(2, b * b * b * Rational(4) + LaurentPoly(Rational(27)));

    TSeries Y = solve_positive_root(q2_kernel(N), N);
    TSeries tY(N);
    for (int n = 1; n <= N; ++n) tY.set(n, Y.at(n - 1));

    return ts_div_unit(num1 + tY * Rational(9), D);
}

TSeries q2_s10(int N) {
    TSeries log_sx = ts_integrate_t(q2_logderiv(std::max(N - 1, 0))).truncated(N);
    return ts_extract_x(log_sx, 1);
}

LaurentPoly lagrange_Y_coeff(int n) {
    if (n < 1) throw std::invalid_argument("lagrange_Y_coeff: n must be >= 1");
    // P(y) = 1 + by + y^3, with b living in the x slot
    LaurentPoly P = LaurentPoly::one();
    P.add_term(ExponentKey{1, 1, 0}, Rational(1));
    P.add_term(ExponentKey{0, 3, 0}, Rational(1));
    LaurentPoly Pn = LaurentPoly::one();
    for (int k = 0; k < n; ++k) Pn = Pn * P;

    LaurentPoly r;
    for (const auto& [key, c] : Pn.terms())
        if (key.ey == n - 1)
            r.add_term(ExponentKey{key.ex, 0, 0}, c * rat(1, n));
    return r;
}

LaurentPoly lagrange_Y_coeff_literal(int n) {
    if (n < 1) throw std::invalid_argument("lagrange_Y_coeff_literal: n must be >= 1");
    LaurentPoly r;
    for (std::int64_t k = 0; 3 * k + 1 <= n; ++k)
        r.add_term(ExponentKey{n - 3 * k - 1, 0, 0},
                   multinom(n, k, 2 * k + 1, n - 3 * k - 1));
    return r;
}

LaurentPoly expand_b(const LaurentPoly& poly_in_b) {
    LaurentPoly b = b_poly();
    LaurentPoly r;
    for (const auto& [key, c] : poly_in_b.terms()) {
        LaurentPoly bp = LaurentPoly::one();
        for (std::int64_t m = 0; m < key.ex; ++m) bp = bp * b;
        r += bp * c;
    }
    return r;
}

std::vector<Rational> closed_form_a10(int n_max) {
    std::vector<Rational> out;
    for (std::int64_t N = 1; N <= n_max; ++N) {
        Rational total = binom_half(N, N - 1);
        for (std::int64_t n = 1; 3 * n <= N; ++n)
            total += pow_int(3, 3 * n - 1) / (Rational(n) * pow_int(2, 2 * n)) *
                     binom(N - 1, 3 * n - 1) * binom_half(N - 3 * n, N - 3 * n);
        for (std::int64_t n = 1; n <= N; ++n)
            for (std::int64_t m = 0; 3 * m <= N - n - 2; ++m)
                for (std::int64_t k = 0; 3 * k <= n - 1; ++k)
                    total += pow_int(3, 3 * m + 2) /
                             (Rational(n) * Rational(N) * pow_int(2, 2 * m + 2)) *
                             multinom(n, k, 2 * k + 1, n - 3 * k - 1) *
                             binom(N - n, 3 * m + 2) *
                             binom_half(N - 3 * m - 3 * k - 3, N - 3 * m - 3 * k - 4);
        out.push_back(total);
    }
    return out;
}

} // namespace gessel
