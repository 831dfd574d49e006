#pragma once

#include "gessel/series.hpp"

#include <vector>

namespace gessel {

// Polynomial G(y, t) = sum c_k(x, t) y^k in the kernel variable y, with
// series coefficients. Admissible when G(y, 0) = a*y + higher powers of y
// with a nonzero constant a.
struct KernelPoly {
    std::vector<TSeries> coeffs; // coeffs[k] multiplies y^k

    // The constant a = [y^1] G(y, 0); throws when inadmissible.
    Rational leading() const;
};

// The unique series Y in t*K[[t]] with G(Y, t) = 0, by fixed-point
// iteration Y <- Y - G(Y, t)/a, one t-order of accuracy per pass.
TSeries solve_positive_root(const KernelPoly& G, int N);

// CT_y [ y/G(y,t) * F(y,t) ] evaluated in closed form as
// F(Y,t) / (dG/dy)(Y,t) at the positive root Y.
TSeries ct_residue(const KernelPoly& F, const KernelPoly& G, int N);

// d/dt log S_x for the step set {(1,0),(-1,0),(0,2),(0,-1)}, assembled from
// the closed form with denominator 4(1-bt)^3 - 27t^3, b = x + 1/x.
TSeries q2_logderiv(int N);

// S_{1,0}(t) for the same model: [x^1] of the integrated log-derivative.
TSeries q2_s10(int N);

// [t^n] of the positive root of y - t(y^3 + by + 1) by Lagrange inversion,
// (1/n) [y^{n-1}] (1 + by + y^3)^n, as a polynomial in b (b in the x slot).
LaurentPoly lagrange_Y_coeff(int n);

// The same coefficient per the published expansion, which lacks the 1/n
// factor. Kept as a reference evaluator; disagrees with the verified root
// from n = 2 on.
LaurentPoly lagrange_Y_coeff_literal(int n);

// Literal evaluation of the published closed form for the number of
// slit-plane walks of length N ending at (1,0) in the q=2 model, including
// the half-integer-binomial-is-zero convention. Reference evaluator only:
// compared against q2_s10 with discrepancies reported, not asserted.
std::vector<Rational> closed_form_a10(int n_max);

// Substitute b -> x + 1/x in a polynomial whose x-exponent is a power of b.
LaurentPoly expand_b(const LaurentPoly& poly_in_b);

} // namespace gessel
