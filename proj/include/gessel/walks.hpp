#pragma once

#include "gessel/constraint.hpp"
#include "gessel/factorize.hpp"
#include "gessel/monoid.hpp"
#include "gessel/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gessel {

// Generating function of all walks with steps in S, by endpoint and length:
// 1/(1 - step polynomial * t), truncated at t^N.
TSeries gf_free(const StepSet& S, int N);

// Generating function of walks whose every position after the start
// satisfies all constraints. Frontier dynamic programming: multiply by the
// step polynomial once per t-order and drop forbidden positions.
TSeries gf_constrained(const StepSet& S, const std::vector<Constraint>& cons,
                       int N);

// Walks ending on the x-axis: the constant term in y of gf_free.
TSeries bilateral(const StepSet& S, int N);

// The slit-plane decomposition of the bilateral series under the x-grading.
struct SlitPlaneResult {
    TSeries S0;   // slit-plane walks ending on y = 0 (the plus part, unit included)
    TSeries Binv; // zero part * minus part: paths ending on the nonpositive x-axis
    TSeries Sxyt; // complete generating function of slit-plane walks
    TSeries Sx;   // bilateral walks
};

SlitPlaneResult slitplane(const StepSet& S, int N);

// Walks confined to the upper half plane that also avoid the half line
// {(-k,0): k >= 0}: factor the axis-return series of the half-plane model
// under the x-grading and keep the plus part. Also verifies, at the minimal
// reachable p > 0, that n * restricted = unrestricted for counts at (p, 0).
struct HalfPlaneResult {
    TSeries J0;
    TSeries Jplus;
    std::int64_t p = 0;
    bool identity_holds = false;
    std::string report;
};

HalfPlaneResult halfplane_halfline(const StepSet& S, int N);

// Axis-return walks within the strip -d <= y (<= f, when given), factored
// under the x-grading.
SeriesTriple strip_models(const StepSet& S, std::int64_t d,
                          std::optional<std::int64_t> f, int N);

// F(t) with F = 1 + t^{r+1} F^{r+1}: complete (r+1)-ary trees, obtained as
// the zero part under the y-grading of the free series over {(1,r),(1,-1)}
// with x suppressed.
TSeries rary_family(int r, int N);

// [x^p] log(bilateral): walks on the slit plane ending at (p, 0), valid when
// p is the smallest positive integer with any walk ending at (p, 0).
TSeries sp0(const StepSet& S, std::int64_t p, int N);

// Smallest p > 0 with an unrestricted walk ending at (p, 0) within N steps.
std::optional<std::int64_t> minimal_axis_p(const StepSet& S, int N);

} // namespace gessel
