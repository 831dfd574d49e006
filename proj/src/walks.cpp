#include "gessel/walks.hpp"

#include "gessel/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace gessel {

TSeries gf_free(const StepSet& S, int N) {
    TSeries denom = TSeries::one(N);
    if (N >= 1) denom.set(1, -S.step_poly());
    return ts_inv(denom);
}

TSeries gf_constrained(const StepSet& S, const std::vector<Constraint>& cons,
                       int N) {
    LaurentPoly stepp = S.step_poly();
    TSeries r(N, LaurentPoly::one());
    LaurentPoly frontier = LaurentPoly::one();
    for (int n = 1; n <= N; ++n) {
        frontier = (frontier * stepp).filter_xy([&](std::int64_t x, std::int64_t y) {
            return allowed(cons, x, y);
        });
        r.set(n, frontier);
    }
    return r;
}

TSeries bilateral(const StepSet& S, int N) {
    return ts_project(gf_free(S, N), Part::CT, Grading::y());
}

SlitPlaneResult slitplane(const StepSet& S, int N) {
    TSeries Sx = bilateral(S, N);
    SeriesTriple f = unique_factorization(Sx, Grading::x());
    TSeries zm = f.zero * f.minus;
    return SlitPlaneResult{f.plus, zm, gf_free(S, N) * ts_inv(zm), Sx};
}

std::optional<std::int64_t> minimal_axis_p(const StepSet& S, int N) {
    CountTable t = enumerate(S, {}, N);
    std::int64_t max_dx = 0;
    for (const Step& s : S.steps) max_dx = std::max(max_dx, s.dx);
    for (std::int64_t p = 1; p <= N * max_dx; ++p)
        for (int n = 1; n <= N; ++n)
            if (t.count(p, 0, n) != 0) return p;
    return std::nullopt;
}

HalfPlaneResult halfplane_halfline(const StepSet& S, int N) {
    TSeries H0 = ts_project(gf_constrained(S, {Constraint::upper_half_plane()}, N),
                            Part::CT, Grading::y());
    SeriesTriple f = unique_factorization(H0, Grading::x());

    HalfPlaneResult r{f.zero, f.plus};
    auto p = minimal_axis_p(S, N);
    std::ostringstream report;
    if (!p) {
        // no walk ever reaches the positive x-axis: nothing to check
        r.identity_holds = true;
        report << "no reachable (p,0) with p > 0 within " << N << " steps\n";
    } else {
        r.p = *p;
        TSeries free = gf_free(S, N);
        r.identity_holds = true;
        for (int n = 1; n <= N; ++n) {
            Rational lhs = Rational(n) * r.Jplus.coeff(r.p, 0, n);
            Rational rhs = free.coeff(r.p, 0, n);
            bool ok = lhs == rhs;
            r.identity_holds = r.identity_holds && ok;
            report << "n=" << n << ": n*restricted=" << lhs.get_str()
                   << " unrestricted=" << rhs.get_str()
                   << (ok ? "" : "  MISMATCH") << "\n";
        }
    }
    r.report = report.str();
    return r;
}

SeriesTriple strip_models(const StepSet& S, std::int64_t d,
                          std::optional<std::int64_t> f, int N) {
    std::vector<Constraint> cons{Constraint::lower_y(d)};
    if (f) cons.push_back(Constraint::upper_y(*f));
    TSeries H = ts_project(gf_constrained(S, cons, N), Part::CT, Grading::y());
    return unique_factorization(H, Grading::x());
}

TSeries rary_family(int r, int N) {
    if (r < 1) throw std::invalid_argument("rary_family: r must be >= 1");
    StepSet S{{Step{0, r, 0}, Step{0, -1, 0}}};
    return unique_factorization(gf_free(S, N), Grading::y()).zero;
}

TSeries sp0(const StepSet& S, std::int64_t p, int N) {
    auto pmin = minimal_axis_p(S, N);
    if (!pmin || *pmin != p)
        throw std::invalid_argument(
            "sp0: p is not the smallest positive integer with a walk ending at (p,0)");
    return ts_extract_x(ts_log(bilateral(S, N)), p);
}

} // namespace gessel
