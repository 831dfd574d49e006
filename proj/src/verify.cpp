#include "gessel/verify.hpp"

#include "gessel/factorize.hpp"
#include "gessel/kernel.hpp"
#include "gessel/monoid.hpp"
#include "gessel/oracle.hpp"
#include "gessel/series.hpp"
#include "gessel/walks.hpp"

#include <random>
#include <sstream>

namespace gessel {

namespace {

using Rng = std::mt19937;

Rational rand_rat(Rng& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    return rat(num(rng), den(rng));
}

LaurentPoly rand_poly(Rng& rng, int max_terms = 3, int span = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms), e(-span, span);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p.add_term(ExponentKey{e(rng), e(rng), 0}, rand_rat(rng));
    return p;
}

TSeries rand_unit_series(Rng& rng, int N) {
    TSeries f(N, LaurentPoly::one());
    for (int n = 1; n <= N; ++n) f.set(n, rand_poly(rng));
    return f;
}

Grading rand_grading(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 2), ab(-2, 2);
    switch (pick(rng)) {
    case 0: return Grading::x();
    case 1: return Grading::y();
    default: {
        std::int64_t a = 0, b = 0;
        while (a == 0 && b == 0) { a = ab(rng); b = ab(rng); }
        return Grading::functional(a, b);
    }
    }
}

bool support_has_sign(const TSeries& f, const Grading& g, int sign) {
    for (int n = 0; n <= f.trunc(); ++n)
        for (const auto& [k, c] : f.at(n).terms()) {
            if (n == 0 && k == ExponentKey{}) continue; // leading 1
            std::int64_t d = g.grade(k);
            if ((sign < 0 && d >= 0) || (sign == 0 && d != 0) || (sign > 0 && d <= 0))
                return false;
        }
    return true;
}

bool nonneg_integer_coeffs(const TSeries& f) {
    for (int n = 0; n <= f.trunc(); ++n)
        for (const auto& [k, c] : f.at(n).terms())
            if (!is_integer(c) || c < 0) return false;
    return true;
}

// Independent route for CT_y [y/G * F]: expand 1/G as a geometric series in
// the y slot and project the constant term.
TSeries embed_kernel(const KernelPoly& P, int N) {
    TSeries acc(N);
    for (std::size_t k = 0; k < P.coeffs.size(); ++k) {
        TSeries yk(N, LaurentPoly::monomial(
                          ExponentKey{0, static_cast<std::int64_t>(k), 0}, Rational(1)));
        acc = acc + P.coeffs[k].truncated(N) * yk;
    }
    return acc;
}

TSeries direct_ct(const KernelPoly& F, const KernelPoly& G, int N) {
    Rational a = G.leading();
    TSeries E = embed_kernel(G, N);
    TSeries y_inv(N, LaurentPoly::monomial(ExponentKey{0, -1, 0}, Rational(1)));
    TSeries one_plus_u = E * y_inv * (1 / a); // = G/(a y), t^0 coefficient 1
    TSeries w = embed_kernel(F, N) * ts_inv(one_plus_u) * (1 / a);
    return ts_project(w, Part::CT, Grading::y());
}

KernelPoly rand_kernel(Rng& rng, int N, bool with_const_term) {
    std::uniform_int_distribution<int> deg(2, 4), coef(-3, 3), adist(0, 3);
    static const int avals[] = {1, 2, 3, -2};
    int d = deg(rng);
    KernelPoly P;
    for (int k = 0; k <= d; ++k) {
        TSeries c(N);
        int lo = (with_const_term || k == 1) ? 0 : 1;
        for (int n = lo; n <= std::min(N, 2); ++n)
            c.set(n, LaurentPoly(Rational(coef(rng))));
        P.coeffs.push_back(c);
    }
    if (!with_const_term) {
        // force the admissibility shape: [y^1] G(y,0) = a != 0, all other
        // t^0 coefficients zero
        TSeries c1 = P.coeffs[1];
        c1.set(0, LaurentPoly(Rational(avals[adist(rng)])));
        P.coeffs[1] = c1;
        TSeries c0 = P.coeffs[0];
        c0.set(0, LaurentPoly());
        if (N >= 1 && c0.at(1).is_zero()) c0.set(1, LaurentPoly(Rational(1)));
        P.coeffs[0] = c0;
    }
    return P;
}

struct Harness {
    std::vector<CheckResult>& out;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok ? CheckResult::Status::Pass : CheckResult::Status::Fail,
                       detail});
    }
    void known_mismatch(const std::string& name, bool still_mismatched,
                        const std::string& detail) {
        // Listed as an expected mismatch; only flag if the discrepancy
        // unexpectedly disappeared (the documentation would then be stale).
        out.push_back({name,
                       still_mismatched ? CheckResult::Status::KnownMismatch
                                        : CheckResult::Status::Fail,
                       detail});
    }
};

const StepSet kSquare{{Step{0, 1, 0}, Step{0, -1, 0}, Step{1, 0, 0}, Step{-1, 0, 0}}};
const StepSet kQ2{{Step{1, 0, 0}, Step{-1, 0, 0}, Step{0, 2, 0}, Step{0, -1, 0}}};
const StepSet kEW{{Step{1, 0, 0}, Step{-1, 0, 0}}};
const StepSet kKnight{{Step{2, 1, 0}, Step{-1, 1, 0}, Step{0, -1, 0}}};

void verify_series_axioms(Harness& h, Rng& rng, int N) {
    bool ring_ok = true, split_ok = true, log_ok = true, inv_ok = true;
    for (int i = 0; i < 10; ++i) {
        LaurentPoly p = rand_poly(rng), q = rand_poly(rng), r = rand_poly(rng);
        ring_ok = ring_ok && (p + q) * r == p * r + q * r && p * q == q * p &&
                  (p * q) * r == p * (q * r);
        Grading g = rand_grading(rng);
        auto s = p.split(g);
        split_ok = split_ok && s.neg + s.zero + s.pos == p;
        split_ok = split_ok && s.zero.split(g).zero == s.zero &&
                   s.pos.split(g).pos == s.pos && s.neg.split(g).neg == s.neg;

        TSeries f = rand_unit_series(rng, N), g2 = rand_unit_series(rng, N);
        log_ok = log_ok && ts_exp(ts_log(f)) == f &&
                 ts_log(f * g2) == ts_log(f) + ts_log(g2);
        inv_ok = inv_ok && f * ts_inv(f) == TSeries::one(N) && ts_inv(ts_inv(f)) == f;
    }
    h.check("laurent ring axioms (random)", ring_ok);
    h.check("laurent split reconstruction and sign purity (random)", split_ok);
    h.check("series exp/log identities and log homomorphism (random)", log_ok);
    h.check("series inverse correctness (random)", inv_ok);
}

void verify_factorization(Harness& h, Rng& rng, int N) {
    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
        TSeries f = rand_unit_series(rng, N);
        Grading g = rand_grading(rng);
        auto tr = unique_factorization(f, g);
        ok = ok && tr.minus * tr.zero * tr.plus == f;
        ok = ok && support_has_sign(tr.minus, g, -1) &&
             support_has_sign(tr.zero, g, 0) && support_has_sign(tr.plus, g, 1);
        auto again = unique_factorization(tr.zero * tr.plus, g);
        ok = ok && again.minus == TSeries::one(N) && again.zero == tr.zero &&
             again.plus == tr.plus;
    }
    h.check("unique factorization: reconstruction, signs, idempotence (random)", ok);
}

void verify_walk_oracle_agreement(Harness& h, int N) {
    int n_max = std::min(N, 8);
    const std::vector<std::vector<Constraint>> cases = {
        {},
        {Constraint::upper_half_plane()},
        {Constraint::avoid_half_line()},
        {Constraint::lower_y(1)},
        {Constraint::lower_y(1), Constraint::upper_y(2)},
        {Constraint::avoid_half_line(), Constraint::upper_half_plane()},
    };
    bool ok = true;
    for (const auto& cons : cases) {
        TSeries f = gf_constrained(kSquare, cons, n_max);
        CountTable t = enumerate(kSquare, cons, n_max);
        for (int n = 0; n <= n_max && ok; ++n)
            for (std::int64_t i = -8; i <= 8 && ok; ++i)
                for (std::int64_t j = -8; j <= 8; ++j)
                    if (f.coeff(i, j, n) != Rational(t.count(i, j, n))) {
                        ok = false;
                        break;
                    }
    }
    h.check("gf_constrained matches oracle for all constraint kinds", ok);
    h.check("free walk series has nonnegative integer coefficients",
            nonneg_integer_coeffs(gf_free(kSquare, n_max)));
}

void verify_slitplane(Harness& h, int N) {
    for (const auto& [name, S] : {std::pair{"square", kSquare}, {"q2", kQ2}}) {
        SlitPlaneResult r = slitplane(S, N);
        bool id1 = r.S0 * r.Binv == r.Sx;
        TSeries one_minus_gs = TSeries::one(N);
        if (N >= 1) one_minus_gs.set(1, -S.step_poly());
        auto f = unique_factorization(r.Sx, Grading::x());
        bool id2 = r.Sxyt * one_minus_gs * f.zero * f.minus == TSeries::one(N);
        h.check(std::string("slit-plane identities (") + name + ")", id1 && id2);
    }
    CountTable t = enumerate(kSquare, {Constraint::avoid_half_line()}, std::min(N, 8));
    SlitPlaneResult r = slitplane(kSquare, N);
    bool ok = true;
    for (int n = 0; n <= std::min(N, 8); ++n)
        ok = ok && r.S0.coeff(1, 0, n) == Rational(t.count(1, 0, n));
    h.check("slit-plane S0 matches oracle at (1,0)", ok);
}

void verify_halfplane(Harness& h, int N) {
    for (const auto& [name, S] :
         {std::pair{"square", kSquare}, {"q2", kQ2}, {"knight", kKnight}}) {
        HalfPlaneResult r = halfplane_halfline(S, N);
        h.check(std::string("half-plane 1/n law (") + name + ")", r.identity_holds);
    }
}

void verify_rary(Harness& h, int N) {
    bool ok = true;
    for (int r = 1; r <= 3; ++r) {
        TSeries F = rary_family(r, N);
        std::vector<TSeries> poly(r + 2, TSeries(N));
        poly[0] = TSeries::one(N);
        TSeries t_pow(N);
        if (r + 1 <= N) t_pow.set(r + 1, LaurentPoly::one());
        // residual F - 1 - t^{r+1} F^{r+1}
        TSeries fr = TSeries::one(N);
        for (int k = 0; k < r + 1; ++k) fr = fr * F;
        ok = ok && (F - TSeries::one(N) - t_pow * fr).is_zero();
        ok = ok && nonneg_integer_coeffs(F);
    }
    h.check("r-ary family functional equation residual", ok);
}

void verify_census(Harness& h, int N) {
    int n_max = std::min(N, 8);
    for (const auto& [name, S] : {std::pair{"EW", kEW}, {"square", kSquare}}) {
        GesselPair gp = GesselPair::free_monoid(S, RhoSpec::rho_x());
        CensusTriple census = factor_census(S, gp, n_max);
        auto f = unique_factorization(gf_free(S, n_max), Grading::x());

        bool ok = true;
        const std::pair<const CountTable*, const TSeries*> pairs[] = {
            {&census.minus, &f.minus}, {&census.zero, &f.zero}, {&census.plus, &f.plus}};
        for (auto [table, series] : pairs)
            for (int n = 0; n <= n_max && ok; ++n)
                for (std::int64_t i = -8; i <= 8 && ok; ++i)
                    for (std::int64_t j = -8; j <= 8; ++j)
                        if (series->coeff(i, j, n) != Rational(table->count(i, j, n))) {
                            ok = false;
                            break;
                        }
        h.check(std::string("path census equals series factors (") + name + ")", ok);

        // convolution of the three censuses reproduces the full count
        CountTable total = enumerate(S, {}, n_max);
        bool conv_ok = true;
        for (const auto& [key, cnt] : total.entries) {
            auto [i, j, n] = key;
            BigInt acc = 0;
            for (const auto& [ka, ca] : census.minus.entries) {
                auto [ia, ja, na] = ka;
                if (na > n) continue;
                for (const auto& [kb, cb] : census.zero.entries) {
                    auto [ib, jb, nb] = kb;
                    if (na + nb > n) continue;
                    acc += ca * cb *
                           census.plus.count(i - ia - ib, j - ja - jb, n - na - nb);
                }
            }
            if (acc != cnt) {
                conv_ok = false;
                break;
            }
        }
        h.check(std::string("census convolution equals total counts (") + name + ")",
                conv_ok);
    }
}

void verify_kernel(Harness& h, Rng& rng, int N) {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
        KernelPoly G = rand_kernel(rng, N, false);
        KernelPoly F = rand_kernel(rng, N, true);
        TSeries Y = solve_positive_root(G, N);
        ok = ok && ts_poly_eval(G.coeffs, Y).is_zero();
        ok = ok && ct_residue(F, G, N) == direct_ct(F, G, N);
    }
    h.check("kernel residue equals direct constant-term extraction (random)", ok);

    h.check("q2 log-derivative equals d/dt log bilateral",
            q2_logderiv(N) == ts_deriv_t(ts_log(bilateral(kQ2, N + 1))));

    KernelPoly G = []() {
        // y - t(y^3 + by + 1)
        LaurentPoly b;
        b.add_term(ExponentKey{1, 0, 0}, Rational(1));
        b.add_term(ExponentKey{-1, 0, 0}, Rational(1));
        TSeries c0(12), c1 = TSeries::one(12), c2(12), c3(12);
        c0.set(1, LaurentPoly(Rational(-1)));
        c1.set(1, -b);
        c3.set(1, LaurentPoly(Rational(-1)));
        return KernelPoly{{c0, c1, c2, c3}};
    }();
    TSeries Y = solve_positive_root(G, 12);
    bool lag_ok = true;
    for (int n = 1; n <= 12; ++n)
        lag_ok = lag_ok && expand_b(lagrange_Y_coeff(n)) == Y.at(n);
    h.check("Lagrange inversion matches fixed-point root, n <= 12", lag_ok);

    int n12 = std::min(N, 12);
    TSeries s10 = q2_s10(n12);
    TSeries via_sp0 = sp0(kQ2, 1, n12);
    CountTable t = enumerate(kQ2, {Constraint::avoid_half_line()}, n12);
    bool s10_ok = s10 == via_sp0;
    for (int n = 0; n <= n12; ++n)
        s10_ok = s10_ok && s10.coeff(0, 0, n) == Rational(t.count(1, 0, n));
    h.check("q2 S_{1,0} = sp0 = oracle counts", s10_ok);
}

void verify_known_mismatches(Harness& h) {
    auto a10 = closed_form_a10(3);
    std::ostringstream d1;
    d1 << "closed form gives " << a10[2].get_str()
       << " at N=3; verified pipeline gives 1";
    h.known_mismatch("closed-form a10 vs pipeline at N=3",
                     a10[2] == rat(21, 4) && a10[0] == 1 && a10[1] == 0, d1.str());

    LaurentPoly lit = lagrange_Y_coeff_literal(2);
    LaurentPoly fixed = lagrange_Y_coeff(2);
    std::ostringstream d2;
    d2 << "published expansion gives " << lit.str() << " at n=2; root gives "
       << fixed.str();
    h.known_mismatch("published Y(t) expansion lacks the 1/n factor",
                     lit == fixed * Rational(2), d2.str());
}

} // namespace

std::vector<CheckResult> run_verification(int N, unsigned seed) {
    std::vector<CheckResult> results;
    Harness h{results};
    Rng rng(seed);

    verify_series_axioms(h, rng, N);
    verify_factorization(h, rng, N);
    verify_walk_oracle_agreement(h, N);
    verify_slitplane(h, N);
    verify_halfplane(h, N);
    verify_rary(h, N);
    verify_census(h, N);
    verify_kernel(h, rng, N);
    verify_known_mismatches(h);
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == CheckResult::Status::Fail) return false;
    return true;
}

} // namespace gessel
