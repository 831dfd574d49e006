#include "gessel/series.hpp"

#include "gessel/oracle.hpp"
#include "gessel/walks.hpp"

#include <doctest.h>

#include <random>

using namespace gessel;

namespace {

LaurentPoly x_pow(std::int64_t e) {
    return LaurentPoly::monomial(ExponentKey{e, 0, 0}, Rational(1));
}
LaurentPoly y_pow(std::int64_t e) {
    return LaurentPoly::monomial(ExponentKey{0, e, 0}, Rational(1));
}

TSeries rand_unit(std::mt19937& rng, int N) {
    std::uniform_int_distribution<int> nterms(0, 3), e(-2, 2), num(-3, 3), den(1, 2);
    TSeries f(N, LaurentPoly::one());
    for (int n = 1; n <= N; ++n) {
        LaurentPoly p;
        for (int i = 0, k = nterms(rng); i < k; ++i)
            p.add_term(ExponentKey{e(rng), e(rng), 0}, rat(num(rng), den(rng)));
        f.set(n, p);
    }
    return f;
}

} // namespace

TEST_CASE("arithmetic basics") {
    TSeries one_plus_t = TSeries::one(2);
    one_plus_t.set(1, LaurentPoly::one());
    TSeries one_minus_t = TSeries::one(2);
    one_minus_t.set(1, LaurentPoly(Rational(-1)));

    TSeries prod = one_plus_t * one_minus_t;
    CHECK(prod.at(0) == LaurentPoly::one());
    CHECK(prod.at(1).is_zero());
    CHECK(prod.at(2) == LaurentPoly(Rational(-1)));

    std::mt19937 rng(1);
    TSeries f = rand_unit(rng, 5);
    CHECK(f * TSeries::one(5) == f);

    // (t(x + 1/x))^2 = t^2 (x^2 + 2 + 1/x^2)
    TSeries g(3);
    g.set(1, x_pow(1) + x_pow(-1));
    TSeries g2 = g * g;
    CHECK(g2.at(2) == x_pow(2) + LaurentPoly(Rational(2)) + x_pow(-2));
}

TEST_CASE("geometric series inverse") {
    TSeries f = TSeries::one(6);
    f.set(1, LaurentPoly(Rational(-1)));
    TSeries g = ts_inv(f); // 1 + t + t^2 + ...
    for (int n = 0; n <= 6; ++n) CHECK(g.at(n) == LaurentPoly::one());

    TSeries h = TSeries::one(4);
    h.set(1, -(x_pow(1) + x_pow(-1)));
    CHECK(ts_inv(h).at(2) == x_pow(2) + LaurentPoly(Rational(2)) + x_pow(-2));

    CHECK_THROWS_AS(ts_inv(TSeries(3)), std::invalid_argument);
}

TEST_CASE("log and exp expansions") {
    TSeries f = TSeries::one(3);
    f.set(1, LaurentPoly(Rational(-1)));
    TSeries lg = ts_log(ts_inv(f)); // t + t^2/2 + t^3/3
    CHECK(lg.at(0).is_zero());
    CHECK(lg.at(1) == LaurentPoly::one());
    CHECK(lg.at(2) == LaurentPoly(rat(1, 2)));
    CHECK(lg.at(3) == LaurentPoly(rat(1, 3)));

    TSeries t(3);
    t.set(1, LaurentPoly::one());
    TSeries e = ts_exp(t);
    CHECK(e.at(0) == LaurentPoly::one());
    CHECK(e.at(1) == LaurentPoly::one());
    CHECK(e.at(2) == LaurentPoly(rat(1, 2)));
    CHECK(e.at(3) == LaurentPoly(rat(1, 6)));

    CHECK(ts_log(TSeries::one(4)).is_zero());
    CHECK_THROWS_AS(ts_exp(TSeries::one(3)), std::invalid_argument);
    CHECK_THROWS_AS(ts_log(TSeries(3)), std::invalid_argument);
}

TEST_CASE("derivative and integral") {
    TSeries t2(3);
    t2.set(2, LaurentPoly::one());
    TSeries d = ts_deriv_t(t2);
    CHECK(d.trunc() == 2);
    CHECK(d.at(1) == LaurentPoly(Rational(2)));

    TSeries f = TSeries::one(1);
    f.set(1, LaurentPoly::one());
    TSeries I = ts_integrate_t(f); // t + t^2/2
    CHECK(I.trunc() == 2);
    CHECK(I.at(0).is_zero());
    CHECK(I.at(1) == LaurentPoly::one());
    CHECK(I.at(2) == LaurentPoly(rat(1, 2)));

    TSeries t3(3);
    t3.set(3, LaurentPoly(rat(1, 3)));
    CHECK(ts_integrate_t(ts_deriv_t(t3)) == t3);
}

TEST_CASE("projection operators") {
    TSeries f(1);
    f.set(1, y_pow(1) + y_pow(-1) + LaurentPoly(Rational(2)));
    TSeries ct = ts_project(f, Part::CT, Grading::y());
    CHECK(ct.at(1) == LaurentPoly(Rational(2)));

    TSeries g(1);
    g.set(1, x_pow(1) + x_pow(-1));
    CHECK(ts_project(g, Part::PT, Grading::x()).at(1) == x_pow(1));
    CHECK(ts_project(g, Part::NT, Grading::x()).at(1) == x_pow(-1));
}

TEST_CASE("CT over y of the +-1 walk series gives central binomials") {
    // independent oracle: exhaustive count of +-1 walks returning to 0
    StepSet S{{Step{0, 1, 0}, Step{0, -1, 0}}};
    CountTable t = enumerate(S, {}, 6);

    TSeries f = TSeries::one(6);
    f.set(1, -(y_pow(1) + y_pow(-1)));
    TSeries ct = ts_project(ts_inv(f), Part::CT, Grading::y());
    const long expected[] = {1, 0, 2, 0, 6, 0, 20};
    for (int n = 0; n <= 6; ++n) {
        CHECK(ct.coeff(0, 0, n) == expected[n]);
        CHECK(ct.coeff(0, 0, n) == Rational(t.count(0, 0, n)));
    }
}

TEST_CASE("walk coefficient extraction") {
    StepSet S{{Step{0, 1, 0}, Step{0, -1, 0}, Step{1, 0, 0}, Step{-1, 0, 0}}};
    TSeries f = gf_free(S, 3);
    CHECK(f.coeff(1, 0, 1) == 1);
    CHECK(f.coeff(0, 0, 1) == 0);
    CHECK(f.coeff(0, 0, 2) == 4); // EW, WE, NS, SN
    CHECK_THROWS_AS(f.coeff(0, 0, 4), std::invalid_argument);
}

TEST_CASE("polynomial evaluation at a positive-order argument") {
    TSeries t(4);
    t.set(1, LaurentPoly::one());
    std::vector<TSeries> coeffs{TSeries::one(4), TSeries(4), TSeries::one(4)};
    TSeries r = ts_poly_eval(coeffs, t); // 1 + t^2
    CHECK(r.at(0) == LaurentPoly::one());
    CHECK(r.at(2) == LaurentPoly::one());
    CHECK(r.at(1).is_zero());

    std::mt19937 rng(3);
    TSeries f = rand_unit(rng, 4) - TSeries::one(4);
    std::vector<TSeries> ident{TSeries(4), TSeries::one(4)};
    CHECK(ts_poly_eval(ident, f) == f);

    CHECK_THROWS_AS(ts_poly_eval(ident, TSeries::one(4)), std::invalid_argument);
}

TEST_CASE("random identities: exp/log, homomorphism, inverse") {
    std::mt19937 rng(99);
    for (int i = 0; i < 20; ++i) {
        TSeries f = rand_unit(rng, 6), g = rand_unit(rng, 6);
        CHECK(ts_exp(ts_log(f)) == f);
        CHECK(ts_log(ts_exp(f - TSeries::one(6))) == f - TSeries::one(6));
        CHECK(ts_log(f * g) == ts_log(f) + ts_log(g));
        CHECK(f * ts_inv(f) == TSeries::one(6));
        CHECK(ts_inv(ts_inv(f)) == f);
    }
}
