#include "gessel/factorize.hpp"

#include "gessel/oracle.hpp"
#include "gessel/walks.hpp"

#include <doctest.h>

#include <random>

using namespace gessel;

namespace {

LaurentPoly x_pow(std::int64_t e) {
    return LaurentPoly::monomial(ExponentKey{e, 0, 0}, Rational(1));
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

Grading rand_grading(std::mt19937& rng) {
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

void check_signs(const TSeries& f, const Grading& g, int sign) {
    for (int n = 0; n <= f.trunc(); ++n)
        for (const auto& [k, c] : f.at(n).terms()) {
            if (n == 0 && k == ExponentKey{}) continue;
            std::int64_t d = g.grade(k);
            if (sign < 0) CHECK(d < 0);
            else if (sign == 0) CHECK(d == 0);
            else CHECK(d > 0);
        }
}

} // namespace

TEST_CASE("factoring 1 gives (1, 1, 1)") {
    auto t = unique_factorization(TSeries::one(5), Grading::x());
    CHECK(t.minus == TSeries::one(5));
    CHECK(t.zero == TSeries::one(5));
    CHECK(t.plus == TSeries::one(5));
}

TEST_CASE("unit-term precondition enforced") {
    CHECK_THROWS_AS(unique_factorization(TSeries(4), Grading::x()),
                    std::invalid_argument);
}

TEST_CASE("zero part of the +-1 walk series counts Dyck paths") {
    StepSet S{{Step{1, 0, 0}, Step{-1, 0, 0}}};
    auto t = unique_factorization(gf_free(S, 7), Grading::x());

    // frozen from the exhaustive zero-path census below
    const long catalan[] = {1, 0, 1, 0, 2, 0, 5, 0};
    for (int n = 0; n <= 7; ++n) CHECK(t.zero.coeff(0, 0, n) == catalan[n]);

    CHECK(t.plus.coeff(1, 0, 1) == 1); // the single length-1 plus-path E

    CensusTriple census =
        factor_census(S, GesselPair::free_monoid(S, RhoSpec::rho_x()), 7);
    for (int n = 0; n <= 7; ++n) {
        BigInt total = 0;
        for (const auto& [key, c] : census.zero.entries)
            if (std::get<2>(key) == n) total += c;
        CHECK(t.zero.coeff(0, 0, n) == Rational(total));
    }
}

TEST_CASE("random factorizations: reconstruction, signs, uniqueness") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 25; ++i) {
        TSeries h = rand_unit(rng, 8);
        Grading g = rand_grading(rng);
        auto t = unique_factorization(h, g);

        CHECK(t.minus * t.zero * t.plus == h);
        check_signs(t.minus, g, -1);
        check_signs(t.zero, g, 0);
        check_signs(t.plus, g, 1);

        // factoring zero*plus again must reproduce (1, zero, plus)
        auto again = unique_factorization(t.zero * t.plus, g);
        CHECK(again.minus == TSeries::one(8));
        CHECK(again.zero == t.zero);
        CHECK(again.plus == t.plus);
    }
}
