#include "gessel/monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace gessel {

LaurentPoly StepSet::step_poly() const {
    LaurentPoly p;
    for (const Step& s : steps)
        p.add_term(ExponentKey{s.dx, s.dy, s.mark}, Rational(1));
    return p;
}

std::int64_t rho_value(const Path& pi, const GesselPair& gp) {
    std::int64_t r = 0;
    if (gp.rho.kind == RhoSpec::Kind::PerPrimeMark) {
        for (const Step& s : pi) r += s.mark;
    } else {
        std::int64_t x = 0, y = 0;
        for (const Step& s : pi) { x += s.dx; y += s.dy; }
        r = gp.rho.alpha * x + gp.rho.beta * y;
    }
    return r;
}

bool is_member(const Path& pi, const GesselPair& gp) {
    for (const Step& s : pi)
        if (std::find(gp.steps.steps.begin(), gp.steps.steps.end(), s) ==
            gp.steps.steps.end())
            return false;
    if (gp.family == GesselPair::Family::AxisReturns) {
        std::int64_t x = 0, y = 0;
        for (const Step& s : pi) {
            x += s.dx;
            y += s.dy;
            if (!allowed(gp.constraints, x, y)) return false;
        }
        if (y != 0) return false;
    }
    return true;
}

std::vector<Path> prime_factorize(const Path& pi, const GesselPair& gp) {
    if (!is_member(pi, gp))
        throw std::invalid_argument("path is not a member of the monoid");
    std::vector<Path> primes;
    if (gp.family == GesselPair::Family::FreeMonoid) {
        for (const Step& s : pi) primes.push_back(Path{s});
    } else {
        // Primes of the axis-return monoid touch y = 0 only at their end.
        Path cur;
        std::int64_t y = 0;
        for (const Step& s : pi) {
            cur.push_back(s);
            y += s.dy;
            if (y == 0) {
                primes.push_back(cur);
                cur.clear();
            }
        }
    }
    return primes;
}

std::vector<Path> h_heads(const Path& pi, const GesselPair& gp) {
    auto primes = prime_factorize(pi, gp);
    std::vector<Path> heads;
    heads.emplace_back();
    for (const Path& p : primes) heads.push_back(concat(heads.back(), p));
    return heads;
}

namespace {

// rho values of the H-heads: v[0] = 0, v[i] = rho(h_1...h_i).
std::vector<std::int64_t> head_rhos(const std::vector<Path>& primes,
                                    const GesselPair& gp) {
    std::vector<std::int64_t> v{0};
    for (const Path& p : primes) v.push_back(v.back() + rho_value(p, gp));
    return v;
}

enum class Cls { Minus, Zero, Plus };

// Class membership of the segment (lo..hi] of the prime sequence, judged by
// its head rho values relative to v[lo].
bool in_class(const std::vector<std::int64_t>& v, std::size_t lo, std::size_t hi,
              Cls c) {
    if (lo == hi) return true; // the empty path is in every class
    std::int64_t total = v[hi] - v[lo];
    switch (c) {
    case Cls::Minus:
        if (total >= 0) return false;
        for (std::size_t i = lo; i < hi; ++i)
            if (v[i] - v[lo] <= total) return false;
        return true;
    case Cls::Zero:
        if (total != 0) return false;
        for (std::size_t i = lo; i <= hi; ++i)
            if (v[i] - v[lo] < 0) return false;
        return true;
    case Cls::Plus:
        for (std::size_t i = lo + 1; i <= hi; ++i)
            if (v[i] - v[lo] <= 0) return false;
        return true;
    }
    return false;
}

// A nonempty class member is prime iff it admits no split into two
// nonempty class members at an H-head boundary.
bool prime_in_class(const std::vector<std::int64_t>& v, Cls c) {
    std::size_t m = v.size() - 1;
    if (m == 0 || !in_class(v, 0, m, c)) return false;
    for (std::size_t j = 1; j < m; ++j)
        if (in_class(v, 0, j, c) && in_class(v, j, m, c)) return false;
    return true;
}

} // namespace

PathTriple path_factorize(const Path& pi, const GesselPair& gp) {
    auto primes = prime_factorize(pi, gp);
    auto v = head_rhos(primes, gp);
    std::int64_t a = *std::min_element(v.begin(), v.end());
    std::size_t i_minus = 0;
    while (v[i_minus] != a) ++i_minus; // shortest head attaining the minimum
    std::size_t i_zero = v.size() - 1;
    while (v[i_zero] != a) --i_zero; // longest head attaining the minimum

    PathTriple t;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        Path& dst = i < i_minus ? t.minus : i < i_zero ? t.zero : t.plus;
        dst.insert(dst.end(), primes[i].begin(), primes[i].end());
    }
    return t;
}

Classification classify(const Path& pi, const GesselPair& gp) {
    auto primes = prime_factorize(pi, gp);
    auto v = head_rhos(primes, gp);
    std::size_t m = v.size() - 1;

    Classification r;
    if (m == 0) {
        r.cls = PathClass::Unit;
        return r;
    }
    if (in_class(v, 0, m, Cls::Minus)) r.cls = PathClass::Minus;
    else if (in_class(v, 0, m, Cls::Zero)) r.cls = PathClass::Zero;
    else if (in_class(v, 0, m, Cls::Plus)) r.cls = PathClass::Plus;
    else r.cls = PathClass::Mixed;

    r.prime_minus = prime_in_class(v, Cls::Minus);
    r.prime_zero = prime_in_class(v, Cls::Zero);
    r.prime_plus = prime_in_class(v, Cls::Plus);
    return r;
}

} // namespace gessel
