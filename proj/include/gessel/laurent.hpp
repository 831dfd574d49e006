#pragma once

#include "gessel/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace gessel {

// Exponent triple of a monomial x^ex * y^ey * z^em, where z is the marker
// variable carrying rho-values. Negative exponents allowed everywhere.
struct ExponentKey {
    std::int64_t ex = 0;
    std::int64_t ey = 0;
    std::int64_t em = 0;

    friend auto operator<=>(const ExponentKey&, const ExponentKey&) = default;
};

// A grading assigns an integer grade to each monomial: one of the three
// exponent slots directly, or a linear functional alpha*ex + beta*ey.
struct Grading {
    enum class Kind { X, Y, Mark, Functional };
    Kind kind = Kind::X;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    static Grading x() { return {Kind::X}; }
    static Grading y() { return {Kind::Y}; }
    static Grading mark() { return {Kind::Mark}; }
    static Grading functional(std::int64_t a, std::int64_t b) {
        return {Kind::Functional, a, b};
    }

    std::int64_t grade(const ExponentKey& k) const {
        switch (kind) {
        case Kind::X: return k.ex;
        case Kind::Y: return k.ey;
        case Kind::Mark: return k.em;
        case Kind::Functional: return alpha * k.ex + beta * k.ey;
        }
        return 0;
    }
};

// Sparse Laurent polynomial in x, y and the marker z with rational
// coefficients. The term map never stores a zero coefficient, so equality
// is plain map equality.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentKey, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_[ExponentKey{}] = c;
    }

    static LaurentPoly monomial(const ExponentKey& k, const Rational& c) {
        LaurentPoly p;
        if (c != 0) p.terms_[k] = c;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const ExponentKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Sum of coefficients at (ex, ey, any mark).
    Rational coeff_xy(std::int64_t ex, std::int64_t ey) const;

    void add_term(const ExponentKey& k, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& q) const;
    LaurentPoly operator-(const LaurentPoly& q) const;
    LaurentPoly operator*(const LaurentPoly& q) const;
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly& operator+=(const LaurentPoly& q);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    struct Split;
    // Partition of the terms by the sign of their grade. neg+zero+pos == *this.
    Split split(const Grading& g) const;

    // Keep only terms whose (ex, ey) satisfy the predicate.
    template <typename Pred>
    LaurentPoly filter_xy(Pred&& pred) const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_)
            if (pred(k.ex, k.ey)) r.terms_[k] = c;
        return r;
    }

    std::string str() const;

private:
    TermMap terms_;
};

struct LaurentPoly::Split {
    LaurentPoly neg, zero, pos;
};

} // namespace gessel
