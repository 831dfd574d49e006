#include "gessel/laurent.hpp"

#include <sstream>

namespace gessel {

Rational LaurentPoly::coeff_xy(std::int64_t ex, std::int64_t ey) const {
    Rational sum(0);
    // Keys sort by (ex, ey, em), so the matching range is contiguous.
    auto lo = terms_.lower_bound(ExponentKey{ex, ey, INT64_MIN});
    for (auto it = lo; it != terms_.end() && it->first.ex == ex && it->first.ey == ey; ++it)
        sum += it->second;
    return sum;
}

void LaurentPoly::add_term(const ExponentKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& q) const {
    LaurentPoly r = *this;
    r += q;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    for (const auto& [k, c] : q.terms_) add_term(k, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& q) const {
    return *this + (-q);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& q) const {
    LaurentPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : q.terms_)
            r.add_term(ExponentKey{ka.ex + kb.ex, ka.ey + kb.ey, ka.em + kb.em},
                       ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

LaurentPoly::Split LaurentPoly::split(const Grading& g) const {
    Split s;
    for (const auto& [k, c] : terms_) {
        std::int64_t d = g.grade(k);
        (d < 0 ? s.neg : d == 0 ? s.zero : s.pos).terms_[k] = c;
    }
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (k.ex) os << "*x^" << k.ex;
        if (k.ey) os << "*y^" << k.ey;
        if (k.em) os << "*z^" << k.em;
    }
    return os.str();
}

} // namespace gessel
