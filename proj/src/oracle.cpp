#include "gessel/oracle.hpp"

#include <functional>

namespace gessel {

namespace {

struct Memo {
    // (x, y, n) -> number of constrained paths of length n ending at (x, y)
    std::map<std::tuple<std::int64_t, std::int64_t, int>, BigInt> table;
};

const BigInt& count_to(std::int64_t x, std::int64_t y, int n, const StepSet& S,
                       const std::vector<Constraint>& cons, Memo& memo) {
    auto key = std::make_tuple(x, y, n);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;

    BigInt c = 0;
    if (n == 0) {
        c = (x == 0 && y == 0) ? 1 : 0;
    } else if (allowed(cons, x, y)) {
        for (const Step& s : S.steps)
            c += count_to(x - s.dx, y - s.dy, n - 1, S, cons, memo);
    }
    return memo.table.emplace(key, std::move(c)).first->second;
}

} // namespace

CountTable enumerate(const StepSet& S, const std::vector<Constraint>& cons,
                     int n_max) {
    std::int64_t max_dx = 0, min_dx = 0, max_dy = 0, min_dy = 0;
    for (const Step& s : S.steps) {
        max_dx = std::max(max_dx, s.dx);
        min_dx = std::min(min_dx, s.dx);
        max_dy = std::max(max_dy, s.dy);
        min_dy = std::min(min_dy, s.dy);
    }

    Memo memo;
    CountTable t;
    for (int n = 0; n <= n_max; ++n)
        for (std::int64_t x = n * min_dx; x <= n * max_dx; ++x)
            for (std::int64_t y = n * min_dy; y <= n * max_dy; ++y)
                t.add(x, y, n, count_to(x, y, n, S, cons, memo));
    return t;
}

CensusTriple factor_census(const StepSet& S, const GesselPair& gp, int n_max) {
    CensusTriple census;
    // epsilon belongs to all three classes
    census.minus.add(0, 0, 0, 1);
    census.zero.add(0, 0, 0, 1);
    census.plus.add(0, 0, 0, 1);

    Path pi;
    std::function<void()> walk = [&] {
        if (!pi.empty() && is_member(pi, gp)) {
            std::int64_t x = 0, y = 0;
            for (const Step& s : pi) { x += s.dx; y += s.dy; }
            auto n = static_cast<std::int64_t>(pi.size());
            switch (classify(pi, gp).cls) {
            case PathClass::Minus: census.minus.add(x, y, n, 1); break;
            case PathClass::Zero: census.zero.add(x, y, n, 1); break;
            case PathClass::Plus: census.plus.add(x, y, n, 1); break;
            default: break;
            }
        }
        if (pi.size() < static_cast<std::size_t>(n_max)) {
            for (const Step& s : S.steps) {
                pi.push_back(s);
                walk();
                pi.pop_back();
            }
        }
    };
    walk();
    return census;
}

} // namespace gessel
