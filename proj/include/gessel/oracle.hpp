#pragma once

#include "gessel/constraint.hpp"
#include "gessel/monoid.hpp"
#include "gessel/rational.hpp"

#include <map>
#include <tuple>

namespace gessel {

// Exact walk counts keyed by (ending x, ending y, length). Absent key = 0.
struct CountTable {
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, BigInt> entries;

    BigInt count(std::int64_t i, std::int64_t j, std::int64_t n) const {
        auto it = entries.find({i, j, n});
        return it == entries.end() ? BigInt(0) : it->second;
    }
    void add(std::int64_t i, std::int64_t j, std::int64_t n, const BigInt& c) {
        if (c != 0) entries[{i, j, n}] += c;
    }
};

// Exhaustive constrained walk counts from (0,0), lengths 0..n_max.
// Constraints apply to every position after the start. This is the
// independent ground truth the series pipelines are checked against.
CountTable enumerate(const StepSet& S, const std::vector<Constraint>& cons,
                     int n_max);

struct CensusTriple {
    CountTable minus, zero, plus;
};

// Counts of minus-, zero-, and plus-paths of gp's monoid by endpoint and
// length, obtained by classifying every path of length <= n_max. The empty
// path counts in all three tables.
CensusTriple factor_census(const StepSet& S, const GesselPair& gp, int n_max);

} // namespace gessel
