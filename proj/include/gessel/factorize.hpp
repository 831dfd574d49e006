#pragma once

#include "gessel/series.hpp"

namespace gessel {

struct SeriesTriple {
    TSeries minus, zero, plus;
};

// Unique factorization h = minus * zero * plus with respect to a grading:
// apart from their leading 1, minus has only negative grades, zero only
// grade 0, plus only positive grades. Computed as exp of the three graded
// parts of log(h), which keeps every step exact over the rationals.
// Requires the t^0 coefficient of h to be the constant 1.
SeriesTriple unique_factorization(const TSeries& h, const Grading& g);

} // namespace gessel
