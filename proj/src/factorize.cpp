#include "gessel/factorize.hpp"

namespace gessel {

SeriesTriple unique_factorization(const TSeries& h, const Grading& g) {
    TSeries lg = ts_log(h);
    return SeriesTriple{
        ts_exp(ts_project(lg, Part::NT, g)),
        ts_exp(ts_project(lg, Part::CT, g)),
        ts_exp(ts_project(lg, Part::PT, g) - ts_project(lg, Part::CT, g)),
    };
}

} // namespace gessel
