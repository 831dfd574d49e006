#pragma once

#include "gessel/constraint.hpp"
#include "gessel/laurent.hpp"

#include <cstdint>
#include <vector>

namespace gessel {

// A lattice step with an attached rho-mark. The mark is only consulted when
// the ambient Gessel pair uses per-prime marks; endpoint-functional rho
// ignores it.
struct Step {
    std::int64_t dx = 0;
    std::int64_t dy = 0;
    std::int64_t mark = 0;

    friend auto operator<=>(const Step&, const Step&) = default;
};

// Finite nonempty set of distinct steps.
struct StepSet {
    std::vector<Step> steps;

    // Weight of one step as a Laurent monomial x^dx y^dy z^mark (one t each).
    LaurentPoly step_poly() const;
};

using Path = std::vector<Step>;

// How a path's rho value is computed: either the sum of its steps' marks,
// or a linear functional alpha*x_end + beta*y_end of the endpoint.
struct RhoSpec {
    enum class Kind { PerPrimeMark, EndpointFunctional };
    Kind kind = Kind::EndpointFunctional;
    std::int64_t alpha = 1;
    std::int64_t beta = 0;

    static RhoSpec marks() { return {Kind::PerPrimeMark}; }
    static RhoSpec rho_x() { return {Kind::EndpointFunctional, 1, 0}; }
    static RhoSpec rho_y() { return {Kind::EndpointFunctional, 0, 1}; }
    static RhoSpec functional(std::int64_t a, std::int64_t b) {
        return {Kind::EndpointFunctional, a, b};
    }

    Grading grading() const {
        return kind == Kind::PerPrimeMark ? Grading::mark()
                                          : Grading::functional(alpha, beta);
    }
};

// A free monoid of paths together with a homomorphism to Z. Two monoid
// families cover every pipeline here: the full step monoid (primes are the
// steps) and the axis-return monoid, optionally strip-constrained (primes
// are paths that touch the x-axis only at their end).
struct GesselPair {
    enum class Family { FreeMonoid, AxisReturns };
    Family family = Family::FreeMonoid;
    StepSet steps;
    std::vector<Constraint> constraints; // AxisReturns only
    RhoSpec rho;

    static GesselPair free_monoid(StepSet s, RhoSpec r) {
        return {Family::FreeMonoid, std::move(s), {}, r};
    }
    static GesselPair axis_returns(StepSet s, RhoSpec r,
                                   std::vector<Constraint> cons = {}) {
        return {Family::AxisReturns, std::move(s), std::move(cons), r};
    }
};

std::int64_t rho_value(const Path& pi, const GesselPair& gp);

// Membership of pi in gp's monoid H.
bool is_member(const Path& pi, const GesselPair& gp);

// Unique factorization of pi into primes of H.
std::vector<Path> prime_factorize(const Path& pi, const GesselPair& gp);

// H-heads h_1...h_i for i = 0..m, as full paths (so [epsilon] for epsilon).
std::vector<Path> h_heads(const Path& pi, const GesselPair& gp);

struct PathTriple {
    Path minus, zero, plus;
};

// The unique factorization pi = minus * zero * plus.
PathTriple path_factorize(const Path& pi, const GesselPair& gp);

enum class PathClass { Unit, Minus, Zero, Plus, Mixed };

struct Classification {
    PathClass cls = PathClass::Mixed;
    bool prime_minus = false;
    bool prime_zero = false;
    bool prime_plus = false;
};

Classification classify(const Path& pi, const GesselPair& gp);

inline Path concat(const Path& a, const Path& b) {
    Path r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

} // namespace gessel
