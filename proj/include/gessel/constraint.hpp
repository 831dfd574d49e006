#pragma once

#include <cstdint>
#include <vector>

namespace gessel {

// Position restriction on a walk. Constraints apply to every position
// after the starting point, never to the starting point itself.
struct Constraint {
    enum class Kind {
        AvoidHalfLine,  // never touch (-k, 0) for k >= 0
        LowerY,         // never below y = -param
        UpperY,         // never above y = param
        UpperHalfPlane, // never y < 0
    };
    Kind kind = Kind::UpperHalfPlane;
    std::int64_t param = 0;

    static Constraint avoid_half_line() { return {Kind::AvoidHalfLine, 0}; }
    static Constraint lower_y(std::int64_t d) { return {Kind::LowerY, d}; }
    static Constraint upper_y(std::int64_t f) { return {Kind::UpperY, f}; }
    static Constraint upper_half_plane() { return {Kind::UpperHalfPlane, 0}; }

    bool allows(std::int64_t x, std::int64_t y) const {
        switch (kind) {
        case Kind::AvoidHalfLine: return !(y == 0 && x <= 0);
        case Kind::LowerY: return y >= -param;
        case Kind::UpperY: return y <= param;
        case Kind::UpperHalfPlane: return y >= 0;
        }
        return true;
    }
};

inline bool allowed(const std::vector<Constraint>& cons, std::int64_t x, std::int64_t y) {
    for (const auto& c : cons)
        if (!c.allows(x, y)) return false;
    return true;
}

} // namespace gessel
