#pragma once

#include "snortcgt/dyadic.hpp"
#include "snortcgt/game.hpp"

#include <string>
#include <vector>

namespace cgt {

struct TrajectoryPoint {
    Dyadic t;      // temperature
    Dyadic value;
};

// Piecewise-linear boundary of a thermograph over t in [-1, oo): breakpoints
// with strictly increasing temperatures starting at -1, slopes between
// breakpoints in {-1, 0, +1}, constant after the last breakpoint.
class Trajectory {
public:
    static Trajectory constant(const Dyadic& v);
    static Trajectory from_points(std::vector<TrajectoryPoint> pts);

    const std::vector<TrajectoryPoint>& breakpoints() const { return pts_; }
    const Dyadic& final_value() const { return pts_.back().value; }

    // Exact evaluation; throws std::domain_error for t < -1.
    Dyadic eval(const Dyadic& t) const;

private:
    std::vector<TrajectoryPoint> pts_;
};

struct Thermograph {
    Trajectory left;
    Trajectory right;
    Dyadic temperature;
    Dyadic mast;
};

// Thermograph of a game, computed recursively from canonical options with
// exact dyadic arithmetic. Canonicalizes its argument first; memoized on the
// canonical identity. A canonical game with an empty option side must be an
// integer (constant mast, temperature -1); anything else throws.
Thermograph thermograph(Game g);

Dyadic temperature(Game g);

// Serialized forms used by the CLI.
std::string thermograph_json(const Thermograph& th);
// Plot with temperature on the vertical axis and values increasing to the
// LEFT; the mast is truncated at temperature + 1 (noted in the output).
std::string thermograph_svg(const Thermograph& th);

}  // namespace cgt
