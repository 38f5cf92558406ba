#include "snortcgt/thermograph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cgt {

namespace {

const Dyadic kMinusOne(-1);

// Piecewise-linear function on [-1, oo) with integer segment slopes and a
// (possibly sloped) tail after the last breakpoint. Scaffolds are built here;
// only clipped results become Trajectory values.
struct PL {
    std::vector<TrajectoryPoint> pts;  // first at t = -1, strictly increasing
    std::vector<int> slopes;           // slopes[i] between pts[i] and pts[i+1]
    int tail = 0;                      // slope after the last breakpoint

    Dyadic eval(const Dyadic& t) const {
        if (t < kMinusOne) throw std::domain_error("temperature below -1");
        std::size_t i = pts.size() - 1;
        while (i > 0 && pts[i].t > t) --i;
        const Dyadic dt = t - pts[i].t;
        int s = (i + 1 < pts.size()) ? slopes[i] : tail;
        if (s == 0 || dt.is_zero()) return pts[i].value;
        Dyadic scaled = Dyadic::fraction(dt.numerator() * s, dt.exponent());
        return pts[i].value + scaled;
    }

    // Slope of the segment extending to the right of t.
    int slope_right(const Dyadic& t) const {
        if (t >= pts.back().t) return tail;
        std::size_t i = pts.size() - 1;
        while (i > 0 && pts[i].t > t) --i;
        return slopes[i];
    }
};

PL from_trajectory(const Trajectory& tr) {
    PL pl;
    pl.pts = tr.breakpoints();
    for (std::size_t i = 0; i + 1 < pl.pts.size(); ++i) {
        Dyadic dv = pl.pts[i + 1].value - pl.pts[i].value;
        Dyadic dt = pl.pts[i + 1].t - pl.pts[i].t;
        int s;
        if (dv.is_zero()) s = 0;
        else if (dv == dt) s = 1;
        else if (dv == -dt) s = -1;
        else throw std::logic_error("trajectory slope not in {-1,0,1}");
        pl.slopes.push_back(s);
    }
    pl.tail = 0;
    return pl;
}

// f(t) += c*t.
void add_linear(PL& pl, int c) {
    for (auto& p : pl.pts) {
        Dyadic scaled = Dyadic::fraction(p.t.numerator() * c, p.t.exponent());
        p.value += scaled;
    }
    for (int& s : pl.slopes) s += c;
    pl.tail += c;
}

// Exact d / s for the slope differences that occur here (|s| in {1, 2}).
Dyadic div_small(const Dyadic& d, int s) {
    switch (s) {
        case 1: return d;
        case -1: return -d;
        case 2: return d.half();
        case -2: return -d.half();
        default: throw std::logic_error("unexpected slope difference");
    }
}

std::vector<Dyadic> merged_grid(const PL& a, const PL& b) {
    std::vector<Dyadic> ts;
    for (const auto& p : a.pts) ts.push_back(p.t);
    for (const auto& p : b.pts) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

void drop_collinear(PL& pl) {
    if (pl.pts.size() < 2) return;
    std::vector<TrajectoryPoint> pts;
    std::vector<int> slopes;
    pts.push_back(pl.pts[0]);
    for (std::size_t i = 0; i < pl.slopes.size(); ++i) {
        if (!slopes.empty() && slopes.back() == pl.slopes[i]) continue;  // interior collinear
        if (i > 0) pts.push_back(pl.pts[i]);
        slopes.push_back(pl.slopes[i]);
    }
    pts.push_back(pl.pts.back());
    // The final breakpoint is redundant when it lies on the tail line.
    if (!slopes.empty() && slopes.back() == pl.tail) {
        pts.pop_back();
        slopes.pop_back();
    }
    pl.pts = std::move(pts);
    pl.slopes = std::move(slopes);
}

PL combine(const PL& a, const PL& b, bool take_max) {
    const std::vector<Dyadic> ts = merged_grid(a, b);
    std::vector<Dyadic> cands = ts;
    // Crossings interior to grid segments.
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        Dyadic d0 = a.eval(ts[i]) - b.eval(ts[i]);
        int s = a.slope_right(ts[i]) - b.slope_right(ts[i]);
        if (s == 0 || d0.is_zero()) continue;
        Dyadic tc = ts[i] - div_small(d0, s);
        if (ts[i] < tc && tc < ts[i + 1]) cands.push_back(tc);
    }
    {
        // Crossing on the shared tail.
        const Dyadic& tl = ts.back();
        Dyadic d0 = a.eval(tl) - b.eval(tl);
        int s = a.tail - b.tail;
        if (s != 0 && !d0.is_zero()) {
            Dyadic tc = tl - div_small(d0, s);
            if (tc > tl) cands.push_back(tc);
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    PL out;
    for (const Dyadic& t : cands) {
        Dyadic va = a.eval(t), vb = b.eval(t);
        out.pts.push_back({t, take_max ? Dyadic::max(va, vb) : Dyadic::min(va, vb)});
    }
    for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
        Dyadic mid = Dyadic::average(cands[i], cands[i + 1]);
        Dyadic va = a.eval(mid), vb = b.eval(mid);
        bool use_a = take_max ? va >= vb : va <= vb;
        out.slopes.push_back(use_a ? a.slope_right(cands[i]) : b.slope_right(cands[i]));
    }
    {
        Dyadic probe = cands.back() + Dyadic(1);
        Dyadic va = a.eval(probe), vb = b.eval(probe);
        bool use_a = take_max ? va >= vb : va <= vb;
        out.tail = use_a ? a.tail : b.tail;
    }
    drop_collinear(out);
    return out;
}

// Least t >= -1 with lam(t) <= rho(t). lam is non-increasing and rho is
// non-decreasing, so the set of such t is upward closed.
Dyadic first_meet(const PL& lam, const PL& rho) {
    std::vector<Dyadic> ts = merged_grid(lam, rho);
    Dyadic d_prev = lam.eval(ts[0]) - rho.eval(ts[0]);
    if (d_prev.sign() <= 0) return ts[0];
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        Dyadic d_next = lam.eval(ts[i + 1]) - rho.eval(ts[i + 1]);
        if (d_next.sign() > 0) {
            d_prev = d_next;
            continue;
        }
        int s = lam.slope_right(ts[i]) - rho.slope_right(ts[i]);
        return ts[i] - div_small(d_prev, s);
    }
    int s = lam.tail - rho.tail;
    if (s >= 0) throw std::logic_error("scaffolds never meet");
    return ts.back() - div_small(d_prev, s);
}

Trajectory clip(const PL& pl, const Dyadic& temp, const Dyadic& mast) {
    std::vector<TrajectoryPoint> pts;
    for (const auto& p : pl.pts) {
        if (p.t < temp) pts.push_back(p);
    }
    if (pts.empty() || pts.back().t < temp) pts.push_back({temp, mast});
    return Trajectory::from_points(std::move(pts));
}

class ThermoCache {
public:
    std::mutex mutex;

    Thermograph get(Game g) {
        Game c = canonicalize(g);
        auto it = memo_.find(c.id());
        if (it != memo_.end()) return it->second;
        Thermograph th = compute(c);
        memo_.emplace(c.id(), th);
        return th;
    }

private:
    std::unordered_map<std::uint32_t, Thermograph> memo_;

    Thermograph compute(Game g) {  // g canonical
        std::vector<Game> l = left_options(g);
        std::vector<Game> r = right_options(g);
        if (l.empty() || r.empty()) {
            GameKind k = kind(g);
            if (k.tag != GameKind::Integer) {
                throw std::logic_error("canonical game with an empty option side is not an integer");
            }
            Trajectory tr = Trajectory::constant(k.value);
            return Thermograph{tr, tr, kMinusOne, k.value};
        }
        PL lam;
        for (std::size_t i = 0; i < l.size(); ++i) {
            PL p = from_trajectory(get(l[i]).right);
            lam = i == 0 ? std::move(p) : combine(lam, p, /*take_max=*/true);
        }
        add_linear(lam, -1);
        PL rho;
        for (std::size_t i = 0; i < r.size(); ++i) {
            PL p = from_trajectory(get(r[i]).left);
            rho = i == 0 ? std::move(p) : combine(rho, p, /*take_max=*/false);
        }
        add_linear(rho, +1);
        Dyadic temp = first_meet(lam, rho);
        Dyadic mast = lam.eval(temp);
        return Thermograph{clip(lam, temp, mast), clip(rho, temp, mast), temp, mast};
    }
};

ThermoCache& cache() {
    static ThermoCache c;
    return c;
}

}  // namespace

Trajectory Trajectory::constant(const Dyadic& v) {
    Trajectory tr;
    tr.pts_.push_back({kMinusOne, v});
    return tr;
}

Trajectory Trajectory::from_points(std::vector<TrajectoryPoint> pts) {
    if (pts.empty()) throw std::invalid_argument("trajectory needs at least one breakpoint");
    if (pts.front().t != kMinusOne) throw std::invalid_argument("trajectory must start at t = -1");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i].t < pts[i + 1].t)) throw std::invalid_argument("breakpoints must increase");
        Dyadic dv = pts[i + 1].value - pts[i].value;
        Dyadic dt = pts[i + 1].t - pts[i].t;
        if (!dv.is_zero() && dv != dt && dv != -dt) {
            throw std::invalid_argument("trajectory slope not in {-1,0,1}");
        }
    }
    Trajectory tr;
    tr.pts_ = std::move(pts);
    return tr;
}

Dyadic Trajectory::eval(const Dyadic& t) const {
    if (t < kMinusOne) throw std::domain_error("trajectory evaluated below t = -1");
    std::size_t i = pts_.size() - 1;
    while (i > 0 && pts_[i].t > t) --i;
    if (i + 1 == pts_.size()) return pts_[i].value;  // constant after last breakpoint
    Dyadic dv = pts_[i + 1].value - pts_[i].value;
    if (dv.is_zero()) return pts_[i].value;
    Dyadic dt = t - pts_[i].t;
    return dv.sign() > 0 ? pts_[i].value + dt : pts_[i].value - dt;
}

Thermograph thermograph(Game g) {
    ThermoCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    return c.get(g);
}

Dyadic temperature(Game g) {
    return thermograph(g).temperature;
}

std::string thermograph_json(const Thermograph& th) {
    nlohmann::ordered_json j;
    j["temperature"] = th.temperature.str();
    j["mast"] = th.mast.str();
    auto points = [](const Trajectory& tr) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& p : tr.breakpoints()) {
            arr.push_back({p.t.str(), p.value.str()});
        }
        return arr;
    };
    j["left"] = points(th.left);
    j["right"] = points(th.right);
    return j.dump(2) + "\n";
}

std::string thermograph_svg(const Thermograph& th) {
    // Axis convention: temperature grows upward, values grow to the LEFT.
    double vmin = th.mast.to_double(), vmax = vmin;
    for (const Trajectory* tr : {&th.left, &th.right}) {
        for (const auto& p : tr->breakpoints()) {
            vmin = std::min(vmin, p.value.to_double());
            vmax = std::max(vmax, p.value.to_double());
        }
    }
    vmin = std::min(vmin, 0.0) - 1.0;
    vmax = std::max(vmax, 0.0) + 1.0;
    double tmin = -1.0;
    double tmax = th.temperature.to_double() + 1.0;  // mast truncated here
    const double sc = 40.0;
    const double width = (vmax - vmin) * sc + 80.0;
    const double height = (tmax - tmin) * sc + 80.0;
    auto X = [&](double v) { return width - 40.0 - (v - vmin) * sc; };
    auto Y = [&](double t) { return height - 40.0 - (t - tmin) * sc; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    svg << "<!-- mast drawn truncated at temperature + 1; it extends upward without bound -->\n";
    // Axes: value axis at t = 0, temperature axis at v = 0 (positive values leftward).
    svg << "<line x1=\"" << X(vmin) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(vmax)
        << "\" y2=\"" << Y(0) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(tmin) << "\" x2=\"" << X(0) << "\" y2=\""
        << Y(tmax) << "\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    auto boundary = [&](const Trajectory& tr, const char* colour) {
        svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (const auto& p : tr.breakpoints()) {
            svg << X(p.value.to_double()) << "," << Y(p.t.to_double()) << " ";
        }
        // Extend to the temperature (constant at the final value).
        svg << X(tr.final_value().to_double()) << "," << Y(th.temperature.to_double());
        svg << "\"/>\n";
    };
    boundary(th.left, "#1f4e9c");
    boundary(th.right, "#b03030");
    // Mast.
    svg << "<line x1=\"" << X(th.mast.to_double()) << "\" y1=\"" << Y(th.temperature.to_double())
        << "\" x2=\"" << X(th.mast.to_double()) << "\" y2=\"" << Y(tmax)
        << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << X(th.mast.to_double()) + 6 << "\" y=\"" << Y(th.temperature.to_double())
        << "\" font-size=\"12\">t = " << th.temperature.str() << ", mast = " << th.mast.str()
        << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cgt
