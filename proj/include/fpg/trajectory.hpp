#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/geom.hpp"

namespace fpg {

// Motion template for one UAV. "planned" means waypoints arrive from the
// path planner at episode boundaries instead of a closed shape.
struct TrajectorySpec {
    enum class Kind { bezier, triangle, circle, rectangle, planned };

    Kind kind = Kind::bezier;
    std::vector<Vec3> points; // control points / vertices / corners
    Vec3 center;              // circle only
    double radius = 0.0;      // circle only
    bool round_trip = true;   // bezier only

    void validate(const WorldBounds& bounds) const {
        switch (kind) {
        case Kind::bezier:
            if (points.size() < 2)
                throw TrajectoryError("bezier needs at least 2 control points");
            for (const auto& p : points)
                if (!bounds.contains(p))
                    throw TrajectoryError("bezier control point outside bounds");
            break;
        case Kind::triangle:
            if (points.size() != 3)
                throw TrajectoryError("triangle needs exactly 3 vertices");
            for (const auto& p : points)
                if (!bounds.contains(p))
                    throw TrajectoryError("triangle vertex outside bounds");
            break;
        case Kind::rectangle:
            if (points.size() != 4)
                throw TrajectoryError("rectangle needs exactly 4 corners");
            for (const auto& p : points)
                if (!bounds.contains(p))
                    throw TrajectoryError("rectangle corner outside bounds");
            break;
        case Kind::circle: {
            if (!(radius > 0.0)) throw TrajectoryError("circle radius must be > 0");
            const Vec3 lo{center.x - radius, center.y - radius, center.z};
            const Vec3 hi{center.x + radius, center.y + radius, center.z};
            if (!bounds.contains(lo) || !bounds.contains(hi))
                throw TrajectoryError("circle not entirely inside bounds");
            break;
        }
        case Kind::planned:
            break;
        }
    }
};

// De Casteljau evaluation of the degree-(n-1) Bezier point.
inline Vec3 bezier_point(std::span<const Vec3> controls, double u) {
    if (controls.empty()) throw TrajectoryError("empty bezier control list");
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("bezier parameter outside [0,1]");
    std::vector<Vec3> work(controls.begin(), controls.end());
    for (size_t level = work.size() - 1; level > 0; --level)
        for (size_t i = 0; i < level; ++i)
            work[i] = work[i] * (1.0 - u) + work[i + 1] * u;
    return work[0];
}

// Point at arc length s along a closed pattern, s taken mod the perimeter.
// Circle runs counterclockwise from angle 0 in the plane z = center.z;
// polygons traverse vertices in listed order.
inline Vec3 pattern_waypoint(const TrajectorySpec& spec, double s) {
    if (s < 0.0) throw DomainError("arc length must be >= 0");
    if (spec.kind == TrajectorySpec::Kind::circle) {
        if (!(spec.radius > 0.0)) throw TrajectoryError("degenerate circle");
        const double angle = s / spec.radius;
        return {spec.center.x + spec.radius * std::cos(angle),
                spec.center.y + spec.radius * std::sin(angle), spec.center.z};
    }
    if (spec.kind != TrajectorySpec::Kind::triangle &&
        spec.kind != TrajectorySpec::Kind::rectangle)
        throw TrajectoryError("pattern_waypoint requires a closed pattern");

    const auto& v = spec.points;
    const size_t n = v.size();
    double perimeter = 0.0;
    for (size_t i = 0; i < n; ++i) perimeter += distance(v[i], v[(i + 1) % n]);
    if (!(perimeter > 0.0)) throw TrajectoryError("degenerate pattern: zero perimeter");

    double rem = std::fmod(s, perimeter);
    for (size_t i = 0; i < n; ++i) {
        const Vec3& a = v[i];
        const Vec3& b = v[(i + 1) % n];
        const double edge = distance(a, b);
        if (rem <= edge || i == n - 1) {
            const double t = edge > 0.0 ? rem / edge : 0.0;
            return a + (b - a) * t;
        }
        rem -= edge;
    }
    return v[0]; // unreachable
}

// One integration step: move from pos toward desired by at most
// max_speed*dt, then clamp componentwise into [0, bound].
inline Vec3 step_motion(const Vec3& pos, const Vec3& desired,
                        const MotionLimits& limits, const WorldBounds& bounds) {
    const Vec3 delta = desired - pos;
    const double dist = delta.norm();
    const double step = limits.max_step();
    Vec3 next = pos;
    if (dist > 0.0) next = dist <= step ? desired : pos + delta * (step / dist);
    return bounds.clamp(next);
}

// Arc-length lookup table over a Bezier curve so the ally can move along it
// at constant ground speed. 2048 chords keep the parameterization error well
// below one motion step for arena-scale curves.
class BezierArc {
public:
    explicit BezierArc(std::vector<Vec3> controls, size_t samples = 2048)
        : controls_(std::move(controls)) {
        if (controls_.size() < 2)
            throw TrajectoryError("bezier needs at least 2 control points");
        cumulative_.resize(samples + 1, 0.0);
        Vec3 prev = bezier_point(controls_, 0.0);
        for (size_t i = 1; i <= samples; ++i) {
            const Vec3 p = bezier_point(controls_, static_cast<double>(i) / samples);
            cumulative_[i] = cumulative_[i - 1] + distance(prev, p);
            prev = p;
        }
    }

    double length() const { return cumulative_.back(); }

    // Position at arc length s, clamped to [0, length].
    Vec3 at_arc(double s) const {
        const double total = length();
        if (s <= 0.0) return bezier_point(controls_, 0.0);
        if (s >= total) return bezier_point(controls_, 1.0);
        // binary search the chord table
        size_t lo = 0, hi = cumulative_.size() - 1;
        while (hi - lo > 1) {
            const size_t mid = (lo + hi) / 2;
            (cumulative_[mid] <= s ? lo : hi) = mid;
        }
        const double seg = cumulative_[hi] - cumulative_[lo];
        const double frac = seg > 0.0 ? (s - cumulative_[lo]) / seg : 0.0;
        const double u = (static_cast<double>(lo) + frac) /
                         static_cast<double>(cumulative_.size() - 1);
        return bezier_point(controls_, u);
    }

    // Round-trip position: s in [0, 2*length) runs the curve forward then
    // backward.
    Vec3 at_round_trip(double s) const {
        const double total = length();
        double m = std::fmod(s, 2.0 * total);
        if (m < 0.0) m += 2.0 * total;
        return m <= total ? at_arc(m) : at_arc(2.0 * total - m);
    }

    const std::vector<Vec3>& controls() const { return controls_; }

private:
    std::vector<Vec3> controls_;
    std::vector<double> cumulative_;
};

} // namespace fpg
