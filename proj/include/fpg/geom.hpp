#pragma once

#include <cmath>
#include <algorithm>

#include "fpg/errors.hpp"

namespace fpg {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

struct WorldBounds {
    double x_max = 1500.0;
    double y_max = 1500.0;
    double z_max = 600.0;

    bool contains(const Vec3& p) const {
        return p.x >= 0.0 && p.x <= x_max && p.y >= 0.0 && p.y <= y_max &&
               p.z >= 0.0 && p.z <= z_max;
    }

    Vec3 clamp(const Vec3& p) const {
        return {std::clamp(p.x, 0.0, x_max), std::clamp(p.y, 0.0, y_max),
                std::clamp(p.z, 0.0, z_max)};
    }

    void validate() const {
        if (!(x_max > 0.0 && y_max > 0.0 && z_max > 0.0))
            throw DomainError("world bounds must be positive");
    }
};

struct MotionLimits {
    double max_speed = 10.0; // m/s
    double dt = 1.0;         // s per simulation step

    double max_step() const { return max_speed * dt; }

    void validate() const {
        if (!(max_speed > 0.0)) throw DomainError("max_speed must be > 0");
        if (!(dt > 0.0)) throw DomainError("dt must be > 0");
    }
};

} // namespace fpg
