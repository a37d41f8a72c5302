#include "sci/phasor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sci/errors.hpp"

namespace sci {

namespace {
constexpr double kPi = std::numbers::pi;
}

double normalize_angle(double radians) {
    double r = std::remainder(radians, 2.0 * kPi);  // [-pi, pi]
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

double wrapped_angle_diff(double a, double b) {
    return std::fabs(normalize_angle(a - b));
}

double deg_to_rad(double degrees) { return degrees * kPi / 180.0; }
double rad_to_deg(double radians) { return radians * 180.0 / kPi; }

Phasor::Phasor(double magnitude_pu, double angle_rad)
    : magnitude(magnitude_pu), angle(normalize_angle(angle_rad)) {
    if (magnitude_pu < 0.0) {
        throw ValidationError("phasor magnitude must be non-negative");
    }
}

void Thresholds::validate() const {
    if (v_equal_mag_tol <= 0.0 || v_equal_ang_tol <= 0.0 || v_energized_min <= 0.0 ||
        i_present_min <= 0.0) {
        throw ValidationError("thresholds must be strictly positive");
    }
    if (v_energized_min <= v_equal_mag_tol) {
        throw ValidationError("v_energized_min must exceed v_equal_mag_tol");
    }
}

bool phasor_equal(const Phasor& a, const Phasor& b, const Thresholds& th) {
    const double scale = std::max({a.magnitude, b.magnitude, 1.0});
    const bool mag_ok = std::fabs(a.magnitude - b.magnitude) <= th.v_equal_mag_tol * scale;
    const bool ang_ok = wrapped_angle_diff(a.angle, b.angle) <= th.v_equal_ang_tol;
    return mag_ok && ang_ok;
}

bool is_energized(const Phasor& v, const Thresholds& th) {
    return v.magnitude >= th.v_energized_min;
}

bool current_present(const Phasor& i, const Thresholds& th) {
    return i.magnitude >= th.i_present_min;
}

}  // namespace sci
