#pragma once

namespace sci {

/// Wraps an angle into (-pi, pi].
double normalize_angle(double radians);

/// Magnitude of the wrapped difference between two angles, in [0, pi].
double wrapped_angle_diff(double a, double b);

double deg_to_rad(double degrees);
double rad_to_deg(double radians);

/// Complex electrical quantity in polar form. Magnitude is per-unit and
/// non-negative; the angle is kept normalized to (-pi, pi].
struct Phasor {
    double magnitude = 0.0;  // pu
    double angle = 0.0;      // radians, (-pi, pi]

    Phasor() = default;
    Phasor(double magnitude_pu, double angle_rad);

    bool operator==(const Phasor&) const = default;
};

/// Decision thresholds that turn analog phasors into the binary logicals
/// the identifiers consume.
struct Thresholds {
    double v_equal_mag_tol = 1e-3;  // relative, with a 1.0 pu floor
    double v_equal_ang_tol = 0.01;  // radians
    double v_energized_min = 0.5;   // pu
    double i_present_min = 0.01;    // pu

    void validate() const;  // throws ValidationError
};

/// True iff the two phasors agree within tolerance. Magnitude comparison is
/// relative with a 1.0 pu floor so that near-zero (dead-bus) magnitudes
/// compare stably; symmetric in its arguments.
bool phasor_equal(const Phasor& a, const Phasor& b, const Thresholds& th);

/// True iff the voltage magnitude is at or above the energization threshold.
bool is_energized(const Phasor& v, const Thresholds& th);

/// True iff the current magnitude is at or above the presence threshold.
/// A closed breaker feeding a no-load line reads as absent; that ambiguity
/// is resolved by the threshold rule, not by this library.
bool current_present(const Phasor& i, const Thresholds& th);

}  // namespace sci
