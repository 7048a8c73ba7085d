#pragma once

// Network model constants, equilibrium operating point, linearized plant
// coefficients and the gain <-> normalized-triplet transform.

#include <array>

namespace aqmtune {

/// Raw network constants of the single-bottleneck fluid model.
struct NetworkParams {
    double n_flows = 0.0;     ///< TCP sessions sharing the router
    double capacity = 0.0;    ///< packets/second
    double prop_delay = 0.0;  ///< seconds
    double q_ref = 0.0;       ///< desired queue length, packets

    /// Throws InvalidParams if any invariant is violated.
    void validate() const;
};

/// Equilibrium of the fluid model about which linearization happens.
struct OperatingPoint {
    double r0_delay = 0.0;  ///< equilibrium round-trip time, seconds
    double w0 = 0.0;        ///< equilibrium congestion window, packets
    double p0 = 0.0;        ///< equilibrium marking probability
    double gain_k = 0.0;    ///< plant gain K = N*W0^3/2
};

/// Coefficient convention for the linearized plant.
///
/// Derived: exact R0, quadratic denominator coefficient W0*R0^2.
/// Legacy:  R0 snapped to 3 decimals in every plant coefficient and in the
///          exponential shift, with W0*R0 as the quadratic coefficient.
///          This reproduces the widely quoted numeric coefficients
///          (2, 2.239, 1.706) for the nominal configuration and is the
///          default for result reproduction.
enum class CoefficientMode { Derived, Legacy };

/// Linearized plant
///   P(s) = K e^{-Ls} / (d2 s^2 + d1 s + d0 + c s e^{-Ls})
/// with den_poly = [d0, d1, d2] (constant to highest) and c = den_delay_coeff.
struct PlantCoefficients {
    double num_gain = 0.0;
    double delay = 0.0;
    std::array<double, 3> den_poly{};
    double den_delay_coeff = 0.0;
    CoefficientMode mode = CoefficientMode::Derived;
};

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
};

/// Normalized controller parameters: r0 = K*ki, r1 = K*kp, r2 = K*kd + R0.
struct Triplet {
    double r0 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
};

/// Closed-form equilibrium. Rejects R0 <= 0 (no delay plant) and w0 < sqrt(2)
/// (p0 would exceed 1) with distinct error types.
OperatingPoint compute_operating_point(const NetworkParams& params);

PlantCoefficients linearize(const OperatingPoint& op, CoefficientMode mode);

Triplet gains_to_triplet(const PidGains& g, const OperatingPoint& op);

/// Exact inverse of gains_to_triplet; rejects K = 0.
PidGains triplet_to_gains(const Triplet& t, const OperatingPoint& op);

}  // namespace aqmtune
