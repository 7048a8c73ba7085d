#include "aqmtune/netmodel.hpp"

#include <cmath>

#include "aqmtune/errors.hpp"

namespace aqmtune {

namespace {

double snap_milli(double x) {
    return std::round(x * 1000.0) / 1000.0;
}

}  // namespace

void NetworkParams::validate() const {
    if (!(n_flows >= 1.0) || !std::isfinite(n_flows))
        throw InvalidParams("n_flows must be >= 1");
    if (!(capacity > 0.0) || !std::isfinite(capacity))
        throw InvalidParams("capacity must be > 0");
    if (!(prop_delay >= 0.0) || !std::isfinite(prop_delay))
        throw InvalidParams("prop_delay must be >= 0");
    if (!(q_ref >= 0.0) || !std::isfinite(q_ref))
        throw InvalidParams("q_ref must be >= 0");
}

OperatingPoint compute_operating_point(const NetworkParams& params) {
    params.validate();
    OperatingPoint op;
    op.r0_delay = params.q_ref / params.capacity + params.prop_delay;
    if (!(op.r0_delay > 0.0))
        throw InvalidParams("equilibrium round-trip time is zero; not a delay plant");
    op.w0 = op.r0_delay * params.capacity / params.n_flows;
    if (op.w0 * op.w0 < 2.0)
        throw InfeasibleOperatingPoint(
            "equilibrium window below sqrt(2); marking probability would exceed 1");
    op.p0 = 2.0 / (op.w0 * op.w0);
    op.gain_k = params.n_flows * op.w0 * op.w0 * op.w0 / 2.0;
    return op;
}

PlantCoefficients linearize(const OperatingPoint& op, CoefficientMode mode) {
    PlantCoefficients plant;
    plant.mode = mode;
    plant.num_gain = op.gain_k;
    const double r0 = mode == CoefficientMode::Legacy ? snap_milli(op.r0_delay) : op.r0_delay;
    plant.delay = r0;
    plant.den_delay_coeff = r0;
    plant.den_poly[0] = 2.0;
    plant.den_poly[1] = (op.w0 + 1.0) * r0;
    plant.den_poly[2] = mode == CoefficientMode::Legacy ? op.w0 * r0 : op.w0 * r0 * r0;
    return plant;
}

Triplet gains_to_triplet(const PidGains& g, const OperatingPoint& op) {
    return Triplet{op.gain_k * g.ki, op.gain_k * g.kp, op.gain_k * g.kd + op.r0_delay};
}

PidGains triplet_to_gains(const Triplet& t, const OperatingPoint& op) {
    if (op.gain_k == 0.0)
        throw InvalidParams("plant gain K is zero; triplet transform undefined");
    return PidGains{t.r1 / op.gain_k, t.r0 / op.gain_k, (t.r2 - op.r0_delay) / op.gain_k};
}

}  // namespace aqmtune
