#pragma once

// Plain-arithmetic reference implementations, written independently of the
// library's interval/dimension machinery. Tests run point inputs through
// both paths and require agreement to 1e-12 relative.

namespace oracle {

// W x h -> kWh
inline double energy_kwh(double watts, double hours) { return watts * hours / 1000.0; }

// kWh x (kg CO2 / kWh) -> g
inline double emitted_g(double kwh, double ef) { return kwh * ef * 1000.0; }

// Full operational chain in grams: the kWh and kg->g factors cancel.
inline double operational_g(double watts, double hours, double ef) {
    return watts * hours * ef;
}

inline double per_transistor_w(double total_w, double count) { return total_w / count; }

inline double manufacturing_g(double wafer_g, double yield, double per_wafer) {
    return wafer_g / (yield * per_wafer);
}

inline double chip_g(double count, double per_transistor_g) {
    return count * per_transistor_g;
}

inline double midpoint(double lo, double hi) { return (lo + hi) / 2.0; }

inline double lifetime_h(double years, double hours_per_day) {
    return years * 365.0 * hours_per_day;
}

inline double rel_err(double actual, double expected) {
    if (expected == 0.0) return actual == 0.0 ? 0.0 : 1.0;
    const double diff = actual > expected ? actual - expected : expected - actual;
    return diff / (expected > 0 ? expected : -expected);
}

}  // namespace oracle
