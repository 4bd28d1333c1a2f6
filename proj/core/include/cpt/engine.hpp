#pragma once

#include <map>
#include <string>

#include "cpt/interval.hpp"

namespace cpt::engine {

/// Per-wafer emission data for one process node, plus the yield and density
/// needed to spread the wafer total over its good transistors.
struct WaferProfile {
    std::string node_name;

    /// Optional stage breakdown (crystal, wafer_processing, manufacturing),
    /// all MassCO2. When present its sum must contain wafer_total within 1%.
    std::map<std::string, Interval> stage_emissions;

    Interval wafer_total;            // MassCO2 per wafer
    Interval yield_fraction;         // dimensionless, bounds in (0, 1]
    Interval transistors_per_wafer;  // Count, lower bound > 0

    /// Throws InvalidArgument on the first violated field constraint.
    void validate() const;
};

/// Everything the operational-emissions formula consumes.
struct OperationalInputs {
    Interval power_per_transistor;  // Power
    Quantity lifetime_hours;        // Time
    Quantity emission_factor;       // EmissionFactor
};

/// Full emission breakdown for one processor under one usage profile.
/// Per-transistor and chip-level values are kept side by side so reports can
/// show every intermediate.
struct CptBreakdown {
    Interval manufacturing_per_transistor;  // MassCO2
    Interval operational_per_transistor;    // MassCO2
    Interval total_per_transistor;          // MassCO2
    Interval manufacturing_chip;            // MassCO2
    Interval operational_chip;              // MassCO2
    Interval total_chip;                    // MassCO2
    Interval transistor_count;              // Count

    /// Manufacturing fraction of the chip total at interval midpoints,
    /// clamped to [0, 1]; zero when the total is zero.
    double manufacturing_share() const;
};

/// Interval sum over the lifecycle stages. Known stage names are folded in
/// the fixed order crystal, wafer, wafer_processing, manufacturing,
/// operational (the value does not depend on it); unknown names follow
/// alphabetically. Throws on an empty map.
Interval stage_sum(const std::map<std::string, Interval>& stages);

/// wafer_total / (yield x transistors_per_wafer), interval-correct.
Interval manufacturing_per_transistor(const WaferProfile& p);

/// n_trans x c_fab: chip-level manufacturing emissions from the
/// per-transistor fabrication factor.
Interval manufacturing_chip_total(const Interval& n_trans, const Interval& c_fab);

/// p_total / n_trans. Throws when the count's lower bound is zero.
Interval per_transistor_power(const Interval& p_total, const Interval& n_trans);

/// power x hours x emission factor, through the dimension chain
/// Power x Time -> Energy, Energy x EmissionFactor -> MassCO2.
Interval operational_per_transistor(const OperationalInputs& in);

/// Manufacturing plus operational per-transistor emissions.
Interval cpt_per_transistor(const Interval& c_man, const Interval& c_oper);

/// n_trans x per-transistor emissions.
Interval chip_total(const Interval& n_trans, const Interval& cpt);

/// Composes the whole chain for one processor: manufacturing from the wafer
/// profile, operation from the usage inputs, totals and both roll-ups.
CptBreakdown assess(const Interval& n_trans, const WaferProfile& profile,
                    const OperationalInputs& usage);

}  // namespace cpt::engine
