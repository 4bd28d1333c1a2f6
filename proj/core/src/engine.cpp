#include "cpt/engine.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>

namespace cpt::engine {

namespace {

constexpr std::array<std::string_view, 5> kStageOrder = {
    "crystal", "wafer", "wafer_processing", "manufacturing", "operational"};

constexpr double kStageSumTolerance = 0.01;

}  // namespace

void WaferProfile::validate() const {
    if (wafer_total.dim() != Dim::MassCO2) {
        throw InvalidArgument(node_name + ": wafer_total must be a CO2 mass");
    }
    if (yield_fraction.dim() != Dim::Dimensionless) {
        throw InvalidArgument(node_name + ": yield must be dimensionless");
    }
    if (yield_fraction.lo_mag() <= 0.0 || yield_fraction.hi_mag() > 1.0) {
        throw InvalidArgument(node_name + ": yield must lie in (0, 1], got [" +
                              std::to_string(yield_fraction.lo_mag()) + ", " +
                              std::to_string(yield_fraction.hi_mag()) + "]");
    }
    if (transistors_per_wafer.dim() != Dim::Count) {
        throw InvalidArgument(node_name + ": transistors_per_wafer must be a count");
    }
    if (transistors_per_wafer.lo_mag() <= 0.0) {
        throw InvalidArgument(node_name + ": transistors_per_wafer must be positive");
    }
    if (!stage_emissions.empty()) {
        for (const auto& [stage, value] : stage_emissions) {
            if (value.dim() != Dim::MassCO2) {
                throw InvalidArgument(node_name + ": stage \"" + stage +
                                      "\" must be a CO2 mass");
            }
        }
        const Interval sum = stage_sum(stage_emissions);
        const bool covers_lo =
            sum.lo_mag() <= wafer_total.lo_mag() * (1.0 + kStageSumTolerance);
        const bool covers_hi =
            sum.hi_mag() >= wafer_total.hi_mag() * (1.0 - kStageSumTolerance);
        if (!covers_lo || !covers_hi) {
            throw InvalidArgument(node_name + ": stage emissions sum [" +
                                  std::to_string(sum.lo_mag()) + ", " +
                                  std::to_string(sum.hi_mag()) +
                                  "] g does not contain wafer_total within 1%");
        }
    }
}

double CptBreakdown::manufacturing_share() const {
    const double total_mid = midpoint(total_chip).magnitude();
    if (total_mid == 0.0) return 0.0;
    const double share = midpoint(manufacturing_chip).magnitude() / total_mid;
    return std::clamp(share, 0.0, 1.0);
}

Interval stage_sum(const std::map<std::string, Interval>& stages) {
    if (stages.empty()) {
        throw InvalidArgument("stage_sum: at least one stage is required");
    }
    std::optional<Interval> acc;
    const auto fold = [&acc](const Interval& v) {
        acc = acc.has_value() ? add(*acc, v) : v;
    };
    for (const auto name : kStageOrder) {
        if (const auto it = stages.find(std::string(name)); it != stages.end()) {
            fold(it->second);
        }
    }
    for (const auto& [name, value] : stages) {
        if (std::find(kStageOrder.begin(), kStageOrder.end(), name) == kStageOrder.end()) {
            fold(value);
        }
    }
    return *acc;
}

Interval manufacturing_per_transistor(const WaferProfile& p) {
    p.validate();
    const Interval good_transistors = mul(p.yield_fraction, p.transistors_per_wafer);
    return div_by_count(p.wafer_total, good_transistors);
}

Interval manufacturing_chip_total(const Interval& n_trans, const Interval& c_fab) {
    return mul(n_trans, c_fab);
}

Interval per_transistor_power(const Interval& p_total, const Interval& n_trans) {
    return div_by_count(p_total, n_trans);
}

Interval operational_per_transistor(const OperationalInputs& in) {
    const Interval energy =
        mul(in.power_per_transistor, Interval::point(in.lifetime_hours));
    return mul(energy, Interval::point(in.emission_factor));
}

Interval cpt_per_transistor(const Interval& c_man, const Interval& c_oper) {
    if (c_man.dim() != Dim::MassCO2 || c_oper.dim() != Dim::MassCO2) {
        throw DimensionError("cpt_per_transistor: both operands must be CO2 masses");
    }
    return add(c_man, c_oper);
}

Interval chip_total(const Interval& n_trans, const Interval& cpt) {
    return mul(n_trans, cpt);
}

CptBreakdown assess(const Interval& n_trans, const WaferProfile& profile,
                    const OperationalInputs& usage) {
    const Interval man = manufacturing_per_transistor(profile);
    const Interval oper = operational_per_transistor(usage);
    const Interval total = cpt_per_transistor(man, oper);
    return CptBreakdown{
        .manufacturing_per_transistor = man,
        .operational_per_transistor = oper,
        .total_per_transistor = total,
        .manufacturing_chip = manufacturing_chip_total(n_trans, man),
        .operational_chip = chip_total(n_trans, oper),
        .total_chip = chip_total(n_trans, total),
        .transistor_count = n_trans,
    };
}

}  // namespace cpt::engine
