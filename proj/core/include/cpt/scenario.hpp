#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpt/catalog.hpp"

namespace cpt::scenario {

/// How a chip is used over its service life. Defaults are the reference
/// scenario: 8 hours a day for 5 years on the global-average grid at full
/// utilization.
struct UsageScenario {
    double hours_per_day = 8.0;  // [0, 24]
    double years = 5.0;          // >= 0
    double utilization = 1.0;    // [0, 1], scales the power draw
    std::string grid_id = "global-avg";

    /// Direct emission-factor override (kg CO2/kWh). Set by the CLI's --ef
    /// flag; bypasses the grid record. Not part of the scenario file schema.
    std::optional<double> ef_override;

    void validate() const;
};

/// Scenario file: JSON object {hours_per_day, years, utilization, grid_id},
/// each key optional and defaulted.
UsageScenario load_scenario_file(const std::filesystem::path& path, bool lenient = false);
UsageScenario scenario_from_json_text(std::string_view text, bool lenient = false);

/// years x 365 x hours_per_day, as a Time quantity in hours.
Quantity lifetime_hours(const UsageScenario& s);

/// The emission factor the scenario resolves to: the override if set,
/// otherwise the grid record's value.
Quantity resolve_emission_factor(const UsageScenario& s, const Catalog& catalog);

/// Derives per-transistor power from TDP x utilization and the transistor
/// count, resolves the grid, and computes the lifetime hours.
engine::OperationalInputs to_operational_inputs(const UsageScenario& s,
                                                const ProcessorRecord& processor,
                                                const Catalog& catalog);

/// Full assessment of one processor under one scenario. Power per transistor
/// comes from the record's printed range (scaled by utilization) when the
/// record carries one, otherwise from the TDP derivation.
engine::CptBreakdown assess(const Catalog& catalog, const ProcessorRecord& processor,
                            const UsageScenario& s);

enum class SweepParameter { EmissionFactor, HoursPerDay, Years, Utilization };

/// Accepts "ef"/"emission_factor", "hours_per_day", "years", "utilization".
SweepParameter parse_sweep_parameter(std::string_view name);
std::string_view sweep_parameter_name(SweepParameter p);

struct SweepSpec {
    SweepParameter parameter;
    double from;
    double to;
    int steps;  // >= 2

    void validate() const;
};

struct SweepPoint {
    double value;
    engine::CptBreakdown breakdown;
};

/// Evaluates `steps` evenly spaced points of the swept parameter, endpoints
/// included, in ascending order. Every point is a full assessment of the
/// processor under the modified scenario.
std::vector<SweepPoint> sweep(const SweepSpec& spec, const UsageScenario& base,
                              const ProcessorRecord& processor, const Catalog& catalog);

enum class RankKey { TotalPerTransistor, TotalChip, OperationalChip };

RankKey parse_rank_key(std::string_view name);
std::string_view rank_key_name(RankKey k);

struct RankedEntry {
    const ProcessorRecord* processor;
    engine::CptBreakdown breakdown;
    double key_midpoint;  // canonical grams
};

/// Ascending by the midpoint of the chosen key; equal midpoints fall back to
/// lexicographic id order.
std::vector<RankedEntry> rank(const std::vector<const ProcessorRecord*>& processors,
                              const UsageScenario& s, const Catalog& catalog,
                              RankKey key);

}  // namespace cpt::scenario
