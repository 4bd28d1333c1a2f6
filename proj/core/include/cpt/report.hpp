#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpt/scenario.hpp"

namespace cpt::report {

enum class Format { Json, Csv, Markdown };

/// Accepts "json", "csv", "md".
Format parse_format(std::string_view name);

/// `value` with 4 significant digits; the fixed formatting every renderer
/// uses so the three formats agree numerically.
std::string format_sig(double value);

/// One processor's full result under one scenario, ready to render: the
/// breakdown plus the resolved scenario echo, provenance and any notes about
/// labeled data choices.
struct Assessment {
    std::string processor_id;
    std::string processor_name;
    scenario::UsageScenario scenario;
    double lifetime_hours;    // resolved, in hours
    double emission_factor;   // resolved, kg CO2/kWh
    engine::CptBreakdown breakdown;
    double manufacturing_share;
    std::vector<std::string> provenance;
    std::vector<std::string> notes;
};

Assessment build_assessment(const Catalog& catalog, const ProcessorRecord& processor,
                            const scenario::UsageScenario& s);

/// Renders one or more assessments. Output is deterministic: stable key
/// order, 4-significant-digit numbers, byte-identical across repeat calls.
std::string render(const std::vector<Assessment>& assessments, Format format);

/// One compared cell of a published reference table: the engine's computed
/// interval, the value as printed by the study, and the value after any
/// declared correction. Deviation is measured between midpoints against the
/// corrected value. Rows without a tolerance are ledger-only: reported and
/// annotated but excluded from the pass/fail gate.
struct ReproductionRow {
    std::string row_id;       // "1", "2", "3"
    std::string processor_id;
    std::string column;       // manufacturing | operational | total
    Interval computed;
    Interval printed;
    Interval corrected;
    double deviation;
    std::optional<double> tolerance;
    bool pass;
    std::string note;
};

struct Reproduction {
    int table;          // 3 or 4
    std::string title;
    std::string unit;   // display unit of the table's values
    std::vector<ReproductionRow> rows;
    std::vector<std::string> ledger;  // every correction, printed with the data
    std::vector<std::string> summary;
    bool all_pass;
};

/// Recomputes the per-transistor reference table (manufacturing, operational
/// and total emissions for the three benchmark processors) under the default
/// scenario and attaches the printed values with deviations.
Reproduction reproduce_table3(const Catalog& catalog);

/// Same for the chip-level roll-up table, applying the documented
/// corrections (the 565.7 -> 65.7 kg typo, the x1000 unit slip in the
/// operational column) and reporting both readings where the source is
/// internally inconsistent.
Reproduction reproduce_table4(const Catalog& catalog);

std::string render(const Reproduction& reproduction, Format format);

/// The study's headline per-transistor figure: the composed manufacturing +
/// operational range, its midpoint, and the single average the study states.
struct HeadlineAverage {
    Interval composed_range;    // MassCO2
    Quantity computed_midpoint;
    Quantity published_average;
    double deviation;           // relative, vs the published average
};

HeadlineAverage headline_average();

/// Catalog listing with provenance. The JSON form is the catalog file schema
/// itself, so it can be fed back through --catalog.
std::string render_catalog(const Catalog& catalog, Format format);

std::string render_sweep(std::string_view parameter_name,
                         const std::vector<scenario::SweepPoint>& points, Format format);

std::string render_ranking(std::string_view key_name,
                           const std::vector<scenario::RankedEntry>& entries,
                           Format format);

}  // namespace cpt::report
