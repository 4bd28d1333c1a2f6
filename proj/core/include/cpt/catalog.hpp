#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpt/engine.hpp"

namespace cpt {

/// An interval-valued field exactly as it appeared in its source document:
/// raw magnitudes plus the display unit (empty for pure numbers). Records
/// keep this form so serialization reproduces the source verbatim and
/// load -> serialize -> load is a fixed point. `value` is the canonical
/// Interval derived from it.
struct QuantityField {
    double raw_lo = 0.0;
    double raw_hi = 0.0;
    bool is_point = true;
    std::string unit;  // "" for counts and fractions
    Interval value;

    static QuantityField from_unit(double lo, double hi, std::string unit);
    static QuantityField from_number(double lo, double hi, Dim dim);
    static QuantityField point_of(double v, std::string unit) {
        return from_unit(v, v, std::move(unit));
    }
    static QuantityField number(double v, Dim dim) { return from_number(v, v, dim); }
};

struct ProcessorRecord {
    std::string id;
    std::string name;
    QuantityField transistor_count;  // Count, lo > 0
    QuantityField tdp;               // Power
    std::string node_id;             // must resolve to a ProcessNodeRecord
    /// Per-transistor power range as printed by the data source (kept
    /// verbatim, distinct from the TDP-derived range).
    std::optional<QuantityField> printed_power_per_transistor;
    std::string source;  // provenance, mandatory
    std::string origin;  // "built-in" or the path of the supplying file
};

struct ProcessNodeRecord {
    std::string id;
    std::string node_name;
    std::map<std::string, QuantityField> stage_emissions;  // may be empty
    QuantityField wafer_total;
    QuantityField yield_fraction;
    QuantityField transistors_per_wafer;
    std::string source;
    std::string origin;

    engine::WaferProfile profile() const;
};

struct GridRecord {
    std::string id;
    std::string region;
    QuantityField emission_factor;  // point value
    std::string source;
    std::string origin;

    Quantity ef() const { return emission_factor.value.lo(); }
};

/// Immutable store of processor, process-node and grid records. Ships the
/// reference data built in; user files merge on top of it, shadowing by id.
class Catalog {
public:
    Catalog(std::vector<ProcessorRecord> processors,
            std::vector<ProcessNodeRecord> nodes, std::vector<GridRecord> grids);

    /// The built-in reference records. Deterministic; validates cleanly.
    static Catalog builtin();

    /// Built-ins merged with the records of a JSON catalog file. File records
    /// shadow built-ins on id collision (one warning per shadow). Throws
    /// ParseError for malformed documents and ValidationError (with per-field
    /// diagnostics) for rule violations.
    static Catalog load_file(const std::filesystem::path& path, bool lenient = false,
                             std::vector<std::string>* warnings = nullptr);

    /// Same as load_file but from an in-memory document.
    static Catalog from_json_text(std::string_view text, bool lenient = false,
                                  std::vector<std::string>* warnings = nullptr,
                                  std::string_view origin = "inline");

    const std::vector<ProcessorRecord>& processors() const noexcept { return processors_; }
    const std::vector<ProcessNodeRecord>& nodes() const noexcept { return nodes_; }
    const std::vector<GridRecord>& grids() const noexcept { return grids_; }

    const ProcessorRecord* find_processor(std::string_view id) const noexcept;
    const ProcessNodeRecord* find_node(std::string_view id) const noexcept;
    const GridRecord* find_grid(std::string_view id) const noexcept;

    /// Lookup by id; throws LookupError when the id does not resolve.
    const ProcessorRecord& processor(std::string_view id) const;
    const ProcessNodeRecord& node(std::string_view id) const;
    const GridRecord& grid(std::string_view id) const;

    /// JSON document in the catalog file schema; loadable by load_file and
    /// byte-stable across load/serialize cycles.
    std::string serialize() const;

private:
    std::vector<ProcessorRecord> processors_;
    std::vector<ProcessNodeRecord> nodes_;
    std::vector<GridRecord> grids_;
};

/// Checks every record invariant and cross-reference; returns one diagnostic
/// per violation (empty means the catalog is sound). Never throws.
std::vector<Diagnostic> validate(const Catalog& catalog);

/// Schema- and invariant-checks a raw catalog document without building it.
/// Reports field-shape problems (inverted or negative intervals, unknown
/// units, missing fields) that record construction would reject outright.
std::vector<Diagnostic> validate_catalog_text(std::string_view json_text,
                                              bool lenient = false);

}  // namespace cpt
