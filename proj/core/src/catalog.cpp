#include "cpt/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace cpt {

using nlohmann::json;

QuantityField QuantityField::from_unit(double lo, double hi, std::string unit) {
    Interval value(make_quantity(lo, unit), make_quantity(hi, unit));
    return QuantityField{lo, hi, lo == hi, std::move(unit), value};
}

QuantityField QuantityField::from_number(double lo, double hi, Dim dim) {
    return QuantityField{lo, hi, lo == hi, "", Interval(lo, hi, dim)};
}

engine::WaferProfile ProcessNodeRecord::profile() const {
    engine::WaferProfile p{
        .node_name = node_name,
        .stage_emissions = {},
        .wafer_total = wafer_total.value,
        .yield_fraction = yield_fraction.value,
        .transistors_per_wafer = transistors_per_wafer.value,
    };
    for (const auto& [stage, field] : stage_emissions) {
        p.stage_emissions.emplace(stage, field.value);
    }
    return p;
}

namespace {

constexpr std::array<std::string_view, 7> kProcessorKeys = {
    "id", "name", "transistor_count", "tdp", "node_id",
    "printed_power_per_transistor", "source"};
constexpr std::array<std::string_view, 7> kNodeKeys = {
    "id", "node_name", "stage_emissions", "wafer_total", "yield",
    "transistors_per_wafer", "source"};
constexpr std::array<std::string_view, 4> kGridKeys = {"id", "region",
                                                       "emission_factor", "source"};
constexpr std::array<std::string_view, 3> kStageNames = {"crystal", "wafer_processing",
                                                         "manufacturing"};
constexpr std::array<std::string_view, 3> kTopKeys = {"processors", "nodes", "grids"};
constexpr std::array<std::string_view, 2> kQuantityKeys = {"value", "unit"};

struct ParseState {
    bool lenient = false;
    std::vector<Diagnostic> diags;

    void fail(std::string record, std::string field, std::string rule,
              std::string message = "") {
        diags.push_back(Diagnostic{std::move(record), std::move(field),
                                   std::move(rule), std::move(message)});
    }
};

std::string record_id_of(const json& j, const std::string& kind, std::size_t index) {
    if (j.is_object() && j.contains("id") && j["id"].is_string()) {
        return j["id"].get<std::string>();
    }
    return kind + "[" + std::to_string(index) + "]";
}

template <std::size_t N>
void check_known_keys(const json& obj, const std::array<std::string_view, N>& known,
                      const std::string& record, ParseState& st) {
    if (st.lenient) return;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const bool ok = std::any_of(known.begin(), known.end(),
                                    [&](std::string_view k) { return k == it.key(); });
        if (!ok) {
            st.fail(record, it.key(), "unknown field",
                    "not part of the catalog schema (pass --lenient to ignore)");
        }
    }
}

bool parse_bounds(const json& j, const std::string& record, const std::string& field,
                  ParseState& st, double& lo, double& hi) {
    if (j.is_number()) {
        lo = hi = j.get<double>();
    } else if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        lo = j[0].get<double>();
        hi = j[1].get<double>();
    } else {
        st.fail(record, field, "wrong shape",
                "expected a number or a two-element [lo, hi] array");
        return false;
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        st.fail(record, field, "not finite");
        return false;
    }
    if (lo < 0.0 || hi < 0.0) {
        st.fail(record, field, "negative value", "bounds must be non-negative");
        return false;
    }
    if (lo > hi) {
        st.fail(record, field, "inverted interval",
                "lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
        return false;
    }
    return true;
}

std::optional<QuantityField> parse_number_field(const json& obj, const std::string& key,
                                                Dim dim, const std::string& record,
                                                ParseState& st) {
    if (!obj.contains(key)) {
        st.fail(record, key, "missing field");
        return std::nullopt;
    }
    double lo = 0.0, hi = 0.0;
    if (!parse_bounds(obj[key], record, key, st, lo, hi)) return std::nullopt;
    return QuantityField::from_number(lo, hi, dim);
}

std::optional<QuantityField> parse_quantity_field(const json& value, Dim dim,
                                                  const std::string& record,
                                                  const std::string& field,
                                                  ParseState& st) {
    if (!value.is_object()) {
        st.fail(record, field, "wrong shape",
                "expected an object {\"value\": ..., \"unit\": \"...\"}");
        return std::nullopt;
    }
    check_known_keys(value, kQuantityKeys, record + "/" + field, st);
    if (!value.contains("value") || !value.contains("unit")) {
        st.fail(record, field, "missing field", "needs both \"value\" and \"unit\"");
        return std::nullopt;
    }
    if (!value["unit"].is_string()) {
        st.fail(record, field, "wrong shape", "\"unit\" must be a string");
        return std::nullopt;
    }
    const auto unit = value["unit"].get<std::string>();
    if (!unit_belongs_to(unit, dim)) {
        st.fail(record, field, "unit mismatch",
                "\"" + unit + "\" is not a " + std::string(dim_name(dim)) + " unit");
        return std::nullopt;
    }
    double lo = 0.0, hi = 0.0;
    if (!parse_bounds(value["value"], record, field, st, lo, hi)) return std::nullopt;
    return QuantityField::from_unit(lo, hi, unit);
}

std::optional<QuantityField> parse_quantity_member(const json& obj, const std::string& key,
                                                   Dim dim, const std::string& record,
                                                   ParseState& st) {
    if (!obj.contains(key)) {
        st.fail(record, key, "missing field");
        return std::nullopt;
    }
    return parse_quantity_field(obj[key], dim, record, key, st);
}

std::optional<std::string> parse_string_member(const json& obj, const std::string& key,
                                               const std::string& record, ParseState& st) {
    if (!obj.contains(key)) {
        st.fail(record, key, "missing field");
        return std::nullopt;
    }
    if (!obj[key].is_string()) {
        st.fail(record, key, "wrong shape", "expected a string");
        return std::nullopt;
    }
    return obj[key].get<std::string>();
}

std::optional<ProcessorRecord> parse_processor(const json& j, std::size_t index,
                                               const std::string& origin, ParseState& st) {
    const std::string record = record_id_of(j, "processors", index);
    if (!j.is_object()) {
        st.fail(record, "", "wrong shape", "expected an object");
        return std::nullopt;
    }
    check_known_keys(j, kProcessorKeys, record, st);
    auto id = parse_string_member(j, "id", record, st);
    auto name = parse_string_member(j, "name", record, st);
    auto count = parse_number_field(j, "transistor_count", Dim::Count, record, st);
    auto tdp = parse_quantity_member(j, "tdp", Dim::Power, record, st);
    auto node_id = parse_string_member(j, "node_id", record, st);
    auto source = parse_string_member(j, "source", record, st);
    std::optional<QuantityField> printed;
    if (j.contains("printed_power_per_transistor")) {
        printed = parse_quantity_field(j["printed_power_per_transistor"], Dim::Power,
                                       record, "printed_power_per_transistor", st);
        if (!printed) return std::nullopt;
    }
    if (!id || !name || !count || !tdp || !node_id || !source) return std::nullopt;
    return ProcessorRecord{*id,      *name,   *count, *tdp,
                           *node_id, printed, *source, origin};
}

std::optional<ProcessNodeRecord> parse_node(const json& j, std::size_t index,
                                            const std::string& origin, ParseState& st) {
    const std::string record = record_id_of(j, "nodes", index);
    if (!j.is_object()) {
        st.fail(record, "", "wrong shape", "expected an object");
        return std::nullopt;
    }
    check_known_keys(j, kNodeKeys, record, st);
    auto id = parse_string_member(j, "id", record, st);
    auto name = parse_string_member(j, "node_name", record, st);
    auto wafer_total = parse_quantity_member(j, "wafer_total", Dim::MassCO2, record, st);
    auto yield_fraction = parse_number_field(j, "yield", Dim::Dimensionless, record, st);
    auto tpw = parse_number_field(j, "transistors_per_wafer", Dim::Count, record, st);
    auto source = parse_string_member(j, "source", record, st);
    std::map<std::string, QuantityField> stages;
    if (j.contains("stage_emissions")) {
        const json& se = j["stage_emissions"];
        if (!se.is_object()) {
            st.fail(record, "stage_emissions", "wrong shape", "expected an object");
            return std::nullopt;
        }
        for (auto it = se.begin(); it != se.end(); ++it) {
            const bool known = std::any_of(kStageNames.begin(), kStageNames.end(),
                                           [&](std::string_view s) { return s == it.key(); });
            if (!known && !st.lenient) {
                st.fail(record, "stage_emissions." + it.key(), "unknown stage",
                        "expected crystal, wafer_processing or manufacturing");
                continue;
            }
            auto stage = parse_quantity_field(it.value(), Dim::MassCO2, record,
                                              "stage_emissions." + it.key(), st);
            if (stage) stages.emplace(it.key(), std::move(*stage));
        }
    }
    if (!id || !name || !wafer_total || !yield_fraction || !tpw || !source) {
        return std::nullopt;
    }
    return ProcessNodeRecord{*id,  *name,          std::move(stages), *wafer_total,
                             *yield_fraction, *tpw, *source,           origin};
}

std::optional<GridRecord> parse_grid(const json& j, std::size_t index,
                                     const std::string& origin, ParseState& st) {
    const std::string record = record_id_of(j, "grids", index);
    if (!j.is_object()) {
        st.fail(record, "", "wrong shape", "expected an object");
        return std::nullopt;
    }
    check_known_keys(j, kGridKeys, record, st);
    auto id = parse_string_member(j, "id", record, st);
    auto region = parse_string_member(j, "region", record, st);
    auto ef = parse_quantity_member(j, "emission_factor", Dim::EmissionFactor, record, st);
    auto source = parse_string_member(j, "source", record, st);
    if (ef && !ef->is_point) {
        st.fail(record, "emission_factor", "not a point value",
                "grid emission factors must be single numbers");
        return std::nullopt;
    }
    if (!id || !region || !ef || !source) return std::nullopt;
    return GridRecord{*id, *region, *ef, *source, origin};
}

json bounds_to_json(const QuantityField& f) {
    if (f.is_point) return json(f.raw_lo);
    return json::array({f.raw_lo, f.raw_hi});
}

json field_to_json(const QuantityField& f) {
    if (f.unit.empty()) return bounds_to_json(f);
    return json{{"value", bounds_to_json(f)}, {"unit", f.unit}};
}

}  // namespace

Catalog::Catalog(std::vector<ProcessorRecord> processors,
                 std::vector<ProcessNodeRecord> nodes, std::vector<GridRecord> grids)
    : processors_(std::move(processors)),
      nodes_(std::move(nodes)),
      grids_(std::move(grids)) {}

Catalog Catalog::builtin() {
    std::vector<ProcessorRecord> procs;
    procs.push_back(ProcessorRecord{
        .id = "i9-13900K",
        .name = "Intel Core i9-13900K",
        .transistor_count = QuantityField::number(12e9, Dim::Count),
        .tdp = QuantityField::from_unit(125, 253, "W"),
        .node_id = "intel7",
        .printed_power_per_transistor = QuantityField::from_unit(10.4, 21.1, "nW"),
        .source = "CPT study, Table 1 (~12e9 transistors, TDP 125-253 W) and "
                  "Table 2 (10.4-21.1 nW per transistor); Intel ARK",
        .origin = "built-in",
    });
    procs.push_back(ProcessorRecord{
        .id = "ryzen9-7950X",
        .name = "AMD Ryzen 9 7950X",
        .transistor_count = QuantityField::number(13.14e9, Dim::Count),
        .tdp = QuantityField::from_unit(170, 230, "W"),
        .node_id = "tsmc5",
        .printed_power_per_transistor = QuantityField::from_unit(12.9, 17.5, "nW"),
        .source = "CPT study, Table 1 (~13.14e9 transistors, TDP 170-230 W) and "
                  "Table 2 (12.9-17.5 nW per transistor); AMD specifications",
        .origin = "built-in",
    });
    procs.push_back(ProcessorRecord{
        .id = "m-series",
        .name = "Apple M1/M2/M3",
        .transistor_count = QuantityField::from_number(16e9, 25e9, Dim::Count),
        .tdp = QuantityField::from_unit(20, 22, "W"),
        .node_id = "tsmc3",
        .printed_power_per_transistor = std::nullopt,
        .source = "CPT study, Table 1 (M1, M2 and M3 aggregated: 16-25e9 "
                  "transistors, TDP 20-22 W)",
        .origin = "built-in",
    });
    procs.push_back(ProcessorRecord{
        .id = "m3",
        .name = "Apple M3",
        .transistor_count = QuantityField::number(25e9, Dim::Count),
        .tdp = QuantityField::from_unit(20, 22, "W"),
        .node_id = "tsmc3",
        .printed_power_per_transistor = QuantityField::from_unit(0.8, 0.84, "nW"),
        .source = "CPT study, Table 2 (Apple M3, 0.8-0.84 nW per transistor as "
                  "printed; the TDP-derived upper bound is 22/25e9 = 0.88 nW) and "
                  "Table 3 row 3",
        .origin = "built-in",
    });

    std::vector<ProcessNodeRecord> nodes;
    {
        std::map<std::string, QuantityField> stages;
        stages.emplace("crystal", QuantityField::point_of(40, "kg"));
        stages.emplace("wafer_processing", QuantityField::point_of(410, "kg"));
        nodes.push_back(ProcessNodeRecord{
            .id = "tsmc5",
            .node_name = "TSMC 5nm",
            .stage_emissions = std::move(stages),
            .wafer_total = QuantityField::point_of(450, "kg"),
            .yield_fraction = QuantityField::number(0.9, Dim::Dimensionless),
            .transistors_per_wafer = QuantityField::number(1e11, Dim::Count),
            .source = "CPT study: ~450 kg CO2 per 300mm wafer at 5nm; crystal "
                      "growth (Czochralski) 40 kg per wafer; yield and density "
                      "back-solved to the 5.0 ug-per-transistor upper estimate",
            .origin = "built-in",
        });
    }
    nodes.push_back(ProcessNodeRecord{
        .id = "tsmc7",
        .node_name = "TSMC 7nm",
        .stage_emissions = {},
        .wafer_total = QuantityField::point_of(350, "kg"),
        .yield_fraction = QuantityField::number(1.0, Dim::Dimensionless),
        .transistors_per_wafer = QuantityField::number(1.75e11, Dim::Count),
        .source = "CPT study: ~350 kg CO2 per 300mm wafer at 7nm; yield and "
                  "density back-solved to the 2.0 ug-per-transistor lower estimate",
        .origin = "built-in",
    });
    nodes.push_back(ProcessNodeRecord{
        .id = "tsmc3",
        .node_name = "TSMC 3nm",
        .stage_emissions = {},
        .wafer_total = QuantityField::point_of(450, "kg"),
        .yield_fraction = QuantityField::number(0.9, Dim::Dimensionless),
        .transistors_per_wafer = QuantityField::number(2.5e11, Dim::Count),
        .source = "no published 3nm wafer figure; wafer total assumed equal to "
                  "the 5nm estimate, density back-solved from CPT study Table 3 "
                  "row 3 (2.0 ug per transistor)",
        .origin = "built-in",
    });
    nodes.push_back(ProcessNodeRecord{
        .id = "intel7",
        .node_name = "Intel 7 (10nm)",
        .stage_emissions = {},
        .wafer_total = QuantityField::point_of(405, "kg"),
        .yield_fraction = QuantityField::number(0.9, Dim::Dimensionless),
        .transistors_per_wafer = QuantityField::number(1e11, Dim::Count),
        .source = "no published Intel 7 wafer figure; back-solved from CPT study "
                  "Table 3 row 1 (4.5 ug per transistor)",
        .origin = "built-in",
    });
    nodes.push_back(ProcessNodeRecord{
        .id = "intel7-table4",
        .node_name = "Intel 7 (10nm), chip-roll-up variant",
        .stage_emissions = {},
        .wafer_total = QuantityField::point_of(450, "kg"),
        .yield_fraction = QuantityField::number(0.9, Dim::Dimensionless),
        .transistors_per_wafer = QuantityField::number(1e11, Dim::Count),
        .source = "back-solved from CPT study Table 4 row 1 (60 kg / 12e9 = 5.0 "
                  "ug per transistor); conflicts with Table 3 row 1 (4.5 ug)",
        .origin = "built-in",
    });

    std::vector<GridRecord> grids;
    grids.push_back(GridRecord{
        .id = "global-avg",
        .region = "Global average grid",
        .emission_factor = QuantityField::point_of(0.4, "kgCO2/kWh"),
        .source = "CPT study reference scenario: global average grid emission "
                  "factor of 0.4 kg CO2/kWh",
        .origin = "built-in",
    });

    return Catalog(std::move(procs), std::move(nodes), std::move(grids));
}

Catalog Catalog::from_json_text(std::string_view text, bool lenient,
                                std::vector<std::string>* warnings,
                                std::string_view origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("catalog parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("catalog document must be a JSON object");
    }

    ParseState st{.lenient = lenient, .diags = {}};
    check_known_keys(doc, kTopKeys, "catalog", st);

    const std::string origin_str(origin);
    std::vector<ProcessorRecord> file_procs;
    std::vector<ProcessNodeRecord> file_nodes;
    std::vector<GridRecord> file_grids;

    const auto parse_array = [&](const char* key, auto& out, auto parser) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_array()) {
            st.fail("catalog", key, "wrong shape", "expected an array");
            return;
        }
        std::size_t index = 0;
        for (const json& item : doc[key]) {
            if (auto rec = parser(item, index, origin_str, st)) {
                out.push_back(std::move(*rec));
            }
            ++index;
        }
    };
    parse_array("processors", file_procs, parse_processor);
    parse_array("nodes", file_nodes, parse_node);
    parse_array("grids", file_grids, parse_grid);

    // Duplicate ids inside one file are an error, not a shadow.
    const auto check_dups = [&st](const auto& records, const char* kind) {
        std::unordered_set<std::string> seen;
        for (const auto& r : records) {
            if (!seen.insert(r.id).second) {
                st.fail(r.id, "id", "duplicate id",
                        std::string("appears more than once among ") + kind);
            }
        }
    };
    check_dups(file_procs, "processors");
    check_dups(file_nodes, "nodes");
    check_dups(file_grids, "grids");

    if (!st.diags.empty()) throw ValidationError(std::move(st.diags));

    Catalog merged = builtin();
    const auto merge = [&warnings](auto& base, auto file_records, const char* kind) {
        for (auto& rec : file_records) {
            auto it = std::find_if(base.begin(), base.end(),
                                   [&](const auto& b) { return b.id == rec.id; });
            if (it != base.end()) {
                if (warnings != nullptr) {
                    warnings->push_back("record \"" + rec.id + "\" from " + rec.origin +
                                        " shadows the built-in " + kind + " record");
                }
                *it = std::move(rec);
            } else {
                base.push_back(std::move(rec));
            }
        }
    };
    merge(merged.processors_, std::move(file_procs), "processor");
    merge(merged.nodes_, std::move(file_nodes), "node");
    merge(merged.grids_, std::move(file_grids), "grid");

    if (auto diags = validate(merged); !diags.empty()) {
        throw ValidationError(std::move(diags));
    }
    return merged;
}

Catalog Catalog::load_file(const std::filesystem::path& path, bool lenient,
                           std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open catalog file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str(), lenient, warnings, path.string());
}

const ProcessorRecord* Catalog::find_processor(std::string_view id) const noexcept {
    for (const auto& p : processors_) {
        if (p.id == id) return &p;
    }
    return nullptr;
}

const ProcessNodeRecord* Catalog::find_node(std::string_view id) const noexcept {
    for (const auto& n : nodes_) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

const GridRecord* Catalog::find_grid(std::string_view id) const noexcept {
    for (const auto& g : grids_) {
        if (g.id == id) return &g;
    }
    return nullptr;
}

const ProcessorRecord& Catalog::processor(std::string_view id) const {
    if (const auto* p = find_processor(id)) return *p;
    throw LookupError("unknown processor \"" + std::string(id) + "\"");
}

const ProcessNodeRecord& Catalog::node(std::string_view id) const {
    if (const auto* n = find_node(id)) return *n;
    throw LookupError("unknown process node \"" + std::string(id) + "\"");
}

const GridRecord& Catalog::grid(std::string_view id) const {
    if (const auto* g = find_grid(id)) return *g;
    throw LookupError("unknown grid \"" + std::string(id) + "\"");
}

std::string Catalog::serialize() const {
    json doc;
    doc["processors"] = json::array();
    for (const auto& p : processors_) {
        json rec{{"id", p.id},
                 {"name", p.name},
                 {"transistor_count", field_to_json(p.transistor_count)},
                 {"tdp", field_to_json(p.tdp)},
                 {"node_id", p.node_id},
                 {"source", p.source}};
        if (p.printed_power_per_transistor) {
            rec["printed_power_per_transistor"] =
                field_to_json(*p.printed_power_per_transistor);
        }
        doc["processors"].push_back(std::move(rec));
    }
    doc["nodes"] = json::array();
    for (const auto& n : nodes_) {
        json rec{{"id", n.id},
                 {"node_name", n.node_name},
                 {"wafer_total", field_to_json(n.wafer_total)},
                 {"yield", bounds_to_json(n.yield_fraction)},
                 {"transistors_per_wafer", bounds_to_json(n.transistors_per_wafer)},
                 {"source", n.source}};
        if (!n.stage_emissions.empty()) {
            json stages;
            for (const auto& [stage, field] : n.stage_emissions) {
                stages[stage] = field_to_json(field);
            }
            rec["stage_emissions"] = std::move(stages);
        }
        doc["nodes"].push_back(std::move(rec));
    }
    doc["grids"] = json::array();
    for (const auto& g : grids_) {
        doc["grids"].push_back(json{{"id", g.id},
                                    {"region", g.region},
                                    {"emission_factor", field_to_json(g.emission_factor)},
                                    {"source", g.source}});
    }
    return doc.dump(2) + "\n";
}

std::vector<Diagnostic> validate(const Catalog& catalog) {
    std::vector<Diagnostic> out;
    const auto fail = [&out](const std::string& record, const std::string& field,
                             const std::string& rule, std::string message = "") {
        out.push_back(Diagnostic{record, field, rule, std::move(message)});
    };

    const auto check_dups = [&fail](const auto& records, const char* kind) {
        std::unordered_set<std::string> seen;
        for (const auto& r : records) {
            if (!seen.insert(r.id).second) {
                fail(r.id, "id", "duplicate id",
                     std::string("appears more than once among ") + kind);
            }
        }
    };
    check_dups(catalog.processors(), "processors");
    check_dups(catalog.nodes(), "nodes");
    check_dups(catalog.grids(), "grids");

    for (const auto& p : catalog.processors()) {
        if (p.transistor_count.value.lo_mag() <= 0.0) {
            fail(p.id, "transistor_count", "must be positive");
        }
        if (catalog.find_node(p.node_id) == nullptr) {
            fail(p.id, "node_id", "dangling reference",
                 "\"" + p.node_id + "\" names no process node");
        }
        if (p.source.empty()) {
            fail(p.id, "source", "missing provenance");
        }
    }
    for (const auto& n : catalog.nodes()) {
        const auto& y = n.yield_fraction.value;
        if (y.lo_mag() <= 0.0 || y.hi_mag() > 1.0) {
            fail(n.id, "yield", "out of range", "yield must lie in (0, 1]");
        }
        if (n.transistors_per_wafer.value.lo_mag() <= 0.0) {
            fail(n.id, "transistors_per_wafer", "must be positive");
        }
        if (!n.stage_emissions.empty()) {
            std::map<std::string, Interval> stages;
            for (const auto& [stage, field] : n.stage_emissions) {
                stages.emplace(stage, field.value);
            }
            const Interval sum = engine::stage_sum(stages);
            const auto& wt = n.wafer_total.value;
            if (sum.lo_mag() > wt.lo_mag() * 1.01 || sum.hi_mag() < wt.hi_mag() * 0.99) {
                fail(n.id, "stage_emissions", "inconsistent with wafer_total",
                     "stage sum does not contain wafer_total within 1%");
            }
        }
        if (n.source.empty()) {
            fail(n.id, "source", "missing provenance");
        }
    }
    for (const auto& g : catalog.grids()) {
        if (g.source.empty()) {
            fail(g.id, "source", "missing provenance");
        }
    }
    return out;
}

std::vector<Diagnostic> validate_catalog_text(std::string_view json_text, bool lenient) {
    try {
        (void)Catalog::from_json_text(json_text, lenient);
        return {};
    } catch (const ValidationError& e) {
        return e.diagnostics();
    } catch (const ParseError& e) {
        return {Diagnostic{"", "", "parse error", e.what()}};
    }
}

}  // namespace cpt
