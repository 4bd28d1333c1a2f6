#include "cpt/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace cpt::report {

using nlohmann::json;

namespace {

constexpr const char* kPerTransistorUnit = "ug";
constexpr const char* kChipUnit = "kg";
constexpr const char* kPowerUnit = "nW";

// Tolerances used by the reproduction gate, pinned here with the data.
constexpr double kExactTolerance = 1e-9;
constexpr double kTable3Tolerance = 0.08;
constexpr double kTable3Row3Tolerance = 0.05;
constexpr double kTable4OperationalTolerance = 0.02;

double round_sig(double v) {
    return std::strtod(format_sig(v).c_str(), nullptr);
}

struct DisplayInterval {
    double lo;
    double hi;
    bool point;
};

DisplayInterval display(const Interval& iv, std::string_view unit) {
    const double lo = convert_to(iv.lo(), unit);
    const double hi = convert_to(iv.hi(), unit);
    return {lo, hi, lo == hi};
}

std::string interval_cell(const Interval& iv, std::string_view unit) {
    const auto d = display(iv, unit);
    if (d.point) return format_sig(d.lo);
    return format_sig(d.lo) + " – " + format_sig(d.hi);
}

std::string interval_str(const Interval& iv, std::string_view unit) {
    return interval_cell(iv, unit) + " " + std::string(unit);
}

json interval_to_json(const Interval& iv, std::string_view unit) {
    const auto d = display(iv, unit);
    json value = d.point ? json(round_sig(d.lo))
                         : json::array({round_sig(d.lo), round_sig(d.hi)});
    return json{{"unit", std::string(unit)}, {"value", std::move(value)}};
}

json bounds_json(const Interval& iv, std::string_view unit) {
    const auto d = display(iv, unit);
    if (d.point) return json(round_sig(d.lo));
    return json::array({round_sig(d.lo), round_sig(d.hi)});
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) out += ",";
        out += csv_escape(fields[i]);
    }
    out += "\n";
    return out;
}

std::string percent(double fraction) {
    if (fraction < 1e-12) return "0%";  // below double-rounding noise
    return format_sig(fraction * 100.0) + "%";
}

std::string gate_str(const std::optional<double>& tolerance) {
    if (!tolerance) return "ledger-only";
    if (*tolerance <= 1e-6) return "exact";
    return percent(*tolerance);
}

std::string status_str(const ReproductionRow& row) {
    if (!row.tolerance) return "noted";
    return row.pass ? "pass" : "FAIL";
}

std::string scenario_line(const Assessment& a) {
    std::string line = format_sig(a.scenario.hours_per_day) + " h/day for " +
                       format_sig(a.scenario.years) + " years, utilization " +
                       format_sig(a.scenario.utilization) + ", grid " +
                       a.scenario.grid_id + ", emission factor " +
                       format_sig(a.emission_factor) + " kgCO2/kWh, lifetime " +
                       format_sig(a.lifetime_hours) + " h";
    return line;
}

json scenario_json(const Assessment& a) {
    return json{{"hours_per_day", a.scenario.hours_per_day},
                {"years", a.scenario.years},
                {"utilization", a.scenario.utilization},
                {"grid_id", a.scenario.grid_id},
                {"emission_factor", round_sig(a.emission_factor)},
                {"lifetime_hours", round_sig(a.lifetime_hours)}};
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "md") return Format::Markdown;
    throw InvalidArgument("unknown format \"" + std::string(name) +
                          "\" (expected json, csv or md)");
}

std::string format_sig(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", value);
    return buf;
}

Assessment build_assessment(const Catalog& catalog, const ProcessorRecord& processor,
                            const scenario::UsageScenario& s) {
    s.validate();
    const ProcessNodeRecord& node = catalog.node(processor.node_id);
    const GridRecord* grid =
        s.ef_override ? nullptr : &catalog.grid(s.grid_id);

    Assessment a{
        .processor_id = processor.id,
        .processor_name = processor.name,
        .scenario = s,
        .lifetime_hours = scenario::lifetime_hours(s).magnitude(),
        .emission_factor = scenario::resolve_emission_factor(s, catalog).magnitude(),
        .breakdown = scenario::assess(catalog, processor, s),
        .manufacturing_share = 0.0,
        .provenance = {},
        .notes = {},
    };
    a.manufacturing_share = a.breakdown.manufacturing_share();

    a.provenance.push_back("processor " + processor.id + ": " + processor.source +
                           " [" + processor.origin + "]");
    a.provenance.push_back("node " + node.id + ": " + node.source + " [" + node.origin +
                           "]");
    if (grid != nullptr) {
        a.provenance.push_back("grid " + grid->id + ": " + grid->source + " [" +
                               grid->origin + "]");
    }

    if (processor.printed_power_per_transistor.has_value()) {
        const Interval derived = engine::per_transistor_power(
            processor.tdp.value, processor.transistor_count.value);
        a.notes.push_back(
            "operational emissions use the printed per-transistor power " +
            interval_str(processor.printed_power_per_transistor->value, kPowerUnit) +
            "; the TDP-derived range is " + interval_str(derived, kPowerUnit));
    }
    if (s.ef_override.has_value()) {
        a.notes.push_back("emission factor " + format_sig(*s.ef_override) +
                          " kgCO2/kWh set directly; grid record bypassed");
    }
    return a;
}

namespace {

std::string render_assessments_markdown(const std::vector<Assessment>& assessments) {
    std::ostringstream out;
    out << "# CPT assessment\n\n";
    out << "Scenario: " << scenario_line(assessments.front()) << "\n\n";
    out << "| processor | manufacturing [ug/t] | operational [ug/t] | total [ug/t] "
           "| manufacturing [kg/chip] | operational [kg/chip] | total [kg/chip] "
           "| mfg share |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& a : assessments) {
        const auto& b = a.breakdown;
        out << "| " << a.processor_name << " (" << a.processor_id << ") | "
            << interval_cell(b.manufacturing_per_transistor, kPerTransistorUnit) << " | "
            << interval_cell(b.operational_per_transistor, kPerTransistorUnit) << " | "
            << interval_cell(b.total_per_transistor, kPerTransistorUnit) << " | "
            << interval_cell(b.manufacturing_chip, kChipUnit) << " | "
            << interval_cell(b.operational_chip, kChipUnit) << " | "
            << interval_cell(b.total_chip, kChipUnit) << " | "
            << format_sig(a.manufacturing_share) << " |\n";
    }
    out << "\n## Provenance\n\n";
    for (const auto& a : assessments) {
        for (const auto& p : a.provenance) out << "- " << p << "\n";
    }
    bool any_notes = false;
    for (const auto& a : assessments) any_notes = any_notes || !a.notes.empty();
    if (any_notes) {
        out << "\n## Notes\n\n";
        for (const auto& a : assessments) {
            for (const auto& n : a.notes) out << "- " << a.processor_id << ": " << n << "\n";
        }
    }
    return out.str();
}

std::string render_assessments_csv(const std::vector<Assessment>& assessments) {
    std::string out = csv_row(
        {"processor_id", "processor_name", "manufacturing_per_transistor_lo_ug",
         "manufacturing_per_transistor_hi_ug", "operational_per_transistor_lo_ug",
         "operational_per_transistor_hi_ug", "total_per_transistor_lo_ug",
         "total_per_transistor_hi_ug", "manufacturing_chip_lo_kg",
         "manufacturing_chip_hi_kg", "operational_chip_lo_kg", "operational_chip_hi_kg",
         "total_chip_lo_kg", "total_chip_hi_kg", "manufacturing_share"});
    for (const auto& a : assessments) {
        const auto& b = a.breakdown;
        const auto cell = [](const Interval& iv, const char* unit) {
            const auto d = display(iv, unit);
            return std::pair{format_sig(d.lo), format_sig(d.hi)};
        };
        const auto [man_lo, man_hi] = cell(b.manufacturing_per_transistor, kPerTransistorUnit);
        const auto [op_lo, op_hi] = cell(b.operational_per_transistor, kPerTransistorUnit);
        const auto [tot_lo, tot_hi] = cell(b.total_per_transistor, kPerTransistorUnit);
        const auto [cman_lo, cman_hi] = cell(b.manufacturing_chip, kChipUnit);
        const auto [cop_lo, cop_hi] = cell(b.operational_chip, kChipUnit);
        const auto [ctot_lo, ctot_hi] = cell(b.total_chip, kChipUnit);
        out += csv_row({a.processor_id, a.processor_name, man_lo, man_hi, op_lo, op_hi,
                        tot_lo, tot_hi, cman_lo, cman_hi, cop_lo, cop_hi, ctot_lo,
                        ctot_hi, format_sig(a.manufacturing_share)});
    }
    return out;
}

std::string render_assessments_json(const std::vector<Assessment>& assessments) {
    json doc;
    doc["assessments"] = json::array();
    for (const auto& a : assessments) {
        const auto& b = a.breakdown;
        json rec{
            {"processor", json{{"id", a.processor_id}, {"name", a.processor_name}}},
            {"scenario", scenario_json(a)},
            {"transistor_count", bounds_json(b.transistor_count, "count")},
            {"per_transistor",
             json{{"manufacturing",
                   interval_to_json(b.manufacturing_per_transistor, kPerTransistorUnit)},
                  {"operational",
                   interval_to_json(b.operational_per_transistor, kPerTransistorUnit)},
                  {"total", interval_to_json(b.total_per_transistor, kPerTransistorUnit)}}},
            {"chip", json{{"manufacturing", interval_to_json(b.manufacturing_chip, kChipUnit)},
                          {"operational", interval_to_json(b.operational_chip, kChipUnit)},
                          {"total", interval_to_json(b.total_chip, kChipUnit)}}},
            {"manufacturing_share", round_sig(a.manufacturing_share)},
            {"provenance", a.provenance},
            {"notes", a.notes},
        };
        doc["assessments"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const std::vector<Assessment>& assessments, Format format) {
    if (assessments.empty()) {
        throw InvalidArgument("render requires at least one assessment");
    }
    switch (format) {
        case Format::Markdown: return render_assessments_markdown(assessments);
        case Format::Csv: return render_assessments_csv(assessments);
        case Format::Json: return render_assessments_json(assessments);
    }
    throw InvalidArgument("unknown format");
}

HeadlineAverage headline_average() {
    const Interval manufacturing = make_interval(2, 5, "ug");
    const Interval operational = make_interval(60, 250, "ug");
    const Interval composed = add(manufacturing, operational);
    const Quantity mid = midpoint(composed);
    const Quantity published = make_quantity(155, "ug");
    const double deviation =
        std::abs(mid.magnitude() - published.magnitude()) / published.magnitude();
    return HeadlineAverage{composed, mid, published, deviation};
}

namespace {

ReproductionRow make_row(std::string row_id, std::string processor_id, std::string column,
                         const Interval& computed, const Interval& printed,
                         const Interval& corrected, std::optional<double> tolerance,
                         std::string note) {
    const double printed_mid = midpoint(corrected).magnitude();
    const double computed_mid = midpoint(computed).magnitude();
    const double deviation = std::abs(computed_mid - printed_mid) / printed_mid;
    const bool pass = !tolerance.has_value() || deviation <= *tolerance;
    return ReproductionRow{std::move(row_id),
                           std::move(processor_id),
                           std::move(column),
                           computed,
                           printed,
                           corrected,
                           deviation,
                           tolerance,
                           pass,
                           std::move(note)};
}

}  // namespace

Reproduction reproduce_table3(const Catalog& catalog) {
    const scenario::UsageScenario def{};

    struct Spec {
        const char* row;
        const char* proc;
        double man_lo, man_hi;
        double oper_lo, oper_hi;
        double total_lo, total_hi;
        bool oper_gated;
        double tolerance;
    };
    // Values exactly as printed by the study's per-transistor table.
    const Spec specs[] = {
        {"1", "i9-13900K", 4.5, 4.5, 62, 126, 66, 130, true, kTable3Tolerance},
        {"2", "ryzen9-7950X", 5.0, 5.0, 78, 106, 83, 111, true, kTable3Tolerance},
        {"3", "m3", 2.0, 2.0, 2.0, 2.0, 6.8, 7.0, false, kTable3Row3Tolerance},
    };

    Reproduction rep{
        .table = 3,
        .title = "Reference table 3: per-transistor CO2 emissions",
        .unit = kPerTransistorUnit,
        .rows = {},
        .ledger = {},
        .summary = {},
        .all_pass = true,
    };

    for (const auto& spec : specs) {
        const auto& processor = catalog.processor(spec.proc);
        const engine::CptBreakdown b = scenario::assess(catalog, processor, def);

        const Interval man_printed = make_interval(spec.man_lo, spec.man_hi, "ug");
        rep.rows.push_back(make_row(spec.row, spec.proc, "manufacturing",
                                    b.manufacturing_per_transistor, man_printed,
                                    man_printed, spec.tolerance, ""));

        const Interval oper_printed = make_interval(spec.oper_lo, spec.oper_hi, "ug");
        rep.rows.push_back(make_row(
            spec.row, spec.proc, "operational", b.operational_per_transistor,
            oper_printed, oper_printed,
            spec.oper_gated ? std::optional<double>(spec.tolerance) : std::nullopt,
            spec.oper_gated ? ""
                            : "printed operational value is inconsistent with the row's "
                              "own total column (2.0 + 2.0 != 6.8-7.0); computed value "
                              "reported, cell not gated"));

        const Interval total_printed = make_interval(spec.total_lo, spec.total_hi, "ug");
        rep.rows.push_back(make_row(spec.row, spec.proc, "total", b.total_per_transistor,
                                    total_printed, total_printed, spec.tolerance, ""));
    }

    for (const auto& row : rep.rows) {
        if (row.tolerance && !row.pass) rep.all_pass = false;
    }

    rep.ledger = {
        "lifetime fixed at 14600 h (5 years x 365 days x 8 h/day); back-solving the "
        "study's rows implies 14900-15100 h, hence the 8% gate for rows 1-2",
        "operational power uses the printed per-transistor ranges; TDP-derived ranges "
        "agree within 0.3% except the Apple upper bound (0.88 nW derived vs 0.84 "
        "printed)",
    };

    const HeadlineAverage avg = headline_average();
    rep.summary = {
        "composed per-transistor total: " + interval_str(avg.composed_range, "ug") +
        "; computed midpoint " + format_sig(convert_to(avg.computed_midpoint, "ug")) +
        " ug; the study states an average of " +
        format_sig(convert_to(avg.published_average, "ug")) + " ug (deviation " +
        percent(avg.deviation) + ", averaging method unstated)"};
    return rep;
}

Reproduction reproduce_table4(const Catalog& catalog) {
    const scenario::UsageScenario def{};

    const auto& i9 = catalog.processor("i9-13900K");
    const auto& ryzen = catalog.processor("ryzen9-7950X");
    const auto& m3 = catalog.processor("m3");

    const engine::CptBreakdown b1 = scenario::assess(catalog, i9, def);
    const engine::CptBreakdown b2 = scenario::assess(catalog, ryzen, def);
    const engine::CptBreakdown b3 = scenario::assess(catalog, m3, def);

    // The chip-level table implies 5.0 ug/transistor for row 1 where the
    // per-transistor table says 4.5; the table-consistent node record is used
    // for this table's manufacturing column.
    const Interval man1 = engine::manufacturing_chip_total(
        i9.transistor_count.value,
        engine::manufacturing_per_transistor(catalog.node("intel7-table4").profile()));
    const Interval man2 = b2.manufacturing_chip;
    const Interval man3 = b3.manufacturing_chip;

    const auto kg = [](double lo, double hi) { return make_interval(lo, hi, "kg"); };
    const auto x1000 = [](const Interval& iv) {
        return mul(iv, Interval::point(1000.0, Dim::Dimensionless));
    };

    Reproduction rep{
        .table = 4,
        .title = "Reference table 4: chip-level CO2 emissions",
        .unit = kChipUnit,
        .rows = {},
        .ledger = {},
        .summary = {},
        .all_pass = true,
    };

    // Row 1: Intel Core i9-13900K.
    rep.rows.push_back(make_row(
        "1", i9.id, "manufacturing", man1, kg(60, 60), kg(60, 60), kExactTolerance,
        "uses the table-consistent 5.0 ug/transistor node; the per-transistor table's "
        "4.5 ug would give 54 kg"));
    rep.rows.push_back(make_row("1", i9.id, "operational", b1.operational_chip,
                                kg(0.73, 1.48), x1000(kg(0.73, 1.48)),
                                kTable4OperationalTolerance,
                                "compared after the documented x1000 normalization"));
    rep.rows.push_back(make_row(
        "1", i9.id, "total", add(man1, b1.operational_chip), kg(60.73, 61.48),
        kg(60.73, 61.48), std::nullopt,
        "printed total equals manufacturing + operational as printed (no x1000), so it "
        "inherits the operational unit slip; not gated"));

    // Row 2: AMD Ryzen 9 7950X.
    rep.rows.push_back(make_row(
        "2", ryzen.id, "manufacturing", man2, kg(565.7, 565.7), kg(65.7, 65.7),
        kExactTolerance,
        "printed 565.7 kg corrected to 65.7 kg (13.14e9 x 5.0 ug); the study's own "
        "total column (66.69-67.04) confirms 65.7"));
    rep.rows.push_back(make_row("2", ryzen.id, "operational", b2.operational_chip,
                                kg(0.99, 1.34), x1000(kg(0.99, 1.34)),
                                kTable4OperationalTolerance,
                                "compared after the documented x1000 normalization"));
    rep.rows.push_back(make_row(
        "2", ryzen.id, "total", add(man2, b2.operational_chip), kg(66.69, 67.04),
        kg(66.69, 67.04), std::nullopt,
        "printed total equals the corrected manufacturing (65.7) + operational as "
        "printed, confirming both corrections; not gated"));

    // Row 3: Apple M3.
    rep.rows.push_back(
        make_row("3", m3.id, "manufacturing", man3, kg(50, 50), kg(50, 50),
                 kExactTolerance, ""));
    rep.rows.push_back(make_row(
        "3", m3.id, "operational", b3.operational_chip, kg(0.125, 0.140),
        x1000(kg(0.125, 0.140)), std::nullopt,
        "printed \".125-140 kg\" read as 0.125-0.140 kg; as printed it matches the "
        "row's total column, after x1000 it deviates 9.6% from the computed value; "
        "reported both ways, not gated"));
    rep.rows.push_back(make_row(
        "3", m3.id, "total", add(man3, b3.operational_chip), kg(50.12, 50.14),
        kg(50.12, 50.14), std::nullopt,
        "printed total equals manufacturing + operational as printed (no x1000); "
        "not gated"));

    for (const auto& row : rep.rows) {
        if (row.tolerance && !row.pass) rep.all_pass = false;
    }

    rep.ledger = {
        "operational column: printed values are 1000x smaller than the study's own "
        "per-transistor table times the transistor count (the ug/mg unit slip "
        "propagated to chip level); gated cells are compared after x1000 "
        "normalization",
        "total column: printed totals are consistent with the operational column "
        "as printed, so they inherit the unit slip; computed totals are reported "
        "but not gated",
    };
    return rep;
}

namespace {

std::string render_reproduction_markdown(const Reproduction& rep) {
    std::ostringstream out;
    out << "# " << rep.title << " [" << rep.unit << "]\n\n";
    out << "| row | processor | column | computed | printed | corrected | deviation "
           "| gate | status |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : rep.rows) {
        out << "| " << row.row_id << " | " << row.processor_id << " | " << row.column
            << " | " << interval_cell(row.computed, rep.unit) << " | "
            << interval_cell(row.printed, rep.unit) << " | "
            << interval_cell(row.corrected, rep.unit) << " | " << percent(row.deviation)
            << " | " << gate_str(row.tolerance) << " | " << status_str(row) << " |\n";
    }
    out << "\n## Correction ledger\n\n";
    for (const auto& entry : rep.ledger) out << "- " << entry << "\n";
    for (const auto& row : rep.rows) {
        if (!row.note.empty()) {
            out << "- row " << row.row_id << " " << row.column << ": " << row.note
                << "\n";
        }
    }
    if (!rep.summary.empty()) {
        out << "\n## Summary\n\n";
        for (const auto& line : rep.summary) out << "- " << line << "\n";
    }
    out << "\nRESULT: " << (rep.all_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string render_reproduction_csv(const Reproduction& rep) {
    std::string out = csv_row({"row", "processor", "column", "computed_lo", "computed_hi",
                               "printed_lo", "printed_hi", "corrected_lo", "corrected_hi",
                               "deviation", "gate", "status", "note"});
    for (const auto& row : rep.rows) {
        const auto c = display(row.computed, rep.unit);
        const auto p = display(row.printed, rep.unit);
        const auto k = display(row.corrected, rep.unit);
        out += csv_row({row.row_id, row.processor_id, row.column, format_sig(c.lo),
                        format_sig(c.hi), format_sig(p.lo), format_sig(p.hi),
                        format_sig(k.lo), format_sig(k.hi), format_sig(row.deviation),
                        gate_str(row.tolerance), status_str(row), row.note});
    }
    for (const auto& entry : rep.ledger) {
        out += csv_row({"ledger", "", "", "", "", "", "", "", "", "", "", "", entry});
    }
    for (const auto& line : rep.summary) {
        out += csv_row({"summary", "", "", "", "", "", "", "", "", "", "", "", line});
    }
    out += csv_row({"result", "", "", "", "", "", "", "", "", "", "",
                    rep.all_pass ? "pass" : "FAIL", ""});
    return out;
}

std::string render_reproduction_json(const Reproduction& rep) {
    json doc{{"table", rep.table},
             {"title", rep.title},
             {"unit", rep.unit},
             {"all_pass", rep.all_pass},
             {"ledger", rep.ledger},
             {"summary", rep.summary}};
    doc["rows"] = json::array();
    for (const auto& row : rep.rows) {
        json r{{"row", row.row_id},
               {"processor", row.processor_id},
               {"column", row.column},
               {"computed", bounds_json(row.computed, rep.unit)},
               {"printed", bounds_json(row.printed, rep.unit)},
               {"corrected", bounds_json(row.corrected, rep.unit)},
               {"deviation", round_sig(row.deviation)},
               {"status", status_str(row)},
               {"note", row.note}};
        if (row.tolerance) r["tolerance"] = *row.tolerance;
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const Reproduction& reproduction, Format format) {
    switch (format) {
        case Format::Markdown: return render_reproduction_markdown(reproduction);
        case Format::Csv: return render_reproduction_csv(reproduction);
        case Format::Json: return render_reproduction_json(reproduction);
    }
    throw InvalidArgument("unknown format");
}

namespace {

std::string power_summary(const ProcessorRecord& p) {
    const Interval derived =
        engine::per_transistor_power(p.tdp.value, p.transistor_count.value);
    std::string out;
    if (p.printed_power_per_transistor) {
        out += "printed " + interval_cell(p.printed_power_per_transistor->value, kPowerUnit) +
               "; ";
    }
    out += "derived " + interval_cell(derived, kPowerUnit);
    return out;
}

std::string render_catalog_markdown(const Catalog& catalog) {
    std::ostringstream out;
    out << "# Catalog\n\n## Processors\n\n";
    out << "| id | name | transistors | TDP [W] | node | power/transistor [nW] | "
           "source | origin |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& p : catalog.processors()) {
        out << "| " << p.id << " | " << p.name << " | "
            << interval_cell(p.transistor_count.value, "count") << " | "
            << interval_cell(p.tdp.value, "W") << " | " << p.node_id << " | "
            << power_summary(p) << " | " << p.source << " | " << p.origin << " |\n";
    }
    out << "\n## Process nodes\n\n";
    out << "| id | name | wafer CO2 [kg] | yield | transistors/wafer | "
           "manufacturing [ug/t] | source | origin |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& n : catalog.nodes()) {
        out << "| " << n.id << " | " << n.node_name << " | "
            << interval_cell(n.wafer_total.value, "kg") << " | "
            << interval_cell(n.yield_fraction.value, "") << " | "
            << interval_cell(n.transistors_per_wafer.value, "count") << " | "
            << interval_cell(engine::manufacturing_per_transistor(n.profile()),
                             kPerTransistorUnit)
            << " | " << n.source << " | " << n.origin << " |\n";
    }
    out << "\n## Grids\n\n";
    out << "| id | region | emission factor [kgCO2/kWh] | source | origin |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& g : catalog.grids()) {
        out << "| " << g.id << " | " << g.region << " | "
            << interval_cell(g.emission_factor.value, "kgCO2/kWh") << " | " << g.source
            << " | " << g.origin << " |\n";
    }
    return out.str();
}

std::string render_catalog_csv(const Catalog& catalog) {
    std::string out = csv_row({"kind", "id", "name", "detail", "source", "origin"});
    for (const auto& p : catalog.processors()) {
        out += csv_row({"processor", p.id, p.name,
                        "transistors " + interval_cell(p.transistor_count.value, "count") +
                            "; TDP " + interval_str(p.tdp.value, "W") + "; node " +
                            p.node_id + "; power/transistor " + power_summary(p) + " nW",
                        p.source, p.origin});
    }
    for (const auto& n : catalog.nodes()) {
        out += csv_row({"node", n.id, n.node_name,
                        "wafer " + interval_str(n.wafer_total.value, "kg") + "; yield " +
                            interval_cell(n.yield_fraction.value, "") +
                            "; transistors/wafer " +
                            interval_cell(n.transistors_per_wafer.value, "count") +
                            "; manufacturing " +
                            interval_str(engine::manufacturing_per_transistor(n.profile()),
                                         kPerTransistorUnit),
                        n.source, n.origin});
    }
    for (const auto& g : catalog.grids()) {
        out += csv_row({"grid", g.id, g.region,
                        "EF " + interval_str(g.emission_factor.value, "kgCO2/kWh"),
                        g.source, g.origin});
    }
    return out;
}

}  // namespace

std::string render_catalog(const Catalog& catalog, Format format) {
    switch (format) {
        case Format::Markdown: return render_catalog_markdown(catalog);
        case Format::Csv: return render_catalog_csv(catalog);
        case Format::Json: return catalog.serialize();
    }
    throw InvalidArgument("unknown format");
}

std::string render_sweep(std::string_view parameter_name,
                         const std::vector<scenario::SweepPoint>& points, Format format) {
    if (points.empty()) {
        throw InvalidArgument("render_sweep requires at least one point");
    }
    switch (format) {
        case Format::Markdown: {
            std::ostringstream out;
            out << "# Sweep: " << parameter_name << "\n\n";
            out << "| " << parameter_name
                << " | operational [ug/t] | total [ug/t] | total [kg/chip] |\n";
            out << "|---|---|---|---|\n";
            for (const auto& pt : points) {
                out << "| " << format_sig(pt.value) << " | "
                    << interval_cell(pt.breakdown.operational_per_transistor,
                                     kPerTransistorUnit)
                    << " | "
                    << interval_cell(pt.breakdown.total_per_transistor, kPerTransistorUnit)
                    << " | " << interval_cell(pt.breakdown.total_chip, kChipUnit)
                    << " |\n";
            }
            return out.str();
        }
        case Format::Csv: {
            std::string out =
                csv_row({"parameter", "value", "operational_per_transistor_lo_ug",
                         "operational_per_transistor_hi_ug", "total_per_transistor_lo_ug",
                         "total_per_transistor_hi_ug", "total_chip_lo_kg",
                         "total_chip_hi_kg"});
            for (const auto& pt : points) {
                const auto op = display(pt.breakdown.operational_per_transistor,
                                        kPerTransistorUnit);
                const auto tot =
                    display(pt.breakdown.total_per_transistor, kPerTransistorUnit);
                const auto chip = display(pt.breakdown.total_chip, kChipUnit);
                out += csv_row({std::string(parameter_name), format_sig(pt.value),
                                format_sig(op.lo), format_sig(op.hi), format_sig(tot.lo),
                                format_sig(tot.hi), format_sig(chip.lo),
                                format_sig(chip.hi)});
            }
            return out;
        }
        case Format::Json: {
            json doc;
            doc["sweep"] = json{{"parameter", std::string(parameter_name)},
                                {"points", json::array()}};
            for (const auto& pt : points) {
                doc["sweep"]["points"].push_back(json{
                    {"value", round_sig(pt.value)},
                    {"operational_per_transistor",
                     interval_to_json(pt.breakdown.operational_per_transistor,
                                      kPerTransistorUnit)},
                    {"total_per_transistor",
                     interval_to_json(pt.breakdown.total_per_transistor,
                                      kPerTransistorUnit)},
                    {"total_chip", interval_to_json(pt.breakdown.total_chip, kChipUnit)},
                });
            }
            return doc.dump(2) + "\n";
        }
    }
    throw InvalidArgument("unknown format");
}

std::string render_ranking(std::string_view key_name,
                           const std::vector<scenario::RankedEntry>& entries,
                           Format format) {
    if (entries.empty()) {
        throw InvalidArgument("render_ranking requires at least one entry");
    }
    const bool per_transistor = key_name == "total_per_transistor";
    const char* unit = per_transistor ? kPerTransistorUnit : kChipUnit;
    const auto keyed = [&](const scenario::RankedEntry& e) -> const Interval& {
        if (key_name == "total_chip") return e.breakdown.total_chip;
        if (key_name == "operational_chip") return e.breakdown.operational_chip;
        return e.breakdown.total_per_transistor;
    };
    switch (format) {
        case Format::Markdown: {
            std::ostringstream out;
            out << "# Ranking by " << key_name << "\n\n";
            out << "| rank | processor | " << key_name << " [" << unit
                << "] | midpoint [" << unit << "] |\n";
            out << "|---|---|---|---|\n";
            int position = 1;
            for (const auto& e : entries) {
                out << "| " << position++ << " | " << e.processor->name << " ("
                    << e.processor->id << ") | " << interval_cell(keyed(e), unit) << " | "
                    << format_sig(convert_to(midpoint(keyed(e)), unit)) << " |\n";
            }
            return out.str();
        }
        case Format::Csv: {
            std::string out = csv_row({"rank", "processor_id", "processor_name", "key",
                                       "unit", "lo", "hi", "midpoint"});
            int position = 1;
            for (const auto& e : entries) {
                const auto d = display(keyed(e), unit);
                out += csv_row({std::to_string(position++), e.processor->id,
                                e.processor->name, std::string(key_name), unit,
                                format_sig(d.lo), format_sig(d.hi),
                                format_sig(convert_to(midpoint(keyed(e)), unit))});
            }
            return out;
        }
        case Format::Json: {
            json doc;
            doc["ranking"] = json{{"key", std::string(key_name)}, {"entries", json::array()}};
            int position = 1;
            for (const auto& e : entries) {
                doc["ranking"]["entries"].push_back(json{
                    {"rank", position++},
                    {"processor",
                     json{{"id", e.processor->id}, {"name", e.processor->name}}},
                    {"value", interval_to_json(keyed(e), unit)},
                    {"midpoint", round_sig(convert_to(midpoint(keyed(e)), unit))},
                });
            }
            return doc.dump(2) + "\n";
        }
    }
    throw InvalidArgument("unknown format");
}

}  // namespace cpt::report
