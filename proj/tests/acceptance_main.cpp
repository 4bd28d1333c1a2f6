// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exits non-zero if any fail.
//
// Usage: cpt_acceptance <path-to-cpt-binary>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cpt/report.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "test_util.hpp"

namespace {

using namespace cpt;

struct Criterion {
    int failures = 0;
    std::ostringstream detail;
};

void expect(Criterion& c, bool ok, const std::string& what) {
    if (!ok) {
        ++c.failures;
        c.detail << "\n      failed: " << what;
    }
}

bool finish(int number, const std::string& title, const Criterion& c) {
    std::cout << (c.failures == 0 ? "[PASS]" : "[FAIL]") << " criterion " << number
              << ": " << title << c.detail.str() << "\n";
    return c.failures == 0;
}

// Feature size in nm parsed from a node name like "TSMC 5nm" or "Intel 7 (10nm)".
int node_feature_nm(const std::string& name) {
    const std::regex re("([0-9]+)\\s*nm");
    std::smatch m;
    if (std::regex_search(name, m, re)) return std::stoi(m[1].str());
    return -1;
}

bool criterion1_manufacturing_range(const Catalog& catalog) {
    Criterion c;
    // Band bounds as canonical-gram literals: 2 ug = 2e-6 g, 5 ug = 5e-6 g.
    // (Scaling 5 by double(1e-6) would land one ulp below double(5e-6) and
    // turn an exact containment check into a false negative.)
    const Interval band(2e-6, 5e-6, Dim::MassCO2);
    int checked = 0;
    for (const auto& node : catalog.nodes()) {
        const int nm = node_feature_nm(node.node_name);
        if (nm < 0 || nm > 7) continue;
        ++checked;
        const Interval man = engine::manufacturing_per_transistor(node.profile());
        expect(c, band.contains(man),
               node.id + " manufacturing " + std::to_string(man.lo_mag() * 1e6) + "-" +
                   std::to_string(man.hi_mag() * 1e6) + " ug outside [2, 5] ug");
    }
    expect(c, checked >= 3, "expected at least three sub-7nm built-in nodes");
    return finish(1, "built-in sub-7nm nodes yield 2-5 ug CO2 per transistor (exact "
                     "containment)", c);
}

bool criterion2_power_reproduction(const Catalog& catalog) {
    Criterion c;
    struct Expect {
        const char* id;
        double printed_lo, printed_hi;  // nW; Apple upper bound is the derivable one
    };
    const Expect rows[] = {
        {"i9-13900K", 10.4, 21.1},
        {"ryzen9-7950X", 12.9, 17.5},
        {"m3", 0.8, 0.88},
    };
    for (const auto& row : rows) {
        const auto& p = catalog.processor(row.id);
        const Interval derived =
            engine::per_transistor_power(p.tdp.value, p.transistor_count.value);
        const double lo_nw = convert_to(derived.lo(), "nW");
        const double hi_nw = convert_to(derived.hi(), "nW");
        expect(c, oracle::rel_err(lo_nw, row.printed_lo) <= 0.05,
               std::string(row.id) + " lower endpoint " + std::to_string(lo_nw) +
                   " nW deviates more than 5% from " + std::to_string(row.printed_lo));
        expect(c, oracle::rel_err(hi_nw, row.printed_hi) <= 0.05,
               std::string(row.id) + " upper endpoint " + std::to_string(hi_nw) +
                   " nW deviates more than 5% from " + std::to_string(row.printed_hi));
    }
    return finish(2, "per-transistor power matches the printed ranges within 5% per "
                     "endpoint (Apple upper bound vs the derivable 0.88 nW)", c);
}

bool criterion3_table3(const Catalog& catalog) {
    Criterion c;
    const auto rep = report::reproduce_table3(catalog);
    const auto row = [&](const char* id, const char* col) -> const report::ReproductionRow& {
        for (const auto& r : rep.rows) {
            if (r.row_id == id && r.column == col) return r;
        }
        throw std::runtime_error("missing row");
    };
    for (const char* id : {"1", "2"}) {
        expect(c, row(id, "operational").deviation <= 0.08,
               std::string("row ") + id + " operational beyond 8%");
        expect(c, row(id, "total").deviation <= 0.08,
               std::string("row ") + id + " total beyond 8%");
    }
    const auto& row3_total = row("3", "total");
    expect(c, row3_total.deviation <= 0.05, "row 3 total beyond 5% of 6.8-7.0");
    const double lo_ug = convert_to(row3_total.computed.lo(), "ug");
    const double hi_ug = convert_to(row3_total.computed.hi(), "ug");
    expect(c, oracle::rel_err(lo_ug, 6.8) <= 0.05, "row 3 total lower endpoint beyond 5%");
    expect(c, oracle::rel_err(hi_ug, 7.0) <= 0.05, "row 3 total upper endpoint beyond 5%");
    const auto& row3_oper = row("3", "operational");
    expect(c, !row3_oper.tolerance.has_value() && !row3_oper.note.empty(),
           "row 3 operational must be ledger-flagged, not gated");
    expect(c, rep.all_pass, "gated table-3 cells must all pass");
    return finish(3, "per-transistor table reproduced (rows 1-2 within 8%, row 3 total "
                     "within 5%, inconsistent cell ledger-flagged)", c);
}

bool criterion4_table4(const Catalog& catalog, const std::string& cli) {
    Criterion c;
    const auto rep = report::reproduce_table4(catalog);
    const auto row = [&](const char* id, const char* col) -> const report::ReproductionRow& {
        for (const auto& r : rep.rows) {
            if (r.row_id == id && r.column == col) return r;
        }
        throw std::runtime_error("missing row");
    };
    expect(c, oracle::rel_err(convert_to(row("1", "manufacturing").computed.lo(), "kg"),
                              60.0) <= 1e-9,
           "row 1 manufacturing != 60 kg");
    expect(c, oracle::rel_err(convert_to(row("3", "manufacturing").computed.lo(), "kg"),
                              50.0) <= 1e-9,
           "row 3 manufacturing != 50 kg");
    const auto& man2 = row("2", "manufacturing");
    expect(c, oracle::rel_err(convert_to(man2.computed.lo(), "kg"), 65.7) <= 1e-9,
           "row 2 manufacturing != 65.7 kg after the 565.7 correction");
    expect(c, convert_to(man2.corrected.lo(), "kg") == 65.7,
           "row 2 correction not applied to the printed value");
    for (const char* id : {"1", "2"}) {
        expect(c, row(id, "operational").deviation <= 0.02,
               std::string("row ") + id + " operational beyond 2% after x1000");
    }
    expect(c, rep.all_pass, "gated table-4 cells must all pass");

    if (!cli.empty()) {
        ::setenv("CPT_CLI_BIN", cli.c_str(), 1);
        expect(c, testutil::run_cli("reproduce --table 3").status == 0,
               "cpt reproduce --table 3 must exit 0");
        expect(c, testutil::run_cli("reproduce --table 4").status == 0,
               "cpt reproduce --table 4 must exit 0");
    } else {
        expect(c, false, "cpt binary path not provided");
    }
    return finish(4, "chip-level table reproduced (manufacturing exact, operational "
                     "within 2% after x1000, reproduce exits 0)", c);
}

bool criterion5_headline_average(const Catalog& catalog) {
    Criterion c;
    const auto avg = report::headline_average();
    expect(c, oracle::rel_err(convert_to(avg.composed_range.lo(), "ug"), 62.0) <= 1e-12,
           "composed range lower bound != 62 ug");
    expect(c, oracle::rel_err(convert_to(avg.composed_range.hi(), "ug"), 255.0) <= 1e-12,
           "composed range upper bound != 255 ug");
    expect(c, oracle::rel_err(convert_to(avg.computed_midpoint, "ug"), 158.5) <= 1e-12,
           "midpoint of [62, 255] ug != 158.5 ug");
    expect(c, avg.deviation <= 0.023, "deviation from the stated 155 ug beyond 2.3%");
    const std::string md =
        report::render(report::reproduce_table3(catalog), report::Format::Markdown);
    expect(c, md.find("158.5") != std::string::npos, "midpoint missing from the report");
    expect(c, md.find("155 ug") != std::string::npos,
           "the stated 155 ug average missing from the report");
    return finish(5, "headline average: midpoint 158.5 ug printed beside the stated "
                     "155 ug, deviation below 2.3%", c);
}

bool criterion6_property_suite() {
    Criterion c;
    expect(c, props::inclusion_monotonicity(1000).empty(),
           props::inclusion_monotonicity(1000));
    expect(c, props::degenerate_oracle_equivalence(1000).empty(),
           props::degenerate_oracle_equivalence(1000));
    expect(c, props::breakdown_additivity_and_linearity(500).empty(),
           props::breakdown_additivity_and_linearity(500));
    expect(c, props::operational_linearity(500).empty(),
           props::operational_linearity(500));
    expect(c, props::catalog_round_trip().empty(), props::catalog_round_trip());
    expect(c, props::renderer_determinism().empty(), props::renderer_determinism());
    return finish(6, "property suite (inclusion monotonicity 1000, oracle equivalence "
                     "1000, additivity/N-linearity 500, EF/hours linearity 500, catalog "
                     "round-trip, renderer determinism)", c);
}

bool criterion7_error_paths(const Catalog& catalog, const std::string& cli) {
    Criterion c;

    const auto throws_invalid = [](auto&& fn) {
        try {
            fn();
            return false;
        } catch (const InvalidArgument&) {
            return true;
        } catch (...) {
            return false;
        }
    };

    expect(c, throws_invalid([] {
               engine::WaferProfile p{
                   .node_name = "bad",
                   .stage_emissions = {},
                   .wafer_total = make_interval(450, 450, "kg"),
                   .yield_fraction = Interval::point(0.0, Dim::Dimensionless),
                   .transistors_per_wafer = Interval::point(1e11, Dim::Count),
               };
               (void)engine::manufacturing_per_transistor(p);
           }),
           "yield 0 must raise InvalidArgument");

    expect(c, throws_invalid([] {
               (void)engine::per_transistor_power(make_interval(1, 2, "W"),
                                                  Interval(0.0, 0.0, Dim::Count));
           }),
           "zero transistor count must raise InvalidArgument");

    expect(c, throws_invalid([] { (void)Interval(5.0, 2.0, Dim::MassCO2); }),
           "inverted interval must raise InvalidArgument");

    bool lookup_raised = false;
    try {
        scenario::UsageScenario s;
        s.grid_id = "nowhere";
        (void)scenario::assess(catalog, catalog.processor("m3"), s);
    } catch (const LookupError&) {
        lookup_raised = true;
    } catch (...) {
    }
    expect(c, lookup_raised, "dangling grid_id must raise LookupError");

    if (!cli.empty()) {
        ::setenv("CPT_CLI_BIN", cli.c_str(), 1);
        const auto unknown = testutil::run_cli("assess --processor 268k");
        expect(c, unknown.status == 3 && unknown.out.empty(),
               "unknown processor id must exit 3 with no data");
        expect(c, testutil::run_cli("assess --processor m3 --grid nowhere").status == 3,
               "unknown grid id must exit 3");
        const testutil::TempFile broken("{ not json");
        expect(c, testutil::run_cli("list --catalog " + broken.str()).status == 2,
               "malformed catalog must exit 2");
        const testutil::TempFile inverted(R"({
          "processors": [{"id": "p", "name": "P", "transistor_count": 1e9,
            "tdp": {"value": [9, 3], "unit": "W"}, "node_id": "tsmc5",
            "source": "fixture"}]})");
        expect(c, testutil::run_cli("list --catalog " + inverted.str()).status == 2,
               "inverted interval in a file must exit 2");
        expect(c,
               testutil::run_cli(
                       "sweep --processor m3 --param ef --from 1 --to 2 --steps 1")
                       .status == 4,
               "steps < 2 must exit 4");
        expect(c, testutil::run_cli("reproduce --table 9").status == 4,
               "unknown table must exit 4");
    } else {
        expect(c, false, "cpt binary path not provided");
    }
    return finish(7, "error paths produce the contracted errors and exit statuses, "
                     "never a computed result", c);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : testutil::cli_binary();
    const Catalog catalog = Catalog::builtin();

    bool all = true;
    all &= criterion1_manufacturing_range(catalog);
    all &= criterion2_power_reproduction(catalog);
    all &= criterion3_table3(catalog);
    all &= criterion4_table4(catalog, cli);
    all &= criterion5_headline_average(catalog);
    all &= criterion6_property_suite();
    all &= criterion7_error_paths(catalog, cli);

    std::cout << (all ? "ACCEPTANCE: all 7 criteria passed\n"
                      : "ACCEPTANCE: at least one criterion failed\n");
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
