// cpt: carbon-per-transistor assessment CLI.
//
// Exit statuses are a stable contract:
//   0 success, 2 catalog error, 3 unknown reference, 4 bad arguments,
//   5 reproduction outside tolerance.
// Data goes to standard output (or --output); diagnostics and warnings go to
// standard error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cpt/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitCatalogError = 2;
constexpr int kExitUnknownReference = 3;
constexpr int kExitBadArguments = 4;
constexpr int kExitToleranceFailure = 5;

struct GlobalOptions {
    std::string catalog_path;
    std::string scenario_path;
    std::string format = "md";
    std::string output_path;
    bool lenient = false;
};

struct ScenarioOverrides {
    std::optional<double> years;
    std::optional<double> hours_per_day;
    std::optional<double> utilization;
    std::optional<double> ef;
    std::optional<std::string> grid;
};

void add_scenario_flags(CLI::App* cmd, ScenarioOverrides& ov) {
    cmd->add_option("--years", ov.years, "Service life in years");
    cmd->add_option("--hours-per-day", ov.hours_per_day, "Usage hours per day");
    cmd->add_option("--utilization", ov.utilization, "Power utilization factor in [0,1]");
    cmd->add_option("--ef", ov.ef, "Emission factor in kgCO2/kWh (bypasses the grid)");
    cmd->add_option("--grid", ov.grid, "Grid record id");
}

cpt::Catalog load_catalog(const GlobalOptions& opt) {
    std::vector<std::string> warnings;
    cpt::Catalog catalog = opt.catalog_path.empty()
                               ? cpt::Catalog::builtin()
                               : cpt::Catalog::load_file(opt.catalog_path, opt.lenient,
                                                         &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return catalog;
}

cpt::scenario::UsageScenario load_scenario(const GlobalOptions& opt,
                                           const ScenarioOverrides& ov) {
    cpt::scenario::UsageScenario s;
    if (!opt.scenario_path.empty()) {
        s = cpt::scenario::load_scenario_file(opt.scenario_path, opt.lenient);
    }
    if (ov.years) s.years = *ov.years;
    if (ov.hours_per_day) s.hours_per_day = *ov.hours_per_day;
    if (ov.utilization) s.utilization = *ov.utilization;
    if (ov.ef) s.ef_override = *ov.ef;
    if (ov.grid) s.grid_id = *ov.grid;
    s.validate();
    return s;
}

int emit(const GlobalOptions& opt, const std::string& data) {
    if (opt.output_path.empty()) {
        std::cout << data;
        return kExitOk;
    }
    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << opt.output_path << "\n";
        return kExitBadArguments;
    }
    out << data;
    return kExitOk;
}

int run_list(const GlobalOptions& opt) {
    const cpt::Catalog catalog = load_catalog(opt);
    return emit(opt, cpt::report::render_catalog(catalog,
                                                 cpt::report::parse_format(opt.format)));
}

int run_assess(const GlobalOptions& opt, const std::string& processor_id,
               const ScenarioOverrides& ov) {
    const cpt::Catalog catalog = load_catalog(opt);
    const auto scenario = load_scenario(opt, ov);
    const auto& processor = catalog.processor(processor_id);
    const std::vector<cpt::report::Assessment> assessments = {
        cpt::report::build_assessment(catalog, processor, scenario)};
    return emit(opt, cpt::report::render(assessments,
                                         cpt::report::parse_format(opt.format)));
}

int run_compare(const GlobalOptions& opt, const std::vector<std::string>& ids,
                const std::string& key_name, const ScenarioOverrides& ov) {
    if (ids.size() < 2) {
        std::cerr << "error: compare needs at least two --processor ids\n";
        return kExitBadArguments;
    }
    const cpt::Catalog catalog = load_catalog(opt);
    const auto scenario = load_scenario(opt, ov);

    std::vector<std::string> unique_ids;
    for (const auto& id : ids) {
        if (std::find(unique_ids.begin(), unique_ids.end(), id) != unique_ids.end()) {
            std::cerr << "warning: duplicate processor id \"" << id << "\" ignored\n";
            continue;
        }
        unique_ids.push_back(id);
    }
    std::vector<const cpt::ProcessorRecord*> processors;
    for (const auto& id : unique_ids) {
        processors.push_back(&catalog.processor(id));
    }
    const auto key = cpt::scenario::parse_rank_key(key_name);
    const auto ranking = cpt::scenario::rank(processors, scenario, catalog, key);
    return emit(opt, cpt::report::render_ranking(
                         cpt::scenario::rank_key_name(key), ranking,
                         cpt::report::parse_format(opt.format)));
}

int run_sweep(const GlobalOptions& opt, const std::string& processor_id,
              const std::string& param, double from, double to, int steps,
              const ScenarioOverrides& ov) {
    const cpt::Catalog catalog = load_catalog(opt);
    const auto scenario = load_scenario(opt, ov);
    const auto& processor = catalog.processor(processor_id);
    const cpt::scenario::SweepSpec spec{
        .parameter = cpt::scenario::parse_sweep_parameter(param),
        .from = from,
        .to = to,
        .steps = steps,
    };
    const auto points = cpt::scenario::sweep(spec, scenario, processor, catalog);
    return emit(opt, cpt::report::render_sweep(
                         cpt::scenario::sweep_parameter_name(spec.parameter), points,
                         cpt::report::parse_format(opt.format)));
}

int run_reproduce(const GlobalOptions& opt, int table) {
    if (table != 3 && table != 4) {
        std::cerr << "error: reproducible tables are 3 and 4, got " << table << "\n";
        return kExitBadArguments;
    }
    const cpt::Catalog catalog = load_catalog(opt);
    const cpt::report::Reproduction rep = table == 3
                                              ? cpt::report::reproduce_table3(catalog)
                                              : cpt::report::reproduce_table4(catalog);
    const int status = emit(
        opt, cpt::report::render(rep, cpt::report::parse_format(opt.format)));
    if (status != kExitOk) return status;
    if (!rep.all_pass) {
        std::cerr << "error: reproduction of table " << table
                  << " deviates beyond its tolerances\n";
        return kExitToleranceFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"carbon-per-transistor (CPT) assessment toolkit"};
    app.require_subcommand(1);
    // Let global flags (--format, --catalog, ...) appear after the subcommand.
    app.fallthrough();

    GlobalOptions opt;
    app.add_option("--catalog", opt.catalog_path,
                   "Catalog JSON file merged over the built-in records")
        ->envname("CPT_CATALOG");
    app.add_option("--scenario", opt.scenario_path, "Scenario JSON file");
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    app.add_option("--output", opt.output_path, "Write data to a file instead of stdout");
    app.add_flag("--lenient", opt.lenient, "Ignore unknown fields in input files");

    auto* list_cmd = app.add_subcommand("list", "List catalog records with provenance");

    std::string assess_id;
    ScenarioOverrides assess_ov;
    auto* assess_cmd = app.add_subcommand("assess", "Assess one processor");
    assess_cmd->add_option("--processor", assess_id, "Processor id")->required();
    add_scenario_flags(assess_cmd, assess_ov);

    std::vector<std::string> compare_ids;
    std::string compare_key = "total_per_transistor";
    ScenarioOverrides compare_ov;
    auto* compare_cmd = app.add_subcommand("compare", "Rank processors by emissions");
    compare_cmd->add_option("--processor", compare_ids, "Processor id (repeat)")
        ->required();
    compare_cmd->add_option("--key", compare_key, "Ranking key")
        ->check(CLI::IsMember({"total_per_transistor", "total_chip", "operational_chip"}))
        ->capture_default_str();
    add_scenario_flags(compare_cmd, compare_ov);

    std::string sweep_id, sweep_param;
    double sweep_from = 0.0, sweep_to = 0.0;
    int sweep_steps = 0;
    ScenarioOverrides sweep_ov;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one scenario parameter");
    sweep_cmd->add_option("--processor", sweep_id, "Processor id")->required();
    sweep_cmd->add_option("--param", sweep_param,
                          "Parameter: ef, hours_per_day, years or utilization")
        ->required();
    sweep_cmd->add_option("--from", sweep_from, "First value")->required();
    sweep_cmd->add_option("--to", sweep_to, "Last value")->required();
    sweep_cmd->add_option("--steps", sweep_steps, "Number of grid points (>= 2)")
        ->required();
    add_scenario_flags(sweep_cmd, sweep_ov);

    int reproduce_table = 0;
    auto* reproduce_cmd =
        app.add_subcommand("reproduce", "Recompute a published reference table");
    reproduce_cmd->add_option("--table", reproduce_table, "Table number (3 or 4)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        if (list_cmd->parsed()) return run_list(opt);
        if (assess_cmd->parsed()) return run_assess(opt, assess_id, assess_ov);
        if (compare_cmd->parsed())
            return run_compare(opt, compare_ids, compare_key, compare_ov);
        if (sweep_cmd->parsed())
            return run_sweep(opt, sweep_id, sweep_param, sweep_from, sweep_to,
                             sweep_steps, sweep_ov);
        if (reproduce_cmd->parsed()) return run_reproduce(opt, reproduce_table);
    } catch (const cpt::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCatalogError;
    } catch (const cpt::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCatalogError;
    } catch (const cpt::LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownReference;
    } catch (const cpt::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}
