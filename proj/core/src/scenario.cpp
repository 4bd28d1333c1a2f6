#include "cpt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cpt::scenario {

using nlohmann::json;

namespace {

constexpr double kDaysPerYear = 365.0;

Interval select_power(const UsageScenario& s, const ProcessorRecord& processor) {
    const Interval utilization =
        Interval::point(s.utilization, Dim::Dimensionless);
    if (processor.printed_power_per_transistor.has_value()) {
        return mul(processor.printed_power_per_transistor->value, utilization);
    }
    return engine::per_transistor_power(mul(processor.tdp.value, utilization),
                                        processor.transistor_count.value);
}

}  // namespace

void UsageScenario::validate() const {
    if (!std::isfinite(hours_per_day) || hours_per_day < 0.0 || hours_per_day > 24.0) {
        throw InvalidArgument("hours_per_day must lie in [0, 24], got " +
                              std::to_string(hours_per_day));
    }
    if (!std::isfinite(years) || years < 0.0) {
        throw InvalidArgument("years must be non-negative, got " + std::to_string(years));
    }
    if (!std::isfinite(utilization) || utilization < 0.0 || utilization > 1.0) {
        throw InvalidArgument("utilization must lie in [0, 1], got " +
                              std::to_string(utilization));
    }
    if (grid_id.empty()) {
        throw InvalidArgument("grid_id must not be empty");
    }
    if (ef_override && (!std::isfinite(*ef_override) || *ef_override < 0.0)) {
        throw InvalidArgument("emission-factor override must be non-negative");
    }
}

UsageScenario scenario_from_json_text(std::string_view text, bool lenient) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("scenario document must be a JSON object");
    }
    UsageScenario s;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto& key = it.key();
        if (key == "hours_per_day" || key == "years" || key == "utilization") {
            if (!it.value().is_number()) {
                throw ParseError("scenario field \"" + key + "\" must be a number");
            }
            const double v = it.value().get<double>();
            if (key == "hours_per_day") s.hours_per_day = v;
            if (key == "years") s.years = v;
            if (key == "utilization") s.utilization = v;
        } else if (key == "grid_id") {
            if (!it.value().is_string()) {
                throw ParseError("scenario field \"grid_id\" must be a string");
            }
            s.grid_id = it.value().get<std::string>();
        } else if (!lenient) {
            throw ParseError("unknown scenario field \"" + key +
                             "\" (pass --lenient to ignore)");
        }
    }
    s.validate();
    return s;
}

UsageScenario load_scenario_file(const std::filesystem::path& path, bool lenient) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open scenario file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str(), lenient);
}

Quantity lifetime_hours(const UsageScenario& s) {
    return Quantity(s.years * kDaysPerYear * s.hours_per_day, Dim::Time);
}

Quantity resolve_emission_factor(const UsageScenario& s, const Catalog& catalog) {
    if (s.ef_override.has_value()) {
        return make_quantity(*s.ef_override, "kgCO2/kWh");
    }
    return catalog.grid(s.grid_id).ef();
}

engine::OperationalInputs to_operational_inputs(const UsageScenario& s,
                                                const ProcessorRecord& processor,
                                                const Catalog& catalog) {
    s.validate();
    const Interval utilization = Interval::point(s.utilization, Dim::Dimensionless);
    return engine::OperationalInputs{
        .power_per_transistor = engine::per_transistor_power(
            mul(processor.tdp.value, utilization), processor.transistor_count.value),
        .lifetime_hours = lifetime_hours(s),
        .emission_factor = resolve_emission_factor(s, catalog),
    };
}

engine::CptBreakdown assess(const Catalog& catalog, const ProcessorRecord& processor,
                            const UsageScenario& s) {
    s.validate();
    const engine::OperationalInputs usage{
        .power_per_transistor = select_power(s, processor),
        .lifetime_hours = lifetime_hours(s),
        .emission_factor = resolve_emission_factor(s, catalog),
    };
    return engine::assess(processor.transistor_count.value,
                          catalog.node(processor.node_id).profile(), usage);
}

SweepParameter parse_sweep_parameter(std::string_view name) {
    if (name == "ef" || name == "emission_factor") return SweepParameter::EmissionFactor;
    if (name == "hours_per_day") return SweepParameter::HoursPerDay;
    if (name == "years") return SweepParameter::Years;
    if (name == "utilization") return SweepParameter::Utilization;
    throw InvalidArgument("unknown sweep parameter \"" + std::string(name) +
                          "\" (expected ef, hours_per_day, years or utilization)");
}

std::string_view sweep_parameter_name(SweepParameter p) {
    switch (p) {
        case SweepParameter::EmissionFactor: return "emission_factor";
        case SweepParameter::HoursPerDay: return "hours_per_day";
        case SweepParameter::Years: return "years";
        case SweepParameter::Utilization: return "utilization";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (!std::isfinite(from) || !std::isfinite(to)) {
        throw InvalidArgument("sweep bounds must be finite");
    }
    if (from > to) {
        throw InvalidArgument("sweep requires from <= to, got " + std::to_string(from) +
                              " > " + std::to_string(to));
    }
    if (steps < 2) {
        throw InvalidArgument("sweep requires at least 2 steps, got " +
                              std::to_string(steps));
    }
}

std::vector<SweepPoint> sweep(const SweepSpec& spec, const UsageScenario& base,
                              const ProcessorRecord& processor, const Catalog& catalog) {
    spec.validate();
    base.validate();
    std::vector<SweepPoint> out;
    out.reserve(static_cast<std::size_t>(spec.steps));
    for (int i = 0; i < spec.steps; ++i) {
        // Endpoints land exactly on from/to; interior points on the affine grid.
        double value;
        if (i == 0) {
            value = spec.from;
        } else if (i == spec.steps - 1) {
            value = spec.to;
        } else {
            value = spec.from + (spec.to - spec.from) * static_cast<double>(i) /
                                    static_cast<double>(spec.steps - 1);
        }
        UsageScenario point = base;
        switch (spec.parameter) {
            case SweepParameter::EmissionFactor: point.ef_override = value; break;
            case SweepParameter::HoursPerDay: point.hours_per_day = value; break;
            case SweepParameter::Years: point.years = value; break;
            case SweepParameter::Utilization: point.utilization = value; break;
        }
        out.push_back(SweepPoint{value, assess(catalog, processor, point)});
    }
    return out;
}

RankKey parse_rank_key(std::string_view name) {
    if (name == "total_per_transistor") return RankKey::TotalPerTransistor;
    if (name == "total_chip") return RankKey::TotalChip;
    if (name == "operational_chip") return RankKey::OperationalChip;
    throw InvalidArgument("unknown ranking key \"" + std::string(name) +
                          "\" (expected total_per_transistor, total_chip or "
                          "operational_chip)");
}

std::string_view rank_key_name(RankKey k) {
    switch (k) {
        case RankKey::TotalPerTransistor: return "total_per_transistor";
        case RankKey::TotalChip: return "total_chip";
        case RankKey::OperationalChip: return "operational_chip";
    }
    return "?";
}

std::vector<RankedEntry> rank(const std::vector<const ProcessorRecord*>& processors,
                              const UsageScenario& s, const Catalog& catalog,
                              RankKey key) {
    if (processors.empty()) {
        throw InvalidArgument("rank requires at least one processor");
    }
    std::vector<RankedEntry> out;
    out.reserve(processors.size());
    for (const ProcessorRecord* p : processors) {
        engine::CptBreakdown b = assess(catalog, *p, s);
        const Interval& keyed = key == RankKey::TotalPerTransistor ? b.total_per_transistor
                                : key == RankKey::TotalChip        ? b.total_chip
                                                                   : b.operational_chip;
        const double mid = midpoint(keyed).magnitude();
        out.push_back(RankedEntry{p, std::move(b), mid});
    }
    std::sort(out.begin(), out.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.key_midpoint != b.key_midpoint) return a.key_midpoint < b.key_midpoint;
        return a.processor->id < b.processor->id;
    });
    return out;
}

}  // namespace cpt::scenario
