#include "cpt/quantity.hpp"

#include <array>
#include <cmath>
#include <string>

namespace cpt {

namespace {

struct UnitDef {
    std::string_view name;
    Dim dim;
    double to_canonical;  // exact decimal ratios only
};

// Case-sensitive registry. "years" is a display convenience (365 x 24 h);
// scenario lifetimes (years x days x hours/day) are a separate computation.
constexpr std::array<UnitDef, 14> kUnits{{
    {"ug", Dim::MassCO2, 1e-6},
    {"mg", Dim::MassCO2, 1e-3},
    {"g", Dim::MassCO2, 1.0},
    {"kg", Dim::MassCO2, 1e3},
    {"t", Dim::MassCO2, 1e6},
    {"nW", Dim::Power, 1e-9},
    {"W", Dim::Power, 1.0},
    {"h", Dim::Time, 1.0},
    {"hours", Dim::Time, 1.0},
    {"years", Dim::Time, 8760.0},
    {"kWh", Dim::Energy, 1.0},
    {"kgCO2/kWh", Dim::EmissionFactor, 1.0},
    {"count", Dim::Count, 1.0},
    {"", Dim::Dimensionless, 1.0},
}};

const UnitDef* find_unit(std::string_view name) noexcept {
    for (const auto& u : kUnits) {
        if (u.name == name) return &u;
    }
    return nullptr;
}

}  // namespace

std::string_view dim_name(Dim d) {
    switch (d) {
        case Dim::MassCO2: return "mass of CO2";
        case Dim::Power: return "power";
        case Dim::Time: return "time";
        case Dim::Energy: return "energy";
        case Dim::EmissionFactor: return "emission factor";
        case Dim::Count: return "count";
        case Dim::Dimensionless: return "dimensionless";
    }
    return "?";
}

std::string_view canonical_unit(Dim d) {
    switch (d) {
        case Dim::MassCO2: return "g";
        case Dim::Power: return "W";
        case Dim::Time: return "h";
        case Dim::Energy: return "kWh";
        case Dim::EmissionFactor: return "kgCO2/kWh";
        case Dim::Count: return "count";
        case Dim::Dimensionless: return "";
    }
    return "?";
}

bool mul_rule(Dim a, Dim b, MulRule& out) noexcept {
    // Dimensionless is the identity for any dimension.
    if (b == Dim::Dimensionless) {
        out = {a, 1.0};
        return true;
    }
    if (a == Dim::Dimensionless) {
        out = {b, 1.0};
        return true;
    }
    const auto pair_is = [&](Dim x, Dim y) {
        return (a == x && b == y) || (a == y && b == x);
    };
    if (pair_is(Dim::Power, Dim::Time)) {
        out = {Dim::Energy, 1e-3};  // W x h = Wh -> kWh
        return true;
    }
    if (pair_is(Dim::Energy, Dim::EmissionFactor)) {
        out = {Dim::MassCO2, 1e3};  // kWh x kg/kWh = kg -> g
        return true;
    }
    if (pair_is(Dim::Count, Dim::MassCO2)) {
        out = {Dim::MassCO2, 1.0};
        return true;
    }
    return false;
}

Quantity::Quantity(double magnitude, Dim dim) : magnitude_(magnitude), dim_(dim) {
    if (!std::isfinite(magnitude)) {
        throw InvalidArgument("quantity magnitude must be finite, got " +
                              std::to_string(magnitude));
    }
    if (magnitude < 0.0) {
        throw InvalidArgument("quantity magnitude must be non-negative, got " +
                              std::to_string(magnitude) + " " +
                              std::string(dim_name(dim)));
    }
}

bool unit_belongs_to(std::string_view unit, Dim d) noexcept {
    const UnitDef* u = find_unit(unit);
    return u != nullptr && u->dim == d;
}

Dim unit_dimension(std::string_view unit) {
    const UnitDef* u = find_unit(unit);
    if (u == nullptr) {
        throw DimensionError("unknown unit \"" + std::string(unit) + "\"");
    }
    return u->dim;
}

Quantity make_quantity(double value, std::string_view unit) {
    const UnitDef* u = find_unit(unit);
    if (u == nullptr) {
        throw DimensionError("unknown unit \"" + std::string(unit) + "\"");
    }
    return Quantity(value * u->to_canonical, u->dim);
}

double convert_to(const Quantity& q, std::string_view unit) {
    const UnitDef* u = find_unit(unit);
    if (u == nullptr) {
        throw DimensionError("unknown unit \"" + std::string(unit) + "\"");
    }
    if (u->dim != q.dim()) {
        throw DimensionError("cannot express " + std::string(dim_name(q.dim())) +
                             " in \"" + std::string(unit) + "\"");
    }
    return q.magnitude() / u->to_canonical;
}

}  // namespace cpt
