#pragma once

#include <string_view>

#include "cpt/error.hpp"

namespace cpt {

/// Physical dimension of a quantity. The set is closed on purpose: the
/// engine only ever multiplies power by time, energy by an emission factor,
/// and masses by counts, so a general exponent-vector unit system would be
/// dead weight. Per-unit masses (g per transistor) stay MassCO2; the count
/// divisor is bookkept by the calling operation.
enum class Dim {
    MassCO2,         // canonical unit: gram
    Power,           // watt
    Time,            // hour
    Energy,          // kilowatt-hour
    EmissionFactor,  // kg CO2 per kWh
    Count,           // pure number (transistors, dies)
    Dimensionless,
};

std::string_view dim_name(Dim d);

/// Canonical display unit of a dimension ("g", "W", "h", "kWh", ...).
std::string_view canonical_unit(Dim d);

/// How two dimensions combine under multiplication. Canonical magnitudes
/// multiply and are then rescaled by `scale` so the result lands in the
/// result dimension's canonical unit (W x h = Wh -> 1e-3 kWh).
struct MulRule {
    Dim result;
    double scale;
};

/// Multiplication table lookup, symmetric in its arguments. Returns false
/// when the dimensions do not combine.
bool mul_rule(Dim a, Dim b, MulRule& out) noexcept;

/// A non-negative, finite scalar bound to a dimension. Magnitudes are always
/// stored in the dimension's canonical unit; display units exist only at the
/// I/O boundary. Immutable after construction.
class Quantity {
public:
    /// Throws InvalidArgument on NaN, infinity or a negative magnitude.
    Quantity(double magnitude, Dim dim);

    double magnitude() const noexcept { return magnitude_; }
    Dim dim() const noexcept { return dim_; }

    bool operator==(const Quantity&) const noexcept = default;

private:
    double magnitude_;
    Dim dim_;
};

/// True if `unit` is a known display unit of dimension `d`.
bool unit_belongs_to(std::string_view unit, Dim d) noexcept;

/// Dimension of a known display unit; throws DimensionError if unknown.
Dim unit_dimension(std::string_view unit);

/// Builds the quantity denoted by `value` in display unit `unit`
/// (case-sensitive). Throws DimensionError for unknown units.
Quantity make_quantity(double value, std::string_view unit);

/// Magnitude of `q` expressed in `unit`. Throws DimensionError if the unit
/// is unknown or belongs to a different dimension. Round-trips with
/// make_quantity to within 1 part in 1e12.
double convert_to(const Quantity& q, std::string_view unit);

}  // namespace cpt
