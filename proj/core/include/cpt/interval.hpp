#pragma once

#include "cpt/quantity.hpp"

namespace cpt {

/// Closed non-negative range [lo, hi] of one dimension. Every uncertain
/// input (TDP bands, wafer estimates, transistor counts) travels through the
/// engine as an Interval; point values are the degenerate case lo == hi.
/// Because bounds are never negative, products and quotients need no
/// endpoint case analysis, and all operations are inclusion-monotone.
class Interval {
public:
    /// Throws InvalidArgument if dimensions differ or lo > hi.
    Interval(Quantity lo, Quantity hi);

    /// Canonical magnitudes of dimension `dim`.
    Interval(double lo, double hi, Dim dim);

    static Interval point(Quantity q) { return Interval(q, q); }
    static Interval point(double magnitude, Dim dim);

    const Quantity& lo() const noexcept { return lo_; }
    const Quantity& hi() const noexcept { return hi_; }
    Dim dim() const noexcept { return lo_.dim(); }

    double lo_mag() const noexcept { return lo_.magnitude(); }
    double hi_mag() const noexcept { return hi_.magnitude(); }

    bool is_point() const noexcept { return lo_mag() == hi_mag(); }

    /// True if `inner` lies inside this interval (same dimension required).
    bool contains(const Interval& inner) const;

    bool operator==(const Interval&) const noexcept = default;

private:
    Quantity lo_;
    Quantity hi_;
};

/// [a.lo + b.lo, a.hi + b.hi]; operands must share a dimension.
Interval add(const Interval& a, const Interval& b);

/// Endpoint product under the dimension multiplication table.
Interval mul(const Interval& a, const Interval& b);

/// [a.lo / n.hi, a.hi / n.lo] — the correct quotient for positive operands.
/// `n` must be a Count with n.lo > 0; the result keeps a's dimension.
Interval div_by_count(const Interval& a, const Interval& n);

/// Arithmetic mean of the bounds.
Quantity midpoint(const Interval& a);

/// Convenience: interval from display-unit magnitudes, e.g. (125, 253, "W").
Interval make_interval(double lo, double hi, std::string_view unit);

}  // namespace cpt
