#include "cpt/interval.hpp"

#include <string>

namespace cpt {

namespace {

void require_same_dim(const Interval& a, const Interval& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" +
                             std::string(dim_name(a.dim())) + " vs " +
                             std::string(dim_name(b.dim())) + ")");
    }
}

}  // namespace

Interval::Interval(Quantity lo, Quantity hi) : lo_(lo), hi_(hi) {
    if (lo.dim() != hi.dim()) {
        throw InvalidArgument("interval bounds have different dimensions");
    }
    if (lo.magnitude() > hi.magnitude()) {
        throw InvalidArgument("inverted interval: lo " +
                              std::to_string(lo.magnitude()) + " > hi " +
                              std::to_string(hi.magnitude()));
    }
}

Interval::Interval(double lo, double hi, Dim dim)
    : Interval(Quantity(lo, dim), Quantity(hi, dim)) {}

Interval Interval::point(double magnitude, Dim dim) {
    return point(Quantity(magnitude, dim));
}

bool Interval::contains(const Interval& inner) const {
    if (dim() != inner.dim()) return false;
    return lo_mag() <= inner.lo_mag() && inner.hi_mag() <= hi_mag();
}

Interval add(const Interval& a, const Interval& b) {
    require_same_dim(a, b, "add");
    return Interval(a.lo_mag() + b.lo_mag(), a.hi_mag() + b.hi_mag(), a.dim());
}

Interval mul(const Interval& a, const Interval& b) {
    MulRule rule{};
    if (!mul_rule(a.dim(), b.dim(), rule)) {
        throw DimensionError("mul: cannot combine " + std::string(dim_name(a.dim())) +
                             " with " + std::string(dim_name(b.dim())));
    }
    // Non-negative bounds: the product range is [lo*lo, hi*hi].
    return Interval(a.lo_mag() * b.lo_mag() * rule.scale,
                    a.hi_mag() * b.hi_mag() * rule.scale, rule.result);
}

Interval div_by_count(const Interval& a, const Interval& n) {
    if (n.dim() != Dim::Count) {
        throw DimensionError("div_by_count: divisor must be a count, got " +
                             std::string(dim_name(n.dim())));
    }
    if (n.lo_mag() <= 0.0) {
        throw InvalidArgument("div_by_count: count lower bound must be positive, got " +
                              std::to_string(n.lo_mag()));
    }
    return Interval(a.lo_mag() / n.hi_mag(), a.hi_mag() / n.lo_mag(), a.dim());
}

Quantity midpoint(const Interval& a) {
    return Quantity((a.lo_mag() + a.hi_mag()) / 2.0, a.dim());
}

Interval make_interval(double lo, double hi, std::string_view unit) {
    return Interval(make_quantity(lo, unit), make_quantity(hi, unit));
}

}  // namespace cpt
