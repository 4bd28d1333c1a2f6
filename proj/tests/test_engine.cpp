#include "cpt/engine.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "properties.hpp"

using namespace cpt;
using namespace cpt::engine;

namespace {

doctest::Approx near(double v, double eps = 1e-12) {
    return doctest::Approx(v).epsilon(eps);
}

WaferProfile profile_of(double wafer_kg, double yield, double per_wafer) {
    return WaferProfile{
        .node_name = "test",
        .stage_emissions = {},
        .wafer_total = make_interval(wafer_kg, wafer_kg, "kg"),
        .yield_fraction = Interval::point(yield, Dim::Dimensionless),
        .transistors_per_wafer = Interval::point(per_wafer, Dim::Count),
    };
}

double ug(const Quantity& q) { return convert_to(q, "ug"); }

}  // namespace

TEST_CASE("stage_sum folds every stage") {
    std::map<std::string, Interval> stages;
    stages.emplace("crystal", make_interval(40, 40, "kg"));
    stages.emplace("wafer_processing", make_interval(410, 410, "kg"));
    const Interval total = stage_sum(stages);
    CHECK(convert_to(total.lo(), "kg") == near(450.0));
    CHECK(convert_to(total.hi(), "kg") == near(450.0));

    std::map<std::string, Interval> zero;
    zero.emplace("x", Interval(0.0, 0.0, Dim::MassCO2));
    CHECK(stage_sum(zero).hi_mag() == 0.0);

    std::map<std::string, Interval> two;
    two.emplace("a", make_interval(1, 2, "kg"));
    two.emplace("b", make_interval(3, 4, "kg"));
    CHECK(convert_to(stage_sum(two).lo(), "kg") == near(4.0));
    CHECK(convert_to(stage_sum(two).hi(), "kg") == near(6.0));

    CHECK_THROWS_AS(stage_sum({}), InvalidArgument);
}

TEST_CASE("manufacturing per transistor divides the wafer over good transistors") {
    const Interval five_nm = manufacturing_per_transistor(profile_of(450, 0.9, 1e11));
    CHECK(ug(five_nm.lo()) == near(5.0));
    CHECK(ug(five_nm.lo()) == near(oracle::manufacturing_g(4.5e5, 0.9, 1e11) * 1e6));

    const Interval zero = manufacturing_per_transistor(profile_of(0, 0.9, 1e11));
    CHECK(zero.hi_mag() == 0.0);

    const Interval seven_nm = manufacturing_per_transistor(profile_of(350, 1.0, 1.75e11));
    CHECK(ug(seven_nm.lo()) == near(2.0));
}

TEST_CASE("wafer profiles reject invalid yields, counts and stage sums") {
    CHECK_THROWS_AS(manufacturing_per_transistor(profile_of(450, 0.0, 1e11)),
                    InvalidArgument);
    CHECK_THROWS_AS(manufacturing_per_transistor(profile_of(450, 1.3, 1e11)),
                    InvalidArgument);
    CHECK_THROWS_AS(manufacturing_per_transistor(profile_of(450, 0.9, 0.0)),
                    InvalidArgument);

    WaferProfile bad_stages = profile_of(450, 0.9, 1e11);
    bad_stages.stage_emissions.emplace("crystal", make_interval(40, 40, "kg"));
    bad_stages.stage_emissions.emplace("wafer_processing", make_interval(100, 100, "kg"));
    CHECK_THROWS_AS(bad_stages.validate(), InvalidArgument);

    WaferProfile good_stages = profile_of(450, 0.9, 1e11);
    good_stages.stage_emissions.emplace("crystal", make_interval(40, 40, "kg"));
    good_stages.stage_emissions.emplace("wafer_processing", make_interval(410, 410, "kg"));
    CHECK_NOTHROW(good_stages.validate());
}

TEST_CASE("chip-level roll-ups scale by the transistor count") {
    const Interval man = manufacturing_chip_total(Interval::point(12e9, Dim::Count),
                                                  make_interval(5, 5, "ug"));
    CHECK(convert_to(man.lo(), "kg") == near(60.0));

    const Interval none = manufacturing_chip_total(Interval(0.0, 0.0, Dim::Count),
                                                   make_interval(5, 5, "ug"));
    CHECK(none.hi_mag() == 0.0);

    const Interval amd = manufacturing_chip_total(Interval::point(13.14e9, Dim::Count),
                                                  make_interval(5, 5, "ug"));
    CHECK(convert_to(amd.lo(), "kg") == near(65.7));

    const Interval apple = chip_total(Interval::point(25e9, Dim::Count),
                                      make_interval(2, 2, "ug"));
    CHECK(convert_to(apple.lo(), "kg") == near(50.0));

    const Interval oper = chip_total(Interval::point(12e9, Dim::Count),
                                     make_interval(60.736, 123.224, "ug"));
    CHECK(convert_to(oper.lo(), "kg") == near(oracle::chip_g(12e9, 60.736e-6) / 1000.0));
    CHECK(convert_to(oper.lo(), "kg") == near(728.832, 1e-6));
    CHECK(convert_to(oper.hi(), "kg") == near(1478.688, 1e-6));
}

TEST_CASE("per-transistor power divides TDP by the count") {
    const Interval intel = per_transistor_power(make_interval(125, 253, "W"),
                                                Interval::point(12e9, Dim::Count));
    CHECK(convert_to(intel.lo(), "nW") == near(10.4167, 1e-4));
    CHECK(convert_to(intel.hi(), "nW") == near(21.0833, 1e-4));

    const Interval idle = per_transistor_power(Interval(0.0, 0.0, Dim::Power),
                                               Interval::point(12e9, Dim::Count));
    CHECK(idle.hi_mag() == 0.0);

    const Interval amd = per_transistor_power(make_interval(170, 230, "W"),
                                              Interval::point(13.14e9, Dim::Count));
    CHECK(convert_to(amd.lo(), "nW") == near(oracle::per_transistor_w(170, 13.14e9) * 1e9));
    CHECK(convert_to(amd.lo(), "nW") == near(12.94, 1e-3));
    CHECK(convert_to(amd.hi(), "nW") == near(17.50, 1e-3));

    CHECK_THROWS_AS(per_transistor_power(make_interval(1, 2, "W"),
                                         Interval(0.0, 1e9, Dim::Count)),
                    InvalidArgument);
}

TEST_CASE("operational emissions chain power, hours and the emission factor") {
    const OperationalInputs intel{
        .power_per_transistor = make_interval(10.4, 21.1, "nW"),
        .lifetime_hours = make_quantity(14600, "h"),
        .emission_factor = make_quantity(0.4, "kgCO2/kWh"),
    };
    const Interval oper = operational_per_transistor(intel);
    CHECK(oper.dim() == Dim::MassCO2);
    CHECK(ug(oper.lo()) == near(oracle::operational_g(10.4e-9, 14600, 0.4) * 1e6));
    CHECK(ug(oper.lo()) == near(60.736, 1e-6));
    CHECK(ug(oper.hi()) == near(123.224, 1e-6));

    const OperationalInputs idle{
        .power_per_transistor = make_interval(10.4, 21.1, "nW"),
        .lifetime_hours = make_quantity(0, "h"),
        .emission_factor = make_quantity(0.4, "kgCO2/kWh"),
    };
    CHECK(operational_per_transistor(idle).hi_mag() == 0.0);

    const OperationalInputs apple{
        .power_per_transistor = make_interval(0.8, 0.84, "nW"),
        .lifetime_hours = make_quantity(14600, "h"),
        .emission_factor = make_quantity(0.4, "kgCO2/kWh"),
    };
    const Interval m3 = operational_per_transistor(apple);
    CHECK(ug(m3.lo()) == near(4.672, 1e-6));
    CHECK(ug(m3.hi()) == near(4.9056, 1e-6));
}

TEST_CASE("per-transistor total is the sum of manufacturing and operation") {
    const Interval row1 = cpt_per_transistor(make_interval(4.5, 4.5, "ug"),
                                             make_interval(62, 126, "ug"));
    CHECK(ug(row1.lo()) == near(66.5));
    CHECK(ug(row1.hi()) == near(130.5));

    const Interval zero = cpt_per_transistor(Interval(0, 0, Dim::MassCO2),
                                             Interval(0, 0, Dim::MassCO2));
    CHECK(zero.hi_mag() == 0.0);

    const Interval summary = cpt_per_transistor(make_interval(2, 5, "ug"),
                                                make_interval(60, 250, "ug"));
    CHECK(ug(summary.lo()) == near(62));
    CHECK(ug(summary.hi()) == near(255));

    CHECK_THROWS_AS(cpt_per_transistor(make_interval(1, 2, "W"),
                                       make_interval(1, 2, "ug")),
                    DimensionError);
}

TEST_CASE("assess composes the whole chain and keeps every intermediate") {
    const OperationalInputs usage{
        .power_per_transistor = make_interval(0.8, 0.84, "nW"),
        .lifetime_hours = make_quantity(14600, "h"),
        .emission_factor = make_quantity(0.4, "kgCO2/kWh"),
    };
    const CptBreakdown b =
        assess(Interval::point(25e9, Dim::Count), profile_of(450, 0.9, 2.5e11), usage);

    CHECK(ug(b.manufacturing_per_transistor.lo()) == near(2.0));
    CHECK(ug(b.total_per_transistor.lo()) == near(6.672, 1e-6));
    CHECK(ug(b.total_per_transistor.hi()) == near(6.9056, 1e-6));
    CHECK(convert_to(b.manufacturing_chip.lo(), "kg") == near(50.0));

    // Additivity, interval-exact.
    CHECK(b.total_per_transistor.lo_mag() ==
          b.manufacturing_per_transistor.lo_mag() + b.operational_per_transistor.lo_mag());
    CHECK(b.total_per_transistor.hi_mag() ==
          b.manufacturing_per_transistor.hi_mag() + b.operational_per_transistor.hi_mag());
    CHECK(oracle::rel_err(b.total_chip.lo_mag(),
                          b.manufacturing_chip.lo_mag() + b.operational_chip.lo_mag()) <
          1e-9);

    CHECK(b.manufacturing_share() > 0.0);
    CHECK(b.manufacturing_share() < 1.0);
}

TEST_CASE("zero-hour usage leaves only manufacturing emissions") {
    const OperationalInputs idle{
        .power_per_transistor = make_interval(10.4, 21.1, "nW"),
        .lifetime_hours = make_quantity(0, "h"),
        .emission_factor = make_quantity(0.4, "kgCO2/kWh"),
    };
    const CptBreakdown b =
        assess(Interval::point(12e9, Dim::Count), profile_of(405, 0.9, 1e11), idle);
    CHECK(b.operational_per_transistor.hi_mag() == 0.0);
    CHECK(b.operational_chip.hi_mag() == 0.0);
    CHECK(b.total_per_transistor == b.manufacturing_per_transistor);
    CHECK(b.manufacturing_share() == near(1.0));
}

TEST_CASE("breakdowns are additive and linear in the transistor count") {
    const std::string err = props::breakdown_additivity_and_linearity(500);
    INFO(err);
    CHECK(err.empty());
}

TEST_CASE("operational emissions are linear in hours and emission factor") {
    const std::string err = props::operational_linearity(500);
    INFO(err);
    CHECK(err.empty());
}

TEST_CASE("operational emissions are monotone in power, hours and EF") {
    std::mt19937_64 rng(20240505);
    for (int i = 0; i < 300; ++i) {
        const Interval power = props::random_interval(rng, Dim::Power, 1e-11, 1e-6);
        const double hours = props::log_uniform(rng, 1.0, 1e5);
        const double ef = props::log_uniform(rng, 1e-2, 2.0);
        const double grow = std::uniform_real_distribution<double>(1.0, 3.0)(rng);
        const OperationalInputs base{power, Quantity(hours, Dim::Time),
                                     Quantity(ef, Dim::EmissionFactor)};
        const Interval ref = operational_per_transistor(base);

        const OperationalInputs more_power{
            Interval(power.lo_mag() * grow, power.hi_mag() * grow, Dim::Power),
            Quantity(hours, Dim::Time), Quantity(ef, Dim::EmissionFactor)};
        const OperationalInputs more_hours{power, Quantity(hours * grow, Dim::Time),
                                           Quantity(ef, Dim::EmissionFactor)};
        const OperationalInputs more_ef{power, Quantity(hours, Dim::Time),
                                        Quantity(ef * grow, Dim::EmissionFactor)};
        for (const auto& inputs : {more_power, more_hours, more_ef}) {
            const Interval grown = operational_per_transistor(inputs);
            CHECK(grown.lo_mag() >= ref.lo_mag());
            CHECK(grown.hi_mag() >= ref.hi_mag());
        }
    }
}

TEST_CASE("chip roll-up distributes over the per-transistor sum") {
    std::mt19937_64 rng(20240506);
    for (int i = 0; i < 300; ++i) {
        const Interval n = props::random_interval(rng, Dim::Count, 1e8, 1e11);
        const Interval man = props::random_interval(rng, Dim::MassCO2, 1e-7, 1e-4);
        const Interval oper = props::random_interval(rng, Dim::MassCO2, 1e-7, 1e-4);
        const Interval combined = chip_total(n, cpt_per_transistor(man, oper));
        const Interval split = add(manufacturing_chip_total(n, man), chip_total(n, oper));
        CHECK(oracle::rel_err(combined.lo_mag(), split.lo_mag()) < 1e-9);
        CHECK(oracle::rel_err(combined.hi_mag(), split.hi_mag()) < 1e-9);
    }
}
