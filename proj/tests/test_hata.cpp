#include <doctest.h>

#include "proplab/hata.hpp"

#include <cmath>
#include <random>

using namespace proplab;
using namespace proplab::hata;

namespace
{
    // mpmath, 30 digits.
    constexpr double a_3m_900    = 2.68984430946120585474992517394;
    constexpr double a_1_5m_200  = -0.00394865977420418864306723788441;
    constexpr double loss_1km    = 123.729323997245795138937706061;
    constexpr double loss_2km    = 134.333062180441054833375643251;
    constexpr double loss_10km   = 158.954179778832005015959246119;
}

TEST_CASE("mobile correction branches")
{
    CHECK(mobile_correction(3.0, 900.0).value == doctest::Approx(a_3m_900).epsilon(1e-13));
    CHECK(mobile_correction(1.5, 200.0).value == doctest::Approx(a_1_5m_200).epsilon(1e-11));
    CHECK_THROWS_AS(mobile_correction(1.0 / 1.54, 900.0), RangeError);
    CHECK(mobile_correction(1.0 / 1.54, 200.0, RangeMode::permissive).value == doctest::Approx(-1.1));
    CHECK_THROWS_AS(mobile_correction(3.0, 100.0), RangeError);
    CHECK_THROWS_AS(mobile_correction(11.0, 900.0), RangeError);
}

TEST_CASE("300 MHz belongs to the upper branch")
{
    const double at_300 = mobile_correction(3.0, 300.0).value;
    CHECK(at_300 == doctest::Approx(a_3m_900).epsilon(1e-13));
    const double below = mobile_correction(3.0, std::nextafter(300.0, 0.0)).value;
    // The branches do not meet at 300 MHz.
    CHECK(std::abs(below - at_300) > 0.05);
}

TEST_CASE("urban loss closed form")
{
    const RadioLinkd link{900, 1, 30, 3};
    CHECK(hata_loss(link).value_db == doctest::Approx(loss_1km).epsilon(1e-13));
    CHECK(hata_loss(link.with_distance(2)).value_db == doctest::Approx(loss_2km).epsilon(1e-13));
    CHECK(hata_loss(link.with_distance(10)).value_db == doctest::Approx(loss_10km).epsilon(1e-13));
    CHECK(hata_loss(link).model == Model::hata);
}

TEST_CASE("distance term vanishes at 1 km")
{
    for (double h : {30.0, 55.0, 120.0, 200.0})
    {
        const RadioLinkd link{900, 1, h, 3};
        const double expected = 69.55 + 26.16 * std::log10(900.0) - 13.82 * std::log10(h) - a_3m_900;
        CHECK(hata_loss(link).value_db == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("validity ranges")
{
    CHECK_THROWS_AS(hata_loss(RadioLinkd{1600, 1, 30, 3}), RangeError);
    CHECK_THROWS_AS(hata_loss(RadioLinkd{900, 0.5, 30, 3}), RangeError);
    CHECK_THROWS_AS(hata_loss(RadioLinkd{900, 1, 25, 3}), RangeError);
    CHECK_THROWS_AS(hata_loss(RadioLinkd{900, 1, 30, 0.5}), RangeError);
    CHECK_THROWS_AS(hata_loss(RadioLinkd{900, -1, 30, 3}), DomainError);
    try
    {
        hata_loss(RadioLinkd{900, 1, 250, 3});
    }
    catch (const RangeError& e)
    {
        CHECK(e.parameter() == "bts_height_m");
    }

    const auto near = hata_loss(RadioLinkd{900, 0.5, 30, 3}, RangeMode::permissive);
    CHECK(has_flag(near.flags, RangeFlag::distance_out_of_range));
    CHECK(std::isfinite(near.value_db));
    const auto high = hata_loss(RadioLinkd{1800, 1, 30, 3}, RangeMode::permissive);
    CHECK(has_flag(high.flags, RangeFlag::frequency_out_of_range));
}

TEST_CASE("monotonicity properties")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i)
    {
        const double f = 150.0 + 1350.0 * u(rng);
        const double d = 1.0 + 99.0 * u(rng);
        const double h = 30.0 + 160.0 * u(rng);
        const double m = 1.0 + 8.0 * u(rng);
        const RadioLinkd link{f, d * 1.001, h, m};
        const double base = hata_loss(link).value_db;
        CHECK(hata_loss(link.with_bts_height(h + 5.0)).value_db < base);
        CHECK(hata_loss(link.with_distance(d * 1.5)).value_db > base);

        const double slope = distance_slope_db_per_decade(h);
        CHECK(slope > 0.0);
        const double decade = hata_loss(link.with_distance(d * 10.0)).value_db - hata_loss(link.with_distance(d)).value_db;
        CHECK(decade == doctest::Approx(slope).epsilon(1e-10));
    }
    for (double m = 1.0; m < 10.0; m += 0.25)
    {
        const RadioLinkd link{900, 5, 50, m};
        CHECK(hata_loss(link.with_ms_height(m + 0.25)).value_db < hata_loss(link).value_db);
    }
}
