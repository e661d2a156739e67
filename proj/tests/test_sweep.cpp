#include <doctest.h>

#include "proplab/sweep.hpp"

#include <random>

using namespace proplab;
using namespace proplab::sweep;

namespace
{
    constexpr double hata_1km  = 123.729323997245795138937706061;
    constexpr double hata_2km  = 134.333062180441054833375643251;
    constexpr double hata_10km = 158.954179778832005015959246119;

    SweepSpec hata_distance_spec()
    {
        SweepSpec spec;
        spec.vary   = Axis::distance;
        spec.from   = 1.0;
        spec.to     = 10.0;
        spec.steps  = 2;
        spec.base   = {900, 1, 30, 3};
        spec.models = {Model::hata};
        return spec;
    }

    SweepResult handmade(const std::vector<double>& a, const std::vector<double>& b)
    {
        SweepResult r;
        r.models = {Model::hata, Model::lee};
        r.axis   = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(a.size()), 1.0, static_cast<double>(a.size()));
        r.loss_db.resize(r.axis.size(), 2);
        r.flags = SweepResult::FlagMatrix::Zero(r.axis.size(), 2);
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            r.loss_db(static_cast<Eigen::Index>(i), 0) = a[i];
            r.loss_db(static_cast<Eigen::Index>(i), 1) = b[i];
        }
        return r;
    }
}

TEST_CASE("two-point Hata distance sweep")
{
    const auto result = run_sweep(hata_distance_spec(), okumura::default_curves());
    REQUIRE(result.axis.size() == 2);
    CHECK(result.axis[0] == 1.0);
    CHECK(result.axis[1] == 10.0);
    CHECK(result.series(Model::hata)[0] == doctest::Approx(hata_1km).epsilon(1e-13));
    CHECK(result.series(Model::hata)[1] == doctest::Approx(hata_10km).epsilon(1e-13));
}

TEST_CASE("sweep spec validation")
{
    auto spec = hata_distance_spec();
    spec.to   = spec.from;
    CHECK_THROWS_AS(run_sweep(spec, okumura::default_curves()), ValidationError);
    spec       = hata_distance_spec();
    spec.steps = 1;
    CHECK_THROWS_AS(run_sweep(spec, okumura::default_curves()), ValidationError);
    spec        = hata_distance_spec();
    spec.models = {};
    CHECK_THROWS_AS(run_sweep(spec, okumura::default_curves()), ValidationError);
    spec.models = {Model::free_space};
    CHECK_THROWS_AS(run_sweep(spec, okumura::default_curves()), ValidationError);
}

TEST_CASE("strict sweeps list every violation")
{
    SweepSpec spec;
    spec.vary   = Axis::bts_height;
    spec.from   = 10.0;
    spec.to     = 40.0;
    spec.steps  = 4; // 10, 20, 30, 40
    spec.models = {Model::lee, Model::hata, Model::okumura};
    try
    {
        run_sweep(spec, okumura::default_curves());
        FAIL("expected a range error");
    }
    catch (const RangeError& e)
    {
        const std::string msg = e.what();
        // okumura rejects 10, 20, 30; hata rejects 10, 20.
        CHECK(msg.find("5 range violation(s)") != std::string::npos);
        CHECK(msg.find("okumura") != std::string::npos);
        CHECK(msg.find("hata") != std::string::npos);
    }

    spec.options.mode = RangeMode::permissive;
    const auto result = run_sweep(spec, okumura::default_curves());
    CHECK(has_flag(result.flags_at(0, result.column(Model::hata)), RangeFlag::bts_height_out_of_range));
    CHECK(result.flags_at(3, result.column(Model::hata)) == RangeFlag::none);
    CHECK(result.loss_db.allFinite());
}

TEST_CASE("models come out in canonical order")
{
    auto spec   = hata_distance_spec();
    spec.base   = paper_scenario();
    spec.models = {Model::lee, Model::okumura, Model::hata};
    const auto result = run_sweep(spec, okumura::default_curves());
    REQUIRE(result.models.size() == 3);
    CHECK(result.models[0] == Model::okumura);
    CHECK(result.models[1] == Model::hata);
    CHECK(result.models[2] == Model::lee);
}

TEST_CASE("sweep equals pointwise evaluation and is refinement invariant")
{
    const auto& curves = okumura::default_curves();
    for (int fig : {10, 11, 12})
    {
        auto spec         = figure_preset(fig).spec;
        const auto fine   = run_sweep(spec, curves);
        for (Eigen::Index p = 0; p < fine.axis.size(); ++p)
        {
            for (Model m : fine.models)
            {
                CHECK(fine.series(m)[p] == evaluate(m, fine.link_at(p), curves, spec.options).value_db);
            }
        }
        spec.steps        = 2;
        const auto coarse = run_sweep(spec, curves);
        CHECK(coarse.loss_db.row(0) == fine.loss_db.row(0));
        CHECK(coarse.loss_db.row(1) == fine.loss_db.row(fine.axis.size() - 1));
    }
}

TEST_CASE("log spacing")
{
    auto spec    = hata_distance_spec();
    spec.to      = 100.0;
    spec.steps   = 3;
    spec.spacing = Spacing::logarithmic;
    const auto axis = sample_axis(spec);
    CHECK(axis[0] == 1.0);
    CHECK(axis[1] == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(axis[2] == 100.0);
}

TEST_CASE("distance sweeps are strictly increasing for every model")
{
    const auto result = run_sweep(figure_preset(12).spec, okumura::default_curves());
    for (Eigen::Index c = 0; c < result.loss_db.cols(); ++c)
    {
        for (Eigen::Index p = 1; p < result.axis.size(); ++p)
        {
            CHECK(result.loss_db(p, c) > result.loss_db(p - 1, c));
        }
    }
}

TEST_CASE("ordering report")
{
    SUBCASE("identical series tie everywhere")
    {
        const auto report = compare_orderings(handmade({1, 2, 3}, {1, 2, 3}));
        for (const auto& r : report.points)
        {
            REQUIRE(r.tied_with_next.size() == 1);
            CHECK(r.tied_with_next[0]);
        }
        CHECK(report.crossovers.empty());
        CHECK(report.points_where_lowest(Model::hata) == 3);
        CHECK(report.points_where_lowest(Model::lee) == 3);
    }
    SUBCASE("one crossing gives one interval")
    {
        const auto report = compare_orderings(handmade({1, 2, 5, 6}, {3, 3, 3, 3}));
        REQUIRE(report.crossovers.size() == 1);
        CHECK(report.crossovers[0].before_index == 1);
        CHECK(report.crossovers[0].after_index == 2);
        CHECK_FALSE(report.consistent());
        CHECK(report.points_where_highest(Model::lee) == 2);
        const std::array<Model, 2> claim{Model::hata, Model::lee};
        CHECK(report.points_matching(claim) == 2);
    }
    SUBCASE("a tie inside a crossing is bridged")
    {
        const auto report = compare_orderings(handmade({1, 3, 5}, {3, 3, 3}));
        REQUIRE(report.crossovers.size() == 1);
        CHECK(report.crossovers[0].before_index == 0);
        CHECK(report.crossovers[0].after_index == 2);
    }
    SUBCASE("needs two models")
    {
        auto r   = handmade({1, 2}, {1, 2});
        r.models = {Model::hata};
        r.loss_db.conservativeResize(Eigen::NoChange, 1);
        CHECK_THROWS_AS(compare_orderings(r), ValidationError);
    }
}

TEST_CASE("BTS height comparison at the paper scenario: hata >= lee >= okumura")
{
    const auto preset = figure_preset(10);
    const auto report = compare_orderings(run_sweep(preset.spec, okumura::default_curves()));
    CHECK(report.points_matching(preset.claimed_descending) == report.point_count());
    CHECK(report.consistent());
}

TEST_CASE("max radius")
{
    const auto& curves = okumura::default_curves();
    const ModelOptions options;
    const RadioLinkd link{900, 1, 30, 3};

    CHECK(max_radius(Model::hata, link, hata_1km, curves, options).distance_km == 1.0);
    const auto two = max_radius(Model::hata, link, 134.33, curves, options);
    CHECK(std::abs(two.distance_km - 2.0) < 1e-3);
    CHECK(std::abs(max_radius(Model::hata, link, hata_2km, curves, options).distance_km - 2.0) <= 1e-3);

    const auto saturated = max_radius(Model::hata, link, 500.0, curves, options);
    CHECK(saturated.distance_km == 100.0);
    CHECK(has_flag(saturated.flags, RangeFlag::saturated));

    CHECK_THROWS_AS(max_radius(Model::hata, link, 1.0, curves, options), NoCoverageError);
}

TEST_CASE("max radius inverts every model")
{
    const auto& curves = okumura::default_curves();
    const auto options = paper_options();
    const auto link    = paper_scenario();
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(1.0, 100.0);
    for (Model m : empirical_models)
    {
        for (int i = 0; i < 20; ++i)
        {
            const double d      = u(rng);
            const double budget = evaluate(m, link.with_distance(d), curves, options).value_db;
            const auto r        = max_radius(m, link, budget, curves, options);
            CHECK(std::abs(r.distance_km - d) <= 1e-3);
        }
    }
}

TEST_CASE("figure presets")
{
    for (int fig = 1; fig <= 12; ++fig)
    {
        const auto preset = figure_preset(fig);
        CHECK(preset.name == "paper-fig" + std::to_string(fig));
        CHECK(preset.spec.steps >= 50);
        CHECK_NOTHROW(run_sweep(preset.spec, okumura::default_curves()));
    }
    CHECK(figure_preset("fig11").figure == 11);
    CHECK(figure_preset("paper-fig3").figure == 3);
    CHECK_THROWS_AS(figure_preset("paper-fig13"), ValidationError);
    CHECK_THROWS_AS(figure_preset("fig"), ValidationError);
}
