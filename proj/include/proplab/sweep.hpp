#pragma once

#include "proplab/core.hpp"
#include "proplab/hata.hpp"
#include "proplab/lee.hpp"
#include "proplab/okumura.hpp"

#include <Eigen/Core>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace proplab::sweep
{
    enum class Axis
    {
        bts_height,
        ms_height,
        distance
    };

    std::string_view to_string(Axis axis) noexcept;
    /// Column name carrying the unit, e.g. "distance_km".
    std::string_view column_name(Axis axis) noexcept;
    Axis axis_from_string(std::string_view name);

    enum class Spacing
    {
        linear,
        logarithmic
    };

    /// Canonical evaluation order of the empirical models.
    inline constexpr std::array<Model, 3> empirical_models{Model::okumura, Model::hata, Model::lee};

    struct LeeOverrides
    {
        std::optional<double> tx_power_w;
        std::optional<double> bts_gain_db;
        std::optional<int> k;
    };

    /// Everything besides the link geometry that a model evaluation needs.
    struct ModelOptions
    {
        okumura::Environment environment = okumura::Environment::urban;
        lee::LeeParametersd lee;
        LeeOverrides lee_overrides;
        RangeMode mode = RangeMode::strict;
    };

    lee::LeeScenariod lee_scenario(const RadioLinkd& link, const ModelOptions& options);

    /// Loss of one model at one link. Free-space is accepted as well.
    PathLossDbd evaluate(Model model, const RadioLinkd& link, const okumura::OkumuraCurvesd& curves, const ModelOptions& options);

    /// Strict validity window of `model` along `axis`.
    Window validity_window(Model model, Axis axis);

    /// Distance interval searched by max_radius.
    Window radius_window(Model model);

    struct SweepSpec
    {
        Axis vary = Axis::distance;
        double from = 1.0;
        double to = 10.0;
        int steps = 2;
        Spacing spacing = Spacing::linear;
        RadioLinkd base{900.0, 5.0, 30.48, 3.0};
        std::vector<Model> models{empirical_models.begin(), empirical_models.end()};
        ModelOptions options;
    };

    /// Structural checks: from < to, steps >= 2, known models. Range violations are
    /// reported per point by run_sweep.
    void validate(const SweepSpec& spec);

    /// Sample positions along the varied axis; endpoints are exactly `from` and `to`.
    Eigen::VectorXd sample_axis(const SweepSpec& spec);

    struct SweepResult
    {
        using FlagMatrix = Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>;

        Axis vary = Axis::distance;
        RadioLinkd base{};
        std::vector<Model> models;
        Eigen::VectorXd axis;
        /// One row per axis point, one column per model.
        Eigen::MatrixXd loss_db;
        FlagMatrix flags;

        Eigen::Index column(Model model) const;
        Eigen::VectorXd series(Model model) const
        {
            return loss_db.col(column(model));
        }
        RangeFlag flags_at(Eigen::Index point, Eigen::Index model_column) const
        {
            return static_cast<RangeFlag>(flags(point, model_column));
        }
        RadioLinkd link_at(Eigen::Index point) const;
    };

    RadioLinkd with_axis_value(const RadioLinkd& base, Axis axis, double value);

    /// Evaluates every selected model at every axis point, models in canonical order.
    /// Strict mode gathers all (model, point) violations into a single RangeError.
    SweepResult run_sweep(const SweepSpec& spec, const okumura::OkumuraCurvesd& curves);

    struct PointRanking
    {
        std::vector<Model> descending;
        /// tied_with_next[i]: descending[i] and descending[i + 1] are equal within tolerance.
        std::vector<bool> tied_with_next;

        std::string to_string() const;
        bool operator==(const PointRanking&) const = default;
    };

    struct Crossover
    {
        Model first;
        Model second;
        Eigen::Index before_index;
        Eigen::Index after_index;
        double axis_before;
        double axis_after;
    };

    struct OrderingReport
    {
        Axis vary = Axis::distance;
        std::vector<Model> models;
        Eigen::VectorXd axis;
        Eigen::MatrixXd loss_db;
        std::vector<PointRanking> points;
        std::vector<Crossover> crossovers;
        /// Ties closer than this many dB count as equal.
        double tie_tolerance_db = 1e-9;

        /// One ranking holds at every point (no crossovers).
        bool consistent() const
        {
            return crossovers.empty();
        }

        /// Number of points where loss(descending[0]) >= loss(descending[1]) >= ...
        Eigen::Index points_matching(std::span<const Model> descending) const;
        Eigen::Index points_where_highest(Model model) const;
        Eigen::Index points_where_lowest(Model model) const;
        Eigen::Index point_count() const
        {
            return axis.size();
        }

        std::string to_text() const;
    };

    /// Ranks models at every point and finds the intervals where a pair changes order.
    OrderingReport compare_orderings(const SweepResult& result, double tie_tolerance_db = 1e-9);

    struct RadiusResult
    {
        double distance_km;
        RangeFlag flags = RangeFlag::none;
    };

    inline constexpr double radius_resolution_km = 1e-3;

    /// Largest distance within radius_window(model) whose loss stays within the budget.
    RadiusResult max_radius(Model model,
                            const RadioLinkd& link_template,
                            double max_loss_db,
                            const okumura::OkumuraCurvesd& curves,
                            const ModelOptions& options);

    //----------------------------------//
    // Figure reconstruction presets    //
    //----------------------------------//

    /// f = 900 MHz, d = 5 km, h_te = 30.48 m, h_re = 3 m.
    RadioLinkd paper_scenario();

    /// Model options used by the figure presets (open-area Okumura gain).
    ModelOptions paper_options();

    struct FigurePreset
    {
        int figure;
        std::string name;
        SweepSpec spec;
        /// Published qualitative ordering, highest loss first (empty for single-model figures).
        std::vector<Model> claimed_descending;
    };

    /// Presets for figures 1 to 12.
    FigurePreset figure_preset(int figure);
    FigurePreset figure_preset(std::string_view name);
}
