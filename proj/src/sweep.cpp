#include "proplab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace proplab::sweep
{
    using proplab::detail::format_number;

    std::string_view to_string(Axis axis) noexcept
    {
        switch (axis)
        {
            case Axis::bts_height:
                return "bts_height";
            case Axis::ms_height:
                return "ms_height";
            case Axis::distance:
                return "distance";
        }
        return "unknown";
    }

    std::string_view column_name(Axis axis) noexcept
    {
        switch (axis)
        {
            case Axis::bts_height:
                return "bts_height_m";
            case Axis::ms_height:
                return "ms_height_m";
            case Axis::distance:
                return "distance_km";
        }
        return "unknown";
    }

    Axis axis_from_string(std::string_view name)
    {
        for (auto a : {Axis::bts_height, Axis::ms_height, Axis::distance})
        {
            if (name == to_string(a) || name == column_name(a))
            {
                return a;
            }
        }
        throw ValidationError("unknown sweep axis '" + std::string(name) + "' (expected bts_height, ms_height or distance)");
    }

    lee::LeeScenariod lee_scenario(const RadioLinkd& link, const ModelOptions& options)
    {
        lee::LeeScenariod s;
        s.link          = link;
        s.tx_power_w    = options.lee_overrides.tx_power_w.value_or(options.lee.nominal_tx_power_w);
        s.bts_gain_db   = options.lee_overrides.bts_gain_db.value_or(options.lee.nominal_bts_gain_db);
        s.environment_k = options.lee_overrides.k;
        return s;
    }

    PathLossDbd evaluate(Model model, const RadioLinkd& link, const okumura::OkumuraCurvesd& curves, const ModelOptions& options)
    {
        switch (model)
        {
            case Model::free_space:
                return free_space_loss(link);
            case Model::okumura:
                return okumura::okumura_loss(link, options.environment, curves, options.mode);
            case Model::hata:
                return hata::hata_loss(link, options.mode);
            case Model::lee:
                return lee::lee_loss(lee_scenario(link, options), options.lee);
            case Model::log_distance:
                break;
        }
        throw ValidationError("model '" + std::string(proplab::to_string(model)) + "' cannot be evaluated from a link alone");
    }

    Window validity_window(Model model, Axis axis)
    {
        constexpr double inf = std::numeric_limits<double>::infinity();
        const Window positive{0.0, inf, true, true};
        switch (model)
        {
            case Model::okumura:
                switch (axis)
                {
                    case Axis::bts_height:
                        return okumura::bts_height_window;
                    case Axis::ms_height:
                        return okumura::ms_height_window;
                    case Axis::distance:
                        return okumura::distance_window;
                }
                break;
            case Model::hata:
                switch (axis)
                {
                    case Axis::bts_height:
                        return hata::bts_height_window;
                    case Axis::ms_height:
                        return hata::ms_height_window;
                    case Axis::distance:
                        return hata::distance_window;
                }
                break;
            default:
                break;
        }
        return positive;
    }

    Window radius_window(Model model)
    {
        switch (model)
        {
            case Model::free_space:
                return {1e-3, 100.0};
            default:
                return {1.0, 100.0};
        }
    }

    void validate(const SweepSpec& spec)
    {
        if (!std::isfinite(spec.from) || !std::isfinite(spec.to))
        {
            throw ValidationError("sweep bounds must be finite");
        }
        if (!(spec.from < spec.to))
        {
            throw ValidationError("sweep requires from < to, got from = " + format_number(spec.from)
                                  + ", to = " + format_number(spec.to));
        }
        if (spec.steps < 2)
        {
            throw ValidationError("sweep requires at least 2 steps, got " + std::to_string(spec.steps));
        }
        if (!(spec.from > 0.0))
        {
            throw ValidationError("sweep bounds must be positive");
        }
        if (spec.models.empty())
        {
            throw ValidationError("sweep requires at least one model");
        }
        for (Model m : spec.models)
        {
            if (std::find(empirical_models.begin(), empirical_models.end(), m) == empirical_models.end())
            {
                throw ValidationError("sweep supports okumura, hata and lee, not '" + std::string(proplab::to_string(m)) + "'");
            }
        }
    }

    Eigen::VectorXd sample_axis(const SweepSpec& spec)
    {
        Eigen::VectorXd axis;
        if (spec.spacing == Spacing::linear)
        {
            axis = Eigen::VectorXd::LinSpaced(spec.steps, spec.from, spec.to);
        }
        else
        {
            axis = Eigen::VectorXd::LinSpaced(spec.steps, std::log10(spec.from), std::log10(spec.to));
            axis = axis.unaryExpr([](double e) { return std::pow(10.0, e); });
        }
        axis[0]              = spec.from;
        axis[spec.steps - 1] = spec.to;
        return axis;
    }

    RadioLinkd with_axis_value(const RadioLinkd& base, Axis axis, double value)
    {
        switch (axis)
        {
            case Axis::bts_height:
                return base.with_bts_height(value);
            case Axis::ms_height:
                return base.with_ms_height(value);
            case Axis::distance:
                return base.with_distance(value);
        }
        return base;
    }

    Eigen::Index SweepResult::column(Model model) const
    {
        const auto it = std::find(models.begin(), models.end(), model);
        if (it == models.end())
        {
            throw ValidationError("model '" + std::string(proplab::to_string(model)) + "' is not part of this sweep");
        }
        return static_cast<Eigen::Index>(it - models.begin());
    }

    RadioLinkd SweepResult::link_at(Eigen::Index point) const
    {
        return with_axis_value(base, vary, axis[point]);
    }

    SweepResult run_sweep(const SweepSpec& spec, const okumura::OkumuraCurvesd& curves)
    {
        validate(spec);

        SweepResult result;
        result.vary = spec.vary;
        result.base = spec.base;
        for (Model m : empirical_models)
        {
            if (std::find(spec.models.begin(), spec.models.end(), m) != spec.models.end())
            {
                result.models.push_back(m);
            }
        }
        result.axis = sample_axis(spec);

        const auto n_points = result.axis.size();
        const auto n_models = static_cast<Eigen::Index>(result.models.size());
        result.loss_db.resize(n_points, n_models);
        result.flags.resize(n_points, n_models);

        std::vector<std::string> violations;
        for (Eigen::Index c = 0; c < n_models; ++c)
        {
            for (Eigen::Index p = 0; p < n_points; ++p)
            {
                try
                {
                    const auto loss      = evaluate(result.models[c], result.link_at(p), curves, spec.options);
                    result.loss_db(p, c) = loss.value_db;
                    result.flags(p, c)   = static_cast<std::uint32_t>(loss.flags);
                }
                catch (const RangeError& e)
                {
                    violations.push_back(std::string(column_name(spec.vary)) + " = " + format_number(result.axis[p]) + ": "
                                         + e.what());
                }
            }
        }
        if (!violations.empty())
        {
            std::string msg = std::to_string(violations.size()) + " range violation(s) in sweep:";
            for (const auto& v : violations)
            {
                msg += "\n  " + v;
            }
            throw RangeError(std::string(column_name(spec.vary)), msg);
        }
        return result;
    }

    //-----------//
    // Orderings //
    //-----------//

    std::string PointRanking::to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < descending.size(); ++i)
        {
            s += proplab::to_string(descending[i]);
            if (i + 1 < descending.size())
            {
                s += tied_with_next[i] ? " = " : " > ";
            }
        }
        return s;
    }

    namespace
    {
        int compare(double a, double b, double tol)
        {
            if (std::abs(a - b) <= tol)
            {
                return 0;
            }
            return a > b ? 1 : -1;
        }
    }

    OrderingReport compare_orderings(const SweepResult& result, double tie_tolerance_db)
    {
        if (result.models.size() < 2)
        {
            throw ValidationError("ordering comparison needs at least two models");
        }

        OrderingReport report;
        report.vary             = result.vary;
        report.models           = result.models;
        report.axis             = result.axis;
        report.loss_db          = result.loss_db;
        report.tie_tolerance_db = tie_tolerance_db;

        const auto n_models = static_cast<Eigen::Index>(result.models.size());
        for (Eigen::Index p = 0; p < result.axis.size(); ++p)
        {
            std::vector<Eigen::Index> order(static_cast<std::size_t>(n_models));
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
                return compare(result.loss_db(p, a), result.loss_db(p, b), tie_tolerance_db) > 0;
            });
            PointRanking ranking;
            for (std::size_t i = 0; i < order.size(); ++i)
            {
                ranking.descending.push_back(result.models[static_cast<std::size_t>(order[i])]);
                if (i + 1 < order.size())
                {
                    ranking.tied_with_next.push_back(
                        compare(result.loss_db(p, order[i]), result.loss_db(p, order[i + 1]), tie_tolerance_db) == 0);
                }
            }
            report.points.push_back(std::move(ranking));
        }

        for (Eigen::Index a = 0; a < n_models; ++a)
        {
            for (Eigen::Index b = a + 1; b < n_models; ++b)
            {
                int last_sign            = 0;
                Eigen::Index last_index  = 0;
                for (Eigen::Index p = 0; p < result.axis.size(); ++p)
                {
                    const int sign = compare(result.loss_db(p, a), result.loss_db(p, b), tie_tolerance_db);
                    if (sign == 0)
                    {
                        continue;
                    }
                    if (last_sign != 0 && sign != last_sign)
                    {
                        report.crossovers.push_back({result.models[static_cast<std::size_t>(a)],
                                                     result.models[static_cast<std::size_t>(b)], last_index, p,
                                                     result.axis[last_index], result.axis[p]});
                    }
                    last_sign  = sign;
                    last_index = p;
                }
            }
        }
        std::stable_sort(report.crossovers.begin(), report.crossovers.end(),
                         [](const Crossover& x, const Crossover& y) { return x.before_index < y.before_index; });
        return report;
    }

    Eigen::Index OrderingReport::points_matching(std::span<const Model> descending) const
    {
        std::vector<Eigen::Index> cols;
        for (Model m : descending)
        {
            const auto it = std::find(models.begin(), models.end(), m);
            if (it == models.end())
            {
                throw ValidationError("model '" + std::string(proplab::to_string(m)) + "' is not part of this report");
            }
            cols.push_back(static_cast<Eigen::Index>(it - models.begin()));
        }
        Eigen::Index count = 0;
        for (Eigen::Index p = 0; p < axis.size(); ++p)
        {
            bool holds = true;
            for (std::size_t i = 0; i + 1 < cols.size(); ++i)
            {
                holds = holds && compare(loss_db(p, cols[i]), loss_db(p, cols[i + 1]), tie_tolerance_db) >= 0;
            }
            count += holds ? 1 : 0;
        }
        return count;
    }

    Eigen::Index OrderingReport::points_where_highest(Model model) const
    {
        Eigen::Index count = 0;
        for (const auto& r : points)
        {
            count += (r.descending.front() == model) ? 1 : 0;
        }
        return count;
    }

    Eigen::Index OrderingReport::points_where_lowest(Model model) const
    {
        Eigen::Index count = 0;
        for (const auto& r : points)
        {
            // A model tied for lowest counts as lowest.
            std::size_t i = r.descending.size() - 1;
            while (true)
            {
                if (r.descending[i] == model)
                {
                    ++count;
                    break;
                }
                if (i == 0 || !r.tied_with_next[i - 1])
                {
                    break;
                }
                --i;
            }
        }
        return count;
    }

    std::string OrderingReport::to_text() const
    {
        std::ostringstream out;
        out << "axis: " << column_name(vary) << ", " << axis.size() << " points from " << format_number(axis[0]) << " to "
            << format_number(axis[axis.size() - 1]) << '\n';
        out << "models:";
        for (std::size_t i = 0; i < models.size(); ++i)
        {
            out << (i == 0 ? " " : ", ") << proplab::to_string(models[i]);
        }
        out << '\n';

        std::vector<std::string> seen;
        std::map<std::string, Eigen::Index> counts;
        for (const auto& r : points)
        {
            const auto s = r.to_string();
            if (counts[s]++ == 0)
            {
                seen.push_back(s);
            }
        }
        out << "rankings:\n";
        for (const auto& s : seen)
        {
            out << "  " << s << ": " << counts[s] << '/' << axis.size() << " points\n";
        }
        out << "consistent: " << (consistent() ? "yes" : "no") << '\n';
        if (crossovers.empty())
        {
            out << "crossovers: none\n";
        }
        else
        {
            out << "crossovers:\n";
            for (const auto& c : crossovers)
            {
                out << "  " << proplab::to_string(c.first) << '/' << proplab::to_string(c.second) << " between "
                    << column_name(vary) << ' ' << format_number(c.axis_before) << " and " << format_number(c.axis_after)
                    << '\n';
            }
        }
        return out.str();
    }

    //-----------------//
    // Budget inversion //
    //-----------------//

    RadiusResult max_radius(Model model,
                            const RadioLinkd& link_template,
                            double max_loss_db,
                            const okumura::OkumuraCurvesd& curves,
                            const ModelOptions& options)
    {
        if (!std::isfinite(max_loss_db))
        {
            throw DomainError("max_loss_db must be finite");
        }
        const Window window = radius_window(model);
        const auto loss_at  = [&](double d) { return evaluate(model, link_template.with_distance(d), curves, options); };

        const auto at_min = loss_at(window.lo);
        if (at_min.value_db > max_loss_db)
        {
            throw NoCoverageError(std::string(proplab::to_string(model)) + ": loss at the minimum distance "
                                  + format_number(window.lo) + " km is " + format_number(at_min.value_db)
                                  + " dB, above the budget of " + format_number(max_loss_db) + " dB");
        }
        const auto at_max = loss_at(window.hi);
        if (at_max.value_db <= max_loss_db)
        {
            return {window.hi, at_max.flags | RangeFlag::saturated};
        }

        // Loss is strictly increasing in distance: keep loss(lo) <= budget < loss(hi).
        double lo = window.lo;
        double hi = window.hi;
        RangeFlag flags = at_min.flags;
        while (hi - lo > radius_resolution_km)
        {
            const double mid = 0.5 * (lo + hi);
            const auto loss  = loss_at(mid);
            if (loss.value_db <= max_loss_db)
            {
                lo    = mid;
                flags = loss.flags;
            }
            else
            {
                hi = mid;
            }
        }
        return {lo, flags};
    }

    //---------//
    // Presets //
    //---------//

    RadioLinkd paper_scenario()
    {
        return {900.0, 5.0, 30.48, 3.0};
    }

    ModelOptions paper_options()
    {
        ModelOptions options;
        options.environment = okumura::Environment::open;
        return options;
    }

    FigurePreset figure_preset(int figure)
    {
        struct Row
        {
            Axis axis;
            double from, to;
            int steps;
        };
        // Axis ranges stay inside every plotted model's strict window.
        const Row bts_okumura{Axis::bts_height, 31.0, 99.0, 69};
        const Row bts_wide{Axis::bts_height, 30.0, 200.0, 171};
        const Row ms_okumura{Axis::ms_height, 1.0, 9.9, 90};
        const Row ms_wide{Axis::ms_height, 1.0, 10.0, 91};
        const Row dist{Axis::distance, 1.0, 100.0, 100};

        Row row{};
        std::vector<Model> models;
        std::vector<Model> claim;
        switch (figure)
        {
            case 1: row = bts_okumura; models = {Model::okumura}; break;
            case 2: row = ms_okumura; models = {Model::okumura}; break;
            case 3: row = dist; models = {Model::okumura}; break;
            case 4: row = bts_wide; models = {Model::hata}; break;
            case 5: row = ms_wide; models = {Model::hata}; break;
            case 6: row = dist; models = {Model::hata}; break;
            case 7: row = bts_wide; models = {Model::lee}; break;
            case 8: row = ms_wide; models = {Model::lee}; break;
            case 9: row = dist; models = {Model::lee}; break;
            case 10:
                row    = bts_okumura;
                models = {Model::okumura, Model::hata, Model::lee};
                claim  = {Model::hata, Model::lee, Model::okumura};
                break;
            case 11:
                row    = ms_okumura;
                models = {Model::okumura, Model::hata, Model::lee};
                claim  = {Model::lee, Model::hata, Model::okumura};
                break;
            case 12:
                row    = dist;
                models = {Model::okumura, Model::hata, Model::lee};
                claim  = {Model::lee, Model::hata, Model::okumura};
                break;
            default:
                throw ValidationError("no figure preset " + std::to_string(figure) + " (expected 1 to 12)");
        }

        FigurePreset preset;
        preset.figure            = figure;
        preset.name              = "paper-fig" + std::to_string(figure);
        preset.spec.vary         = row.axis;
        preset.spec.from         = row.from;
        preset.spec.to           = row.to;
        preset.spec.steps        = row.steps;
        preset.spec.base         = paper_scenario();
        preset.spec.models       = std::move(models);
        preset.spec.options      = paper_options();
        preset.claimed_descending = std::move(claim);
        return preset;
    }

    FigurePreset figure_preset(std::string_view name)
    {
        std::string_view rest = name;
        if (rest.starts_with("paper-"))
        {
            rest.remove_prefix(6);
        }
        if (rest.starts_with("fig") && rest.size() > 3)
        {
            rest.remove_prefix(3);
            int n = 0;
            for (char ch : rest)
            {
                if (ch < '0' || ch > '9')
                {
                    n = -1;
                    break;
                }
                n = n * 10 + (ch - '0');
            }
            if (n >= 1 && n <= 12)
            {
                return figure_preset(n);
            }
        }
        throw ValidationError("unknown preset '" + std::string(name) + "' (expected paper-fig1 to paper-fig12)");
    }
}
