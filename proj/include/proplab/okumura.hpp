#pragma once

#include "proplab/core.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <string>
#include <string_view>

namespace proplab::okumura
{
    enum class Environment
    {
        open,
        suburban,
        urban
    };

    inline constexpr std::array<Environment, 3> all_environments{Environment::open, Environment::suburban, Environment::urban};

    std::string_view to_string(Environment env) noexcept;
    Environment environment_from_string(std::string_view name);

    inline const Window frequency_window{150.0, 1920.0};
    inline const Window distance_window{1.0, 100.0};
    inline const Window bts_height_window{30.0, 100.0, true, true};
    inline const Window bts_height_permissive_window{0.0, 1000.0, true, false};
    inline const Window ms_height_window{0.0, 10.0, true, true};

    /// Median attenuation surface A_mu(f, d) and area gains G_AREA.
    ///
    /// Rows of `amu_db` follow `frequencies_mhz`, columns follow `distances_km`.
    template <class Scalar>
    struct OkumuraCurves
    {
        using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
        using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

        Vector frequencies_mhz;
        Vector distances_km;
        Matrix amu_db;
        std::array<Scalar, 3> garea_db{};

        Scalar garea(Environment env) const
        {
            return garea_db[static_cast<std::size_t>(env)];
        }

        template <class Other>
        OkumuraCurves<Other> cast() const
        {
            OkumuraCurves<Other> out;
            out.frequencies_mhz = frequencies_mhz.template cast<Other>();
            out.distances_km    = distances_km.template cast<Other>();
            out.amu_db          = amu_db.template cast<Other>();
            std::transform(garea_db.begin(), garea_db.end(), out.garea_db.begin(), [](Scalar v) { return Other(v); });
            return out;
        }
    };

    using OkumuraCurvesd = OkumuraCurves<double>;

    /// Throws ValidationError naming the first violated invariant.
    template <class Scalar>
    void validate(const OkumuraCurves<Scalar>& curves)
    {
        const auto strictly_ascending = [](const auto& v) {
            for (Eigen::Index i = 1; i < v.size(); ++i)
            {
                if (!(v[i] > v[i - 1]))
                {
                    return false;
                }
            }
            return true;
        };
        if (curves.frequencies_mhz.size() == 0)
        {
            throw ValidationError("frequency grid is empty");
        }
        if (curves.distances_km.size() == 0)
        {
            throw ValidationError("distance grid is empty");
        }
        if (!(curves.frequencies_mhz.minCoeff() > Scalar(0)) || !(curves.distances_km.minCoeff() > Scalar(0)))
        {
            throw ValidationError("grid values must be positive");
        }
        if (!strictly_ascending(curves.frequencies_mhz))
        {
            throw ValidationError("frequency grid is not strictly ascending");
        }
        if (!strictly_ascending(curves.distances_km))
        {
            throw ValidationError("distance grid is not strictly ascending");
        }
        if (curves.amu_db.rows() != curves.frequencies_mhz.size() || curves.amu_db.cols() != curves.distances_km.size())
        {
            throw ValidationError("A_mu matrix dimensions do not match the grids");
        }
        if (!curves.amu_db.allFinite())
        {
            throw ValidationError("A_mu contains a non-finite value");
        }
        if ((curves.amu_db.array() < Scalar(0)).any())
        {
            throw ValidationError("A_mu contains a negative value");
        }
        for (Eigen::Index r = 0; r < curves.amu_db.rows(); ++r)
        {
            for (Eigen::Index c = 1; c < curves.amu_db.cols(); ++c)
            {
                if (curves.amu_db(r, c) < curves.amu_db(r, c - 1))
                {
                    throw ValidationError("A_mu decreases with distance at "
                                          + detail::format_number(static_cast<double>(curves.frequencies_mhz[r]))
                                          + " MHz");
                }
            }
        }
        for (Scalar g : curves.garea_db)
        {
            if (!std::isfinite(static_cast<double>(g)))
            {
                throw ValidationError("G_AREA contains a non-finite value");
            }
        }
    }

    /// Parses the curve-file format and validates the result.
    OkumuraCurvesd load_curves(std::string_view source);
    OkumuraCurvesd load_curves_file(const std::string& path);
    std::string serialize_curves(const OkumuraCurvesd& curves);

    /// Built-in table shipped in data/okumura_curves.csv.
    const OkumuraCurvesd& default_curves();
    std::string_view default_curves_source();

    namespace detail
    {
        // Interval index and weight of x on an ascending log grid; x is already clamped to the grid.
        template <class Vector, class Scalar>
        std::pair<Eigen::Index, Scalar> locate(const Vector& grid, Scalar x)
        {
            const Eigen::Index n = grid.size();
            if (n == 1)
            {
                return {0, Scalar(0)};
            }
            const auto begin = grid.data();
            const auto it    = std::upper_bound(begin, begin + n, x);
            Eigen::Index i   = std::clamp<Eigen::Index>((it - begin) - 1, 0, n - 2);
            const Scalar lx  = std::log10(x);
            const Scalar l0  = std::log10(grid[i]);
            const Scalar l1  = std::log10(grid[i + 1]);
            return {i, (lx - l0) / (l1 - l0)};
        }
    }

    /// A_mu(f, d), bilinear in (log10 f, log10 d).
    ///
    /// Strict mode rejects queries outside 150-1920 MHz and 1-100 km. Permissive mode
    /// clamps to the nearest edge and flags the result. Queries inside the window but
    /// beyond a user table's grid are clamped to the grid and flagged in either mode.
    template <class Scalar>
    Flagged<Scalar> amu(const OkumuraCurves<Scalar>& curves, Scalar frequency_mhz, Scalar distance_km, RangeMode mode = RangeMode::strict)
    {
        proplab::detail::require_positive(frequency_mhz, "frequency_mhz");
        proplab::detail::require_positive(distance_km, "distance_km");
        RangeFlag flags = RangeFlag::none;
        flags |= proplab::detail::check_window(frequency_mhz, frequency_window, "frequency_mhz", "okumura", mode, RangeFlag::frequency_clamped);
        flags |= proplab::detail::check_window(distance_km, distance_window, "distance_km", "okumura", mode, RangeFlag::distance_clamped);

        const auto clamp_to = [&](Scalar x, const Window& w, const auto& grid, RangeFlag flag) {
            Scalar lo = std::max(Scalar(w.lo), grid[0]);
            Scalar hi = std::min(Scalar(w.hi), grid[grid.size() - 1]);
            if (x < grid[0] || x > grid[grid.size() - 1])
            {
                flags |= flag;
            }
            if (lo > hi)
            {
                lo = hi = (x < grid[0]) ? grid[0] : grid[grid.size() - 1];
            }
            return std::clamp(x, lo, hi);
        };
        const Scalar f = clamp_to(frequency_mhz, frequency_window, curves.frequencies_mhz, RangeFlag::frequency_clamped);
        const Scalar d = clamp_to(distance_km, distance_window, curves.distances_km, RangeFlag::distance_clamped);

        const auto [fi, tf] = detail::locate(curves.frequencies_mhz, f);
        const auto [di, td] = detail::locate(curves.distances_km, d);
        const auto& m       = curves.amu_db;
        const Eigen::Index fj = std::min<Eigen::Index>(fi + 1, m.rows() - 1);
        const Eigen::Index dj = std::min<Eigen::Index>(di + 1, m.cols() - 1);

        // (1 - t)·a + t·b is exact at both t = 0 and t = 1.
        const Scalar low_f  = (Scalar(1) - td) * m(fi, di) + td * m(fi, dj);
        const Scalar high_f = (Scalar(1) - td) * m(fj, di) + td * m(fj, dj);
        return {(Scalar(1) - tf) * low_f + tf * high_f, flags};
    }

    /// Base-station antenna height gain G(h_te) = 20·log10(h_te / 200).
    template <class Scalar>
    Flagged<Scalar> bts_height_gain(Scalar bts_height_m, RangeMode mode = RangeMode::strict)
    {
        proplab::detail::require_positive(bts_height_m, "bts_height_m");
        RangeFlag flags = proplab::detail::check_window(bts_height_m, bts_height_window, "bts_height_m", "okumura", mode,
                                                        RangeFlag::bts_height_out_of_range);
        if (flags != RangeFlag::none)
        {
            proplab::detail::check_window(bts_height_m, bts_height_permissive_window, "bts_height_m", "okumura",
                                          RangeMode::strict, RangeFlag::none);
        }
        return {Scalar(20) * std::log10(bts_height_m / Scalar(200)), flags};
    }

    /// Mobile antenna height gain G(h_re): 10·log10(h/3) up to 3 m, 20·log10(h/3) above.
    template <class Scalar>
    Flagged<Scalar> ms_height_gain(Scalar ms_height_m, RangeMode mode = RangeMode::strict)
    {
        proplab::detail::require_positive(ms_height_m, "ms_height_m");
        const RangeFlag flags = proplab::detail::check_window(ms_height_m, ms_height_window, "ms_height_m", "okumura", mode,
                                                              RangeFlag::ms_height_out_of_range);
        const Scalar ratio = ms_height_m / Scalar(3);
        const Scalar gain  = ms_height_m <= Scalar(3) ? Scalar(10) * std::log10(ratio) : Scalar(20) * std::log10(ratio);
        return {gain, flags};
    }

    /// Median path loss L_50 = L_F + A_mu(f, d) - G(h_te) - G(h_re) - G_AREA.
    template <class Scalar>
    PathLossDb<Scalar> okumura_loss(const RadioLink<Scalar>& link,
                                    Environment env,
                                    const OkumuraCurves<Scalar>& curves,
                                    RangeMode mode = RangeMode::strict)
    {
        validate(link);
        const auto attenuation = amu(curves, link.frequency_mhz, link.distance_km, mode);
        const auto g_bts       = bts_height_gain(link.bts_height_m, mode);
        const auto g_ms        = ms_height_gain(link.ms_height_m, mode);
        const Scalar free_space = free_space_loss(link).value_db;
        const Scalar loss = free_space + attenuation.value - g_bts.value - g_ms.value - curves.garea(env);
        return {loss, Model::okumura, attenuation.flags | g_bts.flags | g_ms.flags};
    }
}
