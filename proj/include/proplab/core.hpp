#pragma once

#include "proplab/errors.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace proplab
{
    //------------------//
    // Shared constants //
    //------------------//

    /// Speed of light in vacuum, m/s (exact SI value).
    template <class Scalar>
    inline constexpr Scalar speed_of_light = Scalar(299792458.0);

    enum class Model
    {
        free_space,
        log_distance,
        okumura,
        hata,
        lee
    };

    std::string_view to_string(Model model) noexcept;
    Model model_from_string(std::string_view name);

    /// Strict rejects inputs outside a model's validity window; permissive evaluates
    /// anyway and marks the result.
    enum class RangeMode
    {
        strict,
        permissive
    };

    // Permissive-mode markers. Combined as a bitmask on every result.
    enum class RangeFlag : std::uint32_t
    {
        none                     = 0,
        frequency_out_of_range   = 1u << 0,
        distance_out_of_range    = 1u << 1,
        bts_height_out_of_range  = 1u << 2,
        ms_height_out_of_range   = 1u << 3,
        frequency_clamped        = 1u << 4,
        distance_clamped         = 1u << 5,
        alpha5_exponent_endpoint = 1u << 6,
        saturated                = 1u << 7,
    };

    constexpr RangeFlag operator|(RangeFlag a, RangeFlag b) noexcept
    {
        return static_cast<RangeFlag>(static_cast<std::uint32_t>(a) | static_cast<std::uint32_t>(b));
    }

    constexpr RangeFlag& operator|=(RangeFlag& a, RangeFlag b) noexcept
    {
        return a = a | b;
    }

    constexpr bool has_flag(RangeFlag set, RangeFlag flag) noexcept
    {
        return (static_cast<std::uint32_t>(set) & static_cast<std::uint32_t>(flag)) != 0;
    }

    /// Names of the set bits, in bit order.
    std::vector<std::string> flag_names(RangeFlag flags);

    /// A value together with any permissive-mode markers raised while computing it.
    template <class Scalar>
    struct Flagged
    {
        Scalar value;
        RangeFlag flags = RangeFlag::none;
    };

    //--------------//
    // Domain types //
    //--------------//

    template <class Scalar>
    struct RadioLink
    {
        Scalar frequency_mhz;
        Scalar distance_km;
        Scalar bts_height_m;
        Scalar ms_height_m;

        RadioLink with_distance(Scalar d) const
        {
            RadioLink copy = *this;
            copy.distance_km = d;
            return copy;
        }

        RadioLink with_bts_height(Scalar h) const
        {
            RadioLink copy = *this;
            copy.bts_height_m = h;
            return copy;
        }

        RadioLink with_ms_height(Scalar h) const
        {
            RadioLink copy = *this;
            copy.ms_height_m = h;
            return copy;
        }
    };

    using RadioLinkd = RadioLink<double>;

    template <class Scalar>
    struct PathLossDb
    {
        Scalar value_db;
        Model model;
        RangeFlag flags = RangeFlag::none;
    };

    using PathLossDbd = PathLossDb<double>;

    template <class Scalar>
    struct LogDistanceParams
    {
        Scalar exponent            = Scalar(2);
        Scalar reference_distance_km = Scalar(1);
    };

    //------------------//
    // Validity windows //
    //------------------//

    /// Closed or half-open interval a model accepts for one parameter.
    struct Window
    {
        double lo;
        double hi;
        bool lo_open = false;
        bool hi_open = false;

        template <class Scalar>
        bool contains(Scalar x) const noexcept
        {
            const double v = static_cast<double>(x);
            const bool above = lo_open ? v > lo : v >= lo;
            const bool below = hi_open ? v < hi : v <= hi;
            return above && below;
        }

        std::string describe() const;
    };

    namespace detail
    {
        std::string format_number(double value);

        template <class Scalar>
        void require_positive(Scalar value, std::string_view name)
        {
            if (!(value > Scalar(0)) || !std::isfinite(static_cast<double>(value)))
            {
                std::ostringstream msg;
                msg << name << " must be positive and finite, got " << format_number(static_cast<double>(value));
                throw DomainError(msg.str());
            }
        }

        /// Strict: throws RangeError naming the parameter. Permissive: returns `flag` when outside.
        template <class Scalar>
        RangeFlag check_window(Scalar value,
                               const Window& window,
                               std::string_view parameter,
                               std::string_view model,
                               RangeMode mode,
                               RangeFlag flag)
        {
            if (window.contains(value))
            {
                return RangeFlag::none;
            }
            if (mode == RangeMode::permissive)
            {
                return flag;
            }
            std::ostringstream msg;
            msg << model << ": " << parameter << " = " << format_number(static_cast<double>(value))
                << " is outside the validity range " << window.describe();
            throw RangeError(std::string(parameter), msg.str());
        }
    }

    template <class Scalar>
    void validate(const RadioLink<Scalar>& link)
    {
        detail::require_positive(link.frequency_mhz, "frequency_mhz");
        detail::require_positive(link.distance_km, "distance_km");
        detail::require_positive(link.bts_height_m, "bts_height_m");
        detail::require_positive(link.ms_height_m, "ms_height_m");
    }

    //----------------------//
    // Analytic baselines   //
    //----------------------//

    /// Free-space loss 20·log10(4πd/λ). Only frequency and distance enter.
    template <class Scalar>
    PathLossDb<Scalar> free_space_loss(const RadioLink<Scalar>& link)
    {
        detail::require_positive(link.frequency_mhz, "frequency_mhz");
        detail::require_positive(link.distance_km, "distance_km");
        const Scalar wavelength_m = speed_of_light<Scalar> / (link.frequency_mhz * Scalar(1e6));
        const Scalar distance_m   = link.distance_km * Scalar(1000);
        const Scalar loss = Scalar(20) * std::log10(Scalar(4) * std::numbers::pi_v<Scalar> * distance_m / wavelength_m);
        return {loss, Model::free_space};
    }

    template <class Scalar>
    void validate(const LogDistanceParams<Scalar>& params)
    {
        detail::require_positive(params.exponent, "exponent");
        detail::require_positive(params.reference_distance_km, "reference_distance_km");
    }

    template <class Scalar>
    PathLossDb<Scalar> log_distance_loss(const RadioLink<Scalar>& link,
                                         const LogDistanceParams<Scalar>& params,
                                         const PathLossDb<Scalar>& reference_loss)
    {
        validate(params);
        detail::require_positive(link.distance_km, "distance_km");
        if (link.distance_km < params.reference_distance_km)
        {
            std::ostringstream msg;
            msg << "log-distance: distance_km = " << detail::format_number(static_cast<double>(link.distance_km))
                << " is below the reference distance "
                << detail::format_number(static_cast<double>(params.reference_distance_km)) << " km";
            throw DomainError(msg.str());
        }
        const Scalar loss = reference_loss.value_db
                          + Scalar(10) * params.exponent * std::log10(link.distance_km / params.reference_distance_km);
        return {loss, Model::log_distance, reference_loss.flags};
    }

    /// Free-space loss evaluated at the reference distance.
    template <class Scalar>
    PathLossDb<Scalar> default_reference_loss(const RadioLink<Scalar>& link, const LogDistanceParams<Scalar>& params)
    {
        validate(params);
        return free_space_loss(link.with_distance(params.reference_distance_km));
    }
}
