#pragma once

#include "proplab/core.hpp"

#include <limits>

namespace proplab::hata
{
    // Large-city urban scope. Distance has no printed upper limit.
    inline const Window frequency_window{150.0, 1500.0};
    inline const Window bts_height_window{30.0, 200.0};
    inline const Window ms_height_window{1.0, 10.0};
    inline const Window distance_window{1.0, std::numeric_limits<double>::infinity()};

    /// Large-city mobile antenna correction a(h_re).
    ///
    /// 8.29·(log10 1.54h)² - 1.1 below 300 MHz, 3.2·(log10 11.75h)² - 4.97 from 300 MHz
    /// up. The two branches do not meet at 300 MHz; the upper branch owns the boundary.
    template <class Scalar>
    Flagged<Scalar> mobile_correction(Scalar ms_height_m, Scalar frequency_mhz, RangeMode mode = RangeMode::strict)
    {
        proplab::detail::require_positive(ms_height_m, "ms_height_m");
        proplab::detail::require_positive(frequency_mhz, "frequency_mhz");
        RangeFlag flags = RangeFlag::none;
        flags |= proplab::detail::check_window(ms_height_m, ms_height_window, "ms_height_m", "hata", mode, RangeFlag::ms_height_out_of_range);
        flags |= proplab::detail::check_window(frequency_mhz, frequency_window, "frequency_mhz", "hata", mode, RangeFlag::frequency_out_of_range);

        if (frequency_mhz >= Scalar(300))
        {
            const Scalar l = std::log10(Scalar(11.75) * ms_height_m);
            return {Scalar(3.2) * l * l - Scalar(4.97), flags};
        }
        const Scalar l = std::log10(Scalar(1.54) * ms_height_m);
        return {Scalar(8.29) * l * l - Scalar(1.1), flags};
    }

    /// Slope of the distance term in dB per decade of distance.
    template <class Scalar>
    Scalar distance_slope_db_per_decade(Scalar bts_height_m)
    {
        return Scalar(44.9) - Scalar(6.55) * std::log10(bts_height_m);
    }

    /// Urban median path loss.
    template <class Scalar>
    PathLossDb<Scalar> hata_loss(const RadioLink<Scalar>& link, RangeMode mode = RangeMode::strict)
    {
        validate(link);
        RangeFlag flags = RangeFlag::none;
        flags |= proplab::detail::check_window(link.bts_height_m, bts_height_window, "bts_height_m", "hata", mode,
                                               RangeFlag::bts_height_out_of_range);
        flags |= proplab::detail::check_window(link.distance_km, distance_window, "distance_km", "hata", mode,
                                               RangeFlag::distance_out_of_range);
        const auto correction = mobile_correction(link.ms_height_m, link.frequency_mhz, mode);
        flags |= correction.flags;

        const Scalar log_f = std::log10(link.frequency_mhz);
        const Scalar log_h = std::log10(link.bts_height_m);
        const Scalar log_d = std::log10(link.distance_km);
        const Scalar loss  = Scalar(69.55) + Scalar(26.16) * log_f - Scalar(13.82) * log_h - correction.value
                          + distance_slope_db_per_decade(link.bts_height_m) * log_d;
        return {loss, Model::hata, flags};
    }
}
