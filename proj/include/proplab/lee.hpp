#pragma once

#include "proplab/core.hpp"

#include <optional>

namespace proplab::lee
{
    /// How the BTS gain correction treats the nominal 6 dB antenna.
    enum class GainMode
    {
        /// The nominal gain is exactly the factor 4 of the Lee reference, so
        /// α4 = 10^((G_b - G_nominal)/10) and the nominal scenario is uncorrected.
        nominal_exact,
        /// α4 = 10^(G_b/10) / 4 evaluated literally (6 dB gives 0.995).
        literal
    };

    /// Calibration constants of the Lee reference measurement.
    template <class Scalar>
    struct LeeParameters
    {
        Scalar nominal_distance_km   = Scalar(1.6);
        Scalar nominal_bts_height_m  = Scalar(30.48);
        Scalar nominal_ms_height_m   = Scalar(3);
        Scalar nominal_tx_power_w    = Scalar(10);
        Scalar nominal_bts_gain_db   = Scalar(6);
        // Carried for completeness; no correction factor uses it.
        Scalar nominal_ms_gain_db    = Scalar(0);
        Scalar nominal_frequency_mhz = Scalar(900);
        Scalar slope_db_per_decade   = Scalar(30.5);
        Scalar intercept_db          = Scalar(124);
        int k_exponent               = 3;
        Scalar alpha5_exponent       = Scalar(2);
        GainMode gain_mode           = GainMode::nominal_exact;
    };

    using LeeParametersd = LeeParameters<double>;

    template <class Scalar>
    struct LeeScenario
    {
        RadioLink<Scalar> link;
        Scalar tx_power_w  = Scalar(10);
        Scalar bts_gain_db = Scalar(6);
        /// Overrides LeeParameters::k_exponent when set (2 suburban/open or below 450 MHz, 3 urban above).
        std::optional<int> environment_k;
    };

    using LeeScenariod = LeeScenario<double>;

    template <class Scalar>
    struct AlphaFactors
    {
        Scalar bts_height;
        Scalar ms_height;
        Scalar tx_power;
        Scalar bts_gain;
        Scalar frequency;
        RangeFlag flags = RangeFlag::none;

        Scalar product() const
        {
            return bts_height * ms_height * tx_power * bts_gain * frequency;
        }

        /// α0 in dB.
        Scalar correction_db() const
        {
            return Scalar(10) * std::log10(product());
        }
    };

    template <class Scalar>
    void validate(const LeeParameters<Scalar>& p)
    {
        proplab::detail::require_positive(p.nominal_distance_km, "nominal_distance_km");
        proplab::detail::require_positive(p.nominal_bts_height_m, "nominal_bts_height_m");
        proplab::detail::require_positive(p.nominal_ms_height_m, "nominal_ms_height_m");
        proplab::detail::require_positive(p.nominal_tx_power_w, "nominal_tx_power_w");
        proplab::detail::require_positive(p.nominal_bts_gain_db, "nominal_bts_gain_db");
        proplab::detail::require_positive(p.nominal_frequency_mhz, "nominal_frequency_mhz");
        if (p.k_exponent != 2 && p.k_exponent != 3)
        {
            throw DomainError("lee: k must be 2 or 3, got " + std::to_string(p.k_exponent));
        }
        if (!(p.alpha5_exponent >= Scalar(2) && p.alpha5_exponent <= Scalar(3)))
        {
            throw DomainError("lee: alpha5 exponent n must lie in [2, 3], got "
                              + proplab::detail::format_number(static_cast<double>(p.alpha5_exponent)));
        }
    }

    template <class Scalar>
    AlphaFactors<Scalar> alpha_factors(const LeeScenario<Scalar>& scenario, const LeeParameters<Scalar>& params)
    {
        validate(params);
        validate(scenario.link);
        proplab::detail::require_positive(scenario.tx_power_w, "tx_power_w");
        if (!std::isfinite(static_cast<double>(scenario.bts_gain_db)))
        {
            throw DomainError("lee: bts_gain_db must be finite");
        }
        const auto& link = scenario.link;

        AlphaFactors<Scalar> a;
        const Scalar height_ratio = link.bts_height_m / params.nominal_bts_height_m;
        a.bts_height = height_ratio * height_ratio;

        // v = 1 at and below the nominal height, 2 above; both give 1 at the nominal height.
        const Scalar ms_ratio = link.ms_height_m / params.nominal_ms_height_m;
        a.ms_height = link.ms_height_m > params.nominal_ms_height_m ? ms_ratio * ms_ratio : ms_ratio;

        const Scalar power_ratio = scenario.tx_power_w / params.nominal_tx_power_w;
        a.tx_power = power_ratio * power_ratio;

        if (params.gain_mode == GainMode::nominal_exact)
        {
            a.bts_gain = std::pow(Scalar(10), (scenario.bts_gain_db - params.nominal_bts_gain_db) / Scalar(10));
        }
        else
        {
            a.bts_gain = std::pow(Scalar(10), scenario.bts_gain_db / Scalar(10)) / Scalar(4);
        }

        const Scalar freq_ratio = link.frequency_mhz / params.nominal_frequency_mhz;
        a.frequency = std::pow(freq_ratio, -params.alpha5_exponent);

        // The exponent only matters away from the nominal frequency.
        const bool endpoint = params.alpha5_exponent == Scalar(2) || params.alpha5_exponent == Scalar(3);
        if (endpoint && freq_ratio != Scalar(1))
        {
            a.flags |= RangeFlag::alpha5_exponent_endpoint;
        }
        return a;
    }

    /// 124 + 30.5·log10(d/d0) + 10k·log10(f/fc) - α0, reported as a loss in dB.
    ///
    /// The frequency appears both in the 10k term and in α5; off-nominal frequencies
    /// therefore get both adjustments.
    template <class Scalar>
    PathLossDb<Scalar> lee_loss(const LeeScenario<Scalar>& scenario, const LeeParameters<Scalar>& params = {})
    {
        const auto alphas = alpha_factors(scenario, params);
        const auto& link  = scenario.link;
        const int k       = scenario.environment_k.value_or(params.k_exponent);
        if (k != 2 && k != 3)
        {
            throw DomainError("lee: k must be 2 or 3, got " + std::to_string(k));
        }
        const Scalar loss = params.intercept_db
                          + params.slope_db_per_decade * std::log10(link.distance_km / params.nominal_distance_km)
                          + Scalar(10 * k) * std::log10(link.frequency_mhz / params.nominal_frequency_mhz)
                          - alphas.correction_db();
        return {loss, Model::lee, alphas.flags};
    }

    /// The all-nominal scenario at distance d.
    template <class Scalar>
    LeeScenario<Scalar> nominal_scenario(const LeeParameters<Scalar>& params, Scalar distance_km)
    {
        LeeScenario<Scalar> s;
        s.link        = {params.nominal_frequency_mhz, distance_km, params.nominal_bts_height_m, params.nominal_ms_height_m};
        s.tx_power_w  = params.nominal_tx_power_w;
        s.bts_gain_db = params.nominal_bts_gain_db;
        return s;
    }

    /// The all-nominal scenario at the calibration distance.
    template <class Scalar>
    LeeScenario<Scalar> nominal_scenario(const LeeParameters<Scalar>& params)
    {
        return nominal_scenario(params, params.nominal_distance_km);
    }
}
