#include "proplab/core.hpp"

#include <array>
#include <charconv>

namespace proplab
{
    std::string_view to_string(Model model) noexcept
    {
        switch (model)
        {
            case Model::free_space:
                return "free-space";
            case Model::log_distance:
                return "log-distance";
            case Model::okumura:
                return "okumura";
            case Model::hata:
                return "hata";
            case Model::lee:
                return "lee";
        }
        return "unknown";
    }

    Model model_from_string(std::string_view name)
    {
        for (auto m : {Model::free_space, Model::log_distance, Model::okumura, Model::hata, Model::lee})
        {
            if (to_string(m) == name)
            {
                return m;
            }
        }
        throw ValidationError("unknown model '" + std::string(name) + "'");
    }

    std::vector<std::string> flag_names(RangeFlag flags)
    {
        static constexpr std::array<std::pair<RangeFlag, std::string_view>, 8> names{{
            {RangeFlag::frequency_out_of_range, "frequency_out_of_range"},
            {RangeFlag::distance_out_of_range, "distance_out_of_range"},
            {RangeFlag::bts_height_out_of_range, "bts_height_out_of_range"},
            {RangeFlag::ms_height_out_of_range, "ms_height_out_of_range"},
            {RangeFlag::frequency_clamped, "frequency_clamped"},
            {RangeFlag::distance_clamped, "distance_clamped"},
            {RangeFlag::alpha5_exponent_endpoint, "alpha5_exponent_endpoint"},
            {RangeFlag::saturated, "saturated"},
        }};
        std::vector<std::string> out;
        for (const auto& [flag, name] : names)
        {
            if (has_flag(flags, flag))
            {
                out.emplace_back(name);
            }
        }
        return out;
    }

    std::string Window::describe() const
    {
        std::string s;
        s += lo_open ? "(" : "[";
        s += detail::format_number(lo);
        s += ", ";
        s += std::isinf(hi) ? std::string("inf") : detail::format_number(hi);
        s += hi_open || std::isinf(hi) ? ")" : "]";
        return s;
    }

    namespace detail
    {
        // Shortest representation that round-trips.
        std::string format_number(double value)
        {
            std::array<char, 64> buf{};
            auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
            if (ec != std::errc{})
            {
                return "?";
            }
            return std::string(buf.data(), end);
        }
    }
}
