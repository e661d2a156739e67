#include "proplab/okumura.hpp"

#include "okumura_default_table.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace proplab::okumura
{
    std::string_view to_string(Environment env) noexcept
    {
        switch (env)
        {
            case Environment::open:
                return "open";
            case Environment::suburban:
                return "suburban";
            case Environment::urban:
                return "urban";
        }
        return "unknown";
    }

    Environment environment_from_string(std::string_view name)
    {
        for (auto env : all_environments)
        {
            if (to_string(env) == name)
            {
                return env;
            }
        }
        throw ValidationError("unknown environment '" + std::string(name) + "' (expected open, suburban or urban)");
    }

    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
            {
                return {};
            }
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split_fields(std::string_view line)
        {
            std::vector<std::string_view> fields;
            std::size_t start = 0;
            while (true)
            {
                const auto comma = line.find(',', start);
                fields.push_back(trim(line.substr(start, comma - start)));
                if (comma == std::string_view::npos)
                {
                    break;
                }
                start = comma + 1;
            }
            return fields;
        }

        double parse_number(std::string_view field, std::size_t line_no)
        {
            double value = 0.0;
            const auto* first = field.data();
            const auto* last  = field.data() + field.size();
            if (!field.empty() && *first == '+')
            {
                ++first;
            }
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (field.empty() || ec != std::errc{} || ptr != last)
            {
                throw ParseError(line_no, "expected a number, got '" + std::string(field) + "'");
            }
            return value;
        }
    }

    OkumuraCurvesd load_curves(std::string_view source)
    {
        std::vector<double> distances;
        std::vector<double> frequencies;
        std::vector<std::vector<double>> rows;
        std::array<std::optional<double>, 3> garea;
        bool seen_header = false;
        bool in_garea    = false;

        std::size_t line_no = 0;
        std::size_t pos     = 0;
        while (pos <= source.size())
        {
            const auto nl          = source.find('\n', pos);
            const std::string_view raw = source.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
            ++line_no;

            const auto line = trim(raw);
            if (line.empty() || line.front() == '#')
            {
                continue;
            }
            const auto fields = split_fields(line);
            if (!seen_header)
            {
                if (fields[0] != "amu")
                {
                    throw ParseError(line_no, "expected header row starting with 'amu'");
                }
                for (std::size_t i = 1; i < fields.size(); ++i)
                {
                    distances.push_back(parse_number(fields[i], line_no));
                }
                seen_header = true;
                continue;
            }
            if (fields[0] == "garea")
            {
                in_garea = true;
                if (fields.size() != 3)
                {
                    throw ParseError(line_no, "garea row must be 'garea,<class>,<value_db>'");
                }
                Environment env;
                try
                {
                    env = environment_from_string(fields[1]);
                }
                catch (const ValidationError& e)
                {
                    throw ParseError(line_no, e.what());
                }
                auto& slot = garea[static_cast<std::size_t>(env)];
                if (slot)
                {
                    throw ParseError(line_no, "duplicate garea row for '" + std::string(fields[1]) + "'");
                }
                slot = parse_number(fields[2], line_no);
                continue;
            }
            if (in_garea)
            {
                throw ParseError(line_no, "A_mu rows must precede garea rows");
            }
            if (fields.size() != distances.size() + 1)
            {
                throw ParseError(line_no, "expected " + std::to_string(distances.size() + 1) + " fields, got "
                                              + std::to_string(fields.size()));
            }
            frequencies.push_back(parse_number(fields[0], line_no));
            std::vector<double> row;
            for (std::size_t i = 1; i < fields.size(); ++i)
            {
                row.push_back(parse_number(fields[i], line_no));
            }
            rows.push_back(std::move(row));
        }

        if (!seen_header)
        {
            throw ParseError(line_no, "missing 'amu' header row");
        }

        OkumuraCurvesd curves;
        curves.distances_km    = Eigen::Map<const Eigen::VectorXd>(distances.data(), static_cast<Eigen::Index>(distances.size()));
        curves.frequencies_mhz = Eigen::Map<const Eigen::VectorXd>(frequencies.data(), static_cast<Eigen::Index>(frequencies.size()));
        curves.amu_db.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(distances.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
        {
            for (std::size_t c = 0; c < rows[r].size(); ++c)
            {
                curves.amu_db(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
            }
        }
        for (auto env : all_environments)
        {
            const auto& slot = garea[static_cast<std::size_t>(env)];
            if (!slot)
            {
                throw ValidationError("missing garea row for '" + std::string(to_string(env)) + "'");
            }
            curves.garea_db[static_cast<std::size_t>(env)] = *slot;
        }
        validate(curves);
        return curves;
    }

    OkumuraCurvesd load_curves_file(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
        {
            throw Error("cannot open curve file '" + path + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return load_curves(buf.str());
    }

    std::string serialize_curves(const OkumuraCurvesd& curves)
    {
        using proplab::detail::format_number;
        std::string out = "amu";
        for (Eigen::Index c = 0; c < curves.distances_km.size(); ++c)
        {
            out += ',' + format_number(curves.distances_km[c]);
        }
        out += '\n';
        for (Eigen::Index r = 0; r < curves.frequencies_mhz.size(); ++r)
        {
            out += format_number(curves.frequencies_mhz[r]);
            for (Eigen::Index c = 0; c < curves.amu_db.cols(); ++c)
            {
                out += ',' + format_number(curves.amu_db(r, c));
            }
            out += '\n';
        }
        for (auto env : all_environments)
        {
            out += "garea,";
            out += to_string(env);
            out += ',' + format_number(curves.garea(env)) + '\n';
        }
        return out;
    }

    std::string_view default_curves_source()
    {
        return embedded::okumura_curves_csv;
    }

    const OkumuraCurvesd& default_curves()
    {
        static const OkumuraCurvesd curves = load_curves(default_curves_source());
        return curves;
    }
}
