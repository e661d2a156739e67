#include "cli.hpp"

#include "proplab/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace proplab::cli
{
    namespace
    {
        using nlohmann::json;
        using proplab::detail::format_number;
        using sweep::ModelOptions;

        class UsageError : public Error
        {
        public:
            using Error::Error;
        };

        constexpr const char* curves_env_var = "PROPLAB_CURVES";

        std::string fixed2(double value)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.2f", value);
            return buf;
        }

        double parse_double(const std::string& text, std::string_view flag)
        {
            double value = 0.0;
            const char* first = text.data();
            const char* last  = text.data() + text.size();
            if (first != last && *first == '+')
            {
                ++first;
            }
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (text.empty() || ec != std::errc{} || ptr != last)
            {
                throw UsageError(std::string(flag) + " expects a number, got '" + text + "'");
            }
            return value;
        }

        std::optional<double> optional_double(const std::string& text, std::string_view flag)
        {
            if (text.empty())
            {
                return std::nullopt;
            }
            return parse_double(text, flag);
        }

        std::string flag_for(const std::string& parameter)
        {
            static const std::map<std::string, std::string> flags{
                {"frequency_mhz", "--freq-mhz"},
                {"distance_km", "--distance-km"},
                {"bts_height_m", "--bts-height-m"},
                {"ms_height_m", "--ms-height-m"},
            };
            const auto it = flags.find(parameter);
            return it == flags.end() ? parameter : it->second;
        }

        //----------------//
        // Scenario flags //
        //----------------//

        struct ScenarioFlags
        {
            std::string freq_mhz;
            std::string distance_km;
            std::string bts_height_m;
            std::string ms_height_m;
            std::string environment;
            std::string tx_power_w;
            std::string bts_gain_db;
            std::string lee_k;
            std::string lee_n;
            std::string lee_gain_mode;
            bool permissive = false;
            std::string curves_path;
            std::string format = "csv";
        };

        void add_scenario_flags(CLI::App* cmd, ScenarioFlags& f, bool with_distance)
        {
            cmd->add_option("--freq-mhz", f.freq_mhz, "Carrier frequency in MHz");
            if (with_distance)
            {
                cmd->add_option("--distance-km", f.distance_km, "Transmitter-receiver distance in km");
            }
            cmd->add_option("--bts-height-m", f.bts_height_m, "Base-station antenna height in m");
            cmd->add_option("--ms-height-m", f.ms_height_m, "Mobile antenna height in m");
            cmd->add_option("--env", f.environment, "Okumura environment: open, suburban or urban");
            cmd->add_option("--tx-power-w", f.tx_power_w, "Lee: base-station transmit power in W");
            cmd->add_option("--bts-gain-db", f.bts_gain_db, "Lee: base-station antenna gain in dB");
            cmd->add_option("--lee-k", f.lee_k, "Lee: frequency exponent k (2 or 3)");
            cmd->add_option("--lee-n", f.lee_n, "Lee: alpha5 exponent n in [2, 3]");
            cmd->add_option("--lee-gain-mode", f.lee_gain_mode, "Lee: alpha4 mode, nominal-exact or literal");
            cmd->add_flag("--permissive", f.permissive, "Evaluate outside validity ranges and flag the result");
            cmd->add_option("--curves", f.curves_path, "Okumura curve file (overrides $PROPLAB_CURVES)");
            cmd->add_option("--format", f.format, "Output format: csv or json");
        }

        ModelOptions apply_options(const ScenarioFlags& f, ModelOptions options)
        {
            if (!f.environment.empty())
            {
                options.environment = okumura::environment_from_string(f.environment);
            }
            if (auto v = optional_double(f.tx_power_w, "--tx-power-w"))
            {
                options.lee_overrides.tx_power_w = *v;
            }
            if (auto v = optional_double(f.bts_gain_db, "--bts-gain-db"))
            {
                options.lee_overrides.bts_gain_db = *v;
            }
            if (!f.lee_k.empty())
            {
                const double k = parse_double(f.lee_k, "--lee-k");
                if (k != 2.0 && k != 3.0)
                {
                    throw UsageError("--lee-k must be 2 or 3");
                }
                options.lee_overrides.k = static_cast<int>(k);
            }
            if (auto v = optional_double(f.lee_n, "--lee-n"))
            {
                options.lee.alpha5_exponent = *v;
            }
            if (!f.lee_gain_mode.empty())
            {
                if (f.lee_gain_mode == "nominal-exact")
                {
                    options.lee.gain_mode = lee::GainMode::nominal_exact;
                }
                else if (f.lee_gain_mode == "literal")
                {
                    options.lee.gain_mode = lee::GainMode::literal;
                }
                else
                {
                    throw UsageError("--lee-gain-mode expects nominal-exact or literal");
                }
            }
            if (f.permissive)
            {
                options.mode = RangeMode::permissive;
            }
            return options;
        }

        struct PartialLink
        {
            std::optional<double> frequency_mhz;
            std::optional<double> distance_km;
            std::optional<double> bts_height_m;
            std::optional<double> ms_height_m;
        };

        PartialLink apply_link(const ScenarioFlags& f, PartialLink link)
        {
            if (auto v = optional_double(f.freq_mhz, "--freq-mhz"))
            {
                link.frequency_mhz = *v;
            }
            if (auto v = optional_double(f.distance_km, "--distance-km"))
            {
                link.distance_km = *v;
            }
            if (auto v = optional_double(f.bts_height_m, "--bts-height-m"))
            {
                link.bts_height_m = *v;
            }
            if (auto v = optional_double(f.ms_height_m, "--ms-height-m"))
            {
                link.ms_height_m = *v;
            }
            return link;
        }

        RadioLinkd complete(const PartialLink& p, bool need_distance)
        {
            const auto need = [](const std::optional<double>& v, const char* flag) {
                if (!v)
                {
                    throw UsageError(std::string("missing ") + flag + " (or use --preset)");
                }
                return *v;
            };
            RadioLinkd link;
            link.frequency_mhz = need(p.frequency_mhz, "--freq-mhz");
            link.distance_km   = need_distance ? need(p.distance_km, "--distance-km") : 1.0;
            link.bts_height_m  = need(p.bts_height_m, "--bts-height-m");
            link.ms_height_m   = need(p.ms_height_m, "--ms-height-m");
            return link;
        }

        // Strict-mode window checks on whatever parameters were supplied, so an
        // out-of-range value is reported even when the scenario is incomplete.
        void precheck_ranges(Model model, const PartialLink& p, RangeMode mode)
        {
            if (mode == RangeMode::permissive || (model != Model::okumura && model != Model::hata))
            {
                return;
            }
            const auto name = to_string(model);
            if (p.frequency_mhz)
            {
                const Window& w = model == Model::okumura ? okumura::frequency_window : hata::frequency_window;
                proplab::detail::check_window(*p.frequency_mhz, w, "frequency_mhz", name, mode, RangeFlag::none);
            }
            const std::pair<const std::optional<double>&, sweep::Axis> axes[] = {
                {p.distance_km, sweep::Axis::distance},
                {p.bts_height_m, sweep::Axis::bts_height},
                {p.ms_height_m, sweep::Axis::ms_height},
            };
            for (const auto& [value, axis] : axes)
            {
                if (value)
                {
                    proplab::detail::check_window(*value, sweep::validity_window(model, axis), sweep::column_name(axis),
                                                  name, mode, RangeFlag::none);
                }
            }
        }

        okumura::OkumuraCurvesd active_curves(const std::string& path)
        {
            if (!path.empty())
            {
                return okumura::load_curves_file(path);
            }
            if (const char* env = std::getenv(curves_env_var); env != nullptr && *env != '\0')
            {
                return okumura::load_curves_file(env);
            }
            return okumura::default_curves();
        }

        std::vector<Model> parse_models(const std::vector<std::string>& names, bool allow_free_space)
        {
            std::vector<Model> models;
            const auto add = [&](Model m) {
                if (std::find(models.begin(), models.end(), m) == models.end())
                {
                    models.push_back(m);
                }
            };
            for (const auto& name : names)
            {
                if (name == "all")
                {
                    for (Model m : sweep::empirical_models)
                    {
                        add(m);
                    }
                    continue;
                }
                Model m;
                try
                {
                    m = model_from_string(name);
                }
                catch (const ValidationError&)
                {
                    throw UsageError("--model: unknown model '" + name + "' (expected okumura, hata, lee"
                                     + std::string(allow_free_space ? ", free-space" : "") + " or all)");
                }
                if (m == Model::log_distance || (m == Model::free_space && !allow_free_space))
                {
                    throw UsageError("--model: '" + name + "' is not supported by this command");
                }
                add(m);
            }
            if (models.empty())
            {
                throw UsageError("--model is required");
            }
            return models;
        }

        //---------//
        // Records //
        //---------//

        struct Record
        {
            Model model;
            RadioLinkd link;
            ModelOptions options;
            double value_db;
            RangeFlag flags;
            std::optional<double> max_loss_db;
        };

        std::string_view gain_mode_name(lee::GainMode mode)
        {
            return mode == lee::GainMode::literal ? "literal" : "nominal-exact";
        }

        json record_json(const Record& r)
        {
            const auto scenario = sweep::lee_scenario(r.link, r.options);
            json j;
            j["model"]         = std::string(to_string(r.model));
            j["frequency_mhz"] = r.link.frequency_mhz;
            j["distance_km"]   = r.link.distance_km;
            j["bts_height_m"]  = r.link.bts_height_m;
            j["ms_height_m"]   = r.link.ms_height_m;
            j["environment"]   = std::string(okumura::to_string(r.options.environment));
            j["tx_power_w"]    = scenario.tx_power_w;
            j["bts_gain_db"]   = scenario.bts_gain_db;
            j["lee_k"]         = scenario.environment_k.value_or(r.options.lee.k_exponent);
            j["lee_n"]         = r.options.lee.alpha5_exponent;
            j["lee_gain_mode"] = std::string(gain_mode_name(r.options.lee.gain_mode));
            j["mode"]          = r.options.mode == RangeMode::strict ? "strict" : "permissive";
            if (r.max_loss_db)
            {
                j["max_loss_db"] = *r.max_loss_db;
                j["radius_km"]   = r.link.distance_km;
            }
            j["value_db"] = r.value_db;
            j["flags"]    = flag_names(r.flags);
            return j;
        }

        std::string csv_header(bool radius)
        {
            std::string h = "schema_version,model,frequency_mhz,distance_km,bts_height_m,ms_height_m,environment,"
                            "tx_power_w,bts_gain_db,lee_k,lee_n,lee_gain_mode,mode,";
            if (radius)
            {
                h += "max_loss_db,radius_km,";
            }
            return h + "value_db,flags\n";
        }

        std::string join_flags(RangeFlag flags)
        {
            std::string s;
            for (const auto& name : flag_names(flags))
            {
                s += (s.empty() ? "" : ";") + name;
            }
            return s;
        }

        std::string record_csv(const Record& r)
        {
            const auto scenario = sweep::lee_scenario(r.link, r.options);
            std::string row = std::to_string(schema_version);
            row += ',' + std::string(to_string(r.model));
            row += ',' + format_number(r.link.frequency_mhz);
            row += ',' + format_number(r.link.distance_km);
            row += ',' + format_number(r.link.bts_height_m);
            row += ',' + format_number(r.link.ms_height_m);
            row += ',' + std::string(okumura::to_string(r.options.environment));
            row += ',' + format_number(scenario.tx_power_w);
            row += ',' + format_number(scenario.bts_gain_db);
            row += ',' + std::to_string(scenario.environment_k.value_or(r.options.lee.k_exponent));
            row += ',' + format_number(r.options.lee.alpha5_exponent);
            row += ',' + std::string(gain_mode_name(r.options.lee.gain_mode));
            row += r.options.mode == RangeMode::strict ? ",strict" : ",permissive";
            if (r.max_loss_db)
            {
                row += ',' + format_number(*r.max_loss_db);
                row += ',' + fixed2(r.link.distance_km);
            }
            row += ',' + fixed2(r.value_db);
            row += ',' + join_flags(r.flags);
            return row + '\n';
        }

        void write_records(std::ostream& out, const std::vector<Record>& records, const std::string& format, bool radius)
        {
            if (format == "json")
            {
                json doc;
                doc["schema_version"] = schema_version;
                doc["records"]        = json::array();
                for (const auto& r : records)
                {
                    doc["records"].push_back(record_json(r));
                }
                out << doc.dump(2) << '\n';
                return;
            }
            out << csv_header(radius);
            for (const auto& r : records)
            {
                out << record_csv(r);
            }
        }

        void check_format(const std::string& format)
        {
            if (format != "csv" && format != "json")
            {
                throw UsageError("--format expects csv or json, got '" + format + "'");
            }
        }

        bool uses_okumura(const std::vector<Model>& models)
        {
            return std::find(models.begin(), models.end(), Model::okumura) != models.end();
        }

        //----------//
        // Commands //
        //----------//

        struct ComputeArgs
        {
            ScenarioFlags scenario;
            std::vector<std::string> models;
            std::string preset;
        };

        std::pair<PartialLink, ModelOptions> link_preset(const std::string& preset)
        {
            if (preset.empty())
            {
                return {};
            }
            if (preset == "nominal")
            {
                const lee::LeeParametersd p;
                return {PartialLink{p.nominal_frequency_mhz, p.nominal_distance_km, p.nominal_bts_height_m, p.nominal_ms_height_m},
                        ModelOptions{}};
            }
            if (preset == "paper")
            {
                const auto s = sweep::paper_scenario();
                return {PartialLink{s.frequency_mhz, s.distance_km, s.bts_height_m, s.ms_height_m}, sweep::paper_options()};
            }
            throw UsageError("--preset expects nominal or paper, got '" + preset + "'");
        }

        int cmd_compute(const ComputeArgs& a, std::ostream& out)
        {
            check_format(a.scenario.format);
            const auto models            = parse_models(a.models, true);
            auto [partial, base_options] = link_preset(a.preset);
            partial                      = apply_link(a.scenario, partial);
            const auto options           = apply_options(a.scenario, base_options);
            for (Model m : models)
            {
                precheck_ranges(m, partial, options.mode);
            }
            const RadioLinkd link = complete(partial, true);
            const auto curves     = uses_okumura(models) ? active_curves(a.scenario.curves_path) : okumura::OkumuraCurvesd{};

            std::vector<Record> records;
            for (Model m : models)
            {
                const auto loss = sweep::evaluate(m, link, curves, options);
                records.push_back({m, link, options, loss.value_db, loss.flags, std::nullopt});
            }
            write_records(out, records, a.scenario.format, false);
            return exit_ok;
        }

        struct SweepArgs
        {
            ScenarioFlags scenario;
            std::string vary;
            std::string from;
            std::string to;
            std::string steps;
            std::string spacing;
            std::vector<std::string> models;
            std::string preset;
            bool check_ordering = false;
            std::string output;
        };

        void write_sweep_csv(std::ostream& out, const sweep::SweepResult& result)
        {
            out << sweep::column_name(result.vary);
            for (Model m : result.models)
            {
                out << ',' << to_string(m);
            }
            out << '\n';
            for (Eigen::Index p = 0; p < result.axis.size(); ++p)
            {
                out << format_number(result.axis[p]);
                for (Eigen::Index c = 0; c < result.loss_db.cols(); ++c)
                {
                    out << ',' << fixed2(result.loss_db(p, c));
                }
                out << '\n';
            }
        }

        void write_sweep_json(std::ostream& out, const sweep::SweepResult& result, const ModelOptions& options)
        {
            json doc;
            doc["schema_version"] = schema_version;
            doc["vary"]           = std::string(sweep::column_name(result.vary));
            doc["records"]        = json::array();
            for (Eigen::Index p = 0; p < result.axis.size(); ++p)
            {
                for (Eigen::Index c = 0; c < result.loss_db.cols(); ++c)
                {
                    const Record r{result.models[static_cast<std::size_t>(c)], result.link_at(p), options,
                                   result.loss_db(p, c), result.flags_at(p, c), std::nullopt};
                    doc["records"].push_back(record_json(r));
                }
            }
            out << doc.dump(2) << '\n';
        }

        int cmd_sweep(const SweepArgs& a, std::ostream& out)
        {
            check_format(a.scenario.format);
            sweep::SweepSpec spec;
            std::vector<Model> claim;
            std::string preset_name;
            if (!a.preset.empty())
            {
                auto preset = sweep::figure_preset(a.preset);
                spec        = preset.spec;
                claim       = preset.claimed_descending;
                preset_name = preset.name;
            }
            else
            {
                if (a.vary.empty() || a.from.empty() || a.to.empty())
                {
                    throw UsageError("sweep needs --vary, --from and --to (or --preset)");
                }
                // Ad-hoc sweeps start from the Hata reference link; presets carry their own.
                spec.base  = RadioLinkd{900.0, 5.0, 30.0, 3.0};
                spec.steps = 50;
            }
            if (!a.vary.empty())
            {
                spec.vary = sweep::axis_from_string(a.vary);
            }
            if (auto v = optional_double(a.from, "--from"))
            {
                spec.from = *v;
            }
            if (auto v = optional_double(a.to, "--to"))
            {
                spec.to = *v;
            }
            if (auto v = optional_double(a.steps, "--steps"))
            {
                if (*v != static_cast<double>(static_cast<int>(*v)))
                {
                    throw UsageError("--steps expects an integer");
                }
                spec.steps = static_cast<int>(*v);
            }
            if (!a.spacing.empty())
            {
                if (a.spacing == "linear")
                {
                    spec.spacing = sweep::Spacing::linear;
                }
                else if (a.spacing == "log")
                {
                    spec.spacing = sweep::Spacing::logarithmic;
                }
                else
                {
                    throw UsageError("--spacing expects linear or log");
                }
            }
            if (!a.models.empty())
            {
                spec.models = parse_models(a.models, false);
            }

            const PartialLink partial = apply_link(a.scenario, PartialLink{spec.base.frequency_mhz, spec.base.distance_km,
                                                                           spec.base.bts_height_m, spec.base.ms_height_m});
            spec.base    = complete(partial, true);
            spec.options = apply_options(a.scenario, spec.options);

            const auto curves = uses_okumura(spec.models) ? active_curves(a.scenario.curves_path) : okumura::OkumuraCurvesd{};
            const auto result = sweep::run_sweep(spec, curves);

            const auto emit = [&](std::ostream& os) {
                if (a.scenario.format == "json")
                {
                    write_sweep_json(os, result, spec.options);
                }
                else
                {
                    write_sweep_csv(os, result);
                }
            };

            if (!a.output.empty())
            {
                std::ofstream file(a.output, std::ios::binary);
                if (!file)
                {
                    throw Error("cannot write '" + a.output + "'");
                }
                emit(file);
            }

            if (!a.check_ordering)
            {
                if (a.output.empty())
                {
                    emit(out);
                }
                return exit_ok;
            }

            if (result.models.size() < 2)
            {
                throw UsageError("--check-ordering needs at least two models");
            }
            const auto report = sweep::compare_orderings(result);
            if (!preset_name.empty())
            {
                out << "preset: " << preset_name << '\n';
            }
            out << report.to_text();
            if (!claim.empty())
            {
                std::string claim_text;
                for (std::size_t i = 0; i < claim.size(); ++i)
                {
                    claim_text += std::string(i == 0 ? "" : " >= ") + std::string(to_string(claim[i]));
                }
                out << "claim " << claim_text << ": holds at " << report.points_matching(claim) << '/'
                    << report.point_count() << " points\n";
            }
            return exit_ok;
        }

        struct RadiusArgs
        {
            ScenarioFlags scenario;
            std::string model;
            std::string preset;
            std::string max_loss_db;
        };

        int cmd_radius(const RadiusArgs& a, std::ostream& out)
        {
            check_format(a.scenario.format);
            const auto models = parse_models({a.model}, true);
            if (models.size() != 1)
            {
                throw UsageError("radius takes exactly one --model");
            }
            if (a.max_loss_db.empty())
            {
                throw UsageError("missing --max-loss-db");
            }
            const double budget          = parse_double(a.max_loss_db, "--max-loss-db");
            auto [partial, base_options] = link_preset(a.preset);
            partial                      = apply_link(a.scenario, partial);
            partial.distance_km.reset();
            const auto options = apply_options(a.scenario, base_options);
            precheck_ranges(models[0], partial, options.mode);
            const RadioLinkd link = complete(partial, false);
            const auto curves     = uses_okumura(models) ? active_curves(a.scenario.curves_path) : okumura::OkumuraCurvesd{};

            const auto radius = sweep::max_radius(models[0], link, budget, curves, options);
            const auto at     = link.with_distance(radius.distance_km);
            const auto loss   = sweep::evaluate(models[0], at, curves, options);
            write_records(out, {Record{models[0], at, options, loss.value_db, radius.flags, budget}}, a.scenario.format, true);
            return exit_ok;
        }

        int cmd_curves_validate(const std::string& path, std::ostream& out)
        {
            const auto curves = okumura::load_curves_file(path);
            out << "ok: " << path << ": " << curves.frequencies_mhz.size() << " frequencies x " << curves.distances_km.size()
                << " distances; garea";
            for (auto env : okumura::all_environments)
            {
                out << ' ' << okumura::to_string(env) << '=' << format_number(curves.garea(env));
            }
            out << '\n';
            return exit_ok;
        }
    }

    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
    {
        CLI::App app{"Large-scale radio path loss: free-space, Okumura, Hata and Lee models", "propagation-lab"};
        app.require_subcommand(1);

        ComputeArgs compute;
        auto* compute_cmd = app.add_subcommand("compute", "Evaluate one or more models at a single scenario");
        add_scenario_flags(compute_cmd, compute.scenario, true);
        compute_cmd->add_option("--model", compute.models, "okumura, hata, lee, free-space or all")->delimiter(',');
        compute_cmd->add_option("--preset", compute.preset, "nominal (Lee calibration point) or paper");

        SweepArgs sweep_args;
        auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter and tabulate model losses");
        add_scenario_flags(sweep_cmd, sweep_args.scenario, true);
        sweep_cmd->add_option("--vary", sweep_args.vary, "bts_height, ms_height or distance");
        sweep_cmd->add_option("--from", sweep_args.from, "First axis value");
        sweep_cmd->add_option("--to", sweep_args.to, "Last axis value");
        sweep_cmd->add_option("--steps", sweep_args.steps, "Number of axis points (>= 2)");
        sweep_cmd->add_option("--spacing", sweep_args.spacing, "linear or log");
        sweep_cmd->add_option("--models", sweep_args.models, "Comma-separated subset of okumura,hata,lee")->delimiter(',');
        sweep_cmd->add_option("--preset", sweep_args.preset, "paper-fig1 .. paper-fig12");
        sweep_cmd->add_flag("--check-ordering", sweep_args.check_ordering, "Print the cross-model ordering report");
        sweep_cmd->add_option("--output", sweep_args.output, "Write data to this file instead of stdout");

        RadiusArgs radius;
        auto* radius_cmd = app.add_subcommand("radius", "Largest distance whose loss fits a budget");
        add_scenario_flags(radius_cmd, radius.scenario, false);
        radius_cmd->add_option("--model", radius.model, "okumura, hata, lee or free-space");
        radius_cmd->add_option("--preset", radius.preset, "nominal or paper");
        radius_cmd->add_option("--max-loss-db", radius.max_loss_db, "Maximum tolerable path loss in dB");

        auto* curves_cmd = app.add_subcommand("curves", "Okumura curve-file utilities");
        curves_cmd->require_subcommand(1);
        std::string validate_path;
        auto* validate_cmd = curves_cmd->add_subcommand("validate", "Check a curve file against the table invariants");
        validate_cmd->add_option("file", validate_path, "Curve file")->required();
        std::string show_path;
        auto* show_cmd = curves_cmd->add_subcommand("show", "Print the active curve table");
        show_cmd->add_option("--curves", show_path, "Curve file (overrides $PROPLAB_CURVES)");

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError& e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try
        {
            if (compute_cmd->parsed())
            {
                return cmd_compute(compute, out);
            }
            if (sweep_cmd->parsed())
            {
                return cmd_sweep(sweep_args, out);
            }
            if (radius_cmd->parsed())
            {
                return cmd_radius(radius, out);
            }
            if (validate_cmd->parsed())
            {
                return cmd_curves_validate(validate_path, out);
            }
            if (show_cmd->parsed())
            {
                out << okumura::serialize_curves(active_curves(show_path));
                return exit_ok;
            }
        }
        catch (const RangeError& e)
        {
            err << "error: " << flag_for(e.parameter()) << ": " << e.what() << '\n';
            return exit_range;
        }
        catch (const NoCoverageError& e)
        {
            err << "error: no coverage: " << e.what() << '\n';
            return exit_no_coverage;
        }
        catch (const UsageError& e)
        {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const ValidationError& e)
        {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const DomainError& e)
        {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const ParseError& e)
        {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const Error& e)
        {
            err << "error: " << e.what() << '\n';
            return exit_failure;
        }
        return exit_usage;
    }
}
