#include "frames/cli.hpp"

#include "frames/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace frames::cli {

namespace {

std::string fixed_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12e", x);
    return buf;
}

int env_workers() {
    const char* v = std::getenv("FRAMES_WORKERS");
    if (!v) return 1;
    const int n = std::atoi(v);
    return n >= 1 ? n : 1;
}

Json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

// Config file overrides flags: any key present in the JSON replaces the
// parsed option value.
void override_string(const Json& cfg, const char* key, std::string& slot) {
    if (cfg.contains(key)) slot = cfg.at(key).get<std::string>();
}
void override_int(const Json& cfg, const char* key, std::int64_t& slot) {
    if (cfg.contains(key)) slot = cfg.at(key).get<std::int64_t>();
}

struct Common {
    std::string config;
    std::string format = "json";
};

void add_common(CLI::App* cmd, Common& common, const std::string& default_format) {
    common.format = default_format;
    cmd->add_option("--config", common.config, "JSON config file; its keys override flags");
    cmd->add_option("--format", common.format, "Output format: json, csv or plain");
}

HydraMap resolve_map(const std::string& map_path, bool chi3_flag) {
    if (chi3_flag && !map_path.empty())
        throw std::invalid_argument("hydra: give either --map or --chi3, not both");
    if (chi3_flag) return HydraMap::chi3();
    if (map_path.empty()) throw std::invalid_argument("hydra: need --map <file> or --chi3");
    return hydra_map_from_json(load_config(map_path));
}

int cmd_digits(const std::string& z_str, const std::string& rational_str, std::int64_t p_value,
               std::int64_t project_n, std::ostream& out) {
    PAdicRational z = [&]() {
        if (!z_str.empty() && !rational_str.empty())
            throw std::invalid_argument("digits: give either --z or --rational, not both");
        if (!z_str.empty()) return parse_point(z_str);
        if (rational_str.empty()) throw std::invalid_argument("digits: need --z or --rational");
        if (p_value == 0) throw std::invalid_argument("digits: --rational needs --p");
        return PAdicRational::from_rational(Prime(p_value), parse_rational(rational_str));
    }();
    Json j{{"z", format_point(z)},
           {"value", format_rational(z.to_rational())},
           {"is_nonneg_integer", z.is_nonneg_integer()}};
    const auto v = z.valuation();
    j["valuation"] = v ? Json(*v) : Json("inf");
    if (project_n >= 0) j["project"] = z.project(project_n).str();
    if (z.prime().value() == 2) j["eta2"] = format_rational(eta2(z));
    out << j.dump() << "\n";
    return 0;
}

int cmd_eval(const FSeriesSpec& spec, const PAdicRational& z, std::int64_t N, std::ostream& out) {
    Json terms = Json::array();
    Rat sum = 0;
    for (std::int64_t n = 0; n < N; ++n) {
        const Rat t = term(spec, z, n);
        terms.push_back(format_rational(t));
        sum += t;
    }
    out << Json{{"series", format_series_spec(spec)},
                {"z", format_point(z)},
                {"N", N},
                {"terms", terms},
                {"partial_sum", format_rational(sum)}}
               .dump()
        << "\n";
    return 0;
}

int cmd_classify(const FSeriesSpec& spec, const PAdicRational& z, std::ostream& out) {
    out << report_to_json(classify(spec, z)).dump() << "\n";
    return 0;
}

int cmd_closed_form(const FSeriesSpec& spec, const PAdicRational& z, std::ostream& out) {
    out << closed_form_to_json(closed_form(spec, z)).dump() << "\n";
    return 0;
}

int cmd_frame_report(const std::string& kind, std::int64_t p_value, std::int64_t q_value,
                     const std::string& series_str, const std::string& places_str,
                     const std::vector<std::string>& sample_strs, std::ostream& out) {
    std::optional<Frame> frame;
    std::optional<FSeriesSpec> spec;
    if (kind == "standard") {
        frame = standard_frame(Prime(p_value), Prime(q_value));
        spec = FSeriesSpec::spq(Rat(p_value), Rat(q_value));
    } else if (kind == "fseries") {
        spec = parse_series_spec(series_str);
        frame = fseries_frame(*spec);
    } else if (kind == "partition") {
        std::vector<Place> places;
        std::istringstream is(places_str);
        std::string tok;
        while (std::getline(is, tok, ',')) places.push_back(Place::parse(tok));
        frame = partition_frame(Prime(p_value), std::move(places));
    } else {
        throw std::invalid_argument("frame-report: --frame must be standard, fseries or partition");
    }

    std::vector<FrameSampleRow> rows;
    std::vector<Point> sample;
    for (const std::string& s : sample_strs) {
        PAdicRational z = parse_point(s);
        FrameSampleRow row{z, frame->assign(z).places, std::nullopt};
        if (spec) {
            try {
                row.value = closed_form(*spec, z).value;
            } catch (const std::domain_error&) {
                // RATIO_ONE: leave the value column empty.
            }
        }
        rows.push_back(std::move(row));
        sample.emplace_back(std::move(z));
    }
    const auto est = degree(*frame, sample);
    out << frame_report_to_json(frame->name(), rows, est.degree).dump() << "\n";
    return 0;
}

int cmd_hydra_chi(const HydraMap& h, const std::string& n_str, const std::string& z_str,
                  std::ostream& out) {
    if (!n_str.empty() && !z_str.empty())
        throw std::invalid_argument("hydra-chi: give either --n or --z, not both");
    if (!n_str.empty()) {
        const Int n(n_str);
        out << Json{{"n", n.str()}, {"chi", format_rational(numen(h, n))}}.dump() << "\n";
        return 0;
    }
    if (z_str.empty()) throw std::invalid_argument("hydra-chi: need --n or --z");
    const PAdicRational z = parse_point(z_str);
    const NumenEvaluation eval = numen_evaluate(h, z);
    Json places = Json::array();
    for (const Place& v : eval.places) places.push_back(v.to_string());
    out << Json{{"z", format_point(z)},
                {"chi", format_rational(eval.cf.value)},
                {"A", format_rational(eval.cf.A)},
                {"B", format_rational(eval.cf.B)},
                {"r", format_rational(eval.cf.r)},
                {"discrete", eval.discrete},
                {"places", places}}
               .dump()
        << "\n";
    return 0;
}

int cmd_hydra_search(const HydraMap& h, const SearchOptions& options, const std::string& format,
                     std::ostream& out, std::ostream& err) {
    const SearchResult result = correspondence_search(h, options);
    if (format != "csv") throw std::invalid_argument("hydra-search: only csv output is supported");
    out << "z,preperiod,period,chi,kind,cycle\n";
    for (const auto& hit : result.hits) {
        const std::int64_t p = hit.z.prime().value();
        // Digit words reuse the point format: plain for p <= 10, quoted
        // comma-separated otherwise.
        auto digits_field = [p](const std::vector<digit_t>& digits) {
            std::string s;
            if (p <= 10) {
                for (digit_t d : digits) s += static_cast<char>('0' + d);
                return s;
            }
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(digits[i]);
            }
            return "\"" + s + "\"";
        };
        out << "\"" << format_point(hit.z) << "\"," << digits_field(hit.z.preperiod()) << ","
            << digits_field(hit.z.period()) << "," << hit.chi_value.str()
            << "," << (hit.kind == HitKind::PeriodicConfirmed ? "PERIODIC_CONFIRMED" : "INTEGER_UNCONFIRMED")
            << ",\"" << format_cycle(hit.cycle) << "\"\n";
    }
    err << "enumerated=" << result.stats.enumerated << " canonical=" << result.stats.canonical
        << " skipped_ratio_one=" << result.stats.skipped_ratio_one
        << " skipped_no_place=" << result.stats.skipped_no_place << "\n";
    if (result.next) err << "next_cursor=" << result.next->to_string() << "\n";
    return 0;
}

int cmd_measure_check(std::int64_t p_value, const Rat& c, std::int64_t N, const std::string& format,
                      std::ostream& out) {
    const Prime p(p_value);
    const Int modulus = pow_int(Int(p_value), N);
    const char* sep = format == "csv" ? "," : "  ";
    if (format == "csv")
        out << "z,closed,direct,abs_error\n";
    else
        out << "z" << sep << "closed" << sep << "direct" << sep << "abs_error\n";
    double max_err = 0;
    for (Int r = 0; r < modulus; ++r) {
        const PAdicRational z = PAdicRational::from_integer(p, r);
        const Rat closed = character_sum_closed(p, c, N, z);
        const std::complex<double> direct = character_sum_direct(p, c, N, z);
        const double errv = std::abs(to_double(closed) - direct.real()) + std::abs(direct.imag());
        max_err = std::max(max_err, errv);
        out << r.str() << sep << format_rational(closed) << sep << fixed_float(direct.real()) << sep
            << fixed_float(errv) << "\n";
    }
    out << "max_abs_error" << sep << fixed_float(max_err) << "\n";
    return 0;
}

int cmd_adele(const FSeriesSpec& spec, const PAdicRational& z, const std::string& policy_str,
              std::int64_t precision, std::ostream& out) {
    const TailPolicy policy = policy_str == "infinity" ? TailPolicy::Infinity : TailPolicy::Zero;
    out << adele_to_json(from_fseries(spec, z, policy), static_cast<int>(precision)).dump() << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact p-adic digit series toolkit"};
    app.require_subcommand(1);

    // digits
    auto* digits_cmd = app.add_subcommand("digits", "Canonical digit data for a point");
    Common digits_common;
    std::string digits_z, digits_rational;
    std::int64_t digits_p = 0, digits_project = -1;
    digits_cmd->add_option("--z", digits_z, "Point as p=<prime>;pre=<digits>;per=<digits>");
    digits_cmd->add_option("--rational", digits_rational, "Rational value to expand");
    digits_cmd->add_option("--p", digits_p, "Prime for --rational");
    digits_cmd->add_option("--project", digits_project, "Also print [z]_{p^N} for this N");
    add_common(digits_cmd, digits_common, "json");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Exact terms and partial sum of a series");
    Common eval_common;
    std::string eval_series, eval_z;
    std::int64_t eval_N = 8;
    eval_cmd->add_option("--series", eval_series, "Series as p=<prime>,d=<rational>,q=<list>");
    eval_cmd->add_option("--z", eval_z, "Point");
    eval_cmd->add_option("--N", eval_N, "Number of terms");
    add_common(eval_cmd, eval_common, "json");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Convergent places of a series at a point");
    Common classify_common;
    std::string classify_series, classify_z;
    classify_cmd->add_option("--series", classify_series, "Series parameters");
    classify_cmd->add_option("--z", classify_z, "Point");
    add_common(classify_cmd, classify_common, "json");

    // closed-form
    auto* closed_cmd = app.add_subcommand("closed-form", "Geometric closed form at a point");
    Common closed_common;
    std::string closed_series, closed_z;
    closed_cmd->add_option("--series", closed_series, "Series parameters");
    closed_cmd->add_option("--z", closed_z, "Point");
    add_common(closed_cmd, closed_common, "json");

    // frame-report
    auto* frame_cmd = app.add_subcommand("frame-report", "Frame assignment report over samples");
    Common frame_common;
    std::string frame_kind = "standard", frame_series, frame_places;
    std::int64_t frame_p = 2, frame_q = 3;
    std::vector<std::string> frame_samples;
    frame_cmd->add_option("--frame", frame_kind, "standard, fseries or partition");
    frame_cmd->add_option("--p", frame_p, "Domain prime");
    frame_cmd->add_option("--q", frame_q, "Target prime (standard frame)");
    frame_cmd->add_option("--series", frame_series, "Series parameters (fseries frame)");
    frame_cmd->add_option("--places", frame_places, "Comma-separated places per digit (partition frame)");
    frame_cmd->add_option("--z", frame_samples, "Sample points (repeatable)");
    add_common(frame_cmd, frame_common, "json");

    // hydra-chi
    auto* chi_cmd = app.add_subcommand("hydra-chi", "Numen values and closed forms");
    Common chi_common;
    std::string chi_map, chi_n, chi_z;
    bool chi_builtin = false;
    chi_cmd->add_option("--map", chi_map, "Map definition JSON file");
    chi_cmd->add_flag("--chi3", chi_builtin, "Use the built-in chi_3 system");
    chi_cmd->add_option("--n", chi_n, "Nonnegative integer input");
    chi_cmd->add_option("--z", chi_z, "p-adic point input");
    add_common(chi_cmd, chi_common, "json");

    // hydra-search
    auto* search_cmd = app.add_subcommand("hydra-search", "Correspondence sweep for periodic points");
    Common search_common;
    std::string search_map, search_resume;
    bool search_builtin = false;
    std::int64_t search_pre = 2, search_per = 4, search_verify = 1 << 16, search_limit = -1;
    search_cmd->add_option("--map", search_map, "Map definition JSON file");
    search_cmd->add_flag("--chi3", search_builtin, "Use the built-in chi_3 system");
    search_cmd->add_option("--pre-max", search_pre, "Max preperiod length");
    search_cmd->add_option("--per-max", search_per, "Max period length");
    search_cmd->add_option("--verify-steps", search_verify, "Cycle confirmation budget");
    search_cmd->add_option("--resume", search_resume, "Resume cursor L:P:perIndex:preIndex");
    search_cmd->add_option("--limit", search_limit, "Stop after this many canonical candidates");
    add_common(search_cmd, search_common, "csv");

    // measure-check
    auto* measure_cmd = app.add_subcommand("measure-check", "Character-sum identity table");
    Common measure_common;
    std::string measure_c = "3";
    std::int64_t measure_p = 2, measure_N = 1;
    measure_cmd->add_option("--p", measure_p, "Prime");
    measure_cmd->add_option("--c", measure_c, "Constant c (rational, not 0, 1, -1 or p)");
    measure_cmd->add_option("--N", measure_N, "Truncation depth");
    add_common(measure_cmd, measure_common, "plain");

    // adele
    auto* adele_cmd = app.add_subcommand("adele", "Adelic packaging of a series value");
    Common adele_common;
    std::string adele_series, adele_z, adele_policy = "zero";
    std::int64_t adele_precision = 12;
    adele_cmd->add_option("--series", adele_series, "Series parameters");
    adele_cmd->add_option("--z", adele_z, "Point");
    adele_cmd->add_option("--tail-policy", adele_policy, "zero or infinity");
    adele_cmd->add_option("--precision", adele_precision, "Residue precision for APPROX entries");
    add_common(adele_cmd, adele_common, "json");

    std::vector<const char*> argv;
    argv.push_back("frames");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (digits_cmd->parsed()) {
            if (!digits_common.config.empty()) {
                const Json cfg = load_config(digits_common.config);
                override_string(cfg, "z", digits_z);
                override_string(cfg, "rational", digits_rational);
                override_int(cfg, "p", digits_p);
                override_int(cfg, "project", digits_project);
            }
            return cmd_digits(digits_z, digits_rational, digits_p, digits_project, out);
        }
        if (eval_cmd->parsed()) {
            if (!eval_common.config.empty()) {
                const Json cfg = load_config(eval_common.config);
                override_string(cfg, "series", eval_series);
                override_string(cfg, "z", eval_z);
                override_int(cfg, "N", eval_N);
            }
            return cmd_eval(parse_series_spec(eval_series), parse_point(eval_z), eval_N, out);
        }
        if (classify_cmd->parsed()) {
            if (!classify_common.config.empty()) {
                const Json cfg = load_config(classify_common.config);
                override_string(cfg, "series", classify_series);
                override_string(cfg, "z", classify_z);
            }
            return cmd_classify(parse_series_spec(classify_series), parse_point(classify_z), out);
        }
        if (closed_cmd->parsed()) {
            if (!closed_common.config.empty()) {
                const Json cfg = load_config(closed_common.config);
                override_string(cfg, "series", closed_series);
                override_string(cfg, "z", closed_z);
            }
            return cmd_closed_form(parse_series_spec(closed_series), parse_point(closed_z), out);
        }
        if (frame_cmd->parsed()) {
            if (!frame_common.config.empty()) {
                const Json cfg = load_config(frame_common.config);
                override_string(cfg, "frame", frame_kind);
                override_int(cfg, "p", frame_p);
                override_int(cfg, "q", frame_q);
                override_string(cfg, "series", frame_series);
                override_string(cfg, "places", frame_places);
                if (cfg.contains("z")) frame_samples = cfg.at("z").get<std::vector<std::string>>();
            }
            return cmd_frame_report(frame_kind, frame_p, frame_q, frame_series, frame_places,
                                    frame_samples, out);
        }
        if (chi_cmd->parsed()) {
            if (!chi_common.config.empty()) {
                const Json cfg = load_config(chi_common.config);
                override_string(cfg, "map", chi_map);
                override_string(cfg, "n", chi_n);
                override_string(cfg, "z", chi_z);
            }
            return cmd_hydra_chi(resolve_map(chi_map, chi_builtin), chi_n, chi_z, out);
        }
        if (search_cmd->parsed()) {
            if (!search_common.config.empty()) {
                const Json cfg = load_config(search_common.config);
                override_string(cfg, "map", search_map);
                override_int(cfg, "pre-max", search_pre);
                override_int(cfg, "per-max", search_per);
                override_int(cfg, "verify-steps", search_verify);
                override_string(cfg, "resume", search_resume);
                override_int(cfg, "limit", search_limit);
            }
            SearchOptions options;
            options.preperiod_max = search_pre;
            options.period_max = search_per;
            options.verify_steps = search_verify;
            if (!search_resume.empty()) options.resume = SearchCursor::parse(search_resume);
            if (search_limit >= 0) options.limit = search_limit;
            options.workers = env_workers();
            return cmd_hydra_search(resolve_map(search_map, search_builtin), options,
                                    search_common.format, out, err);
        }
        if (measure_cmd->parsed()) {
            if (!measure_common.config.empty()) {
                const Json cfg = load_config(measure_common.config);
                override_int(cfg, "p", measure_p);
                override_string(cfg, "c", measure_c);
                override_int(cfg, "N", measure_N);
            }
            return cmd_measure_check(measure_p, parse_rational(measure_c), measure_N,
                                     measure_common.format, out);
        }
        if (adele_cmd->parsed()) {
            if (!adele_common.config.empty()) {
                const Json cfg = load_config(adele_common.config);
                override_string(cfg, "series", adele_series);
                override_string(cfg, "z", adele_z);
                override_string(cfg, "tail-policy", adele_policy);
                override_int(cfg, "precision", adele_precision);
            }
            return cmd_adele(parse_series_spec(adele_series), parse_point(adele_z), adele_policy,
                             adele_precision, out);
        }
        err << "usage error: no subcommand\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace frames::cli
