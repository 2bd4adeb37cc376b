#include "frames/io.hpp"

#include <algorithm>
#include <sstream>

namespace frames {

std::string format_rational(const Rat& x) {
    std::string out = num(x).str();
    if (den(x) != 1) out += "/" + den(x).str();
    return out;
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int n(s.substr(0, slash));
        const Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    }
}

namespace {

std::string format_digits(const std::vector<digit_t>& digits, std::int64_t p) {
    std::string out;
    if (p <= 10) {
        for (digit_t d : digits) out += static_cast<char>('0' + d);
    } else {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(digits[i]);
        }
    }
    return out;
}

std::vector<digit_t> parse_digits(const std::string& s, std::int64_t p, const std::string& field,
                                  std::size_t base_pos) {
    std::vector<digit_t> out;
    if (s.empty()) return out;
    if (p <= 10) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            const char c = s[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("parse_point: bad digit '" + std::string(1, c) + "' in " +
                                            field + " at position " + std::to_string(base_pos + i));
            out.push_back(c - '0');
        }
    } else {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ','))
            out.push_back(static_cast<digit_t>(std::stoll(tok)));
    }
    return out;
}

// Splits "key=value" and checks the key.
std::string expect_field(const std::string& part, const std::string& key, std::size_t pos) {
    const auto eq = part.find('=');
    if (eq == std::string::npos || part.substr(0, eq) != key)
        throw std::invalid_argument("parse_point: expected '" + key + "=' at position " +
                                    std::to_string(pos));
    return part.substr(eq + 1);
}

}  // namespace

std::string format_point(const PAdicRational& z) {
    const std::int64_t p = z.prime().value();
    return "p=" + std::to_string(p) + ";pre=" + format_digits(z.preperiod(), p) +
           ";per=" + format_digits(z.period(), p);
}

PAdicRational parse_point(const std::string& s) {
    std::vector<std::string> parts;
    std::vector<std::size_t> offsets;
    std::size_t start = 0;
    while (true) {
        const auto semi = s.find(';', start);
        parts.push_back(s.substr(start, semi - start));
        offsets.push_back(start);
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (parts.size() != 3)
        throw std::invalid_argument("parse_point: expected p=<prime>;pre=<digits>;per=<digits>");
    const std::string p_str = expect_field(parts[0], "p", offsets[0]);
    std::int64_t p = 0;
    try {
        p = std::stoll(p_str);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_point: bad prime at position " + std::to_string(offsets[0] + 2));
    }
    const Prime prime(p);
    auto pre = parse_digits(expect_field(parts[1], "pre", offsets[1]), p, "pre", offsets[1] + 4);
    auto per = parse_digits(expect_field(parts[2], "per", offsets[2]), p, "per", offsets[2] + 4);
    if (per.empty()) per = {0};
    return PAdicRational::from_digits(prime, std::move(pre), std::move(per));
}

std::string format_cycle(const std::vector<Int>& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += ' ';
        out += cycle[i].str();
    }
    return out;
}

Json report_to_json(const ConvergenceReport& report) {
    Json places = Json::array();
    for (const Place& v : report.places) places.push_back(v.to_string());
    return Json{{"places", places},
                {"ratio", format_rational(report.ratio)},
                {"period_length", report.period_length}};
}

Json closed_form_to_json(const ClosedForm& cf) {
    return Json{{"A", format_rational(cf.A)},
                {"B", format_rational(cf.B)},
                {"r", format_rational(cf.r)},
                {"value", format_rational(cf.value)},
                {"formal", cf.formal}};
}

Json frame_report_to_json(const std::string& name, const std::vector<FrameSampleRow>& samples,
                          std::int64_t degree_lower_bound) {
    Json rows = Json::array();
    for (const auto& row : samples) {
        Json places = Json::array();
        for (const Place& v : row.places) places.push_back(v.to_string());
        Json entry{{"z", format_point(row.z)}, {"places", places}};
        if (row.value) entry["value"] = format_rational(*row.value);
        rows.push_back(std::move(entry));
    }
    return Json{{"name", name}, {"samples", rows}, {"degree_lower_bound", degree_lower_bound}};
}

Json adele_to_json(const AdeleVector& u, int precision) {
    if (u.is_diagonal()) return Json{{"diagonal", format_rational(u.diagonal_value())}};
    Json entries = Json::object();
    for (const auto& [place, entry] : u.explicit_entries()) {
        if (std::holds_alternative<Rat>(entry)) {
            entries[place.to_string()] = Json{{"exact", format_rational(std::get<Rat>(entry))}};
        } else if (std::holds_alternative<ApproxValue>(entry)) {
            if (place.is_finite()) {
                const Int modulus = pow_int(Int(place.ell().value()), precision);
                const Rat approx = std::get<ApproxValue>(entry).at(precision);
                entries[place.to_string()] =
                    Json{{"approx_mod", place.to_string() + "^" + std::to_string(precision)},
                         {"residue", residue_mod(approx, modulus).str()}};
            } else {
                entries[place.to_string()] =
                    Json{{"approx", format_rational(std::get<ApproxValue>(entry).at(precision))}};
            }
        } else {
            entries[place.to_string()] = "infinity";
        }
    }
    std::string tail = "zero";
    if (std::holds_alternative<InfinityTail>(u.tail()))
        tail = "infinity";
    else if (std::holds_alternative<DiagonalTail>(u.tail()))
        tail = format_rational(std::get<DiagonalTail>(u.tail()).value);
    return Json{{"explicit", entries}, {"tail", tail}};
}

HydraMap hydra_map_from_json(const Json& j) {
    const Prime p(j.at("p").get<std::int64_t>());
    std::vector<Rat> a, b;
    for (const auto& s : j.at("a")) a.push_back(parse_rational(s.get<std::string>()));
    for (const auto& s : j.at("b")) b.push_back(parse_rational(s.get<std::string>()));
    std::optional<std::vector<IntegerBranch>> branches;
    if (j.contains("integer_map")) {
        branches.emplace();
        for (const auto& s : j.at("integer_map"))
            branches->push_back(parse_branch_expression(s.get<std::string>()));
    }
    return HydraMap(p, std::move(a), std::move(b), std::move(branches));
}

Json hydra_map_to_json(const HydraMap& h) {
    Json a = Json::array(), b = Json::array();
    for (const Rat& x : h.a()) a.push_back(format_rational(x));
    for (const Rat& x : h.b()) b.push_back(format_rational(x));
    Json out{{"p", h.prime().value()}, {"a", a}, {"b", b}};
    if (h.integer_map()) {
        Json branches = Json::array();
        for (const auto& br : *h.integer_map()) branches.push_back(format_branch_expression(br));
        out["integer_map"] = branches;
    }
    return out;
}

LocallyConstantFn locally_constant_from_json(const Json& j) {
    const Prime p(j.at("p").get<std::int64_t>());
    const std::int64_t M = j.at("M").get<std::int64_t>();
    std::vector<Rat> values;
    for (const auto& s : j.at("values")) values.push_back(parse_rational(s.get<std::string>()));
    return LocallyConstantFn(p, M, std::move(values));
}

Json locally_constant_to_json(const LocallyConstantFn& f) {
    Json values = Json::array();
    for (const Rat& v : f.values()) values.push_back(format_rational(v));
    return Json{{"p", f.prime().value()}, {"M", f.modulus_exponent()}, {"values", values}};
}

IntegerBranch parse_branch_expression(const std::string& raw) {
    // Grammar: [ "(" ] [coef] "n" [("+"|"-") const] [ ")" ] [ "/" den ]
    // with plain constants ("-1") also accepted.
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_branch_expression: empty expression");

    Int denominator = 1;
    // Trailing "/den".
    const auto slash = s.rfind('/');
    if (slash != std::string::npos && s.find('n', slash) == std::string::npos) {
        denominator = Int(s.substr(slash + 1));
        s = s.substr(0, slash);
    }
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);

    const auto npos = s.find('n');
    Rat slope = 0, offset = 0;
    if (npos == std::string::npos) {
        offset = Rat(Int(s));
    } else {
        std::string coef = s.substr(0, npos);
        if (coef.empty() || coef == "+")
            slope = 1;
        else if (coef == "-")
            slope = -1;
        else
            slope = Rat(Int(coef));
        std::string rest = s.substr(npos + 1);
        if (!rest.empty()) {
            if (rest.front() == '+') rest.erase(0, 1);
            offset = Rat(Int(rest));
        }
    }
    return IntegerBranch{slope / Rat(denominator), offset / Rat(denominator)};
}

std::string format_branch_expression(const IntegerBranch& b) {
    // Emitted with a common denominator: "(<a>n+<c>)/<q>".
    const Int q = boost::multiprecision::lcm(den(b.slope), den(b.offset));
    const Int a = num(b.slope * q);
    const Int c = num(b.offset * q);
    std::string core;
    if (a == 1)
        core = "n";
    else if (a == -1)
        core = "-n";
    else
        core = a.str() + "n";
    if (c > 0) core += "+" + c.str();
    if (c < 0) core += c.str();
    if (a == 0) core = c.str();
    if (q == 1) return core;
    return "(" + core + ")/" + q.str();
}

FSeriesSpec parse_series_spec(const std::string& s) {
    // "p=2,d=2,q=1,3": everything after "q=" is the q list.
    const auto qpos = s.find("q=");
    if (s.rfind("p=", 0) != 0 || qpos == std::string::npos)
        throw std::invalid_argument("parse_series_spec: expected p=<prime>,d=<rational>,q=<list>");
    const auto dpos = s.find("d=");
    if (dpos == std::string::npos || dpos > qpos)
        throw std::invalid_argument("parse_series_spec: expected d= before q=");
    const std::string p_str = s.substr(2, s.find(',', 2) - 2);
    const std::string d_str = s.substr(dpos + 2, s.find(',', dpos) - dpos - 2);
    std::vector<Rat> q;
    std::istringstream qs(s.substr(qpos + 2));
    std::string tok;
    while (std::getline(qs, tok, ',')) q.push_back(parse_rational(tok));
    return FSeriesSpec(Prime(std::stoll(p_str)), parse_rational(d_str), std::move(q));
}

std::string format_series_spec(const FSeriesSpec& spec) {
    std::string out = "p=" + std::to_string(spec.p.value()) + ",d=" + format_rational(spec.d) + ",q=";
    for (std::size_t i = 0; i < spec.q.size(); ++i) {
        if (i) out += ',';
        out += format_rational(spec.q[i]);
    }
    return out;
}

}  // namespace frames
