#pragma once

// Wire formats: exact rational strings, the digit-data text format
// `p=<prime>;pre=<digits>;per=<digits>`, place strings, and the JSON shapes
// used by the CLI reports and input files.

#include "frames/adele.hpp"
#include "frames/hydra.hpp"
#include "frames/measures.hpp"

#include <json.hpp>

#include <string>

namespace frames {

using Json = nlohmann::json;

// "<num>/<den>" in lowest terms, "/<den>" omitted when den = 1.
std::string format_rational(const Rat& x);
Rat parse_rational(const std::string& s);

// Digits least-significant-first: single characters for p <= 10,
// comma-separated integers otherwise.
std::string format_point(const PAdicRational& z);
PAdicRational parse_point(const std::string& s);

std::string format_cycle(const std::vector<Int>& cycle);

Json report_to_json(const ConvergenceReport& report);
Json closed_form_to_json(const ClosedForm& cf);

struct FrameSampleRow {
    PAdicRational z;
    std::set<Place> places;
    std::optional<Rat> value;
};
Json frame_report_to_json(const std::string& name, const std::vector<FrameSampleRow>& samples,
                          std::int64_t degree_lower_bound);

Json adele_to_json(const AdeleVector& u, int precision);

HydraMap hydra_map_from_json(const Json& j);
Json hydra_map_to_json(const HydraMap& h);

LocallyConstantFn locally_constant_from_json(const Json& j);
Json locally_constant_to_json(const LocallyConstantFn& f);

// Affine integer-map branch expressions: "n/2", "(3n+1)/2", "2n-1", "n".
IntegerBranch parse_branch_expression(const std::string& s);
std::string format_branch_expression(const IntegerBranch& b);

// Series parameter string "p=2,d=2,q=1,3".
FSeriesSpec parse_series_spec(const std::string& s);
std::string format_series_spec(const FSeriesSpec& spec);

}  // namespace frames
