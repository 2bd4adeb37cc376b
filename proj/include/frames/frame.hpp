#pragma once

// Frames as data: classifiers from points of Z_p to finite sets of places,
// together with frame-limit evaluation and the pointwise ring of compatible
// values.  Frames are intensional: the classifier is a function, and the
// reported degree over a sample is a lower bound of the true degree.

#include "frames/fseries.hpp"

#include <functional>
#include <map>
#include <string>
#include <variant>

namespace frames {

struct FrameAssignment {
    // Set for points where no completion sums the series; such points carry
    // an empty place set and are flagged instead of breaking the nonempty
    // invariant.
    bool divergent_everywhere = false;
    std::set<Place> places;
};

using Point = std::variant<PAdicRational, DigitStream>;

class Frame {
public:
    using RationalClassifier = std::function<FrameAssignment(const PAdicRational&)>;
    using StreamClassifier = std::function<std::optional<FrameAssignment>(const DigitStream&)>;

    Frame(Prime p, std::string name, int dimension, RationalClassifier on_rational,
          StreamClassifier on_stream);

    const Prime& prime() const { return p_; }
    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }

    FrameAssignment assign(const PAdicRational& z) const { return on_rational_(z); }
    // nullopt = REFUSED (undecidable tail flags).
    std::optional<FrameAssignment> assign(const DigitStream& z) const { return on_stream_(z); }
    std::optional<FrameAssignment> assign(const Point& x) const;

private:
    Prime p_;
    std::string name_;
    int dimension_;
    RationalClassifier on_rational_;
    StreamClassifier on_stream_;
};

// {infinite} on N_0, {FINITE(q)} elsewhere.  Throws on p = q.
Frame standard_frame(Prime p, Prime q);

// Example partition: U_0 = N_0 -> infinite place; U_j = infinitely many j's,
// finitely many i's for 0 < i < j -> places_by_digit[j-1] (lowest digit wins).
Frame partition_frame(Prime p, std::vector<Place> places_by_digit);

// Places = classify(spec, z).places, with the divergent-everywhere marker for
// empty classifications.
Frame fseries_frame(const FSeriesSpec& spec);

struct DegreeEstimate {
    std::int64_t degree;  // lower bound of the true degree
    std::set<Place> places;
};
DegreeEstimate degree(const Frame& frame, const std::vector<Point>& sample);

// Precision-indexed approximation: at(k) returns a rational within
// ell^{-k} (finite place) of the limit; the generator is pure.
struct ApproxValue {
    std::function<Rat(int)> at;
};
struct DivergentTag {
    friend bool operator==(const DivergentTag&, const DivergentTag&) { return true; }
};
using PlaceValue = std::variant<Rat, ApproxValue, DivergentTag>;

class FrameValue {
public:
    FrameValue() = default;
    explicit FrameValue(std::map<Place, PlaceValue> entries) : entries_(std::move(entries)) {}

    const std::map<Place, PlaceValue>& entries() const { return entries_; }
    std::set<Place> places() const;
    const PlaceValue& at(const Place& v) const;

private:
    std::map<Place, PlaceValue> entries_;
};

// Sums the series at x in each assigned completion: EXACT rational where the
// closed form exists and terms decay, APPROX partial-sum generators for
// certified stream input, DIVERGENT where terms do not tend to zero.
// Throws on REFUSED stream input.
FrameValue frame_limit(const Frame& frame, const FSeriesSpec& spec, const Point& x, int precision);

// Pointwise ring operations; operands must carry the same place set.
FrameValue fv_add(const FrameValue& f, const FrameValue& g);
FrameValue fv_mul(const FrameValue& f, const FrameValue& g);
FrameValue fv_scale(const Rat& c, const FrameValue& f);
FrameValue fv_zero(const std::set<Place>& places);
FrameValue fv_one(const std::set<Place>& places);

struct ExtensionTarget {
    Prime q;
    bool ring_of_integers;  // false: the whole field Q_q
};
struct ExtensionWitness {
    bool extends;
    std::optional<Rat> counterexample;
};
// Sample-level evidence, not proof: checks every EXACT entry of every value.
ExtensionWitness extension_witness(const std::vector<FrameValue>& values, const ExtensionTarget& target);

// max of per-place maxes over a d-tuple of already-computed magnitudes.
Rat product_norm(const std::vector<std::vector<Rat>>& magnitudes);

// Documented lower bound of sup |f|_q: max over all residues mod p^N lifted
// to N_0 plus their all-(p-1)-tail companions.
Rat sup_norm_estimate(const std::function<Rat(const PAdicRational&)>& f, Prime p, Prime q,
                      std::int64_t N);

}  // namespace frames
