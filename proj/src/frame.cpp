#include "frames/frame.hpp"

#include <algorithm>

namespace frames {

Frame::Frame(Prime p, std::string name, int dimension, RationalClassifier on_rational,
             StreamClassifier on_stream)
    : p_(p),
      name_(std::move(name)),
      dimension_(dimension),
      on_rational_(std::move(on_rational)),
      on_stream_(std::move(on_stream)) {
    if (dimension_ < 1) throw std::invalid_argument("Frame: dimension must be >= 1");
}

std::optional<FrameAssignment> Frame::assign(const Point& x) const {
    if (std::holds_alternative<PAdicRational>(x)) return assign(std::get<PAdicRational>(x));
    return assign(std::get<DigitStream>(x));
}

Frame standard_frame(Prime p, Prime q) {
    if (p == q) throw std::domain_error("EQUAL_PRIMES: the standard frame needs p != q");
    const Place qv = Place::finite(q);
    return Frame(
        p, "standard(" + std::to_string(p.value()) + "," + std::to_string(q.value()) + ")", 1,
        [qv](const PAdicRational& z) -> FrameAssignment {
            if (z.is_nonneg_integer()) return {false, {Place::infinite()}};
            return {false, {qv}};
        },
        [qv](const DigitStream&) -> std::optional<FrameAssignment> {
            // Streams house irrational points, which all lie in Z_p'.
            return FrameAssignment{false, {qv}};
        });
}

Frame partition_frame(Prime p, std::vector<Place> places_by_digit) {
    if (places_by_digit.size() != static_cast<std::size_t>(p.value() - 1))
        throw std::invalid_argument("partition_frame: need one place per digit 1..p-1");
    auto cells = std::make_shared<std::vector<Place>>(std::move(places_by_digit));
    return Frame(
        p, "partition(" + std::to_string(p.value()) + ")", 1,
        [p, cells](const PAdicRational& z) -> FrameAssignment {
            if (z.is_nonneg_integer()) return {false, {Place::infinite()}};
            // Digit j occurs infinitely often in z iff j occurs in the period;
            // the lowest such j wins.
            for (digit_t j = 1; j < p.value(); ++j)
                for (digit_t d : z.period())
                    if (d == j) return {false, {(*cells)[static_cast<std::size_t>(j - 1)]}};
            throw std::logic_error("partition_frame: canonical non-integer point with all-zero period");
        },
        [p, cells](const DigitStream& z) -> std::optional<FrameAssignment> {
            for (digit_t j = 1; j < p.value(); ++j) {
                switch (z.tail(j)) {
                    case TailFlag::InfinitelyMany:
                        return FrameAssignment{false, {(*cells)[static_cast<std::size_t>(j - 1)]}};
                    case TailFlag::Unknown:
                        return std::nullopt;
                    case TailFlag::FinitelyMany:
                        break;
                }
            }
            // All nonzero digits finite would mean an N_0 point.
            return FrameAssignment{false, {Place::infinite()}};
        });
}

Frame fseries_frame(const FSeriesSpec& spec) {
    auto shared = std::make_shared<FSeriesSpec>(spec);
    std::string label = "fseries(p=" + std::to_string(spec.p.value()) + ")";
    return Frame(
        spec.p, label, 1,
        [shared](const PAdicRational& z) -> FrameAssignment {
            auto places = classify(*shared, z).places;
            if (places.empty()) return {true, {}};
            return {false, std::move(places)};
        },
        [shared](const DigitStream& z) -> std::optional<FrameAssignment> {
            auto places = classify_stream(*shared, z);
            if (!places) return std::nullopt;
            if (places->empty()) return FrameAssignment{true, {}};
            return FrameAssignment{false, std::move(*places)};
        });
}

DegreeEstimate degree(const Frame& frame, const std::vector<Point>& sample) {
    if (sample.empty()) throw std::invalid_argument("degree: sample must be nonempty");
    DegreeEstimate est{0, {}};
    for (const Point& x : sample) {
        auto assignment = frame.assign(x);
        if (!assignment) throw std::domain_error("REFUSED: undecidable stream input in degree sample");
        for (const Place& v : assignment->places) est.places.insert(v);
    }
    est.degree = static_cast<std::int64_t>(est.places.size());
    return est;
}

std::set<Place> FrameValue::places() const {
    std::set<Place> out;
    for (const auto& [v, _] : entries_) out.insert(v);
    return out;
}

const PlaceValue& FrameValue::at(const Place& v) const {
    auto it = entries_.find(v);
    if (it == entries_.end()) throw std::domain_error("FrameValue: no entry at place " + v.to_string());
    return it->second;
}

namespace {

// Certified partial-sum generator for a stream at a finite place where
// |d|_ell = 1 and all |q_j|_ell <= 1: the term bound ell^{-E} with
// E = sum_j v_ell(q_j) #_j is nonincreasing, so scanning digits until
// E >= k certifies |S - S_N|_ell <= ell^{-k}.
ApproxValue stream_approx(const FSeriesSpec& spec, const DigitStream& z, Prime ell) {
    auto spec_ptr = std::make_shared<FSeriesSpec>(spec);
    auto stream_ptr = std::make_shared<DigitStream>(z);
    std::vector<std::int64_t> weight(static_cast<std::size_t>(spec.p.value()));
    for (digit_t j = 0; j < spec.p.value(); ++j) {
        const auto v = valuation(ell, spec.q[static_cast<std::size_t>(j)]);
        weight[static_cast<std::size_t>(j)] = v.value();
        if (v.value() < 0) throw std::logic_error("stream_approx: place not certified");
    }
    return ApproxValue{[spec_ptr, stream_ptr, weight](int k) -> Rat {
        constexpr std::int64_t kMaxDigits = 1 << 20;
        Rat sum = 0;
        Rat factor = 1;  // prod q_j^{#_j([z]_{p^n})}, lambda-based zero count
        Rat pending = 1;
        std::int64_t exponent = 0, pending_exponent = 0;
        const Rat inv_d = Rat(1) / spec_ptr->d;
        Rat dpow = 1;
        for (std::int64_t n = 0; n < kMaxDigits; ++n) {
            sum += dpow * factor;
            if (exponent >= k) return sum;
            const digit_t j = stream_ptr->digit(n);
            if (j == 0) {
                pending *= spec_ptr->q[0];
                pending_exponent += weight[0];
            } else {
                factor *= pending * spec_ptr->q[static_cast<std::size_t>(j)];
                exponent += pending_exponent + weight[static_cast<std::size_t>(j)];
                pending = 1;
                pending_exponent = 0;
            }
            dpow *= inv_d;
        }
        throw std::domain_error("stream_approx: generator exhausted the digit budget; declared tail flags look violated");
    }};
}

}  // namespace

FrameValue frame_limit(const Frame& frame, const FSeriesSpec& spec, const Point& x, int precision) {
    auto assignment = frame.assign(x);
    if (!assignment) throw std::domain_error("REFUSED: undecidable stream input");
    std::map<Place, PlaceValue> entries;
    if (std::holds_alternative<PAdicRational>(x)) {
        const auto& z = std::get<PAdicRational>(x);
        const ConvergenceReport report = classify(spec, z);
        std::optional<ClosedForm> cf;
        if (report.ratio != 1) cf = closed_form(spec, z);
        for (const Place& v : assignment->places) {
            if (cf && abs_value(v, report.ratio) < 1)
                entries.emplace(v, cf->value);
            else
                entries.emplace(v, DivergentTag{});
        }
    } else {
        const auto& z = std::get<DigitStream>(x);
        auto certified = classify_stream(spec, z);
        if (!certified) throw std::domain_error("REFUSED: undecidable stream input");
        for (const Place& v : assignment->places) {
            if (v.is_finite() && certified->count(v)) {
                auto g = stream_approx(spec, z, v.ell());
                g.at(precision);  // demand the requested precision up front
                entries.emplace(v, std::move(g));
            } else {
                entries.emplace(v, DivergentTag{});
            }
        }
    }
    return FrameValue(std::move(entries));
}

namespace {

void require_same_places(const FrameValue& f, const FrameValue& g) {
    if (f.places() != g.places())
        throw std::domain_error("PLACE_SET_MISMATCH: values were produced at different points");
}

PlaceValue combine(const Place& v, const PlaceValue& a, const PlaceValue& b, bool multiply) {
    if (std::holds_alternative<DivergentTag>(a) || std::holds_alternative<DivergentTag>(b))
        return DivergentTag{};
    if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b)) {
        const Rat& x = std::get<Rat>(a);
        const Rat& y = std::get<Rat>(b);
        return multiply ? Rat(x * y) : Rat(x + y);
    }
    // APPROX entries combine by combining generators.  All certified stream
    // sums are ell-adic integers, so products keep the ell^{-k} guarantee.
    auto value_of = [](const PlaceValue& pv) {
        return std::holds_alternative<Rat>(pv)
                   ? std::function<Rat(int)>([x = std::get<Rat>(pv)](int) { return x; })
                   : std::get<ApproxValue>(pv).at;
    };
    auto fa = value_of(a);
    auto fb = value_of(b);
    if (v.is_infinite() && multiply)
        throw std::domain_error("FrameValue: archimedean APPROX products are not supported");
    return ApproxValue{[fa, fb, multiply](int k) -> Rat {
        const Rat x = fa(k), y = fb(k);
        return multiply ? Rat(x * y) : Rat(x + y);
    }};
}

}  // namespace

FrameValue fv_add(const FrameValue& f, const FrameValue& g) {
    require_same_places(f, g);
    std::map<Place, PlaceValue> out;
    for (const auto& [v, a] : f.entries()) out.emplace(v, combine(v, a, g.at(v), false));
    return FrameValue(std::move(out));
}

FrameValue fv_mul(const FrameValue& f, const FrameValue& g) {
    require_same_places(f, g);
    std::map<Place, PlaceValue> out;
    for (const auto& [v, a] : f.entries()) out.emplace(v, combine(v, a, g.at(v), true));
    return FrameValue(std::move(out));
}

FrameValue fv_scale(const Rat& c, const FrameValue& f) {
    std::map<Place, PlaceValue> out;
    for (const auto& [v, a] : f.entries()) {
        if (std::holds_alternative<Rat>(a))
            out.emplace(v, Rat(c * std::get<Rat>(a)));
        else if (std::holds_alternative<ApproxValue>(a)) {
            auto g = std::get<ApproxValue>(a).at;
            out.emplace(v, ApproxValue{[c, g](int k) { return Rat(c * g(k)); }});
        } else
            out.emplace(v, DivergentTag{});
    }
    return FrameValue(std::move(out));
}

FrameValue fv_zero(const std::set<Place>& places) {
    std::map<Place, PlaceValue> out;
    for (const Place& v : places) out.emplace(v, Rat(0));
    return FrameValue(std::move(out));
}

FrameValue fv_one(const std::set<Place>& places) {
    std::map<Place, PlaceValue> out;
    for (const Place& v : places) out.emplace(v, Rat(1));
    return FrameValue(std::move(out));
}

ExtensionWitness extension_witness(const std::vector<FrameValue>& values, const ExtensionTarget& target) {
    if (!target.ring_of_integers) return {true, std::nullopt};  // all rationals embed in Q_q
    for (const FrameValue& fv : values)
        for (const auto& [v, entry] : fv.entries())
            if (std::holds_alternative<Rat>(entry)) {
                const Rat& x = std::get<Rat>(entry);
                if (den(x) % target.q.value() == 0) return {false, x};
            }
    return {true, std::nullopt};
}

Rat product_norm(const std::vector<std::vector<Rat>>& magnitudes) {
    if (magnitudes.empty()) throw std::domain_error("EMPTY_INPUT: product_norm needs at least one place");
    Rat best = -1;
    for (const auto& tuple : magnitudes) {
        if (tuple.empty()) throw std::domain_error("EMPTY_INPUT: empty magnitude tuple");
        for (const Rat& m : tuple) best = std::max(best, m);
    }
    return best;
}

Rat sup_norm_estimate(const std::function<Rat(const PAdicRational&)>& f, Prime p, Prime q,
                      std::int64_t N) {
    const Place qv = Place::finite(q);
    const Int modulus = pow_int(Int(p.value()), N);
    Rat best = 0;
    for (Int r = 0; r < modulus; ++r) {
        best = std::max(best, abs_value(qv, f(PAdicRational::from_integer(p, r))));
        // All-(p-1)-tail companion: the same N low digits followed by the
        // digit p-1 forever, i.e. the point r - p^N.
        std::vector<digit_t> pre;
        Int m = r;
        for (std::int64_t i = 0; i < N; ++i) {
            pre.push_back(static_cast<digit_t>(m % p.value()));
            m /= p.value();
        }
        auto companion = PAdicRational::from_digits(p, std::move(pre), {p.value() - 1});
        best = std::max(best, abs_value(qv, f(companion)));
    }
    return best;
}

}  // namespace frames
