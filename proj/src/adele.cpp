#include "frames/adele.hpp"

namespace frames {

const Rat& AdeleVector::diagonal_value() const {
    if (!is_diagonal()) throw std::domain_error("AdeleVector: not a diagonal vector");
    return std::get<DiagonalTail>(tail_).value;
}

AdeleEntry AdeleVector::entry_at(const Place& v) const {
    auto it = explicit_.find(v);
    if (it != explicit_.end()) return it->second;
    if (std::holds_alternative<DiagonalTail>(tail_)) return std::get<DiagonalTail>(tail_).value;
    if (std::holds_alternative<ZeroTail>(tail_)) return Rat(0);
    return InfinityMarker{};
}

AdeleVector embed_rational(const Rat& x) {
    return AdeleVector({}, DiagonalTail{x});
}

namespace {

AdeleEntry combine_entries(const AdeleEntry& a, const AdeleEntry& b, bool multiply) {
    if (std::holds_alternative<InfinityMarker>(a) || std::holds_alternative<InfinityMarker>(b))
        return InfinityMarker{};  // INFINITY_ARITHMETIC: the entry is poisoned
    if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b)) {
        const Rat& x = std::get<Rat>(a);
        const Rat& y = std::get<Rat>(b);
        return multiply ? Rat(x * y) : Rat(x + y);
    }
    auto fn_of = [](const AdeleEntry& e) {
        return std::holds_alternative<Rat>(e)
                   ? std::function<Rat(int)>([x = std::get<Rat>(e)](int) { return x; })
                   : std::get<ApproxValue>(e).at;
    };
    auto fa = fn_of(a);
    auto fb = fn_of(b);
    return ApproxValue{[fa, fb, multiply](int k) -> Rat {
        const Rat x = fa(k), y = fb(k);
        return multiply ? Rat(x * y) : Rat(x + y);
    }};
}

AdeleTail combine_tails(const AdeleTail& a, const AdeleTail& b, bool multiply) {
    if (std::holds_alternative<InfinityTail>(a) || std::holds_alternative<InfinityTail>(b))
        return InfinityTail{};
    auto value_of = [](const AdeleTail& t) {
        return std::holds_alternative<DiagonalTail>(t) ? std::get<DiagonalTail>(t).value : Rat(0);
    };
    const Rat x = value_of(a), y = value_of(b);
    const Rat combined = multiply ? Rat(x * y) : Rat(x + y);
    if (std::holds_alternative<ZeroTail>(a) && std::holds_alternative<ZeroTail>(b))
        return ZeroTail{};
    return DiagonalTail{combined};
}

AdeleVector combine(const AdeleVector& u, const AdeleVector& v, bool multiply) {
    std::map<Place, AdeleEntry> entries;
    for (const auto& [place, _] : u.explicit_entries())
        entries.emplace(place, combine_entries(u.entry_at(place), v.entry_at(place), multiply));
    for (const auto& [place, _] : v.explicit_entries())
        if (!entries.count(place))
            entries.emplace(place, combine_entries(u.entry_at(place), v.entry_at(place), multiply));
    return AdeleVector(std::move(entries), combine_tails(u.tail(), v.tail(), multiply));
}

}  // namespace

AdeleVector adele_add(const AdeleVector& u, const AdeleVector& v) { return combine(u, v, false); }
AdeleVector adele_mul(const AdeleVector& u, const AdeleVector& v) { return combine(u, v, true); }

bool restricted_product_ok(const AdeleVector& u) {
    // Non-integral entries can occur only at the finitely many explicit
    // places and at the denominator primes of a diagonal tail value.  A
    // rational tail has a finite denominator by construction, so the check
    // reduces to the tail being an actual number (not the infinity marker)
    // or the explicit set being the only irregularity.
    if (std::holds_alternative<DiagonalTail>(u.tail()))
        return den(std::get<DiagonalTail>(u.tail()).value) >= 1;
    return true;
}

AdeleVector from_fseries(const FSeriesSpec& spec, const PAdicRational& z, TailPolicy) {
    const ClosedForm cf = closed_form(spec, z);
    // Rational input: the same rational sums the series at every convergent
    // place (formal sum if there are none), so the vector is diagonal.
    return embed_rational(cf.value);
}

AdeleVector from_fseries(const FSeriesSpec& spec, const DigitStream& z, TailPolicy policy) {
    auto certified = classify_stream(spec, z);
    if (!certified) throw std::domain_error("REFUSED: undecidable tail flags");
    Frame frame = fseries_frame(spec);
    FrameValue limits = frame_limit(frame, spec, Point(z), 12);
    std::map<Place, AdeleEntry> entries;
    for (const auto& [place, value] : limits.entries()) {
        if (std::holds_alternative<ApproxValue>(value))
            entries.emplace(place, std::get<ApproxValue>(value));
        else if (std::holds_alternative<Rat>(value))
            entries.emplace(place, std::get<Rat>(value));
    }
    AdeleTail tail = policy == TailPolicy::Zero ? AdeleTail(ZeroTail{}) : AdeleTail(InfinityTail{});
    return AdeleVector(std::move(entries), std::move(tail));
}

bool projectively_equal(const AdeleVector& u, const AdeleVector& v) {
    if (!u.is_diagonal() || !v.is_diagonal())
        throw std::domain_error("projectively_equal: defined for diagonal vectors");
    const Rat& x = u.diagonal_value();
    const Rat& y = v.diagonal_value();
    if (x == 0 || y == 0) return x == y;
    return true;  // lambda = y / x is a nonzero rational
}

}  // namespace frames
