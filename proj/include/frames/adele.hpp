#pragma once

// Adelic packaging of multi-place series values: finitely many explicit
// place-indexed entries plus a declared tail.  Rationals embed diagonally;
// a rational series point produces a diagonal vector because the same
// rational sums the series in every convergent completion.

#include "frames/frame.hpp"

#include <map>
#include <variant>

namespace frames {

struct InfinityMarker {
    friend bool operator==(const InfinityMarker&, const InfinityMarker&) { return true; }
};

using AdeleEntry = std::variant<Rat, ApproxValue, InfinityMarker>;

struct DiagonalTail {
    Rat value;
};
struct ZeroTail {};
struct InfinityTail {};
using AdeleTail = std::variant<DiagonalTail, ZeroTail, InfinityTail>;

enum class TailPolicy { Zero, Infinity };

class AdeleVector {
public:
    AdeleVector() : tail_(DiagonalTail{Rat(0)}) {}
    AdeleVector(std::map<Place, AdeleEntry> explicit_entries, AdeleTail tail)
        : explicit_(std::move(explicit_entries)), tail_(std::move(tail)) {}

    const std::map<Place, AdeleEntry>& explicit_entries() const { return explicit_; }
    const AdeleTail& tail() const { return tail_; }

    bool is_diagonal() const {
        return explicit_.empty() && std::holds_alternative<DiagonalTail>(tail_);
    }
    const Rat& diagonal_value() const;

    // Entry at a place, resolving the tail for places without explicit data.
    AdeleEntry entry_at(const Place& v) const;

private:
    std::map<Place, AdeleEntry> explicit_;
    AdeleTail tail_;
};

// The diagonal embedding of Q into the adeles.
AdeleVector embed_rational(const Rat& x);

// Component-wise ring operations.  INFINITY is absorbing: combining any value
// with an INFINITY entry poisons that entry (per-entry report, not fatal).
AdeleVector adele_add(const AdeleVector& u, const AdeleVector& v);
AdeleVector adele_mul(const AdeleVector& u, const AdeleVector& v);

// Restricted-product invariant: all but finitely many finite places carry
// integral entries.  Diagonal rationals violate integrality only on their
// denominator's primes, so this always holds for diagonal and zero tails.
bool restricted_product_ok(const AdeleVector& u);

// Adelic realization of a series point.  Rational z: the closed form exists
// (possibly formal) and every entry is the same rational, so the result is
// diagonal and independent of the tail policy.  Irrational stream: explicit
// APPROX entries at each certified place, tail per policy.
AdeleVector from_fseries(const FSeriesSpec& spec, const PAdicRational& z, TailPolicy policy);
AdeleVector from_fseries(const FSeriesSpec& spec, const DigitStream& z, TailPolicy policy);

// Projective equivalence of diagonal vectors: v = lambda * u for a nonzero
// rational lambda.
bool projectively_equal(const AdeleVector& u, const AdeleVector& v);

}  // namespace frames
