#pragma once

// Places of Q and their absolute values.  Every convergence statement in the
// library is indexed by a Place: a finite prime ell or the infinite place.
// Absolute values are returned as exact rationals so that comparisons against
// 1 are decided exactly.

#include "frames/digits.hpp"
#include "frames/numbers.hpp"

#include <compare>
#include <set>
#include <string>

namespace frames {

class Place {
public:
    static Place infinite() { return Place(0); }
    static Place finite(Prime ell) { return Place(ell.value()); }

    bool is_infinite() const { return ell_ == 0; }
    bool is_finite() const { return ell_ != 0; }
    Prime ell() const {
        if (is_infinite()) throw std::domain_error("Place: the infinite place has no prime");
        return Prime(ell_);
    }

    // "inf" or the decimal prime; used in JSON reports and CLI flags.
    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(ell_); }
    static Place parse(const std::string& s);

    friend bool operator==(const Place& a, const Place& b) = default;
    // Order: infinite first, then finite places by prime.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) = default;

private:
    explicit Place(std::int64_t ell) : ell_(ell) {}
    std::int64_t ell_;  // 0 encodes the infinite place
};

class ExtendedValuation {
public:
    static ExtendedValuation plus_infinity() { return ExtendedValuation(true, 0); }
    static ExtendedValuation of(std::int64_t v) { return ExtendedValuation(false, v); }

    bool is_plus_infinity() const { return infinite_; }
    std::int64_t value() const {
        if (infinite_) throw std::domain_error("ExtendedValuation: +infinity has no finite value");
        return v_;
    }
    friend bool operator==(const ExtendedValuation&, const ExtendedValuation&) = default;

private:
    ExtendedValuation(bool inf, std::int64_t v) : infinite_(inf), v_(v) {}
    bool infinite_;
    std::int64_t v_;
};

// v_ell(x) = (exponent of ell in the numerator) - (exponent in the denominator);
// +infinity for x = 0.
ExtendedValuation valuation(Prime ell, const Rat& x);

// Exact absolute value at a place: ell^{-v_ell(x)} (0 for x = 0) at finite
// places, ordinary |x| at the infinite place.
Rat abs_value(const Place& v, const Rat& x);

// The trivial absolute value, exposed as a predicate.
inline bool is_nonzero(const Rat& x) { return x != 0; }

}  // namespace frames
