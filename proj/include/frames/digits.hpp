#pragma once

// Rational p-adic integers as exact digit data.
//
// A p-adic integer with an eventually periodic Hensel expansion is exactly a
// rational number whose denominator is coprime to p.  PAdicRational stores the
// preperiod and period digit words in canonical form, so equality of values is
// structural equality.  DigitStream covers the remaining (irrational) points
// through an on-demand digit generator plus declared tail facts.
//
// The digit-counting functions here (digit_count, lambda, b_ell, eta2) are the
// combinatorial layer every series module is built on.

#include "frames/numbers.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace frames {

using digit_t = std::int64_t;

class Prime {
public:
    explicit Prime(std::int64_t v);
    std::int64_t value() const { return v_; }
    friend bool operator==(const Prime& a, const Prime& b) = default;
    friend auto operator<=>(const Prime& a, const Prime& b) = default;

private:
    std::int64_t v_;
};

class PAdicRational {
public:
    // Canonicalizes: minimal period word, then the shortest preperiod such
    // that the remainder is purely periodic.
    static PAdicRational from_digits(Prime p, std::vector<digit_t> pre, std::vector<digit_t> per);
    static PAdicRational from_integer(Prime p, const Int& n);
    // Inverse Hensel expansion; requires den(x) coprime to p.
    static PAdicRational from_rational(Prime p, const Rat& x);

    const Prime& prime() const { return p_; }
    const std::vector<digit_t>& preperiod() const { return pre_; }
    const std::vector<digit_t>& period() const { return per_; }

    // z in N_0 is encoded as period == [0].
    bool is_nonneg_integer() const { return per_.size() == 1 && per_[0] == 0; }
    bool is_zero() const { return pre_.empty() && is_nonneg_integer(); }

    digit_t digit(std::int64_t n) const;
    // [z]_{p^n}, the unique integer in [0, p^n) congruent to z mod p^n.
    Int project(std::int64_t n) const;
    Rat to_rational() const;

    // Count of digit j among positions 0..n-1.
    Int count_digit_below(digit_t j, std::int64_t n) const;
    // lambda_p([z]_{p^n}) = number of base-p digits of the projection.
    Int lambda_of_projection(std::int64_t n) const;
    // #_{p:j}([z]_{p^n}); j = 0 uses the lambda-based zero count.
    Int count_in_projection(digit_t j, std::int64_t n) const;

    // v_p(z): index of the first nonzero digit; nullopt encodes +infinity (z = 0).
    std::optional<std::int64_t> valuation() const;

    friend bool operator==(const PAdicRational& a, const PAdicRational& b) = default;

private:
    PAdicRational(Prime p, std::vector<digit_t> pre, std::vector<digit_t> per)
        : p_(p), pre_(std::move(pre)), per_(std::move(per)) {}

    Prime p_;
    std::vector<digit_t> pre_;
    std::vector<digit_t> per_;
};

// The point p*z + k (digit k prepended), canonical.
PAdicRational shift(const PAdicRational& z, digit_t k);

enum class TailFlag { FinitelyMany, InfinitelyMany, Unknown };

// Irrational points: a deterministic digit generator plus one declared tail
// flag per digit value.  Flags are data supplied by the constructor, never
// inferred; no finite digit prefix can certify them.
class DigitStream {
public:
    DigitStream(Prime p, std::function<digit_t(std::int64_t)> generator,
                std::vector<TailFlag> tail_profile);

    const Prime& prime() const { return p_; }
    digit_t digit(std::int64_t n) const;
    TailFlag tail(digit_t j) const;
    Int project(std::int64_t n) const;

private:
    Prime p_;
    std::function<digit_t(std::int64_t)> gen_;
    std::vector<TailFlag> tail_;
};

inline Int project(const PAdicRational& z, std::int64_t n) { return z.project(n); }
inline Int project(const DigitStream& z, std::int64_t n) { return z.project(n); }

// #_{p:j}(m): occurrences of j among the base-p digits of m >= 0; the j = 0
// count is lambda-based, so leading zeros do not exist and #_{p:0}(0) = 0.
Int digit_count(Prime p, digit_t j, const Int& m);

// lambda_p(m) = number of base-p digits of m; lambda_p(0) = 0.
Int lambda(Prime p, const Int& m);

// B_ell(n): 0 for n = 0, else n / (1 - ell^{lambda_ell(n)}): the rational
// whose ell-adic digits repeat n's digit string forever.
Rat b_ell(Prime ell, const Int& n);

// B_2 extended to all of Z_2 (identity off N_0).
PAdicRational b2_extended(const PAdicRational& z);

// eta_2: digit reflection Z_2 -> [0,1], sum j_n / 2^{n+1}; exact rational.
Rat eta2(const PAdicRational& z);

}  // namespace frames
