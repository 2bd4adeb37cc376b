#pragma once

// The generalized digit-counting series
//
//     S_{d; q_0,...,q_{p-1}}(z) = sum_{n>=0} (1/d^n) prod_j q_j^{#_{p:j}([z]_{p^n})}
//
// with exact terms and partial sums, per-place convergence classification,
// and the geometric closed form A + B/(1-r) for eventually periodic points.
// The same rational value serves every completion where the terms decay.

#include "frames/digits.hpp"
#include "frames/places.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace frames {

struct FSeriesSpec {
    Prime p;
    Rat d;
    std::vector<Rat> q;  // q_0 .. q_{p-1}, all positive

    FSeriesSpec(Prime p_, Rat d_, std::vector<Rat> q_);

    // The two-parameter series with terms Q^{#_1([z]_{2^n})} / P^n.
    static FSeriesSpec spq(const Rat& P, const Rat& Q);
};

struct ConvergenceReport {
    std::set<Place> places;  // exactly the places where the terms decay
    Rat ratio;               // per-period decay factor rho
    std::int64_t period_length;
};

struct ClosedForm {
    Rat A;
    Rat B;
    Rat r;
    Rat value;    // A + B/(1-r)
    bool formal;  // true when no completion sums the series (empty place set)
};

Rat term(const FSeriesSpec& spec, const PAdicRational& z, std::int64_t n);
Rat term(const FSeriesSpec& spec, const DigitStream& z, std::int64_t n);

Rat partial_sum(const FSeriesSpec& spec, const PAdicRational& z, std::int64_t N);
Rat partial_sum(const FSeriesSpec& spec, const DigitStream& z, std::int64_t N);

// Candidate places for |rho|_v != 1: the infinite place plus every prime
// dividing a numerator or denominator of d or some q_j.  At all other places
// every absolute value involved is 1, so terms cannot decay there.
std::vector<Place> candidate_places(const FSeriesSpec& spec);

ConvergenceReport classify(const FSeriesSpec& spec, const PAdicRational& z);

// Sufficient digit-count classification for declared streams: FINITE(ell) is
// certified when |d|_ell = 1, every |q_i|_ell <= 1, and some digit j with
// |q_j|_ell < 1 occurs infinitely often.  Returns nullopt (REFUSED) when the
// decision at some candidate place rests on an Unknown tail flag.
std::optional<std::set<Place>> classify_stream(const FSeriesSpec& spec, const DigitStream& z);

// Throws std::domain_error("RATIO_ONE...") when rho = 1.
ClosedForm closed_form(const FSeriesSpec& spec, const PAdicRational& z);

// The affine branch map: S(pz + k) = (q_k/d) S(z) + 1.
Rat apply_functional_equation(const FSeriesSpec& spec, digit_t k, const Rat& s);

// Branch data of f = alpha*S + beta: slopes q_j/d and intercepts
// gamma_j = alpha + beta (1 - q_j/d).
std::vector<std::pair<Rat, Rat>> conjugate(const FSeriesSpec& spec, const Rat& alpha, const Rat& beta);

}  // namespace frames
