#pragma once

// Shared test utilities: seeded generators and independent oracles.  The
// oracles recompute digit data by plain repeated division so they share no
// code path with the library functions they check.

#include "frames/digits.hpp"
#include "frames/fseries.hpp"
#include "frames/places.hpp"

#include <random>
#include <vector>

namespace frames::test {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Int rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    return Int(dist(rng));
}

inline Rat rand_rational(std::mt19937_64& rng, std::int64_t max_num = 50, std::int64_t max_den = 20) {
    std::uniform_int_distribution<std::int64_t> num_dist(-max_num, max_num);
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
    return Rat(Int(num_dist(rng)), Int(den_dist(rng)));
}

inline Rat rand_positive_rational(std::mt19937_64& rng, std::int64_t max_num = 12,
                                  std::int64_t max_den = 6) {
    std::uniform_int_distribution<std::int64_t> num_dist(1, max_num);
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
    return Rat(Int(num_dist(rng)), Int(den_dist(rng)));
}

inline PAdicRational rand_point(std::mt19937_64& rng, Prime p, std::int64_t pre_max = 4,
                                std::int64_t per_max = 4) {
    std::uniform_int_distribution<std::int64_t> pre_len(0, pre_max);
    std::uniform_int_distribution<std::int64_t> per_len(1, per_max);
    std::uniform_int_distribution<std::int64_t> dig(0, p.value() - 1);
    std::vector<digit_t> pre(static_cast<std::size_t>(pre_len(rng)));
    std::vector<digit_t> per(static_cast<std::size_t>(per_len(rng)));
    for (auto& d : pre) d = dig(rng);
    for (auto& d : per) d = dig(rng);
    return PAdicRational::from_digits(p, std::move(pre), std::move(per));
}

// Base-p digits of m >= 0, least significant first, by repeated division.
inline std::vector<digit_t> oracle_digits(Int m, std::int64_t p) {
    std::vector<digit_t> out;
    while (m != 0) {
        out.push_back(static_cast<digit_t>(m % p));
        m /= p;
    }
    return out;
}

inline Int oracle_count(const Int& m, std::int64_t p, digit_t j) {
    Int c = 0;
    for (digit_t d : oracle_digits(m, p))
        if (d == j) ++c;
    return c;
}

// v_ell of a nonzero rational, by direct division.
inline std::int64_t oracle_valuation(Rat x, std::int64_t ell) {
    Int n = num(x), d = den(x);
    std::int64_t v = 0;
    while (n % ell == 0) {
        n /= ell;
        ++v;
    }
    while (d % ell == 0) {
        d /= ell;
        --v;
    }
    return v;
}

}  // namespace frames::test
