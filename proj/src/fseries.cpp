#include "frames/fseries.hpp"

#include <algorithm>

namespace frames {

FSeriesSpec::FSeriesSpec(Prime p_, Rat d_, std::vector<Rat> q_)
    : p(p_), d(std::move(d_)), q(std::move(q_)) {
    if (d <= 0) throw std::invalid_argument("FSeriesSpec: d must be positive");
    if (q.size() != static_cast<std::size_t>(p.value()))
        throw std::invalid_argument("FSeriesSpec: need exactly p values q_0..q_{p-1}");
    for (const Rat& qi : q)
        if (qi <= 0) throw std::invalid_argument("FSeriesSpec: every q_j must be positive");
}

FSeriesSpec FSeriesSpec::spq(const Rat& P, const Rat& Q) {
    return FSeriesSpec(Prime(2), P, {Rat(1), Q});
}

Rat term(const FSeriesSpec& spec, const PAdicRational& z, std::int64_t n) {
    if (z.prime() != spec.p) throw std::domain_error("PRIME_MISMATCH: point and series use different p");
    if (n < 0) throw std::invalid_argument("term: n must be >= 0");
    Rat t = pow_rat(spec.d, -n);
    for (digit_t j = 0; j < spec.p.value(); ++j) {
        const Int e = z.count_in_projection(j, n);
        if (e != 0) t *= pow_rat(spec.q[static_cast<std::size_t>(j)], e.convert_to<std::int64_t>());
    }
    return t;
}

namespace {

// Incremental evaluator for stream points: maintains prod_j q_j^{#_{p:j}} of
// the current projection.  Zeros only count once they sit below a nonzero
// digit, so pending zeros are committed when the next nonzero digit arrives.
class StreamTermEvaluator {
public:
    StreamTermEvaluator(const FSeriesSpec& spec, const DigitStream& z) : spec_(spec), z_(z) {
        if (z.prime() != spec.p) throw std::domain_error("PRIME_MISMATCH: point and series use different p");
    }

    // Advances to position n (term index), returning the term at n.
    Rat term_at(std::int64_t n) {
        while (next_ <= n) step();
        return pow_rat(spec_.d, -n) * factors_[static_cast<std::size_t>(n)];
    }

private:
    void step() {
        const std::int64_t n = next_;
        factors_.push_back(current_);
        const digit_t j = z_.digit(n);
        if (j == 0) {
            ++pending_zeros_;
        } else {
            if (pending_zeros_ > 0) {
                current_ *= pow_rat(spec_.q[0], pending_zeros_);
                pending_zeros_ = 0;
            }
            current_ *= spec_.q[static_cast<std::size_t>(j)];
        }
        ++next_;
    }

    const FSeriesSpec& spec_;
    const DigitStream& z_;
    std::vector<Rat> factors_{};  // factors_[n] = prod_j q_j^{#_j([z]_{p^n})}
    Rat current_ = 1;
    std::int64_t pending_zeros_ = 0;
    std::int64_t next_ = 0;
};

}  // namespace

Rat term(const FSeriesSpec& spec, const DigitStream& z, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("term: n must be >= 0");
    StreamTermEvaluator ev(spec, z);
    return ev.term_at(n);
}

Rat partial_sum(const FSeriesSpec& spec, const PAdicRational& z, std::int64_t N) {
    if (N < 0) throw std::invalid_argument("partial_sum: N must be >= 0");
    Rat s = 0;
    for (std::int64_t n = 0; n < N; ++n) s += term(spec, z, n);
    return s;
}

Rat partial_sum(const FSeriesSpec& spec, const DigitStream& z, std::int64_t N) {
    if (N < 0) throw std::invalid_argument("partial_sum: N must be >= 0");
    StreamTermEvaluator ev(spec, z);
    Rat s = 0;
    for (std::int64_t n = 0; n < N; ++n) s += ev.term_at(n);
    return s;
}

std::vector<Place> candidate_places(const FSeriesSpec& spec) {
    std::set<std::int64_t> primes;
    auto absorb = [&primes](const Rat& x) {
        for (std::int64_t f : prime_factors(num(x))) primes.insert(f);
        for (std::int64_t f : prime_factors(den(x))) primes.insert(f);
    };
    absorb(spec.d);
    for (const Rat& qi : spec.q) absorb(qi);
    std::vector<Place> out;
    out.push_back(Place::infinite());
    for (std::int64_t f : primes) out.push_back(Place::finite(Prime(f)));
    return out;
}

namespace {

// Per-period decay factor.  Trailing zeros past a nonnegative integer never
// raise #_{p:0}, so that case is a plain geometric series in 1/d.
std::pair<Rat, std::int64_t> decay_ratio(const FSeriesSpec& spec, const PAdicRational& z) {
    if (z.is_nonneg_integer()) return {Rat(1) / spec.d, 1};
    const auto& per = z.period();
    const std::int64_t L = static_cast<std::int64_t>(per.size());
    Rat rho = pow_rat(spec.d, -L);
    for (digit_t d : per) rho *= spec.q[static_cast<std::size_t>(d)];
    return {rho, L};
}

}  // namespace

ConvergenceReport classify(const FSeriesSpec& spec, const PAdicRational& z) {
    if (z.prime() != spec.p) throw std::domain_error("PRIME_MISMATCH: point and series use different p");
    auto [rho, L] = decay_ratio(spec, z);
    ConvergenceReport report{{}, rho, L};
    for (const Place& v : candidate_places(spec))
        if (abs_value(v, rho) < 1) report.places.insert(v);
    return report;
}

std::optional<std::set<Place>> classify_stream(const FSeriesSpec& spec, const DigitStream& z) {
    if (z.prime() != spec.p) throw std::domain_error("PRIME_MISMATCH: point and series use different p");
    std::set<Place> places;
    for (const Place& v : candidate_places(spec)) {
        if (v.is_infinite()) continue;  // never certified from tail flags alone
        if (abs_value(v, spec.d) != 1) continue;
        bool all_small = true;
        for (const Rat& qi : spec.q)
            if (abs_value(v, qi) > 1) all_small = false;
        if (!all_small) continue;
        bool certified = false, unknown_blocks = false;
        for (digit_t j = 0; j < spec.p.value(); ++j) {
            if (abs_value(v, spec.q[static_cast<std::size_t>(j)]) >= 1) continue;
            const TailFlag flag = z.tail(j);
            if (flag == TailFlag::InfinitelyMany) certified = true;
            if (flag == TailFlag::Unknown) unknown_blocks = true;
        }
        if (certified)
            places.insert(v);
        else if (unknown_blocks)
            return std::nullopt;  // REFUSED: decision rests on an Unknown flag
    }
    return places;
}

ClosedForm closed_form(const FSeriesSpec& spec, const PAdicRational& z) {
    const ConvergenceReport report = classify(spec, z);
    const Rat& rho = report.ratio;
    if (rho == 1) throw std::domain_error("RATIO_ONE: terms do not decay at any place");
    const std::int64_t L = report.period_length;
    // Beyond |pre| + |per| the terms are exactly geometric per period block.
    const std::int64_t n0 =
        static_cast<std::int64_t>(z.preperiod().size()) + static_cast<std::int64_t>(z.period().size());
    Rat A = 0;
    for (std::int64_t n = 0; n < n0; ++n) A += term(spec, z, n);
    Rat B = 0;
    for (std::int64_t k = 0; k < L; ++k) B += term(spec, z, n0 + k);
    ClosedForm cf{A, B, rho, A + B / (Rat(1) - rho), report.places.empty()};
    return cf;
}

Rat apply_functional_equation(const FSeriesSpec& spec, digit_t k, const Rat& s) {
    if (k < 0 || k >= spec.p.value()) throw std::domain_error("apply_functional_equation: digit out of range");
    return spec.q[static_cast<std::size_t>(k)] / spec.d * s + 1;
}

std::vector<std::pair<Rat, Rat>> conjugate(const FSeriesSpec& spec, const Rat& alpha, const Rat& beta) {
    if (alpha == 0) throw std::domain_error("ZERO_ALPHA: conjugation needs alpha != 0");
    std::vector<std::pair<Rat, Rat>> branches;
    branches.reserve(spec.q.size());
    for (const Rat& qj : spec.q) {
        const Rat slope = qj / spec.d;
        branches.emplace_back(slope, alpha + beta * (Rat(1) - slope));
    }
    return branches;
}

}  // namespace frames
