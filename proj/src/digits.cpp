#include "frames/digits.hpp"

#include <algorithm>
#include <map>

namespace frames {

Prime::Prime(std::int64_t v) : v_(v) {
    if (!is_prime_value(v)) throw std::invalid_argument("Prime: " + std::to_string(v) + " is not prime");
}

namespace {

void check_digits(const Prime& p, const std::vector<digit_t>& digits) {
    for (digit_t d : digits)
        if (d < 0 || d >= p.value()) throw std::invalid_argument("digit out of range [0, p)");
}

bool is_repetition(const std::vector<digit_t>& word, std::size_t block) {
    for (std::size_t i = block; i < word.size(); ++i)
        if (word[i] != word[i % block]) return false;
    return true;
}

// Minimal period word, then greedily absorb preperiod digits that match the
// rotated-in last period digit.
void canonicalize(std::vector<digit_t>& pre, std::vector<digit_t>& per) {
    for (std::size_t block = 1; block < per.size(); ++block) {
        if (per.size() % block == 0 && is_repetition(per, block)) {
            per.resize(block);
            break;
        }
    }
    while (!pre.empty() && pre.back() == per.back()) {
        per.insert(per.begin(), per.back());
        per.pop_back();
        pre.pop_back();
    }
}

}  // namespace

PAdicRational PAdicRational::from_digits(Prime p, std::vector<digit_t> pre, std::vector<digit_t> per) {
    if (per.empty()) throw std::invalid_argument("PAdicRational: period must be nonempty");
    check_digits(p, pre);
    check_digits(p, per);
    canonicalize(pre, per);
    return PAdicRational(p, std::move(pre), std::move(per));
}

PAdicRational PAdicRational::from_integer(Prime p, const Int& n) {
    if (n < 0) throw std::invalid_argument("from_integer: n must be >= 0");
    std::vector<digit_t> pre;
    Int m = n;
    while (m != 0) {
        pre.push_back(static_cast<digit_t>(m % p.value()));
        m /= p.value();
    }
    return PAdicRational(p, std::move(pre), {0});
}

PAdicRational PAdicRational::from_rational(Prime p, const Rat& x) {
    if (den(x) % p.value() == 0)
        throw std::domain_error("DENOMINATOR_DIVISIBLE_BY_P: input is not a p-adic integer");
    const Int d = den(x);
    const Int pv = p.value();
    const Int d_inv_mod_p = mod_inverse(d % pv, pv);

    // Long division in Z_p: state is the running numerator over the fixed
    // denominator; states repeat, marking the period.
    std::vector<digit_t> digits;
    std::map<Int, std::size_t> seen;
    Int n = num(x);
    while (!seen.count(n)) {
        seen[n] = digits.size();
        Int dig = (n % pv) * d_inv_mod_p % pv;
        if (dig < 0) dig += pv;
        digits.push_back(static_cast<digit_t>(dig));
        n = (n - dig * d) / pv;
    }
    const std::size_t start = seen[n];
    std::vector<digit_t> pre(digits.begin(), digits.begin() + start);
    std::vector<digit_t> per(digits.begin() + start, digits.end());
    return from_digits(p, std::move(pre), std::move(per));
}

digit_t PAdicRational::digit(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("digit: negative index");
    const std::int64_t P = static_cast<std::int64_t>(pre_.size());
    if (n < P) return pre_[static_cast<std::size_t>(n)];
    return per_[static_cast<std::size_t>((n - P) % static_cast<std::int64_t>(per_.size()))];
}

Int PAdicRational::project(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("project: n must be >= 0");
    Int acc = 0;
    Int pk = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        acc += pk * digit(i);
        pk *= p_.value();
    }
    return acc;
}

Rat PAdicRational::to_rational() const {
    const Int pv = p_.value();
    Int head = 0, pk = 1;
    for (digit_t d : pre_) {
        head += pk * d;
        pk *= pv;
    }
    Int per_value = 0;
    Int qk = 1;
    for (digit_t d : per_) {
        per_value += qk * d;
        qk *= pv;
    }
    // qk is now p^{|per|}; pk is p^{|pre|}.
    Rat tail = Rat(per_value) / Rat(1 - qk);
    return Rat(head) + Rat(pk) * tail;
}

Int PAdicRational::count_digit_below(digit_t j, std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("count_digit_below: n must be >= 0");
    const std::int64_t P = static_cast<std::int64_t>(pre_.size());
    const std::int64_t L = static_cast<std::int64_t>(per_.size());
    Int count = 0;
    for (std::int64_t i = 0; i < std::min(n, P); ++i)
        if (pre_[static_cast<std::size_t>(i)] == j) ++count;
    if (n <= P) return count;
    const std::int64_t span = n - P;
    const std::int64_t full = span / L, rem = span % L;
    std::int64_t per_count = 0;
    for (digit_t d : per_)
        if (d == j) ++per_count;
    count += Int(full) * per_count;
    for (std::int64_t i = 0; i < rem; ++i)
        if (per_[static_cast<std::size_t>(i)] == j) ++count;
    return count;
}

Int PAdicRational::lambda_of_projection(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("lambda_of_projection: n must be >= 0");
    const std::int64_t P = static_cast<std::int64_t>(pre_.size());
    const std::int64_t L = static_cast<std::int64_t>(per_.size());
    // Top nonzero position below n, scanning the periodic zone first.
    if (n > P) {
        const std::int64_t span = n - P;
        const std::int64_t full = span / L, rem = span % L;
        for (std::int64_t i = rem - 1; i >= 0; --i)
            if (per_[static_cast<std::size_t>(i)] != 0) return Int(P + full * L + i + 1);
        if (full > 0) {
            for (std::int64_t i = L - 1; i >= 0; --i)
                if (per_[static_cast<std::size_t>(i)] != 0) return Int(P + (full - 1) * L + i + 1);
        }
    }
    for (std::int64_t i = std::min(n, P) - 1; i >= 0; --i)
        if (pre_[static_cast<std::size_t>(i)] != 0) return Int(i + 1);
    return Int(0);
}

Int PAdicRational::count_in_projection(digit_t j, std::int64_t n) const {
    if (j < 0 || j >= p_.value()) throw std::domain_error("count_in_projection: digit out of range");
    if (j != 0) return count_digit_below(j, n);
    const Int zeros_below = count_digit_below(0, n);
    // lambda-based zero count: only zeros below the top nonzero digit exist.
    return lambda_of_projection(n) - (Int(n) - zeros_below);
}

std::optional<std::int64_t> PAdicRational::valuation() const {
    if (is_zero()) return std::nullopt;
    const std::int64_t P = static_cast<std::int64_t>(pre_.size());
    const std::int64_t L = static_cast<std::int64_t>(per_.size());
    for (std::int64_t i = 0; i < P + L; ++i)
        if (digit(i) != 0) return i;
    return std::nullopt;  // unreachable for canonical nonzero input
}

PAdicRational shift(const PAdicRational& z, digit_t k) {
    std::vector<digit_t> pre;
    pre.reserve(z.preperiod().size() + 1);
    pre.push_back(k);
    pre.insert(pre.end(), z.preperiod().begin(), z.preperiod().end());
    return PAdicRational::from_digits(z.prime(), std::move(pre), z.period());
}

DigitStream::DigitStream(Prime p, std::function<digit_t(std::int64_t)> generator,
                         std::vector<TailFlag> tail_profile)
    : p_(p), gen_(std::move(generator)), tail_(std::move(tail_profile)) {
    if (tail_.size() != static_cast<std::size_t>(p_.value()))
        throw std::invalid_argument("DigitStream: tail_profile must have one flag per digit");
}

digit_t DigitStream::digit(std::int64_t n) const {
    digit_t d = gen_(n);
    if (d < 0 || d >= p_.value()) throw std::domain_error("DigitStream: generator produced digit out of range");
    return d;
}

TailFlag DigitStream::tail(digit_t j) const {
    if (j < 0 || j >= p_.value()) throw std::domain_error("DigitStream: digit out of range");
    return tail_[static_cast<std::size_t>(j)];
}

Int DigitStream::project(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("project: n must be >= 0");
    Int acc = 0, pk = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        acc += pk * digit(i);
        pk *= p_.value();
    }
    return acc;
}

Int digit_count(Prime p, digit_t j, const Int& m) {
    if (j < 0 || j >= p.value()) throw std::domain_error("digit_count: digit out of range");
    if (m < 0) throw std::invalid_argument("digit_count: m must be >= 0");
    Int count = 0, rest = m;
    while (rest != 0) {
        if (rest % p.value() == j) ++count;
        rest /= p.value();
    }
    return count;
}

Int lambda(Prime p, const Int& m) {
    if (m < 0) throw std::invalid_argument("lambda: m must be >= 0");
    Int count = 0, rest = m;
    while (rest != 0) {
        ++count;
        rest /= p.value();
    }
    return count;
}

Rat b_ell(Prime ell, const Int& n) {
    if (n < 0) throw std::invalid_argument("b_ell: n must be >= 0");
    if (n == 0) return Rat(0);
    const Int lam = lambda(ell, n);
    return Rat(n) / Rat(1 - pow_int(Int(ell.value()), lam.convert_to<std::int64_t>()));
}

PAdicRational b2_extended(const PAdicRational& z) {
    if (z.prime().value() != 2) throw std::domain_error("WRONG_PRIME: b2_extended needs p = 2");
    if (!z.is_nonneg_integer()) return z;
    return PAdicRational::from_rational(z.prime(), b_ell(z.prime(), num(z.to_rational())));
}

Rat eta2(const PAdicRational& z) {
    if (z.prime().value() != 2) throw std::domain_error("WRONG_PRIME: eta2 needs p = 2");
    const auto& pre = z.preperiod();
    const auto& per = z.period();
    Rat head = 0;
    Rat w(1, 2);
    for (digit_t d : pre) {
        if (d) head += w;
        w /= 2;
    }
    Rat block = 0;
    Rat v(1, 2);
    for (digit_t d : per) {
        if (d) block += v;
        v /= 2;
    }
    // Tail: 2^{-|pre|} * block / (1 - 2^{-|per|}).
    const Rat scale = pow_rat(Rat(1, 2), static_cast<std::int64_t>(pre.size()));
    const Rat ratio = pow_rat(Rat(1, 2), static_cast<std::int64_t>(per.size()));
    return head + scale * block / (Rat(1) - ratio);
}

}  // namespace frames
