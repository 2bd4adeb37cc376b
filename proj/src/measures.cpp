#include "frames/measures.hpp"

#include <cmath>
#include <numbers>

namespace frames {

DualPoint::DualPoint(Prime p, Int k, std::int64_t m) : p_(p), k_(std::move(k)), m_(m) {
    if (m_ < 0) throw std::invalid_argument("DualPoint: m must be >= 0");
    if (k_ < 0 || k_ >= pow_int(Int(p_.value()), m_))
        throw std::invalid_argument("DualPoint: k out of range [0, p^m)");
    if (k_ == 0) {
        m_ = 0;
    } else if (k_ % p_.value() == 0) {
        throw std::invalid_argument("DualPoint: k must be coprime to p");
    }
}

std::int64_t DualPoint::vp() const {
    if (is_zero()) throw std::domain_error("DualPoint: v_p(0) is +infinity");
    return -m_;
}

Rat fractional_part(const DualPoint& t, const PAdicRational& z) {
    if (t.prime() != z.prime()) throw std::domain_error("PRIME_MISMATCH: dual point and z use different p");
    if (t.is_zero()) return Rat(0);
    const Int pm = pow_int(Int(t.prime().value()), t.m());
    const Int r = t.k() * z.project(t.m()) % pm;
    return Rat(r) / Rat(pm);
}

namespace {

void check_constant(Prime p, const Rat& c) {
    if (c == 0 || c == 1 || c == -1 || c == p.value())
        throw std::domain_error("BAD_CONSTANT: c must avoid {0, 1, -1, p}");
}

}  // namespace

Rat character_sum_closed(Prime p, const Rat& c, std::int64_t N, const PAdicRational& z) {
    check_constant(p, c);
    if (N < 0) throw std::invalid_argument("character_sum_closed: N must be >= 0");
    if (z.prime() != p) throw std::domain_error("PRIME_MISMATCH: z uses a different p");
    const Rat pc = Rat(p.value()) / c;
    const Rat front = Rat(p.value() - 1) / (Rat(p.value()) - c);
    const auto v = z.valuation();
    if (!v) return front * (pow_rat(pc, N) - 1);
    const Rat bracket = (N <= *v) ? pow_rat(pc, N) : Rat(0);
    const std::int64_t clipped = std::min(N - 1, *v);
    return bracket + (c - 1) / (Rat(p.value()) - c) * pow_rat(pc, 1 + clipped) - front;
}

namespace {

// Neumaier-compensated accumulator.  A character level cancels from ~1e7 of
// raw term mass down to single digits, so a plain running sum cannot hold
// the 1e-9 target.
struct Compensated {
    long double sum = 0, carry = 0;
    void add(long double x) {
        const long double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    long double value() const { return sum + carry; }
};

}  // namespace

std::complex<double> character_sum_direct(Prime p, const Rat& c, std::int64_t N,
                                          const PAdicRational& z) {
    check_constant(p, c);
    if (N < 0) throw std::invalid_argument("character_sum_direct: N must be >= 0");
    if (z.prime() != p) throw std::domain_error("PRIME_MISMATCH: z uses a different p");
    // Each level is a complete conjugate character sum, hence an integer
    // (a Ramanujan sum).  Trigonometric summation pins the level to far
    // better than 1/2; snapping and recombining the levels exactly leaves a
    // single binary64 rounding at the end, which keeps large values (the
    // weights c^{-m} grow for |c| < 1) comparable to the closed form.
    Rat exact_sum = 0;
    Compensated total_im;
    Int pm = 1;
    Rat weight = 1;
    double weight_d = 1;
    for (std::int64_t m = 1; m <= N; ++m) {
        pm *= p.value();
        weight /= c;
        weight_d /= to_double(c);
        const Int r = z.project(m);
        Compensated level_re;
        long double level_im = 0;
        if (pm <= (Int(1) << 31)) {
            const std::int64_t pmv = pm.convert_to<std::int64_t>();
            const std::int64_t rv = r.convert_to<std::int64_t>();
            const std::int64_t pv = p.value();
            const long double scale = 2.0L * std::numbers::pi_v<long double> /
                                      static_cast<long double>(pmv);
            for (std::int64_t k = 1; 2 * k <= pmv; ++k) {
                if (k % pv == 0) continue;
                const long double theta = scale * static_cast<long double>(k * rv % pmv);
                if (2 * k == pmv) {
                    // Self-conjugate character (p = 2, m = 1).
                    level_re.add(std::cos(theta));
                    level_im += std::sin(theta);
                } else {
                    // Conjugate pair k and p^m - k: imaginary parts cancel exactly.
                    level_re.add(2.0L * std::cos(theta));
                }
            }
        } else {
            const long double denom = static_cast<long double>(pm.convert_to<double>());
            for (Int k = 1; 2 * k <= pm; ++k) {
                if (k % p.value() == 0) continue;
                const Int idx = k * r % pm;
                const long double theta = 2.0L * std::numbers::pi_v<long double> *
                                          idx.convert_to<double>() / denom;
                if (2 * k == pm) {
                    level_re.add(std::cos(theta));
                    level_im += std::sin(theta);
                } else {
                    level_re.add(2.0L * std::cos(theta));
                }
            }
        }
        const long double raw = level_re.value();
        const long double snapped = std::round(raw);
        if (std::abs(raw - snapped) > 1e-6)
            throw std::logic_error("character_sum_direct: level sum is not near an integer");
        exact_sum += weight * Rat(Int(static_cast<long long>(snapped)));
        total_im.add(weight_d * level_im);
    }
    return {to_double(exact_sum), static_cast<double>(total_im.value())};
}

Rat mu_hat_alpha(Prime p, std::int64_t alpha, const DualPoint& t) {
    if (alpha == 0 || alpha == -1) throw std::domain_error("BAD_ALPHA: alpha must avoid {0, -1}");
    if (t.prime() != p) throw std::domain_error("PRIME_MISMATCH: dual point uses a different p");
    const Rat pa = pow_rat(Rat(p.value()), alpha);
    const Rat pa1 = pow_rat(Rat(p.value()), alpha + 1);
    if (t.is_zero()) return pa * (p.value() - 1) / (pa1 - 1);
    // |t|_p^{-alpha-1} = p^{-m(alpha+1)}
    return pa * (Rat(p.value()) - pa1) / (pa1 - 1) * pow_rat(pa1, -t.m());
}

Rat mu_alpha_partial(Prime p, std::int64_t alpha, std::int64_t N, const PAdicRational& z) {
    if (alpha == 0 || alpha == -1) throw std::domain_error("BAD_ALPHA: alpha must avoid {0, -1}");
    if (N == 0) return Rat(0);
    const Rat pa = pow_rat(Rat(p.value()), alpha);
    const Rat pa1 = pow_rat(Rat(p.value()), alpha + 1);
    const Rat prefactor = pa * (Rat(p.value()) - pa1) / (pa1 - 1);
    return prefactor * character_sum_closed(p, pa1, N, z);
}

LocallyConstantFn::LocallyConstantFn(Prime p, std::int64_t M, std::vector<Rat> values)
    : p_(p), M_(M), values_(std::move(values)) {
    if (M_ < 0) throw std::invalid_argument("LocallyConstantFn: M must be >= 0");
    if (Int(values_.size()) != pow_int(Int(p_.value()), M_))
        throw std::invalid_argument("LocallyConstantFn: need p^M values");
}

const Rat& LocallyConstantFn::eval_residue(const Int& residue) const {
    Int r = residue % Int(values_.size());
    if (r < 0) r += Int(values_.size());
    return values_[r.convert_to<std::size_t>()];
}

const Rat& LocallyConstantFn::eval(const PAdicRational& z) const {
    if (z.prime() != p_) throw std::domain_error("PRIME_MISMATCH: z uses a different p");
    return values_[z.project(M_).convert_to<std::size_t>()];
}

Rat parseval_pair(const LocallyConstantFn& f, Prime p, std::int64_t alpha) {
    if (f.prime() != p) throw std::domain_error("PRIME_MISMATCH: f uses a different p");
    if (alpha == 0 || alpha == -1) throw std::domain_error("BAD_ALPHA: alpha must avoid {0, -1}");
    const std::int64_t M = f.modulus_exponent();
    const Rat mass0 = mu_hat_alpha(p, alpha, DualPoint::zero(p));
    Rat acc = 0;
    const Int modulus = pow_int(Int(p.value()), M);
    for (Int n = 0; n < modulus; ++n) {
        const PAdicRational zn = PAdicRational::from_integer(p, n);
        acc += f.eval_residue(n) * (mass0 + mu_alpha_partial(p, alpha, M, zn));
    }
    return acc / Rat(modulus);
}

std::complex<double> fourier_coefficient(const LocallyConstantFn& f, const DualPoint& t) {
    if (f.prime() != t.prime()) throw std::domain_error("PRIME_MISMATCH: f and t use different p");
    const std::int64_t M = f.modulus_exponent();
    const Int modulus = pow_int(Int(f.prime().value()), M);
    std::complex<double> acc = 0;
    for (Int n = 0; n < modulus; ++n) {
        const double frac = to_double(fractional_part(t, PAdicRational::from_integer(f.prime(), n)));
        const double theta = -2.0 * std::numbers::pi * frac;
        acc += to_double(f.eval_residue(n)) * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return acc / modulus.convert_to<double>();
}

std::vector<DualPoint> dual_points_up_to(Prime p, std::int64_t N) {
    std::vector<DualPoint> out;
    Int pm = 1;
    for (std::int64_t m = 1; m <= N; ++m) {
        pm *= p.value();
        for (Int k = 1; k < pm; ++k)
            if (k % p.value() != 0) out.emplace_back(p, k, m);
    }
    return out;
}

}  // namespace frames
