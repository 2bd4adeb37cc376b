#pragma once

// Character sums over the Pontryagin dual of Z_p and the measure coefficients
// mu_hat_alpha that realize z -> |z|_p^alpha through a Parseval-style pairing.
// The closed forms are exact rationals; the direct complex sums are the
// floating-point oracle they are checked against.

#include "frames/digits.hpp"
#include "frames/places.hpp"

#include <complex>
#include <vector>

namespace frames {

// t = k / p^m in [0, 1) with p coprime to k unless t = 0.
class DualPoint {
public:
    DualPoint(Prime p, Int k, std::int64_t m);
    static DualPoint zero(Prime p) { return DualPoint(p, 0, 0); }

    const Prime& prime() const { return p_; }
    const Int& k() const { return k_; }
    std::int64_t m() const { return m_; }
    bool is_zero() const { return k_ == 0; }
    Rat value() const { return Rat(k_) / Rat(pow_int(Int(p_.value()), m_)); }
    // v_p(t) = -m for t != 0.
    std::int64_t vp() const;

private:
    Prime p_;
    Int k_;
    std::int64_t m_;
};

// {t z}_p = (k [z]_{p^m} mod p^m) / p^m.
Rat fractional_part(const DualPoint& t, const PAdicRational& z);

// Closed form of sum_{0 < |t|_p <= p^N} c^{v_p(t)} e^{2 pi i {t z}_p}:
//   z = 0:  (p-1)/(p-c) ((p/c)^N - 1)
//   else:   (p/c)^N [N <= v] + (c-1)/(p-c) (p/c)^{1+min(N-1, v)} - (p-1)/(p-c)
// with v = v_p(z) read exactly off the digits.  Throws BAD_CONSTANT for
// c in {0, 1, -1, p}.
Rat character_sum_closed(Prime p, const Rat& c, std::int64_t N, const PAdicRational& z);

// The same sum evaluated term by term in binary64 complex arithmetic,
// conjugate pairs grouped, denominator levels summed in increasing order.
std::complex<double> character_sum_direct(Prime p, const Rat& c, std::int64_t N,
                                          const PAdicRational& z);

// Fourier-Stieltjes coefficients of |z|_p^alpha (alpha integer, not 0 or -1):
//   t = 0:  p^alpha (p-1) / (p^{alpha+1}-1)
//   else:   p^alpha (p - p^{alpha+1}) / (p^{alpha+1}-1) |t|_p^{-alpha-1}
Rat mu_hat_alpha(Prime p, std::int64_t alpha, const DualPoint& t);

// mu_{alpha,N}(z) = sum_{0<|t|_p<=p^N} mu_hat_alpha(t) e^{2 pi i {t z}_p},
// exact via the character-sum closed form with c = p^{alpha+1}.  The t = 0
// coefficient is deliberately not included; add mu_hat_alpha(p, alpha, 0) for
// the total-mass-inclusive version.
Rat mu_alpha_partial(Prime p, std::int64_t alpha, std::int64_t N, const PAdicRational& z);

// A function constant on every ball n + p^M Z_p, stored by residue.
class LocallyConstantFn {
public:
    LocallyConstantFn(Prime p, std::int64_t M, std::vector<Rat> values);

    const Prime& prime() const { return p_; }
    std::int64_t modulus_exponent() const { return M_; }
    const std::vector<Rat>& values() const { return values_; }
    const Rat& eval_residue(const Int& residue) const;
    const Rat& eval(const PAdicRational& z) const;

private:
    Prime p_;
    std::int64_t M_;
    std::vector<Rat> values_;
};

// Parseval-style pairing sum_t f_hat(-t) mu_hat_alpha(t), reduced to exact
// rational arithmetic by resumming over residues:
//   p^{-M} sum_{n mod p^M} f(n) (mu_hat_alpha(0) + mu_{alpha,M}(n)).
// Realizes the integral of f(z) |z|_p^alpha over Z_p.
Rat parseval_pair(const LocallyConstantFn& f, Prime p, std::int64_t alpha);

// Complex Fourier coefficient of a locally constant function at t:
// p^{-M} sum_{n mod p^M} f(n) e^{-2 pi i {t n}_p}.  Used to inspect the
// transform of the partial measures.
std::complex<double> fourier_coefficient(const LocallyConstantFn& f, const DualPoint& t);

// All t with 0 < |t|_p <= p^N, denominator level ascending, numerator ascending.
std::vector<DualPoint> dual_points_up_to(Prime p, std::int64_t N);

}  // namespace frames
