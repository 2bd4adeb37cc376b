#include "frames/numbers.hpp"

#include <vector>

namespace frames {

Int pow_int(const Int& base, std::int64_t e) {
    if (e < 0) throw std::domain_error("pow_int: negative exponent");
    Int acc = 1, b = base;
    std::int64_t k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Rat pow_rat(const Rat& x, std::int64_t e) {
    if (e == 0) return Rat(1);
    if (x == 0 && e < 0) throw std::domain_error("pow_rat: zero to a negative power");
    const bool invert = e < 0;
    std::int64_t k = invert ? -e : e;
    Rat acc = 1, b = x;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (invert) acc = Rat(1) / acc;
    return acc;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

Int residue_mod(const Rat& x, const Int& m) {
    Int n = num(x) % m;
    if (n < 0) n += m;
    const Int d = den(x);
    if (d == 1) return n;
    return (n * mod_inverse(d, m)) % m;
}

bool is_prime_value(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(const Int& n) {
    std::vector<std::int64_t> out;
    Int m = n < 0 ? Int(-n) : n;
    for (std::int64_t f = 2; Int(f) * f <= m; f = (f == 2 ? 3 : f + 2)) {
        if (m % f == 0) {
            out.push_back(f);
            while (m % f == 0) m /= f;
        }
    }
    if (m > 1) {
        if (m > std::numeric_limits<std::int64_t>::max())
            throw std::domain_error("prime_factors: factor out of supported range");
        out.push_back(static_cast<std::int64_t>(m));
    }
    return out;
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

}  // namespace frames
