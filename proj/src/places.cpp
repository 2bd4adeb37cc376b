#include "frames/places.hpp"

namespace frames {

Place Place::parse(const std::string& s) {
    if (s == "inf") return infinite();
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return finite(Prime(v));
    } catch (const std::exception&) {
        throw std::invalid_argument("Place: cannot parse '" + s + "' (expected 'inf' or a prime)");
    }
}

namespace {

std::int64_t exponent_of(Prime ell, Int n) {
    std::int64_t e = 0;
    while (n % ell.value() == 0) {
        n /= ell.value();
        ++e;
    }
    return e;
}

}  // namespace

ExtendedValuation valuation(Prime ell, const Rat& x) {
    if (x == 0) return ExtendedValuation::plus_infinity();
    return ExtendedValuation::of(exponent_of(ell, num(x)) - exponent_of(ell, den(x)));
}

Rat abs_value(const Place& v, const Rat& x) {
    if (x == 0) return Rat(0);
    if (v.is_infinite()) return x < 0 ? Rat(-x) : x;
    const auto val = valuation(v.ell(), x);
    return pow_rat(Rat(v.ell().value()), -val.value());
}

}  // namespace frames
