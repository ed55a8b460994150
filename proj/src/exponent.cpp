#include "graphmax/exponent.hpp"

#include <cstdlib>
#include <numeric>

namespace graphmax {

Exponent Exponent::of(double p) {
    if (!(p > 0.0)) throw InvalidExponent("exponent must be positive");
    Exponent e;
    e.value = p;
    e.from_fraction = false;
    return e;
}

Exponent Exponent::fraction(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num <= 0) throw InvalidExponent("exponent fraction must be positive");
    std::int64_t g = std::gcd(num, den);
    Exponent e;
    e.num = num / g;
    e.den = den / g;
    e.value = static_cast<double>(e.num) / static_cast<double>(e.den);
    e.from_fraction = true;
    return e;
}

Exponent Exponent::parse(const std::string& text) {
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            return fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        }
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw InvalidExponent("malformed exponent: " + text);
        // An integer literal is an exact fraction too.
        if (v == static_cast<double>(static_cast<std::int64_t>(v)) && text.find('.') == std::string::npos)
            return fraction(static_cast<std::int64_t>(v), 1);
        return of(v);
    } catch (const std::invalid_argument&) {
        throw InvalidExponent("malformed exponent: " + text);
    } catch (const std::out_of_range&) {
        throw InvalidExponent("exponent out of range: " + text);
    }
}

Exponent::Integrality Exponent::n_over_conjugate(int n) const {
    if (!(value > 1.0)) throw InvalidExponent("n/p' needs p > 1");
    if (from_fraction) {
        // n/p' = n(num-den)/num with num/den reduced, so gcd(num, num-den) = 1
        // and integrality is exactly "num divides n".
        std::int64_t q = n * (num - den) / num;
        return {n % num == 0, true, q};
    }
    double x = static_cast<double>(n) / conjugate();
    double r = std::round(x);
    bool integral = std::abs(x - r) < 1e-9;
    return {integral, false, static_cast<std::int64_t>(std::floor(x + 1e-12))};
}

}  // namespace graphmax
