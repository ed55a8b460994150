#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "graphmax/errors.hpp"

namespace graphmax {

// An ℓ^p exponent. Accepts a decimal ("1.5") or a fraction ("3/2"); the
// fraction form is kept so that integrality questions (is n/p' an integer?)
// can be decided exactly instead of within floating tolerance.
struct Exponent {
    double value = 1.0;
    bool from_fraction = false;
    std::int64_t num = 1, den = 1;  // reduced, valid when from_fraction

    static Exponent of(double p);
    static Exponent fraction(std::int64_t num, std::int64_t den);
    static Exponent parse(const std::string& text);

    bool is_one() const { return from_fraction ? (num == den) : (value == 1.0); }

    // p' with 1/p + 1/p' = 1; requires p > 1.
    double conjugate() const { return value / (value - 1.0); }

    // Decides whether n/p' = n(p-1)/p is an integer. Second member is true
    // when the decision was exact (p given as a fraction), false when it fell
    // back to a 1e-9 floating test.
    struct Integrality {
        bool integral;
        bool exact;
        std::int64_t floor;  // [n/p']
    };
    Integrality n_over_conjugate(int n) const;
};

}  // namespace graphmax
