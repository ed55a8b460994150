#include "graphmax/rational.hpp"

#include <cctype>

namespace graphmax {

namespace {

boost::multiprecision::cpp_int parse_int(const std::string& s) {
    if (s.empty()) throw InputError("empty number literal");
    size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (i == s.size()) throw InputError("malformed number literal: " + s);
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw InputError("malformed number literal: " + s);
    // Strip leading zeros; cpp_int would read "025" as octal.
    size_t first = s.find_first_not_of('0', i);
    if (first == std::string::npos) return 0;
    boost::multiprecision::cpp_int v(s.substr(first));
    return s[0] == '-' ? -v : v;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        auto num = parse_int(text.substr(0, slash));
        auto den = parse_int(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator: " + text);
        return Rat(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        // Decimal literals are exact rationals: a.b -> (a*10^k + b) / 10^k.
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0) throw InputError("malformed number literal: " + text);
        boost::multiprecision::cpp_int den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rat(parse_int(digits), den);
    }
    return Rat(parse_int(text));
}

}  // namespace graphmax
