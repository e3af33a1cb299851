#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace troplin {

// Exact rational scalar used for edge lengths, offsets and function values.
// All quantities in this library stay tiny, so 64-bit components are ample.
using Rat = boost::rational<long long>;

inline std::string rat_to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p/q" or a bare integer "p".
inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        const long long num = std::stoll(s.substr(0, slash));
        const long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

}  // namespace troplin
