#ifndef HALIN_RATIONAL_HPP
#define HALIN_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "halin/errors.hpp"

namespace halin {

// Exact coordinate type. Every coordinate a construction emits has a small
// denominator (2, 4 or 2h), so int64 components never come close to overflow.
using Rat = boost::rational<std::int64_t>;

inline std::string format_rat(const Rat& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts exactly the "p/q" form produced by format_rat.
inline Rat parse_rat(const std::string& text, int line = 0) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw SyntaxError(line, "expected rational 'p/q', got '" + text + "'");
    try {
        std::int64_t num = std::stoll(text.substr(0, slash));
        std::int64_t den = std::stoll(text.substr(slash + 1));
        if (den <= 0)
            throw SyntaxError(line, "non-positive denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw SyntaxError(line, "malformed rational '" + text + "'");
    } catch (const std::out_of_range&) {
        throw SyntaxError(line, "rational out of range '" + text + "'");
    }
}

inline bool in_closed(const Rat& x, const Rat& lo, const Rat& hi) {
    return lo <= x && x <= hi;
}

// [a1,b1] and [a2,b2] share a segment of positive length.
inline bool overlap_positive(const Rat& a1, const Rat& b1, const Rat& a2, const Rat& b2) {
    return std::max(a1, a2) < std::min(b1, b2);
}

// [a1,b1] and [a2,b2] share at least a point.
inline bool overlap_nonempty(const Rat& a1, const Rat& b1, const Rat& a2, const Rat& b2) {
    return std::max(a1, a2) <= std::min(b1, b2);
}

}  // namespace halin

#endif
