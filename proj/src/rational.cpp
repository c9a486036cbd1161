#include "rieszprob/rational.hpp"

#include "rieszprob/errors.hpp"

#include <algorithm>
#include <cctype>

namespace rieszprob {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    if (s.find('.') != std::string_view::npos || s.find('e') != std::string_view::npos ||
        s.find('E') != std::string_view::npos) {
        throw ParseError("decimal notation '" + std::string(text) +
                         "' is not accepted; write an exact fraction like 1/4");
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num_part = s;
    std::string_view den_part = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw ParseError("malformed rational '" + std::string(text) + "'; expected \"p\" or \"p/q\"");
    }
    Integer num{std::string(num_part)};
    Integer den{std::string(den_part)};
    if (den == 0) {
        throw ParseError("malformed rational '" + std::string(text) + "': zero denominator");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
    return out;
}

}  // namespace rieszprob
