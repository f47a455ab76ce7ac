#include "polytile/rational.hpp"

#include "polytile/errors.hpp"

#include <cctype>

namespace polytile {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw SyntaxError("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_decimal_integer(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_decimal_integer(text)) {
            throw SyntaxError("not a rational: '" + std::string(text) + "'");
        }
        return Rational(Integer(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-') {
        throw SyntaxError("not a rational: '" + std::string(text) + "'");
    }
    return make_rational(Integer(std::string(num)), Integer(std::string(den)));
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

long long to_int64(const Integer& value) {
    if (!value.fits_slong_p()) {
        throw ValidationError("integer out of machine range: " + value.get_str());
    }
    return static_cast<long long>(value.get_si());
}

long long rational_to_int64(const Rational& value) {
    if (!is_integer(value)) {
        throw ValidationError("expected an integer, got " + rational_to_string(value));
    }
    return to_int64(value.get_num());
}

} // namespace polytile
