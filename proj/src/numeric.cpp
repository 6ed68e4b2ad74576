#include "diskgeo/numeric.hpp"

#include "diskgeo/error.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <iomanip>
#include <sstream>

namespace diskgeo {

std::string to_string(const Rational& value) {
    // cpp_rational is always normalized: lowest terms, positive denominator.
    return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        if (part.empty()) throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
        std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
        if (start == part.size()) throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
        return Integer(std::string(part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_decimal(const Rational& value) {
    using Decimal = boost::multiprecision::cpp_dec_float_50;
    Decimal d = Decimal(boost::multiprecision::numerator(value)) / Decimal(boost::multiprecision::denominator(value));
    std::ostringstream os;
    os << std::setprecision(12) << d;
    return os.str();
}

}  // namespace diskgeo
