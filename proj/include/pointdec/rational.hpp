#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "pointdec/errors.hpp"

namespace pointdec {

// Exact nonnegative rationals carry every constraint value and every
// optimum; no floating point appears anywhere in the value path.
using Rational = boost::multiprecision::cpp_rational;

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int p(s.substr(0, slash));
        boost::multiprecision::cpp_int q(s.substr(slash + 1));
        if (q == 0) throw InputError("rational with zero denominator: " + s);
        return Rational(p, q);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("cannot parse rational: " + s);
    }
}

} // namespace pointdec
