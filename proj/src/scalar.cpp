#include "bvkit/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace bvkit {

std::string rat_to_string(const Rat &r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string rat_to_fraction_string(const Rat &r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string &s) {
    auto slash = s.find('/');
    using Int = boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational: " + s);
    return Rat(num, den);
}

std::string scalar_to_string(const Scalar &s) {
    if (s.im == 0) return rat_to_string(s.re);
    auto imag = [](const Rat &b) -> std::string {
        if (b == 1) return "i";
        if (b == -1) return "-i";
        return rat_to_string(b) + "*i";
    };
    if (s.re == 0) return imag(s.im);
    std::string out = "(" + rat_to_string(s.re);
    out += (s.im > 0) ? "+" : "-";
    Rat m = abs(s.im);
    out += (m == 1) ? "i" : rat_to_string(m) + "*i";
    return out + ")";
}

} // namespace bvkit
