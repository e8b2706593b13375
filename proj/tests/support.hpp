#pragma once

#include "acstk/cayley_dickson.hpp"
#include "acstk/sampling.hpp"

#include <doctest.h>

#include <ostream>

namespace doctest {
template <>
struct StringMaker<acstk::cd::CDElement> {
    static String convert(const acstk::cd::CDElement& a) {
        return String(acstk::cd::to_string(a).c_str());
    }
};
template <>
struct StringMaker<acstk::Rational> {
    static String convert(const acstk::Rational& q) { return String(acstk::to_string(q).c_str()); }
};
} // namespace doctest

namespace testing {

using acstk::Rational;
using acstk::cd::CDElement;

inline CDElement random_element(unsigned level, acstk::Sampler& rng) {
    std::vector<Rational> c(std::size_t{1} << level);
    for (auto& x : c) x = rng.rational(5, 4);
    return CDElement(level, std::move(c));
}

inline CDElement random_imaginary(unsigned level, acstk::Sampler& rng) {
    auto a = random_element(level, rng);
    return acstk::cd::imaginary_part(a);
}

inline Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace testing
