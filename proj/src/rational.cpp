#include "acstk/rational.hpp"

#include <cctype>

namespace acstk {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        start = 1;
    }
    if (start == text.size()) {
        throw Error("malformed rational: '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw Error("malformed rational: '" + std::string(whole) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(t, text));
    }
    Integer num = parse_integer(trim(t.substr(0, slash)), text);
    auto den_text = trim(t.substr(slash + 1));
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw Error("malformed rational: '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text, text);
    if (den == 0) {
        throw Error("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (trim(text).empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        out.push_back(parse_rational(text.substr(pos, comma - pos)));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return r;
}

} // namespace acstk
