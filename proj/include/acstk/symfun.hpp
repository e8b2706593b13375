#pragma once

#include "acstk/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acstk::sym {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables);

    static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
    static MultiPoly variable(std::vector<std::string> variables, std::size_t index);
    /// Variables named prefix1 .. prefixN.
    static std::vector<std::string> indexed_names(const std::string& prefix, std::size_t n);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const;
    /// Adds c * x^e to the polynomial.
    void add_term(const Exponents& e, const Rational& c);
    unsigned total_degree() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& s);
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const { return *this * Rational(-1); }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly pow(unsigned k) const;
    Rational evaluate(std::span<const Rational> point) const;
    MultiPoly derivative(std::size_t var) const;
    /// Replaces variable i by values[i]; all values must share one ring.
    MultiPoly compose(std::span<const MultiPoly> values) const;
    /// Exchanges variables i and j.
    MultiPoly swap_variables(std::size_t i, std::size_t j) const;

private:
    void require_same_ring(const MultiPoly& rhs, const char* op) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Polynomial whose generators carry positive integer weights, e.g. p_i of
/// weight i or c_i of weight i.
class GradedPoly {
public:
    GradedPoly() = default;
    GradedPoly(std::vector<std::string> generators, std::vector<unsigned> weights);
    GradedPoly(MultiPoly poly, std::vector<unsigned> weights);

    static GradedPoly constant(std::vector<std::string> generators, std::vector<unsigned> weights,
                               const Rational& c);
    static GradedPoly generator(std::vector<std::string> generators, std::vector<unsigned> weights,
                                std::size_t index);
    /// Generators prefix1..prefixN with weight i * unit on generator i.
    static GradedPoly ring(const std::string& prefix, std::size_t n, unsigned unit = 1);

    const MultiPoly& poly() const noexcept { return poly_; }
    const std::vector<std::string>& generators() const noexcept { return poly_.variables(); }
    const std::vector<unsigned>& weights() const noexcept { return weights_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }

    unsigned weight_of(const Exponents& e) const;
    Rational coefficient(const Exponents& e) const { return poly_.coefficient(e); }
    /// Coefficient of the monomial consisting of generator `index` alone.
    Rational linear_coefficient(std::size_t index) const;
    GradedPoly homogeneous_component(unsigned weight) const;
    /// True when every monomial has the given weight (the zero polynomial qualifies).
    bool is_homogeneous(unsigned weight) const;
    /// Drops every monomial of weight above `max_weight`.
    GradedPoly truncated(unsigned max_weight) const;
    /// Same generators, zero polynomial.
    GradedPoly zero() const { return GradedPoly(generators(), weights_); }
    GradedPoly one() const { return constant(generators(), weights_, 1); }
    GradedPoly gen(std::size_t index) const { return generator(generators(), weights_, index); }

    GradedPoly& operator+=(const GradedPoly& rhs);
    GradedPoly& operator-=(const GradedPoly& rhs);
    GradedPoly& operator*=(const Rational& s);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const Rational& s) { return a *= s; }
    friend GradedPoly operator*(const Rational& s, GradedPoly a) { return a *= s; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    GradedPoly operator-() const { return *this * Rational(-1); }
    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

private:
    void require_same_ring(const GradedPoly& rhs, const char* op) const;

    MultiPoly poly_;
    std::vector<unsigned> weights_;
};

/// sigma_j in variables b1..bm; sigma_0 = 1.
MultiPoly elementary_symmetric(std::size_t m, std::size_t j);

/// Newton polynomial nu_k in e1..ek (e_i of weight i): the power sum
/// b1^k + ... + bm^k written in the elementary symmetric polynomials.
GradedPoly newton_polynomial(unsigned k);

/// Runs the Newton recursion
///   nu_k = e1 nu_{k-1} - e2 nu_{k-2} + ... + (-1)^{k-2} e_{k-1} nu_1 + (-1)^{k-1} k e_k
/// directly in the ring of the supplied classes. `elementary[i]` is e_{i+1};
/// classes past the end count as zero. Monomials above `max_weight` are
/// dropped after every step. Returns nu_1 .. nu_max_k.
std::vector<GradedPoly> newton_power_sums(std::span<const GradedPoly> elementary, unsigned max_k,
                                          std::optional<unsigned> max_weight = std::nullopt);

/// First adjacent transposition (i, i+1) that changes p, if any.
std::optional<std::pair<std::size_t, std::size_t>> asymmetry_witness(const MultiPoly& p);

/// The unique polynomial in e1..em (m = p.nvars()) whose expansion in
/// elementary symmetric polynomials equals p. Lexicographic leading-term
/// elimination. Throws Error naming a transposition if p is not symmetric.
GradedPoly reduce_to_elementary(const MultiPoly& p);

/// Expands a polynomial in e1..em back into m variables.
MultiPoly expand_elementary(const GradedPoly& q, std::size_t m);

/// Evaluates every generator; throws Error on an unassigned generator.
Rational substitute(const GradedPoly& p, const std::map<std::string, Rational>& assignments);
/// Replaces every generator by a polynomial from one common ring.
MultiPoly substitute(const GradedPoly& p, const std::map<std::string, MultiPoly>& assignments);
GradedPoly substitute(const GradedPoly& p, const std::map<std::string, GradedPoly>& assignments);

/// Canonical rendering: graded-lex descending (weight first for GradedPoly),
/// generators by index, e.g. "-1/45*p1^2 + 7/45*p2".
std::string to_string(const MultiPoly& p);
std::string to_string(const GradedPoly& p);
std::string to_latex(const GradedPoly& p);

} // namespace acstk::sym
