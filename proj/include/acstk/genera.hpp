#pragma once

#include "acstk/rational.hpp"
#include "acstk/symfun.hpp"

#include <span>
#include <vector>

namespace acstk::genera {

/// Truncated univariate power series c_0 + c_1 z + ... + c_N z^N.
/// Results of arithmetic are valid up to the smallest order involved.
class PowerSeries {
public:
    /// Zero series of the given truncation order.
    explicit PowerSeries(unsigned order);
    /// Order is coeffs.size() - 1; coeffs must be non-empty.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries one(unsigned order);
    /// c * z^degree.
    static PowerSeries monomial(unsigned order, unsigned degree, const Rational& c);

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    /// Throws Error past the truncation order.
    const Rational& operator[](unsigned k) const;

    PowerSeries truncated(unsigned order) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& s);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
    friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// a / b; b must have a nonzero constant term.
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);
PowerSeries reciprocal(const PowerSeries& b);
/// outer(inner(z)); inner must have zero constant term.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);
/// f(c z).
PowerSeries scale_argument(const PowerSeries& f, const Rational& c);
/// f(z) / z; f must have zero constant term. Order drops by one.
PowerSeries divide_by_variable(const PowerSeries& f);
/// For an even series f(w) returns g with g(w^2) = f(w). This is how the
/// square-root arguments below are handled: no fractional powers appear.
/// Throws Error if an odd coefficient is nonzero.
PowerSeries even_part_in_square(const PowerSeries& f);

PowerSeries exp_series(unsigned order);
PowerSeries sinh_series(unsigned order);
PowerSeries cosh_series(unsigned order);
/// tanh(w)/w as a series in w.
PowerSeries tanhc_series(unsigned order);

/// Q(z) = sqrt(z) / tanh(sqrt(z)), computed as the reciprocal of tanh(w)/w
/// with w^2 = z.
PowerSeries q_series(unsigned order);

/// Bernoulli numbers in the convention where all of them are positive:
/// B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ... (modern |B_{2k}|). Extracted from
/// the z^k coefficient of Q, which is (-1)^(k-1) 2^(2k) / (2k)! B_k.
Rational bernoulli(unsigned k);

/// s_0 = 1, s_k = 2^(2k) (2^(2k-1) - 1) / (2k)! B_k.
Rational s_coefficient(unsigned k);

/// 1/2 + 1/2 * 2 sqrt(z) / sinh(2 sqrt(z)). Its z^k coefficient is (-1)^k s_k.
PowerSeries half_sinh_series(unsigned order);
/// half_sinh_series at -z, i.e. 1/2 + 1/2 * 2 sqrt(z) / sin(2 sqrt(z)).
/// Its coefficients are the s_k.
PowerSeries s_series(unsigned order);

/// Coefficient of z^k in prod_{i=1..m} Q(b_i z), as a symmetric polynomial
/// in b1..bm.
sym::MultiPoly l_symmetric(unsigned k, unsigned m);

/// Hirzebruch L-polynomial L_k in p1..pk (p_i of weight i), obtained by
/// rewriting l_symmetric(k, m) in elementary symmetric polynomials.
/// m defaults to k; any m >= k gives the same answer.
sym::GradedPoly l_polynomial(unsigned k, unsigned m = 0);

/// ch = rank + sum_{k>0} nu_k(c_1, ..., c_k) / k!, truncated at max_weight.
/// `chern[i]` is c_{i+1}; exactly `rank` classes must be supplied and none
/// may have a constant term.
sym::GradedPoly chern_character(unsigned rank, std::span<const sym::GradedPoly> chern,
                                unsigned max_weight);

} // namespace acstk::genera
