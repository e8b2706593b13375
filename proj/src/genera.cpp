#include "acstk/genera.hpp"

#include <algorithm>

namespace acstk::genera {

PowerSeries::PowerSeries(unsigned order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error("a power series needs at least its constant coefficient");
    }
}

PowerSeries PowerSeries::one(unsigned order) { return monomial(order, 0, 1); }

PowerSeries PowerSeries::monomial(unsigned order, unsigned degree, const Rational& c) {
    PowerSeries p(order);
    if (degree <= order) p.coeffs_[degree] = c;
    return p;
}

const Rational& PowerSeries::operator[](unsigned k) const {
    if (k > order()) {
        throw Error("coefficient z^" + std::to_string(k) + " is beyond truncation order " +
                    std::to_string(order()));
    }
    return coeffs_[k];
}

PowerSeries PowerSeries::truncated(unsigned order) const {
    if (order > this->order()) {
        throw Error("cannot extend a series truncated at order " + std::to_string(this->order()));
    }
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    unsigned n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (unsigned i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (unsigned j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
    if (b[0] == 0) {
        throw Error("series division needs a divisor with nonzero constant term");
    }
    unsigned n = std::min(a.order(), b.order());
    std::vector<Rational> q(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc = a[k];
        for (unsigned j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return PowerSeries(std::move(q));
}

PowerSeries reciprocal(const PowerSeries& b) { return divide(PowerSeries::one(b.order()), b); }

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (inner[0] != 0) {
        throw Error("series composition needs an inner series with zero constant term");
    }
    unsigned n = std::min(outer.order(), inner.order());
    PowerSeries inner_n = inner.truncated(n);
    // Horner: outer_0 + inner (outer_1 + inner (outer_2 + ...))
    PowerSeries acc = PowerSeries::monomial(n, 0, outer[n]);
    for (unsigned k = n; k-- > 0;) {
        acc = acc * inner_n;
        acc += PowerSeries::monomial(n, 0, outer[k]);
    }
    return acc;
}

PowerSeries scale_argument(const PowerSeries& f, const Rational& c) {
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    Rational power = 1;
    for (auto& x : out) {
        x *= power;
        power *= c;
    }
    return PowerSeries(std::move(out));
}

PowerSeries divide_by_variable(const PowerSeries& f) {
    if (f[0] != 0) {
        throw Error("cannot divide a series with nonzero constant term by z");
    }
    if (f.order() == 0) {
        throw Error("series of order 0 carries no information after division by z");
    }
    return PowerSeries(std::vector<Rational>(f.coeffs().begin() + 1, f.coeffs().end()));
}

PowerSeries even_part_in_square(const PowerSeries& f) {
    std::vector<Rational> out;
    for (unsigned k = 0; k <= f.order(); ++k) {
        if (k % 2 == 1) {
            if (f[k] != 0) {
                throw Error("series is not even: coefficient of w^" + std::to_string(k) +
                            " is nonzero");
            }
        } else {
            out.push_back(f[k]);
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries exp_series(unsigned order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (unsigned k = 1; k <= order; ++k) c[k] = c[k - 1] / k;
    return PowerSeries(std::move(c));
}

PowerSeries sinh_series(unsigned order) {
    auto e = exp_series(order);
    return (e - scale_argument(e, -1)) * Rational(1, 2);
}

PowerSeries cosh_series(unsigned order) {
    auto e = exp_series(order);
    return (e + scale_argument(e, -1)) * Rational(1, 2);
}

PowerSeries tanhc_series(unsigned order) {
    // sinh(w)/w loses one order, so build one extra.
    auto sinhc = divide_by_variable(sinh_series(order + 1));
    return divide(sinhc, cosh_series(order));
}

namespace {

// Internal working order in w for a requested order in z = w^2.
unsigned working_order(unsigned z_order) { return 2 * z_order + 2; }

} // namespace

PowerSeries q_series(unsigned order) {
    auto w_series = reciprocal(tanhc_series(working_order(order)));
    return even_part_in_square(w_series).truncated(order);
}

Rational bernoulli(unsigned k) {
    if (k == 0) {
        throw Error("bernoulli: k must be at least 1");
    }
    auto q = q_series(k);
    // q_k = (-1)^(k-1) 2^(2k) / (2k)! B_k
    Rational prefactor(Integer(1) << (2 * k), factorial(2 * k));
    prefactor.canonicalize();
    if (k % 2 == 0) prefactor = -prefactor;
    Rational b = q[k] / prefactor;
    if (b <= 0) {
        throw InvariantViolation("bernoulli: extracted B_" + std::to_string(k) + " = " +
                                 to_string(b) + " is not positive");
    }
    return b;
}

Rational s_coefficient(unsigned k) {
    if (k == 0) return 1;
    Integer four_k = Integer(1) << (2 * k);
    Integer half = (Integer(1) << (2 * k - 1)) - 1;
    Rational s(four_k * half, factorial(2 * k));
    s.canonicalize();
    return s * bernoulli(k);
}

PowerSeries half_sinh_series(unsigned order) {
    unsigned n = working_order(order);
    auto sinhc = divide_by_variable(sinh_series(n + 1));   // sinh(u)/u
    auto w_series = reciprocal(scale_argument(sinhc, 2));  // 2w / sinh(2w)
    auto z_series = even_part_in_square(w_series).truncated(order);
    return z_series * Rational(1, 2) + PowerSeries::monomial(order, 0, Rational(1, 2));
}

PowerSeries s_series(unsigned order) { return scale_argument(half_sinh_series(order), -1); }

sym::MultiPoly l_symmetric(unsigned k, unsigned m) {
    if (m == 0) {
        throw Error("l_symmetric: need at least one variable");
    }
    auto q = q_series(k);
    auto names = sym::MultiPoly::indexed_names("b", m);
    // by_degree[d] = coefficient of z^d in the partial product
    std::vector<sym::MultiPoly> by_degree(k + 1, sym::MultiPoly(names));
    by_degree[0] = sym::MultiPoly::constant(names, 1);
    for (unsigned i = 0; i < m; ++i) {
        std::vector<sym::MultiPoly> next(k + 1, sym::MultiPoly(names));
        for (unsigned d = 0; d <= k; ++d) {
            for (unsigned j = 0; j <= d; ++j) {
                if (q[j] == 0 || by_degree[d - j].is_zero()) continue;
                sym::MultiPoly factor(names);
                sym::Exponents e(m, 0);
                e[i] = j;
                factor.add_term(e, q[j]);
                next[d] += by_degree[d - j] * factor;
            }
        }
        by_degree = std::move(next);
    }
    return by_degree[k];
}

sym::GradedPoly l_polynomial(unsigned k, unsigned m) {
    if (k == 0) {
        throw Error("l_polynomial: k must be at least 1");
    }
    if (m == 0) m = k;
    if (m < k) {
        throw Error("l_polynomial: need m >= k variables");
    }
    auto reduced = sym::reduce_to_elementary(l_symmetric(k, m));
    auto ring = sym::GradedPoly::ring("p", k);
    sym::MultiPoly out(ring.generators());
    for (const auto& [e, c] : reduced.poly().terms()) {
        for (std::size_t i = k; i < e.size(); ++i) {
            if (e[i] != 0) {
                throw InvariantViolation("l_polynomial: weight-" + std::to_string(k) +
                                         " polynomial involves e" + std::to_string(i + 1));
            }
        }
        out.add_term(sym::Exponents(e.begin(), e.begin() + k), c);
    }
    return sym::GradedPoly(std::move(out), ring.weights());
}

sym::GradedPoly chern_character(unsigned rank, std::span<const sym::GradedPoly> chern,
                                unsigned max_weight) {
    if (chern.size() != rank) {
        throw Error("chern_character: rank " + std::to_string(rank) + " needs classes c1..c" +
                    std::to_string(rank) + ", got " + std::to_string(chern.size()));
    }
    if (chern.empty()) {
        throw Error("chern_character: rank 0 has no classes to fix the coefficient ring");
    }
    for (std::size_t i = 0; i < chern.size(); ++i) {
        if (chern[i].homogeneous_component(0) != chern[0].zero()) {
            throw Error("chern_character: c" + std::to_string(i + 1) + " has a constant term");
        }
    }
    auto nu = sym::newton_power_sums(chern, max_weight, max_weight);
    sym::GradedPoly ch = chern[0].one() * Rational(rank);
    for (unsigned k = 1; k <= max_weight; ++k) {
        Rational inv(1);
        inv /= Rational(factorial(k));
        ch += nu[k - 1] * inv;
    }
    return ch.truncated(max_weight);
}

} // namespace acstk::genera
