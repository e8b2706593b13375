#pragma once

#include "acstk/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace acstk::cd {

/// Element of the level-n Cayley-Dickson algebra A_n: 2^n rational
/// coefficients over the basis e_0 = 1, e_1, ..., e_{2^n - 1}.
///
/// Levels 0..3 are the reals, complexes, quaternions and octonions;
/// level 4 is the sedenions. Elements of different levels never mix.
class CDElement {
public:
    static constexpr unsigned kMaxLevel = 10;

    /// Zero element of the given level.
    explicit CDElement(unsigned level);
    CDElement(unsigned level, std::vector<Rational> coeffs);

    static CDElement one(unsigned level);
    static CDElement basis(unsigned level, std::size_t index);
    static CDElement scalar(unsigned level, const Rational& value);
    /// Zero real part, the given coefficients on e_1..e_{2^n-1}.
    static CDElement imaginary(unsigned level, std::span<const Rational> coords);

    unsigned level() const noexcept { return level_; }
    std::size_t dim() const noexcept { return coeffs_.size(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    bool is_zero() const;
    bool is_imaginary() const { return coeffs_[0] == 0; }

    CDElement& operator+=(const CDElement& rhs);
    CDElement& operator-=(const CDElement& rhs);
    CDElement& operator*=(const Rational& s);

    friend CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
    friend CDElement operator-(CDElement a, const CDElement& b) { return a -= b; }
    friend CDElement operator*(CDElement a, const Rational& s) { return a *= s; }
    friend CDElement operator*(const Rational& s, CDElement a) { return a *= s; }
    CDElement operator-() const;

    friend bool operator==(const CDElement&, const CDElement&) = default;

private:
    unsigned level_;
    std::vector<Rational> coeffs_;
};

/// e_i * e_j = sign * e_index.
struct BasisProduct {
    int sign;
    std::uint32_t index;
};

/// Product of two basis elements under the doubling rule.
BasisProduct basis_product(unsigned level, std::size_t i, std::size_t j);

/// Full 2^n x 2^n basis multiplication table, row-major, built once per level.
const std::vector<BasisProduct>& multiplication_table(unsigned level);

/// Throws Error naming both levels when they differ.
void require_same_level(const CDElement& a, const CDElement& b, const char* op);

/// Product via the cached basis table.
CDElement multiply(const CDElement& a, const CDElement& b);

/// Product evaluated directly with the doubling rule
///   (a1, a2)(b1, b2) = (a1 b1 - b2* a2, b2 a1 + a2 b1*)
/// recursing down to the reals. Reference route for the table.
CDElement multiply_doubling(const CDElement& a, const CDElement& b);

inline CDElement operator*(const CDElement& a, const CDElement& b) { return multiply(a, b); }

CDElement conjugate(const CDElement& a);
Rational norm_sq(const CDElement& a);
/// Euclidean inner product of the coefficient vectors.
Rational inner_product(const CDElement& a, const CDElement& b);
/// (uv)w - u(vw)
CDElement associator(const CDElement& u, const CDElement& v, const CDElement& w);
Rational real_part(const CDElement& a);
CDElement imaginary_part(const CDElement& a);
/// Zero-padded copy at a higher level.
CDElement embed(const CDElement& a, unsigned target_level);

/// Nonzero associator exhibiting the failure of alternativity.
struct AlternativityWitness {
    CDElement u, v, w;
    CDElement value;
    std::string identity; ///< "[u,u,v]", "[u,v,v]" or "[u,v,u]"
};

struct AlternativityReport {
    unsigned level = 0;
    bool alternative = true;
    std::size_t basis_triples_checked = 0;
    std::size_t pair_sums_checked = 0;
    std::size_t samples_checked = 0;
    std::optional<AlternativityWitness> witness;
};

/// Checks [u,u,v], [u,v,v] and [u,v,u] exhaustively over basis elements,
/// then over sums of two basis elements against basis elements, then on
/// `samples` random elements drawn from `seed`. Stops at the first nonzero
/// associator. Levels above 5 are rejected.
AlternativityReport probe_alternative(unsigned level, std::size_t samples, std::uint64_t seed);

std::string to_string(const CDElement& a);

} // namespace acstk::cd
