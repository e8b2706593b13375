#pragma once

#include "acstk/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace acstk::cc {

/// Class in H*(S^m; Q) = Q[x]/(x^2), deg x = m: degree0 + top * x.
/// Pairing with the fundamental class reads off `top`.
class SphereCohomologyClass {
public:
    SphereCohomologyClass(unsigned sphere_dim, Rational degree0, Rational top);

    unsigned sphere_dim() const noexcept { return sphere_dim_; }
    const Rational& degree0() const noexcept { return degree0_; }
    const Rational& top() const noexcept { return top_; }

    friend SphereCohomologyClass operator*(const SphereCohomologyClass& a,
                                           const SphereCohomologyClass& b);
    friend SphereCohomologyClass operator+(const SphereCohomologyClass& a,
                                           const SphereCohomologyClass& b);
    friend bool operator==(const SphereCohomologyClass&, const SphereCohomologyClass&) = default;

private:
    unsigned sphere_dim_;
    Rational degree0_;
    Rational top_;
};

enum class Kind { StiefelWhitney, Chern, Pontryagin };

std::string to_string(Kind k);
/// Cohomological degree of the i-th component: i, 2i or 4i.
unsigned component_degree(Kind k, unsigned index);

/// Total characteristic class 1 + a_1 + a_2 + ... on S^m. Component i sits
/// in degree component_degree(kind, i), so in the sphere model only the
/// component of degree exactly m can be nonzero. Each stored scalar is the
/// coefficient of the generator x; Stiefel-Whitney scalars are reduced mod 2.
class TotalClass {
public:
    /// The unit class 1.
    TotalClass(Kind kind, unsigned sphere_dim);
    /// components[0] is the degree-0 part and must equal 1.
    TotalClass(Kind kind, unsigned sphere_dim, std::vector<Rational> components);

    /// 1 + value * x placed at the given component index.
    static TotalClass with_component(Kind kind, unsigned sphere_dim, unsigned index,
                                     const Rational& value);

    Kind kind() const noexcept { return kind_; }
    unsigned sphere_dim() const noexcept { return sphere_dim_; }
    /// Coefficient of component i (zero past the stored range).
    Rational component(unsigned index) const;
    std::size_t size() const noexcept { return components_.size(); }
    /// Index whose degree equals sphere_dim, if one exists.
    std::optional<unsigned> top_index() const;
    /// Degree-0 part plus top-degree part.
    SphereCohomologyClass as_sphere_class() const;

    friend bool operator==(const TotalClass&, const TotalClass&) = default;

private:
    Kind kind_;
    unsigned sphere_dim_;
    std::vector<Rational> components_;
};

/// Pretty form such as "1 + 2c_4" or "1 - 4p_2".
std::string to_string(const TotalClass& c, const std::string& symbol_suffix = "");

/// w(E + E') = w(E) w(E'), c(E + E') = c(E) c(E'); truncated above the top degree.
TotalClass whitney_product(const TotalClass& a, const TotalClass& b);

/// c_k(conj E) = (-1)^k c_k(E).
TotalClass conjugate_classes(const TotalClass& c);

/// p_i(E) = (-1)^i c_{2i}(E tensor C), from the Chern class of the complexification.
TotalClass pontryagin_from_complexification(const TotalClass& c);

/// e(E_R) = c_n(E): the generator coefficient of the top Chern component,
/// zero when absent.
Rational euler_from_top_chern(const TotalClass& c, unsigned n);

struct LemmaStep {
    std::string label;
    std::string value;
};

/// Replay of (-1)^k p_k(T S^4k) = 2 e(T S^4k) for a hypothetical complex
/// structure T on S^4k, followed by the pairing with [S^4k].
struct PontryaginEulerCertificate {
    unsigned k = 0;
    std::vector<LemmaStep> steps;
    /// c(T + conj T) in units of c_2k(T): 1 + 2 c_2k(T)
    TotalClass complexified_chern{Kind::Chern, 1};
    TotalClass pontryagin{Kind::Pontryagin, 1};
    /// (-1)^k p_k = 2e holds in the model.
    bool identity_holds = false;
    Rational euler_pairing;   ///< <e, [S^4k]> = chi = 2 (axiom)
    Rational pairing;         ///< <p_k, [S^4k]> = (-1)^k 4
    bool stably_trivial_forces_zero = true;  ///< p(T S^n) = 1 (axiom)
    bool contradiction = false;
    std::vector<std::string> assumed_axioms;
};

PontryaginEulerCertificate replay_lemma_pontryagin_euler(unsigned k);

} // namespace acstk::cc
