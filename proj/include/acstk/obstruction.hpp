#pragma once

#include "acstk/char_class.hpp"
#include "acstk/rational.hpp"
#include "acstk/sphere_acs.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acstk::obs {

enum class Status { Exists, RuledOut };
enum class Reason {
    OddDimension,
    PontryaginEuler,
    SignatureLGenus,
    ChernDivisibility,
    ExplicitConstruction
};

std::string to_string(Status s);
std::string to_string(Reason r);

/// Odd-dimensional spheres: (det J)^2 = (-1)^n has no real solution.
struct OddDimensionCertificate {
    unsigned n = 0;
    int det_squared_sign = 0;  ///< (-1)^n
    std::vector<std::string> assumed_axioms;
};

struct PontryaginCertificate {
    unsigned n = 0;
    cc::PontryaginEulerCertificate lemma;
    Rational witness;  ///< (-1)^k 4
};

/// 0 = sigma(S^4k) = <L_k, [S^4k]> = <s_k p_k, [S^4k]> = (-1)^k 4 s_k.
struct SignatureCertificate {
    unsigned n = 0;
    unsigned k = 0;
    Rational s_k;
    Rational bernoulli_k;
    Rational pontryagin_pairing;  ///< (-1)^k 4 from the lemma
    Rational witness;             ///< (-1)^k 4 s_k
    Rational signature;           ///< 0
    std::vector<std::string> assumed_axioms;
};

/// ch(E) = m + (-1)^(m-1) c_m / (m-1)! must pair integrally with [S^2m].
struct ChernDivisibilityCertificate {
    unsigned n = 0;
    unsigned m = 0;
    std::string chern_character;  ///< rendered ch for the single-class model
    Rational top_coefficient;     ///< coefficient of c_m in ch
    Integer factorial;            ///< (m-1)!
    Rational chern_pairing;       ///< <c_m, [S^2m]> = 2
    Rational ch_pairing;          ///< top_coefficient * 2
    bool integral = false;
    std::vector<std::string> assumed_axioms;
};

struct ConstructionEvidence {
    acs::JVerification verification;
};

struct SphereVerdict {
    unsigned n = 0;
    Status status = Status::RuledOut;
    Reason reason = Reason::OddDimension;
    std::optional<OddDimensionCertificate> odd;
    std::optional<PontryaginCertificate> pontryagin;
    std::optional<SignatureCertificate> signature;
    std::optional<ChernDivisibilityCertificate> chern;
    std::optional<ConstructionEvidence> construction;
    std::vector<std::string> assumed_axioms;
};

std::optional<OddDimensionCertificate> check_odd(unsigned n);
/// Fires for n = 4k, k >= 1.
std::optional<PontryaginCertificate> check_pontryagin_euler(unsigned n);
/// Requires n = 4k, k >= 1; throws Error otherwise.
SignatureCertificate check_signature(unsigned n);
/// Requires n even; throws Error otherwise. The certificate is always
/// returned; `integral == false` is what rules the sphere out.
ChernDivisibilityCertificate check_chern_divisibility(unsigned n);

struct ClassifyOptions {
    std::size_t samples = 100;
    std::uint64_t seed = 0;
};

/// Odd dimension, then the Pontryagin/Euler lemma (with the signature route
/// attached as a second certificate), then Chern-character divisibility;
/// if nothing fires, S^2 and S^6 are verified by sampling the cross-product J.
/// Throws Error for n = 0 and InvariantViolation if a certificate's witness
/// fails to evaluate as claimed.
SphereVerdict classify_sphere(unsigned n, const ClassifyOptions& options = {});

} // namespace acstk::obs
