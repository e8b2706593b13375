#include "acstk/obstruction.hpp"

#include "acstk/genera.hpp"
#include "acstk/symfun.hpp"

#include <algorithm>

namespace acstk::obs {

using acstk::to_string;

std::string to_string(Status s) { return s == Status::Exists ? "exists" : "ruled_out"; }

std::string to_string(Reason r) {
    switch (r) {
    case Reason::OddDimension: return "odd_dimension";
    case Reason::PontryaginEuler: return "pontryagin_euler";
    case Reason::SignatureLGenus: return "signature_L_genus";
    case Reason::ChernDivisibility: return "chern_divisibility";
    case Reason::ExplicitConstruction: return "explicit_construction";
    }
    return "?";
}

namespace {

std::string sphere(unsigned n) { return "S^" + std::to_string(n); }

Rational sign_power(unsigned k) { return k % 2 == 1 ? Rational(-1) : Rational(1); }

void append_unique(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& a : from) {
        if (std::find(into.begin(), into.end(), a) == into.end()) into.push_back(a);
    }
}

} // namespace

std::optional<OddDimensionCertificate> check_odd(unsigned n) {
    if (n % 2 == 0) return std::nullopt;
    OddDimensionCertificate cert;
    cert.n = n;
    cert.det_squared_sign = -1;
    cert.assumed_axioms = {"J^2 = -Id forces (det J)^2 = (-1)^n on a real tangent space of dimension n"};
    return cert;
}

std::optional<PontryaginCertificate> check_pontryagin_euler(unsigned n) {
    if (n == 0 || n % 4 != 0) return std::nullopt;
    PontryaginCertificate cert;
    cert.n = n;
    cert.lemma = cc::replay_lemma_pontryagin_euler(n / 4);
    cert.witness = cert.lemma.pairing;
    return cert;
}

SignatureCertificate check_signature(unsigned n) {
    if (n == 0 || n % 4 != 0) {
        throw Error("check_signature: " + sphere(n) + " is not of the form S^4k");
    }
    unsigned k = n / 4;
    SignatureCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.bernoulli_k = genera::bernoulli(k);
    cert.s_k = genera::s_coefficient(k);
    cert.pontryagin_pairing = cc::replay_lemma_pontryagin_euler(k).pairing;
    // L_k(S^4k) = s_k p_k since every lower Pontryagin class vanishes.
    cert.witness = cert.s_k * cert.pontryagin_pairing;
    cert.signature = 0;
    cert.assumed_axioms = {"sigma(" + sphere(n) + ") = 0 since H^" + std::to_string(2 * k) + "(" +
                               sphere(n) + "; Z) = 0",
                           "sigma(M) = <L_k(p_1, ..., p_k), [M]>",
                           "chi(" + sphere(n) + ") = 2"};
    return cert;
}

ChernDivisibilityCertificate check_chern_divisibility(unsigned n) {
    if (n == 0 || n % 2 != 0) {
        throw Error("check_chern_divisibility: " + sphere(n) + " is not even-dimensional");
    }
    unsigned m = n / 2;
    ChernDivisibilityCertificate cert;
    cert.n = n;
    cert.m = m;

    // Rank-m bundle on S^2m: only c_m can survive.
    std::vector<std::string> gens{"c" + std::to_string(m)};
    std::vector<unsigned> weights{m};
    sym::GradedPoly cm = sym::GradedPoly::generator(gens, weights, 0);
    std::vector<sym::GradedPoly> classes(m, cm.zero());
    classes[m - 1] = cm;
    auto ch = genera::chern_character(m, classes, m);

    cert.chern_character = sym::to_string(ch);
    cert.top_coefficient = ch.linear_coefficient(0);
    cert.factorial = factorial(m - 1);
    Rational expected = sign_power(m - 1) / Rational(cert.factorial);
    if (cert.top_coefficient != expected || ch.coefficient({0}) != m) {
        throw InvariantViolation("chern character of the single-class model on " + sphere(n) +
                                 " is " + cert.chern_character);
    }
    cert.chern_pairing = 2;
    cert.ch_pairing = cert.top_coefficient * cert.chern_pairing;
    cert.integral = is_integer(cert.ch_pairing);
    cert.assumed_axioms = {"ch(" + sphere(n) + ") is integral (Bott periodicity)",
                           "<c_m, [S^2m]> = <e(T S^2m), [S^2m]> = chi(S^2m) = 2",
                           "a complex structure makes T(S^2m) a rank-m complex bundle"};
    return cert;
}

SphereVerdict classify_sphere(unsigned n, const ClassifyOptions& options) {
    if (n == 0) {
        throw Error("classify_sphere: n must be at least 1");
    }
    SphereVerdict v;
    v.n = n;
    v.status = Status::RuledOut;

    if (auto odd = check_odd(n)) {
        v.reason = Reason::OddDimension;
        v.assumed_axioms = odd->assumed_axioms;
        v.odd = std::move(odd);
        return v;
    }

    if (auto pe = check_pontryagin_euler(n)) {
        unsigned k = n / 4;
        if (pe->witness != 4 * sign_power(k) || !pe->lemma.contradiction) {
            throw InvariantViolation("Pontryagin/Euler witness for " + sphere(n) + " is " +
                                     to_string(pe->witness));
        }
        auto sig = check_signature(n);
        if (sig.witness == 0 || sig.witness != 4 * sign_power(k) * sig.s_k) {
            throw InvariantViolation("signature witness for " + sphere(n) + " is " +
                                     to_string(sig.witness));
        }
        v.reason = Reason::PontryaginEuler;
        v.assumed_axioms = pe->lemma.assumed_axioms;
        append_unique(v.assumed_axioms, sig.assumed_axioms);
        v.pontryagin = std::move(pe);
        v.signature = std::move(sig);
        return v;
    }

    auto chern = check_chern_divisibility(n);
    v.assumed_axioms = chern.assumed_axioms;
    if (!chern.integral) {
        if (is_integer(chern.ch_pairing)) {
            throw InvariantViolation("Chern divisibility witness for " + sphere(n) + " is integral");
        }
        v.reason = Reason::ChernDivisibility;
        v.chern = std::move(chern);
        return v;
    }
    v.chern = std::move(chern);

    if (n != 2 && n != 6) {
        throw InvariantViolation("no obstruction fired for " + sphere(n) +
                                 " and no construction is known");
    }
    ConstructionEvidence evidence{acs::verify_j(n, options.samples, options.seed)};
    if (!evidence.verification.all_passed()) {
        throw InvariantViolation("cross-product J failed verification on " + sphere(n));
    }
    v.status = Status::Exists;
    v.reason = Reason::ExplicitConstruction;
    v.construction = std::move(evidence);
    return v;
}

} // namespace acstk::obs
