// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "acstk/cayley_dickson.hpp"
#include "acstk/char_class.hpp"
#include "acstk/genera.hpp"
#include "acstk/obstruction.hpp"
#include "acstk/sphere_acs.hpp"
#include "acstk/symfun.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace acstk;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > limit_seconds) {
        out.ok = false;
        out.detail = "exceeded " + std::to_string(limit_seconds) + " s";
    }
    std::printf("criterion %d: %s  %s  (%.3f s / %.0f s)%s%s\n", id, out.ok ? "PASS" : "FAIL", name, secs,
                limit_seconds, out.detail.empty() ? "" : "  ", out.detail.c_str());
    if (!out.ok) ++failures;
}

Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

sym::MultiPoly power_sum(std::size_t m, unsigned k) {
    sym::MultiPoly p(sym::MultiPoly::indexed_names("b", m));
    for (std::size_t i = 0; i < m; ++i) {
        sym::Exponents e(m, 0);
        e[i] = k;
        p.add_term(e, 1);
    }
    return p;
}

// Coefficients of t^j in prod (1 + b_i t), expanded factor by factor.
std::vector<sym::MultiPoly> product_sigmas(std::size_t m, std::size_t upto) {
    auto names = sym::MultiPoly::indexed_names("b", m);
    std::vector<sym::MultiPoly> coeff(upto + 1, sym::MultiPoly(names));
    coeff[0] = sym::MultiPoly::constant(names, 1);
    for (std::size_t i = 0; i < m; ++i) {
        auto b = sym::MultiPoly::variable(names, i);
        for (std::size_t j = upto; j >= 1; --j) coeff[j] += coeff[j - 1] * b;
    }
    return {coeff.begin() + 1, coeff.end()};
}

cd::CDElement random_element(unsigned level, Sampler& rng) {
    std::vector<Rational> c(std::size_t{1} << level);
    for (auto& x : c) x = rng.rational(5, 4);
    return cd::CDElement(level, std::move(c));
}

} // namespace

int main() {
    criterion(1, "L-polynomials L1, L2, L3", 1.0, [](Outcome& out) {
        auto r1 = sym::GradedPoly::ring("p", 1);
        auto l1 = r1.gen(0) * frac(1, 3);
        auto r2 = sym::GradedPoly::ring("p", 2);
        auto a1 = r2.gen(0), a2 = r2.gen(1);
        auto l2 = (a2 * Rational(7) - a1 * a1) * frac(1, 45);
        auto r3 = sym::GradedPoly::ring("p", 3);
        auto p1 = r3.gen(0), p2 = r3.gen(1), p3 = r3.gen(2);
        auto l3 = (p3 * Rational(62) - p2 * p1 * Rational(13) + p1 * p1 * p1 * Rational(2)) * frac(1, 945);
        out.require(genera::l_polynomial(1) == l1, "L1 = " + to_string(genera::l_polynomial(1)));
        out.require(genera::l_polynomial(2) == l2, "L2 = " + to_string(genera::l_polynomial(2)));
        out.require(genera::l_polynomial(3) == l3, "L3 = " + to_string(genera::l_polynomial(3)));
    });

    criterion(2, "s_k: closed form = p_k coefficient of L_k = generating series, k <= 6", 5.0, [](Outcome& out) {
        auto series = genera::s_series(6);
        auto literal = genera::half_sinh_series(6);
        out.require(series[0] == 1 && genera::s_coefficient(0) == 1, "s_0 != 1");
        for (unsigned k = 1; k <= 6; ++k) {
            Rational four_k(Integer(1) << (2 * k));
            Rational half((Integer(1) << (2 * k - 1)) - 1);
            Rational closed = four_k * half * oracle::positive_bernoulli(k) / Rational(factorial(2 * k));
            Rational from_l = genera::l_polynomial(k).linear_coefficient(k - 1);
            std::string tag = "k=" + std::to_string(k) + ": ";
            out.require(genera::s_coefficient(k) == closed, tag + "library closed form " + to_string(genera::s_coefficient(k)));
            out.require(from_l == closed, tag + "L_k coefficient " + to_string(from_l));
            out.require(series[k] == closed, tag + "series coefficient " + to_string(series[k]));
            // the literal sinh display carries the sign (-1)^k
            out.require(literal[k] == (k % 2 == 0 ? closed : -closed), tag + "sinh display sign");
        }
    });

    criterion(3, "Bernoulli B1..B6", 1.0, [](Outcome& out) {
        const Rational expected[] = {frac(1, 6), frac(1, 30), frac(1, 42), frac(1, 30), frac(5, 66), frac(691, 2730)};
        for (unsigned k = 1; k <= 6; ++k) {
            out.require(genera::bernoulli(k) == expected[k - 1], "B" + std::to_string(k));
            out.require(oracle::positive_bernoulli(k) == expected[k - 1], "recurrence B" + std::to_string(k));
        }
    });

    criterion(4, "J^2 = -1 and <Jv, p> = 0 on 1000 points of S^2 and S^6", 10.0, [](Outcome& out) {
        for (unsigned n : {2u, 6u}) {
            auto r = acs::verify_j(n, 1000, 0);
            out.require(r.samples == 1000, "sample count");
            out.require(r.square_is_minus_identity == 1000, "J^2 on S^" + std::to_string(n));
            out.require(r.tangent == 1000, "tangency on S^" + std::to_string(n));
        }
    });

    criterion(5, "Nijenhuis: zero on S^2, nonzero on S^6, tensorial, antisymmetric", 30.0, [](Outcome& out) {
        for (unsigned n : {2u, 6u}) {
            Sampler rng(0, 500 + n);
            std::size_t nonzero = 0;
            for (int s = 0; s < 100; ++s) {
                auto p = acs::random_sphere_point(n, rng);
                auto u = acs::random_tangent(p, rng), v = acs::random_tangent(p, rng);
                Rational lambda = rng.rational(7, 5);
                auto value = acs::nijenhuis(p, u, v);
                if (!value.is_zero()) ++nonzero;
                acs::TangentVector lu(p, u.vector() * lambda), lv(p, v.vector() * lambda);
                out.require(acs::nijenhuis(p, lu, v) == value * lambda, "scaling in u");
                out.require(acs::nijenhuis(p, u, lv) == value * lambda, "scaling in v");
                out.require(acs::nijenhuis(p, v, u) == -value, "antisymmetry");
            }
            if (n == 2) out.require(nonzero == 0, "nonzero N on S^2");
            if (n == 6) out.require(nonzero > 0, "N vanished at every S^6 sample");
        }
    });

    criterion(6, "classification 1 <= n <= 200", 10.0, [](Outcome& out) {
        for (unsigned n = 1; n <= 200; ++n) {
            auto v = obs::classify_sphere(n);
            bool exists = v.status == obs::Status::Exists;
            out.require(exists == (n == 2 || n == 6), "wrong verdict at n=" + std::to_string(n));
            if (n % 4 == 0) {
                unsigned k = n / 4;
                Rational sign = k % 2 == 0 ? 1 : -1;
                bool both = v.pontryagin && v.signature;
                out.require(both, "missing certificate at n=" + std::to_string(n));
                if (!both) continue;
                out.require(v.pontryagin->witness == sign * 4, "Pontryagin witness at n=" + std::to_string(n));
                out.require(v.signature->witness == sign * 4 * genera::s_coefficient(k) && v.signature->witness != 0,
                            "signature witness at n=" + std::to_string(n));
            }
        }
    });

    criterion(7, "Newton identities for k <= 8, m <= k + 2", 30.0, [](Outcome& out) {
        for (unsigned k = 1; k <= 8; ++k) {
            auto nu = sym::newton_polynomial(k).poly();
            for (std::size_t m = 1; m <= k + 2; ++m) {
                auto sigmas = product_sigmas(m, k);
                out.require(nu.compose(sigmas) == power_sum(m, k),
                            "k=" + std::to_string(k) + " m=" + std::to_string(m));
            }
        }
    });

    criterion(8, "Cayley-Dickson property suite", 30.0, [](Outcome& out) {
        Sampler rng(0, 800);
        for (unsigned level = 0; level <= 4; ++level) {
            for (int s = 0; s < 20; ++s) {
                auto a = random_element(level, rng), b = random_element(level, rng);
                out.require(cd::conjugate(a * b) == cd::conjugate(b) * cd::conjugate(a),
                            "anti-automorphism at level " + std::to_string(level));
                if (level <= 3) {
                    out.require(cd::norm_sq(a * b) == cd::norm_sq(a) * cd::norm_sq(b),
                                "norm composition at level " + std::to_string(level));
                }
            }
        }
        const unsigned d = 8;
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j)
                for (unsigned l = 0; l < d; ++l) {
                    auto x = cd::CDElement::basis(3, i), y = cd::CDElement::basis(3, j), z = cd::CDElement::basis(3, l);
                    auto a = cd::associator(x, y, z);
                    out.require(a == -cd::associator(y, x, z) && a == -cd::associator(x, z, y),
                                "associator not alternating on a basis triple");
                    if (i == j || j == l || i == l) out.require(a.is_zero(), "associator nonzero on a repeated triple");
                }
        auto probe = cd::probe_alternative(4, 0, 0);
        out.require(!probe.alternative && probe.witness, "no level-4 witness");
        if (probe.witness) {
            out.require(!probe.witness->value.is_zero(), "witness associator is zero");
            const auto& w = *probe.witness;
            auto recomputed = cd::associator(w.u, w.v, w.w);
            out.require(recomputed == w.value, "witness does not recompute");
            bool repeated = w.u == w.v || w.v == w.w || w.u == w.w;
            out.require(repeated, "witness arguments are not a repeated pair");
        }
    });

    criterion(9, "Pontryagin-Euler lemma replay for k <= 10", 1.0, [](Outcome& out) {
        for (unsigned k = 1; k <= 10; ++k) {
            auto cert = cc::replay_lemma_pontryagin_euler(k);
            Rational sign = k % 2 == 0 ? 1 : -1;
            std::string tag = "k=" + std::to_string(k);
            out.require(cert.complexified_chern.component(0) == 1 && cert.complexified_chern.component(2 * k) == 2,
                        tag + " chain does not reach 1 + 2c_2k");
            out.require(cert.identity_holds, tag + " identity");
            out.require(cert.pairing == sign * 4, tag + " pairing " + to_string(cert.pairing));
        }
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
