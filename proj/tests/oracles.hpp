#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the routines being checked.

#include "acstk/rational.hpp"
#include "acstk/sampling.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

using acstk::Rational;

// Hamilton's table with 1, i, j, k = e0, e1, e2, e3.
// quaternion_table[a][b] = {sign, index} of e_a e_b.
inline constexpr std::array<std::array<std::pair<int, int>, 4>, 4> quaternion_table = {{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
}};

// Modern Bernoulli numbers from sum_{j=0}^{n} C(n+1, j) B_j = 0.
inline std::vector<Rational> modern_bernoulli(unsigned n_max) {
    std::vector<Rational> b(n_max + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        acstk::Integer binom = 1;  // C(n+1, j)
        for (unsigned j = 0; j < n; ++j) {
            acc += Rational(binom) * b[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        b[n] = -acc / Rational(n + 1);
    }
    return b;
}

// Positive convention: B_k = |B_{2k}| (modern).
inline Rational positive_bernoulli(unsigned k) {
    return abs(modern_bernoulli(2 * k)[2 * k]);
}

// ---- double-precision Cayley-Dickson, written straight from the doubling rule
using Vec = std::vector<double>;

inline Vec conj(const Vec& a) {
    Vec r = a;
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

inline Vec mul(const Vec& a, const Vec& b) {
    if (a.size() == 1) return {a[0] * b[0]};
    std::size_t h = a.size() / 2;
    Vec a1(a.begin(), a.begin() + h), a2(a.begin() + h, a.end());
    Vec b1(b.begin(), b.begin() + h), b2(b.begin() + h, b.end());
    Vec x = mul(a1, b1), y = mul(conj(b2), a2), z = mul(b2, a1), w = mul(a2, conj(b1));
    Vec out(a.size());
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = x[i] - y[i];
        out[h + i] = z[i] + w[i];
    }
    return out;
}

// Imaginary coordinates <-> full algebra element.
inline Vec lift(const Vec& imag) {
    Vec a(imag.size() + 1, 0.0);
    for (std::size_t i = 0; i < imag.size(); ++i) a[i + 1] = imag[i];
    return a;
}

inline Vec cross(const Vec& u, const Vec& v) {
    Vec uv = mul(lift(u), lift(v)), vu = mul(lift(v), lift(u));
    Vec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = 0.5 * (uv[i + 1] - vu[i + 1]);
    return out;
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

using Field = std::function<Vec(const Vec&)>;

// [X, Y](p) = DY(p) X(p) - DX(p) Y(p) with central differences.
inline Vec bracket_fd(const Field& X, const Field& Y, const Vec& p, double h = 1e-5) {
    auto directional = [&](const Field& F, const Vec& dir) {
        Vec plus = p, minus = p;
        for (std::size_t i = 0; i < p.size(); ++i) {
            plus[i] += h * dir[i];
            minus[i] -= h * dir[i];
        }
        Vec fp = F(plus), fm = F(minus), out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) out[i] = (fp[i] - fm[i]) / (2 * h);
        return out;
    };
    Vec a = directional(Y, X(p)), b = directional(X, Y(p)), out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// Nijenhuis tensor of x -> x cross (.) with extensions U(x) = u - <u,x> x.
inline Vec nijenhuis_fd(const Vec& p, const Vec& u, const Vec& v) {
    auto ext = [](Vec w) -> Field {
        return [w](const Vec& x) {
            double s = dot(w, x);
            Vec out = w;
            for (std::size_t i = 0; i < x.size(); ++i) out[i] -= s * x[i];
            return out;
        };
    };
    auto J = [](Field F) -> Field { return [F](const Vec& x) { return cross(x, F(x)); }; };
    Field U = ext(u), V = ext(v), JU = J(U), JV = J(V);
    Vec a = bracket_fd(JU, JV, p), b = bracket_fd(U, V, p);
    Vec c = bracket_fd(JU, V, p), d = bracket_fd(U, JV, p);
    Vec cd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) cd[i] = c[i] + d[i];
    Vec jcd = cross(p, cd);
    Vec out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = a[i] - b[i] - jcd[i];
    return out;
}

} // namespace oracle
