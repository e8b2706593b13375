#pragma once

#include "acstk/cayley_dickson.hpp"
#include "acstk/sampling.hpp"
#include "acstk/symfun.hpp"

#include <optional>
#include <span>
#include <vector>

namespace acstk::acs {

using cd::CDElement;

/// Algebra level whose imaginary part contains S^n: 2 for S^2, 3 for S^6.
unsigned level_for_sphere(unsigned sphere_dim);

/// Unit imaginary quaternion (S^2) or octonion (S^6), exactly.
class SpherePoint {
public:
    /// Throws Error unless v is imaginary of level 2 or 3 with norm_sq exactly 1.
    explicit SpherePoint(CDElement v);

    unsigned sphere_dim() const noexcept { return sphere_dim_; }
    unsigned level() const noexcept { return vector_.level(); }
    const CDElement& vector() const noexcept { return vector_; }

    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

private:
    unsigned sphere_dim_;
    CDElement vector_;
};

/// Imaginary vector exactly orthogonal to its base point.
class TangentVector {
public:
    TangentVector(SpherePoint base, CDElement v);

    const SpherePoint& base() const noexcept { return base_; }
    const CDElement& vector() const noexcept { return vector_; }

    friend bool operator==(const TangentVector&, const TangentVector&) = default;

private:
    SpherePoint base_;
    CDElement vector_;
};

/// u x v = Im(uv) = (uv - vu) / 2 for imaginary u, v.
CDElement cross(const CDElement& u, const CDElement& v);

/// J_p(v) = p x v.
TangentVector j_apply(const TangentVector& t);

/// Inverse stereographic projection: params q in Q^n map to
/// (2 q_1, ..., 2 q_n, |q|^2 - 1) / (|q|^2 + 1) on e_1 .. e_{n+1}.
SpherePoint rational_sphere_point(unsigned sphere_dim, std::span<const Rational> params);

/// w - <w, p> p.
TangentVector tangent_projection(const SpherePoint& p, const CDElement& w);

/// Polynomial vector field on Im(A_n): one component per imaginary
/// coordinate, each a polynomial in x1 .. x_{2^n - 1}.
using VectorField = std::vector<sym::MultiPoly>;

VectorField constant_field(const CDElement& u);
/// x -> x
VectorField position_field(unsigned level);
/// U(x) = u - <u, x> x, tangent to the unit sphere everywhere on it.
VectorField canonical_extension(const CDElement& u);
/// f(x) * X(x)
VectorField scale_field(const sym::MultiPoly& f, const VectorField& X);
/// (X x Y)(x) = X(x) x Y(x) pointwise.
VectorField cross_field(const VectorField& X, const VectorField& Y, unsigned level);
/// (JW)(x) = x x W(x).
VectorField j_field(const VectorField& W, unsigned level);

CDElement evaluate_field(const VectorField& X, const CDElement& at);
/// Ambient Lie bracket [X, Y](p) = DY(p) X(p) - DX(p) Y(p).
CDElement bracket_at(const VectorField& X, const VectorField& Y, const CDElement& p);

/// N_J(X, Y) at p = [JX, JY] - [X, Y] - J[JX, Y] - J[X, JY], for fields
/// X, Y tangent to the sphere near p.
CDElement nijenhuis_fields(const SpherePoint& p, const VectorField& X, const VectorField& Y);

/// Nijenhuis tensor on tangent vectors, using the canonical extensions.
/// Throws Error when u or v is not based at p.
CDElement nijenhuis(const SpherePoint& p, const TangentVector& u, const TangentVector& v);

struct AssociatorComparison {
    CDElement nijenhuis;              ///< N_J(u, v)
    Rational nijenhuis_pairing;       ///< <N_J(u, v), w>
    CDElement associator;             ///< [u, v, w]
    Rational associator_real;         ///< Re [u, v, w]
    std::optional<Rational> ratio;    ///< pairing / real part, when both nonzero
};

/// Reports <N_J(u,v), w> next to [u, v, w]. Asserts no relation between them.
AssociatorComparison compare_nijenhuis_associator(const SpherePoint& p, const TangentVector& u,
                                                  const TangentVector& v, const TangentVector& w);

/// Random rational sphere point and nonzero tangent vector.
SpherePoint random_sphere_point(unsigned sphere_dim, Sampler& rng);
TangentVector random_tangent(const SpherePoint& p, Sampler& rng);

struct JVerification {
    unsigned sphere_dim = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t square_is_minus_identity = 0;
    std::size_t tangent = 0;
    std::size_t isometric = 0;
    bool all_passed() const {
        return square_is_minus_identity == samples && tangent == samples && isometric == samples;
    }
};

/// Checks J^2 v = -v, <Jv, p> = 0 and |Jv| = |v| exactly on random samples.
/// Sample i draws from its own stream (seed, i).
JVerification verify_j(unsigned sphere_dim, std::size_t samples, std::uint64_t seed);

} // namespace acstk::acs
