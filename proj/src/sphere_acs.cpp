#include "acstk/sphere_acs.hpp"

namespace acstk::acs {

using acstk::to_string;

using sym::MultiPoly;

unsigned level_for_sphere(unsigned sphere_dim) {
    switch (sphere_dim) {
    case 2: return 2;
    case 6: return 3;
    default:
        throw Error("only S^2 and S^6 carry the cross-product structure, got S^" +
                    std::to_string(sphere_dim));
    }
}

namespace {

unsigned sphere_dim_for_level(unsigned level) {
    if (level == 2) return 2;
    if (level == 3) return 6;
    throw Error("sphere points live at level 2 or 3, got level " + std::to_string(level));
}

std::size_t imag_dim(unsigned level) { return (std::size_t{1} << level) - 1; }

void require_imaginary(const CDElement& a, const char* what) {
    if (!a.is_imaginary()) {
        throw Error(std::string(what) + " must be imaginary, real part is " +
                    to_string(cd::real_part(a)));
    }
}

} // namespace

SpherePoint::SpherePoint(CDElement v)
    : sphere_dim_(sphere_dim_for_level(v.level())), vector_(std::move(v)) {
    require_imaginary(vector_, "sphere point");
    auto n = cd::norm_sq(vector_);
    if (n != 1) {
        throw Error("sphere point has norm_sq " + to_string(n) + ", expected exactly 1");
    }
}

TangentVector::TangentVector(SpherePoint base, CDElement v)
    : base_(std::move(base)), vector_(std::move(v)) {
    cd::require_same_level(base_.vector(), vector_, "tangent vector");
    require_imaginary(vector_, "tangent vector");
    auto ip = cd::inner_product(vector_, base_.vector());
    if (ip != 0) {
        throw Error("tangent vector is not orthogonal to its base point (<v,p> = " + to_string(ip) +
                    ")");
    }
}

CDElement cross(const CDElement& u, const CDElement& v) {
    cd::require_same_level(u, v, "cross");
    require_imaginary(u, "cross: u");
    require_imaginary(v, "cross: v");
    return (u * v - v * u) * Rational(1, 2);
}

TangentVector j_apply(const TangentVector& t) {
    return TangentVector(t.base(), cross(t.base().vector(), t.vector()));
}

SpherePoint rational_sphere_point(unsigned sphere_dim, std::span<const Rational> params) {
    unsigned level = level_for_sphere(sphere_dim);
    if (params.size() != sphere_dim) {
        throw Error("S^" + std::to_string(sphere_dim) + " needs " + std::to_string(sphere_dim) +
                    " stereographic parameters, got " + std::to_string(params.size()));
    }
    Rational s = 0;
    for (const auto& q : params) s += q * q;
    Rational denom = s + 1;
    std::vector<Rational> coords;
    coords.reserve(sphere_dim + 1);
    for (const auto& q : params) coords.push_back(2 * q / denom);
    coords.push_back((s - 1) / denom);
    return SpherePoint(CDElement::imaginary(level, coords));
}

TangentVector tangent_projection(const SpherePoint& p, const CDElement& w) {
    cd::require_same_level(p.vector(), w, "tangent_projection");
    require_imaginary(w, "tangent_projection: w");
    return TangentVector(p, w - p.vector() * cd::inner_product(w, p.vector()));
}

// ------------------------------------------------------------ vector fields

namespace {

std::vector<std::string> coordinate_names(unsigned level) {
    return MultiPoly::indexed_names("x", imag_dim(level));
}

unsigned level_of_field(const VectorField& X) {
    std::size_t d = X.size();
    for (unsigned level = 1; level <= CDElement::kMaxLevel; ++level) {
        if (imag_dim(level) == d) return level;
    }
    throw Error("vector field has " + std::to_string(d) + " components, not 2^n - 1");
}

} // namespace

VectorField constant_field(const CDElement& u) {
    require_imaginary(u, "constant field");
    auto names = coordinate_names(u.level());
    VectorField X;
    for (std::size_t c = 1; c < u.dim(); ++c) X.push_back(MultiPoly::constant(names, u[c]));
    return X;
}

VectorField position_field(unsigned level) {
    auto names = coordinate_names(level);
    VectorField X;
    for (std::size_t c = 0; c < names.size(); ++c) X.push_back(MultiPoly::variable(names, c));
    return X;
}

VectorField canonical_extension(const CDElement& u) {
    auto names = coordinate_names(u.level());
    auto x = position_field(u.level());
    MultiPoly ux(names);
    for (std::size_t c = 0; c < x.size(); ++c) ux += x[c] * u[c + 1];
    VectorField U = constant_field(u);
    for (std::size_t c = 0; c < U.size(); ++c) U[c] -= ux * x[c];
    return U;
}

VectorField scale_field(const MultiPoly& f, const VectorField& X) {
    VectorField out;
    out.reserve(X.size());
    for (const auto& comp : X) out.push_back(f * comp);
    return out;
}

VectorField cross_field(const VectorField& X, const VectorField& Y, unsigned level) {
    std::size_t d = imag_dim(level);
    if (X.size() != d || Y.size() != d) {
        throw Error("cross_field: fields do not match level " + std::to_string(level));
    }
    const auto& table = cd::multiplication_table(level);
    std::size_t n = d + 1;
    VectorField out(d, MultiPoly(X[0].variables()));
    for (std::size_t i = 1; i < n; ++i) {
        if (X[i - 1].is_zero()) continue;
        for (std::size_t j = 1; j < n; ++j) {
            if (i == j || Y[j - 1].is_zero()) continue;
            // e_i x e_j = (e_i e_j - e_j e_i) / 2
            auto ij = table[i * n + j];
            auto ji = table[j * n + i];
            MultiPoly prod = X[i - 1] * Y[j - 1];
            if (ij.index != 0) out[ij.index - 1] += prod * Rational(ij.sign, 2);
            if (ji.index != 0) out[ji.index - 1] -= prod * Rational(ji.sign, 2);
        }
    }
    return out;
}

VectorField j_field(const VectorField& W, unsigned level) {
    return cross_field(position_field(level), W, level);
}

CDElement evaluate_field(const VectorField& X, const CDElement& at) {
    unsigned level = level_of_field(X);
    cd::require_same_level(CDElement(level), at, "evaluate_field");
    std::vector<Rational> point(at.coeffs().begin() + 1, at.coeffs().end());
    std::vector<Rational> values;
    values.reserve(X.size());
    for (const auto& comp : X) values.push_back(comp.evaluate(point));
    return CDElement::imaginary(level, values);
}

CDElement bracket_at(const VectorField& X, const VectorField& Y, const CDElement& p) {
    unsigned level = level_of_field(X);
    if (Y.size() != X.size()) {
        throw Error("bracket_at: fields have different dimensions");
    }
    std::vector<Rational> point(p.coeffs().begin() + 1, p.coeffs().end());
    auto Xp = evaluate_field(X, p);
    auto Yp = evaluate_field(Y, p);
    std::size_t d = X.size();
    std::vector<Rational> out(d, Rational(0));
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t v = 0; v < d; ++v) {
            const auto& xv = Xp[v + 1];
            const auto& yv = Yp[v + 1];
            if (xv != 0) out[c] += Y[c].derivative(v).evaluate(point) * xv;
            if (yv != 0) out[c] -= X[c].derivative(v).evaluate(point) * yv;
        }
    }
    return CDElement::imaginary(level, out);
}

CDElement nijenhuis_fields(const SpherePoint& p, const VectorField& X, const VectorField& Y) {
    unsigned level = p.level();
    auto JX = j_field(X, level);
    auto JY = j_field(Y, level);
    const auto& at = p.vector();
    CDElement n = bracket_at(JX, JY, at) - bracket_at(X, Y, at);
    CDElement inner = bracket_at(JX, Y, at) + bracket_at(X, JY, at);
    return n - cross(at, inner);
}

CDElement nijenhuis(const SpherePoint& p, const TangentVector& u, const TangentVector& v) {
    if (u.base() != p || v.base() != p) {
        throw Error("nijenhuis: tangent vectors must be based at the evaluation point");
    }
    return nijenhuis_fields(p, canonical_extension(u.vector()), canonical_extension(v.vector()));
}

AssociatorComparison compare_nijenhuis_associator(const SpherePoint& p, const TangentVector& u,
                                                  const TangentVector& v, const TangentVector& w) {
    if (w.base() != p) {
        throw Error("compare_nijenhuis_associator: w must be based at the evaluation point");
    }
    auto n = nijenhuis(p, u, v);
    auto pairing = cd::inner_product(n, w.vector());
    auto assoc = cd::associator(u.vector(), v.vector(), w.vector());
    auto re = cd::real_part(assoc);
    std::optional<Rational> ratio;
    if (pairing != 0 && re != 0) ratio = pairing / re;
    return {std::move(n), std::move(pairing), std::move(assoc), std::move(re), std::move(ratio)};
}

// ------------------------------------------------------------------ sampling

SpherePoint random_sphere_point(unsigned sphere_dim, Sampler& rng) {
    level_for_sphere(sphere_dim);
    std::vector<Rational> params(sphere_dim);
    for (auto& q : params) q = rng.rational(3, 3);
    return rational_sphere_point(sphere_dim, params);
}

TangentVector random_tangent(const SpherePoint& p, Sampler& rng) {
    std::size_t d = imag_dim(p.level());
    while (true) {
        std::vector<Rational> coords(d);
        for (auto& c : coords) c = rng.rational();
        auto t = tangent_projection(p, CDElement::imaginary(p.level(), coords));
        if (!t.vector().is_zero()) return t;
    }
}

JVerification verify_j(unsigned sphere_dim, std::size_t samples, std::uint64_t seed) {
    JVerification r;
    r.sphere_dim = sphere_dim;
    r.samples = samples;
    r.seed = seed;
    for (std::size_t i = 0; i < samples; ++i) {
        Sampler rng(seed, i);
        auto p = random_sphere_point(sphere_dim, rng);
        auto t = random_tangent(p, rng);
        auto jv = cross(p.vector(), t.vector());
        if (cd::inner_product(jv, p.vector()) == 0) ++r.tangent;
        if (cd::norm_sq(jv) == cd::norm_sq(t.vector())) ++r.isometric;
        auto jjv = cross(p.vector(), jv);
        if (jjv == -t.vector()) ++r.square_is_minus_identity;
    }
    return r;
}

} // namespace acstk::acs
