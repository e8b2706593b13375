#include "acstk/sphere_acs.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <cmath>

using namespace acstk;
using namespace acstk::acs;
using testing::q;

namespace {

CDElement e(unsigned level, unsigned i) { return CDElement::basis(level, i); }

oracle::Vec to_doubles(const CDElement& a) {
    oracle::Vec out;
    for (std::size_t i = 1; i < a.dim(); ++i) out.push_back(a[i].get_d());
    return out;
}

double max_diff(const oracle::Vec& a, const oracle::Vec& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("sphere levels") {
    CHECK(level_for_sphere(2) == 2);
    CHECK(level_for_sphere(6) == 3);
    CHECK_THROWS_AS(level_for_sphere(4), Error);
}

TEST_CASE("cross product") {
    CHECK(cross(e(2, 1), e(2, 2)) == e(2, 3));
    CHECK(cross(e(2, 2), e(2, 1)) == -e(2, 3));
    CHECK(cross(e(3, 1), e(3, 1)).is_zero());
    Sampler rng(201);
    for (int s = 0; s < 20; ++s) {
        auto u = testing::random_imaginary(3, rng), v = testing::random_imaginary(3, rng);
        CHECK(cross(u, v) == -cross(v, u));
        CHECK(cd::inner_product(cross(u, v), u) == 0);
        CHECK(cd::inner_product(cross(u, v), v) == 0);
    }
    // orthogonal imaginary pair: uv is already imaginary
    CHECK(cross(e(3, 2), e(3, 5)) == e(3, 2) * e(3, 5));
    CHECK_THROWS_AS(cross(CDElement::one(2), e(2, 1)), Error);
    CHECK_THROWS_AS(cross(e(2, 1), e(3, 1)), Error);
}

TEST_CASE("sphere points and tangent vectors validate their input") {
    CHECK_NOTHROW(SpherePoint(e(3, 4)));
    CHECK_THROWS_AS(SpherePoint(e(3, 4) * Rational(2)), Error);
    CHECK_THROWS_AS(SpherePoint(CDElement::one(2)), Error);
    CHECK_THROWS_AS(SpherePoint(e(4, 1)), Error);
    SpherePoint p(e(2, 1));
    CHECK_NOTHROW(TangentVector(p, e(2, 2)));
    CHECK_THROWS_AS(TangentVector(p, e(2, 1) + e(2, 2)), Error);
    CHECK_THROWS_AS(TangentVector(p, e(3, 2)), Error);
}

TEST_CASE("J on S^2") {
    SpherePoint p(e(2, 1));
    auto j1 = j_apply(TangentVector(p, e(2, 2)));
    CHECK(j1.vector() == e(2, 3));
    auto j2 = j_apply(j1);
    CHECK(j2.vector() == -e(2, 2));
}

TEST_CASE("J on S^6 squares to minus the identity") {
    SpherePoint p(e(3, 1));
    for (unsigned i = 2; i <= 7; ++i) {
        TangentVector t(p, e(3, i));
        CHECK(j_apply(j_apply(t)).vector() == -e(3, i));
    }
}

TEST_CASE("stereographic points") {
    std::vector<Rational> zero2{0, 0};
    CHECK(rational_sphere_point(2, zero2).vector() == -e(2, 3));
    std::vector<Rational> one{1, 0};
    CHECK(rational_sphere_point(2, one).vector() == e(2, 1));
    std::vector<Rational> half{q(1, 2), 0, 0, 0, 0, 0};
    CHECK(rational_sphere_point(6, half).vector() == e(3, 1) * q(4, 5) - e(3, 7) * q(3, 5));
    std::vector<Rational> wrong{1};
    CHECK_THROWS_AS(rational_sphere_point(2, wrong), Error);
}

TEST_CASE("tangent projection") {
    SpherePoint p(e(2, 1));
    CHECK(tangent_projection(p, e(2, 1) + e(2, 2)).vector() == e(2, 2));
    CHECK(tangent_projection(p, e(2, 1)).vector().is_zero());
    CHECK_THROWS_AS(tangent_projection(p, CDElement::one(2)), Error);
}

TEST_CASE("random samples satisfy the J identities exactly") {
    for (unsigned n : {2u, 6u}) {
        auto report = verify_j(n, 50, 7);
        CHECK(report.samples == 50);
        CHECK(report.all_passed());
    }
    auto a = verify_j(6, 5, 3), b = verify_j(6, 5, 3);
    CHECK(a.square_is_minus_identity == b.square_is_minus_identity);
    CHECK_THROWS_AS(verify_j(3, 5, 0), Error);
}

TEST_CASE("field helpers") {
    auto u = e(2, 2);
    auto U = canonical_extension(u);
    CHECK(evaluate_field(U, e(2, 1)) == u);
    CHECK(evaluate_field(U, e(2, 2)).is_zero());
    CHECK(evaluate_field(position_field(2), e(2, 3)) == e(2, 3));
    CHECK(evaluate_field(j_field(constant_field(u), 2), e(2, 1)) == e(2, 3));
    // [x, u] for constant u and position field x is -u
    CHECK(bracket_at(position_field(2), constant_field(u), e(2, 1)) == -u);
}

TEST_CASE("Nijenhuis tensor vanishes on S^2") {
    Sampler rng(211);
    for (int s = 0; s < 100; ++s) {
        auto p = random_sphere_point(2, rng);
        auto u = random_tangent(p, rng), v = random_tangent(p, rng);
        REQUIRE(nijenhuis(p, u, v).is_zero());
    }
}

TEST_CASE("Nijenhuis tensor on S^6 golden value") {
    SpherePoint p(e(3, 1));
    CHECK(nijenhuis(p, TangentVector(p, e(3, 2)), TangentVector(p, e(3, 4))) == e(3, 7) * Rational(4));
    CHECK(nijenhuis(p, TangentVector(p, e(3, 2)), TangentVector(p, e(3, 5))) == e(3, 6) * Rational(-4));
    CHECK(nijenhuis(p, TangentVector(p, e(3, 2)), TangentVector(p, e(3, 3))).is_zero());
}

TEST_CASE("Nijenhuis tensor agrees with finite differences on S^6") {
    Sampler rng(223);
    for (int s = 0; s < 10; ++s) {
        auto p = random_sphere_point(6, rng);
        auto u = random_tangent(p, rng), v = random_tangent(p, rng);
        auto exact = to_doubles(nijenhuis(p, u, v));
        auto fd = oracle::nijenhuis_fd(to_doubles(p.vector()), to_doubles(u.vector()), to_doubles(v.vector()));
        CHECK(max_diff(exact, fd) < 1e-5);
    }
}

TEST_CASE("Nijenhuis tensor is antisymmetric and tangent") {
    Sampler rng(227);
    for (int s = 0; s < 10; ++s) {
        auto p = random_sphere_point(6, rng);
        auto u = random_tangent(p, rng), v = random_tangent(p, rng);
        auto n = nijenhuis(p, u, v);
        CHECK(n == -nijenhuis(p, v, u));
        CHECK(nijenhuis(p, u, u).is_zero());
        CHECK(cd::inner_product(n, p.vector()) == 0);
    }
}

TEST_CASE("Nijenhuis tensor does not depend on the extension") {
    // f(x) U(x) with f = 1 at p gives a different field with the same value at p
    Sampler rng(229);
    auto names = sym::MultiPoly::indexed_names("x", 7);
    for (int s = 0; s < 5; ++s) {
        auto p = random_sphere_point(6, rng);
        auto u = random_tangent(p, rng), v = random_tangent(p, rng);
        sym::MultiPoly f = sym::MultiPoly::constant(names, 1);
        for (std::size_t i = 0; i < 7; ++i) {
            Rational c = rng.rational();
            f += (sym::MultiPoly::variable(names, i) - sym::MultiPoly::constant(names, p.vector()[i + 1])) *
                 sym::MultiPoly::constant(names, c);
        }
        auto U = scale_field(f, canonical_extension(u.vector()));
        auto V = canonical_extension(v.vector());
        CHECK(nijenhuis_fields(p, U, V) == nijenhuis(p, u, v));
    }
}

TEST_CASE("Nijenhuis tensor is linear over scalars") {
    Sampler rng(233);
    for (int s = 0; s < 5; ++s) {
        auto p = random_sphere_point(6, rng);
        auto u = random_tangent(p, rng), v = random_tangent(p, rng);
        Rational lambda = rng.rational(7, 5);
        TangentVector lu(p, u.vector() * lambda);
        CHECK(nijenhuis(p, lu, v) == nijenhuis(p, u, v) * lambda);
    }
}

TEST_CASE("Nijenhuis input checks") {
    SpherePoint p(e(3, 1)), other(e(3, 2));
    CHECK_THROWS_AS(nijenhuis(p, TangentVector(other, e(3, 3)), TangentVector(p, e(3, 3))), Error);
}

TEST_CASE("Nijenhuis and associator comparison") {
    SpherePoint s2(e(2, 1));
    auto flat = compare_nijenhuis_associator(s2, TangentVector(s2, e(2, 2)), TangentVector(s2, e(2, 3)),
                                             TangentVector(s2, e(2, 2)));
    CHECK(flat.nijenhuis.is_zero());
    CHECK(flat.nijenhuis_pairing == 0);
    CHECK(flat.associator.is_zero());
    CHECK_FALSE(flat.ratio);

    SpherePoint p(e(3, 1));
    auto r = compare_nijenhuis_associator(p, TangentVector(p, e(3, 2)), TangentVector(p, e(3, 4)),
                                          TangentVector(p, e(3, 3)));
    CHECK(r.nijenhuis == e(3, 7) * Rational(4));
    CHECK(r.nijenhuis_pairing == 0);
    CHECK(r.associator == cd::associator(e(3, 2), e(3, 4), e(3, 3)));

    auto same = compare_nijenhuis_associator(p, TangentVector(p, e(3, 2)), TangentVector(p, e(3, 2)),
                                             TangentVector(p, e(3, 3)));
    CHECK(same.nijenhuis.is_zero());
    CHECK(same.associator.is_zero());

    CHECK_THROWS_AS(compare_nijenhuis_associator(p, TangentVector(p, e(3, 2)), TangentVector(p, e(3, 3)),
                                                 TangentVector(SpherePoint(e(3, 2)), e(3, 1))),
                    Error);
}
