#include "acstk/char_class.hpp"

namespace acstk::cc {

using acstk::to_string;

SphereCohomologyClass::SphereCohomologyClass(unsigned sphere_dim, Rational degree0, Rational top)
    : sphere_dim_(sphere_dim), degree0_(std::move(degree0)), top_(std::move(top)) {
    if (sphere_dim == 0) {
        throw Error("sphere model needs a positive dimension");
    }
}

SphereCohomologyClass operator*(const SphereCohomologyClass& a, const SphereCohomologyClass& b) {
    if (a.sphere_dim_ != b.sphere_dim_) {
        throw Error("cohomology classes of different spheres");
    }
    // x^2 = 0
    return {a.sphere_dim_, a.degree0_ * b.degree0_, a.degree0_ * b.top_ + a.top_ * b.degree0_};
}

SphereCohomologyClass operator+(const SphereCohomologyClass& a, const SphereCohomologyClass& b) {
    if (a.sphere_dim_ != b.sphere_dim_) {
        throw Error("cohomology classes of different spheres");
    }
    return {a.sphere_dim_, a.degree0_ + b.degree0_, a.top_ + b.top_};
}

std::string to_string(Kind k) {
    switch (k) {
    case Kind::StiefelWhitney: return "stiefel_whitney";
    case Kind::Chern: return "chern";
    case Kind::Pontryagin: return "pontryagin";
    }
    return "?";
}

unsigned component_degree(Kind k, unsigned index) {
    switch (k) {
    case Kind::StiefelWhitney: return index;
    case Kind::Chern: return 2 * index;
    case Kind::Pontryagin: return 4 * index;
    }
    return 0;
}

namespace {

Rational mod2(const Rational& q) {
    if (!is_integer(q)) {
        throw Error("Stiefel-Whitney scalars must be integers mod 2, got " + to_string(q));
    }
    Integer r = q.get_num() % 2;
    if (r < 0) r += 2;
    return Rational(r);
}

char symbol(Kind k) {
    switch (k) {
    case Kind::StiefelWhitney: return 'w';
    case Kind::Chern: return 'c';
    case Kind::Pontryagin: return 'p';
    }
    return '?';
}

// Components above the top degree are dropped; trailing zeros trimmed.
std::vector<Rational> normalize(Kind kind, unsigned sphere_dim, std::vector<Rational> c) {
    while (c.size() > 1 && component_degree(kind, static_cast<unsigned>(c.size() - 1)) > sphere_dim) {
        c.pop_back();
    }
    if (kind == Kind::StiefelWhitney) {
        for (auto& x : c) x = mod2(x);
    }
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

} // namespace

TotalClass::TotalClass(Kind kind, unsigned sphere_dim)
    : TotalClass(kind, sphere_dim, std::vector<Rational>{Rational(1)}) {}

TotalClass::TotalClass(Kind kind, unsigned sphere_dim, std::vector<Rational> components)
    : kind_(kind), sphere_dim_(sphere_dim) {
    if (sphere_dim == 0) {
        throw Error("sphere model needs a positive dimension");
    }
    if (components.empty() || components[0] != 1) {
        throw Error("a total class has degree-0 component 1");
    }
    for (unsigned i = 1; i < components.size(); ++i) {
        unsigned deg = component_degree(kind, i);
        if (components[i] != 0 && deg != sphere_dim) {
            throw Error("component " + std::string(1, symbol(kind)) + std::to_string(i) +
                        " lives in degree " + std::to_string(deg) + ", but H*(S^" +
                        std::to_string(sphere_dim) + ") vanishes there");
        }
    }
    components_ = normalize(kind, sphere_dim, std::move(components));
}

TotalClass TotalClass::with_component(Kind kind, unsigned sphere_dim, unsigned index,
                                      const Rational& value) {
    std::vector<Rational> c(index + 1, Rational(0));
    c[0] = 1;
    c[index] += value;
    return TotalClass(kind, sphere_dim, std::move(c));
}

Rational TotalClass::component(unsigned index) const {
    return index < components_.size() ? components_[index] : Rational(0);
}

std::optional<unsigned> TotalClass::top_index() const {
    unsigned unit = component_degree(kind_, 1);
    if (sphere_dim_ % unit != 0) return std::nullopt;
    return sphere_dim_ / unit;
}

SphereCohomologyClass TotalClass::as_sphere_class() const {
    auto top = top_index();
    return {sphere_dim_, Rational(1), top ? component(*top) : Rational(0)};
}

std::string to_string(const TotalClass& c, const std::string& symbol_suffix) {
    std::string out = "1";
    for (unsigned i = 1; i < c.size(); ++i) {
        Rational v = c.component(i);
        if (v == 0) continue;
        out += v < 0 ? " - " : " + ";
        Rational mag = abs(v);
        if (mag != 1) out += to_string(mag);
        out += std::string(1, symbol(c.kind())) + "_" + std::to_string(i) + symbol_suffix;
    }
    return out;
}

TotalClass whitney_product(const TotalClass& a, const TotalClass& b) {
    if (a.kind() != b.kind()) {
        throw Error("whitney_product: cannot multiply " + to_string(a.kind()) + " and " +
                    to_string(b.kind()) + " classes");
    }
    if (a.sphere_dim() != b.sphere_dim()) {
        throw Error("whitney_product: classes live on different spheres");
    }
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (unsigned i = 0; i < a.size(); ++i) {
        for (unsigned j = 0; j < b.size(); ++j) {
            if (component_degree(a.kind(), i + j) > a.sphere_dim()) continue;
            out[i + j] += a.component(i) * b.component(j);
        }
    }
    return TotalClass(a.kind(), a.sphere_dim(), std::move(out));
}

namespace {

void require_chern(const TotalClass& c, const char* op) {
    if (c.kind() != Kind::Chern) {
        throw Error(std::string(op) + ": expected a Chern class, got " + to_string(c.kind()));
    }
}

} // namespace

TotalClass conjugate_classes(const TotalClass& c) {
    require_chern(c, "conjugate_classes");
    std::vector<Rational> out(c.size());
    for (unsigned i = 0; i < c.size(); ++i) out[i] = i % 2 == 1 ? -c.component(i) : c.component(i);
    return TotalClass(Kind::Chern, c.sphere_dim(), std::move(out));
}

TotalClass pontryagin_from_complexification(const TotalClass& c) {
    require_chern(c, "pontryagin_from_complexification");
    std::vector<Rational> out{Rational(1)};
    for (unsigned i = 1; 2 * i < c.size(); ++i) {
        Rational v = c.component(2 * i);
        out.push_back(i % 2 == 1 ? -v : v);
    }
    return TotalClass(Kind::Pontryagin, c.sphere_dim(), std::move(out));
}

Rational euler_from_top_chern(const TotalClass& c, unsigned n) {
    require_chern(c, "euler_from_top_chern");
    return c.component(n);
}

PontryaginEulerCertificate replay_lemma_pontryagin_euler(unsigned k) {
    if (k == 0) {
        throw Error("replay_lemma_pontryagin_euler: k must be at least 1");
    }
    const unsigned m = 4 * k;
    const unsigned top = 2 * k;
    const std::string unit = "(T)";
    PontryaginEulerCertificate cert;
    cert.k = k;

    // Generator normalised to c_2k(T); every other Chern class of T vanishes on S^4k.
    auto c_t = TotalClass::with_component(Kind::Chern, m, top, 1);
    cert.steps.push_back({"c(T)", to_string(c_t, unit)});

    auto c_tbar = conjugate_classes(c_t);
    cert.steps.push_back({"c(conj T) = sum (-1)^i c_i(T)", to_string(c_tbar, unit)});

    cert.complexified_chern = whitney_product(c_t, c_tbar);
    cert.steps.push_back({"c(T S^" + std::to_string(m) + " (x) C) = c(T) c(conj T)",
                          to_string(cert.complexified_chern, unit)});

    cert.pontryagin = pontryagin_from_complexification(cert.complexified_chern);
    cert.steps.push_back({"p(T S^" + std::to_string(m) + ") = sum (-1)^i c_2i(T (x) C)",
                          to_string(cert.pontryagin) + " (in units of c_" +
                              std::to_string(top) + "(T))"});

    Rational e = euler_from_top_chern(c_t, top);
    cert.steps.push_back({"e(T S^" + std::to_string(m) + ") = c_" + std::to_string(top) + "(T)",
                          to_string(e) + " c_" + std::to_string(top) + "(T)"});

    Rational p_k = cert.pontryagin.component(k);
    Rational signed_p = k % 2 == 1 ? -p_k : p_k;
    cert.identity_holds = signed_p == 2 * e;
    cert.steps.push_back({"(-1)^k p_k = 2e", to_string(signed_p) + " c_" + std::to_string(top) +
                                                 "(T) = " + to_string(Rational(2 * e)) + " c_" +
                                                 std::to_string(top) + "(T)"});

    cert.euler_pairing = 2;
    cert.pairing = p_k * cert.euler_pairing / e;
    cert.steps.push_back({"<p_k, [S^" + std::to_string(m) + "]>", to_string(cert.pairing)});

    cert.stably_trivial_forces_zero = true;
    cert.contradiction = cert.identity_holds && cert.pairing != 0 && cert.stably_trivial_forces_zero;
    cert.assumed_axioms = {"chi(S^" + std::to_string(m) + ") = 2",
                           "T(S^" + std::to_string(m) + ") stably trivial, so p(T S^" +
                               std::to_string(m) + ") = 1",
                           "T(S^" + std::to_string(m) + ") (x) C = T + conj T"};
    return cert;
}

} // namespace acstk::cc
