#include "acstk/cayley_dickson.hpp"

#include "acstk/sampling.hpp"

#include <array>
#include <mutex>

namespace acstk::cd {

namespace {

void check_level(unsigned level) {
    if (level > CDElement::kMaxLevel) {
        throw Error("Cayley-Dickson level " + std::to_string(level) + " exceeds the maximum " +
                    std::to_string(CDElement::kMaxLevel));
    }
}

std::size_t dim_of(unsigned level) { return std::size_t{1} << level; }

} // namespace

CDElement::CDElement(unsigned level) : level_(level) {
    check_level(level);
    coeffs_.assign(dim_of(level), Rational(0));
}

CDElement::CDElement(unsigned level, std::vector<Rational> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    check_level(level);
    if (coeffs_.size() != dim_of(level)) {
        throw Error("level " + std::to_string(level) + " needs " + std::to_string(dim_of(level)) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

CDElement CDElement::one(unsigned level) { return basis(level, 0); }

CDElement CDElement::basis(unsigned level, std::size_t index) {
    CDElement e(level);
    if (index >= e.dim()) {
        throw Error("basis index " + std::to_string(index) + " out of range for level " +
                    std::to_string(level));
    }
    e.coeffs_[index] = 1;
    return e;
}

CDElement CDElement::scalar(unsigned level, const Rational& value) {
    CDElement e(level);
    e.coeffs_[0] = value;
    return e;
}

CDElement CDElement::imaginary(unsigned level, std::span<const Rational> coords) {
    CDElement e(level);
    if (coords.size() + 1 != e.dim()) {
        throw Error("level " + std::to_string(level) + " has " + std::to_string(e.dim() - 1) +
                    " imaginary coordinates, got " + std::to_string(coords.size()));
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        e.coeffs_[i + 1] = coords[i];
    }
    return e;
}

bool CDElement::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

void require_same_level(const CDElement& a, const CDElement& b, const char* op) {
    if (a.level() != b.level()) {
        throw Error(std::string(op) + ": level mismatch (" + std::to_string(a.level()) + " vs " +
                    std::to_string(b.level()) + ")");
    }
}

CDElement& CDElement::operator+=(const CDElement& rhs) {
    require_same_level(*this, rhs, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CDElement& CDElement::operator-=(const CDElement& rhs) {
    require_same_level(*this, rhs, "subtract");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CDElement& CDElement::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

CDElement CDElement::operator-() const {
    CDElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BasisProduct basis_product(unsigned level, std::size_t i, std::size_t j) {
    // Basis element e_i of A_n is (e_i, 0) when i < h and (0, e_{i-h}) otherwise.
    int sign = 1;
    std::size_t index = 0;
    while (level > 0) {
        std::size_t h = dim_of(level - 1);
        bool hi_i = i >= h;
        bool hi_j = j >= h;
        if (!hi_i && !hi_j) {
            // (a,0)(b,0) = (ab, 0)
        } else if (!hi_i && hi_j) {
            // (a,0)(0,b) = (0, b a)
            j -= h;
            std::swap(i, j);
            index += h;
        } else if (hi_i && !hi_j) {
            // (0,a)(b,0) = (0, a b*)
            i -= h;
            if (j != 0) sign = -sign;
            index += h;
        } else {
            // (0,a)(0,b) = (-b* a, 0)
            i -= h;
            j -= h;
            if (j == 0) sign = -sign;
            std::swap(i, j);
        }
        --level;
    }
    // level 0: e_0 e_0 = e_0
    return {sign, static_cast<std::uint32_t>(index)};
}

const std::vector<BasisProduct>& multiplication_table(unsigned level) {
    check_level(level);
    static std::array<std::vector<BasisProduct>, CDElement::kMaxLevel + 1> tables;
    static std::array<std::once_flag, CDElement::kMaxLevel + 1> flags;
    std::call_once(flags[level], [level] {
        std::size_t n = dim_of(level);
        auto& t = tables[level];
        t.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t.push_back(basis_product(level, i, j));
    });
    return tables[level];
}

CDElement multiply(const CDElement& a, const CDElement& b) {
    require_same_level(a, b, "multiply");
    const auto& table = multiplication_table(a.level());
    std::size_t n = a.dim();
    std::vector<Rational> out(n, Rational(0));
    Rational term;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            const auto& bp = table[i * n + j];
            term = a[i] * b[j];
            if (bp.sign > 0) {
                out[bp.index] += term;
            } else {
                out[bp.index] -= term;
            }
        }
    }
    return CDElement(a.level(), std::move(out));
}

namespace {

using Coeffs = std::vector<Rational>;

Coeffs conj_coeffs(std::span<const Rational> a) {
    Coeffs r(a.begin(), a.end());
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

Coeffs doubling_product(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() == 1) {
        return {a[0] * b[0]};
    }
    std::size_t h = a.size() / 2;
    auto a1 = a.first(h), a2 = a.subspan(h);
    auto b1 = b.first(h), b2 = b.subspan(h);
    Coeffs b1c = conj_coeffs(b1);
    Coeffs b2c = conj_coeffs(b2);

    Coeffs lo = doubling_product(a1, b1);
    Coeffs lo2 = doubling_product(b2c, a2);
    Coeffs hi = doubling_product(b2, a1);
    Coeffs hi2 = doubling_product(a2, b1c);

    Coeffs out(a.size());
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = lo[i] - lo2[i];
        out[h + i] = hi[i] + hi2[i];
    }
    return out;
}

} // namespace

CDElement multiply_doubling(const CDElement& a, const CDElement& b) {
    require_same_level(a, b, "multiply");
    return CDElement(a.level(), doubling_product(a.coeffs(), b.coeffs()));
}

CDElement conjugate(const CDElement& a) { return CDElement(a.level(), conj_coeffs(a.coeffs())); }

Rational norm_sq(const CDElement& a) { return inner_product(a, a); }

Rational inner_product(const CDElement& a, const CDElement& b) {
    require_same_level(a, b, "inner_product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

CDElement associator(const CDElement& u, const CDElement& v, const CDElement& w) {
    require_same_level(u, v, "associator");
    require_same_level(v, w, "associator");
    return (u * v) * w - u * (v * w);
}

Rational real_part(const CDElement& a) { return a[0]; }

CDElement imaginary_part(const CDElement& a) {
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    c[0] = 0;
    return CDElement(a.level(), std::move(c));
}

CDElement embed(const CDElement& a, unsigned target_level) {
    if (target_level < a.level()) {
        throw Error("embed: target level " + std::to_string(target_level) +
                    " is below source level " + std::to_string(a.level()));
    }
    CDElement r(target_level);
    std::vector<Rational> c(r.coeffs().begin(), r.coeffs().end());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i];
    return CDElement(target_level, std::move(c));
}

namespace {

// Associators of basis elements stay inside the basis up to sign, so the
// table answers them without touching rationals.
bool basis_associator_zero(const std::vector<BasisProduct>& t, std::size_t n, std::size_t i,
                           std::size_t j, std::size_t k) {
    auto ij = t[i * n + j];
    auto left = t[ij.index * n + k];
    auto jk = t[j * n + k];
    auto right = t[i * n + jk.index];
    return left.index == right.index && left.sign * ij.sign == right.sign * jk.sign;
}

std::optional<AlternativityWitness> check_triples(const CDElement& u, const CDElement& v) {
    struct Candidate {
        const CDElement& a;
        const CDElement& b;
        const CDElement& c;
        const char* name;
    };
    for (auto [a, b, c, name] : {Candidate{u, u, v, "[u,u,v]"}, Candidate{u, v, v, "[u,v,v]"},
                                 Candidate{u, v, u, "[u,v,u]"}}) {
        auto value = associator(a, b, c);
        if (!value.is_zero()) {
            return AlternativityWitness{a, b, c, std::move(value), name};
        }
    }
    return std::nullopt;
}

} // namespace

AlternativityReport probe_alternative(unsigned level, std::size_t samples, std::uint64_t seed) {
    if (level > 5) {
        throw Error("probe_alternative: level " + std::to_string(level) +
                    " exceeds the exhaustive-search cap of 5");
    }
    AlternativityReport report;
    report.level = level;
    const auto& t = multiplication_table(level);
    std::size_t n = dim_of(level);

    auto fail = [&](AlternativityWitness w) {
        report.alternative = false;
        report.witness = std::move(w);
        return report;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            report.basis_triples_checked += 3;
            if (!basis_associator_zero(t, n, i, i, j) || !basis_associator_zero(t, n, i, j, j) ||
                !basis_associator_zero(t, n, i, j, i)) {
                auto w = check_triples(CDElement::basis(level, i), CDElement::basis(level, j));
                return fail(std::move(*w));
            }
        }
    }

    for (std::size_t a = 1; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            auto u = CDElement::basis(level, a) + CDElement::basis(level, b);
            for (std::size_t c = 1; c < n; ++c) {
                ++report.pair_sums_checked;
                if (auto w = check_triples(u, CDElement::basis(level, c))) {
                    return fail(std::move(*w));
                }
            }
        }
    }

    Sampler rng(seed);
    auto random_element = [&] {
        std::vector<Rational> c(n);
        for (auto& x : c) x = rng.rational();
        return CDElement(level, std::move(c));
    };
    for (std::size_t s = 0; s < samples; ++s) {
        ++report.samples_checked;
        if (auto w = check_triples(random_element(), random_element())) {
            return fail(std::move(*w));
        }
    }
    return report;
}

std::string to_string(const CDElement& a) {
    std::string out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& c = a[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += acstk::to_string(mag);
        } else {
            if (mag != 1) out += acstk::to_string(mag) + "*";
            out += "e" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace acstk::cd
