#include "acstk/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace acstk::sym {

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
    MultiPoly p(std::move(variables));
    if (index >= p.nvars()) {
        throw Error("variable index " + std::to_string(index) + " out of range");
    }
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

std::vector<std::string> MultiPoly::indexed_names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) {
        throw Error("exponent vector has " + std::to_string(e.size()) + " entries, ring has " +
                    std::to_string(vars_.size()) + " variables");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    }
    return d;
}

void MultiPoly::require_same_ring(const MultiPoly& rhs, const char* op) const {
    if (vars_ != rhs.vars_) {
        throw Error(std::string(op) + ": polynomials live in different rings");
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_ring(rhs, "add");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_ring(rhs, "subtract");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b, "multiply");
    MultiPoly out(a.vars_);
    Exponents e(a.nvars());
    Rational c;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            c = ca * cb;
            out.add_term(e, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) {
        throw Error("evaluate: expected " + std::to_string(vars_.size()) + " values, got " +
                    std::to_string(point.size()));
    }
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t *= acstk::pow(point[i], e[i]);
        }
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= vars_.size()) {
        throw Error("derivative: variable index out of range");
    }
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        out.add_term(d, c * e[var]);
    }
    return out;
}

namespace {

// Substitution with per-variable power caches; T is MultiPoly or GradedPoly.
template <typename T>
T substitute_terms(const MultiPoly::TermMap& terms, std::vector<T> values, const T& one) {
    std::vector<std::vector<T>> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) powers[i].push_back(one);
    auto power = [&](std::size_t i, unsigned k) -> const T& {
        auto& cache = powers[i];
        while (cache.size() <= k) cache.push_back(cache.back() * values[i]);
        return cache[k];
    };
    T sum = one * Rational(0);
    for (const auto& [e, c] : terms) {
        T t = one * c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t = t * power(i, e[i]);
        }
        sum += t;
    }
    return sum;
}

} // namespace

MultiPoly MultiPoly::compose(std::span<const MultiPoly> values) const {
    if (values.size() != vars_.size()) {
        throw Error("compose: expected " + std::to_string(vars_.size()) + " values, got " +
                    std::to_string(values.size()));
    }
    if (values.empty()) {
        return *this;
    }
    for (const auto& v : values) values[0].require_same_ring(v, "compose");
    return substitute_terms(terms_, std::vector<MultiPoly>(values.begin(), values.end()),
                            constant(values[0].vars_, 1));
}

MultiPoly MultiPoly::swap_variables(std::size_t i, std::size_t j) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents s = e;
        std::swap(s[i], s[j]);
        out.terms_.emplace(std::move(s), c);
    }
    return out;
}

// --------------------------------------------------------------- GradedPoly

GradedPoly::GradedPoly(std::vector<std::string> generators, std::vector<unsigned> weights)
    : GradedPoly(MultiPoly(std::move(generators)), std::move(weights)) {}

GradedPoly::GradedPoly(MultiPoly poly, std::vector<unsigned> weights)
    : poly_(std::move(poly)), weights_(std::move(weights)) {
    if (weights_.size() != poly_.nvars()) {
        throw Error("graded ring needs one weight per generator");
    }
    for (auto w : weights_) {
        if (w == 0) throw Error("generator weights must be positive");
    }
}

GradedPoly GradedPoly::constant(std::vector<std::string> generators, std::vector<unsigned> weights,
                                const Rational& c) {
    return GradedPoly(MultiPoly::constant(std::move(generators), c), std::move(weights));
}

GradedPoly GradedPoly::generator(std::vector<std::string> generators,
                                 std::vector<unsigned> weights, std::size_t index) {
    return GradedPoly(MultiPoly::variable(std::move(generators), index), std::move(weights));
}

GradedPoly GradedPoly::ring(const std::string& prefix, std::size_t n, unsigned unit) {
    std::vector<unsigned> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<unsigned>(i + 1) * unit;
    return GradedPoly(MultiPoly::indexed_names(prefix, n), std::move(w));
}

unsigned GradedPoly::weight_of(const Exponents& e) const {
    unsigned w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * weights_[i];
    return w;
}

Rational GradedPoly::linear_coefficient(std::size_t index) const {
    Exponents e(weights_.size(), 0);
    e.at(index) = 1;
    return poly_.coefficient(e);
}

GradedPoly GradedPoly::homogeneous_component(unsigned weight) const {
    GradedPoly out = zero();
    for (const auto& [e, c] : poly_.terms()) {
        if (weight_of(e) == weight) out.poly_.add_term(e, c);
    }
    return out;
}

bool GradedPoly::is_homogeneous(unsigned weight) const {
    for (const auto& [e, c] : poly_.terms()) {
        if (weight_of(e) != weight) return false;
    }
    return true;
}

GradedPoly GradedPoly::truncated(unsigned max_weight) const {
    GradedPoly out = zero();
    for (const auto& [e, c] : poly_.terms()) {
        if (weight_of(e) <= max_weight) out.poly_.add_term(e, c);
    }
    return out;
}

void GradedPoly::require_same_ring(const GradedPoly& rhs, const char* op) const {
    if (weights_ != rhs.weights_ || generators() != rhs.generators()) {
        throw Error(std::string(op) + ": graded polynomials live in different rings");
    }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
    require_same_ring(rhs, "add");
    poly_ += rhs.poly_;
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
    require_same_ring(rhs, "subtract");
    poly_ -= rhs.poly_;
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& s) {
    poly_ *= s;
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    a.require_same_ring(b, "multiply");
    return GradedPoly(a.poly_ * b.poly_, a.weights_);
}

// -------------------------------------------------------- symmetric functions

MultiPoly elementary_symmetric(std::size_t m, std::size_t j) {
    if (j > m) {
        throw Error("elementary_symmetric: j = " + std::to_string(j) + " exceeds m = " +
                    std::to_string(m));
    }
    MultiPoly p(MultiPoly::indexed_names("b", m));
    // Walk all 0/1 exponent vectors with exactly j ones.
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(j), true);
    do {
        Exponents e(m, 0);
        for (std::size_t i = 0; i < m; ++i) e[i] = pick[i] ? 1 : 0;
        p.add_term(e, 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return p;
}

std::vector<GradedPoly> newton_power_sums(std::span<const GradedPoly> elementary, unsigned max_k,
                                          std::optional<unsigned> max_weight) {
    if (elementary.empty()) {
        throw Error("newton_power_sums: need at least one class to fix the ring");
    }
    auto clip = [&](GradedPoly p) { return max_weight ? p.truncated(*max_weight) : p; };
    const GradedPoly zero = elementary[0].zero();
    auto e = [&](std::size_t i) -> const GradedPoly& {
        return i <= elementary.size() ? elementary[i - 1] : zero;
    };
    std::vector<GradedPoly> nu;
    nu.reserve(max_k);
    for (unsigned k = 1; k <= max_k; ++k) {
        GradedPoly acc = e(k) * Rational((k % 2 == 1) ? k : -static_cast<long>(k));
        for (unsigned i = 1; i < k; ++i) {
            if (e(i).is_zero() || nu[k - i - 1].is_zero()) continue;
            GradedPoly t = e(i) * nu[k - i - 1];
            if (i % 2 == 1) {
                acc += t;
            } else {
                acc -= t;
            }
        }
        nu.push_back(clip(std::move(acc)));
    }
    return nu;
}

GradedPoly newton_polynomial(unsigned k) {
    if (k == 0) {
        throw Error("newton_polynomial: k must be at least 1");
    }
    GradedPoly ring = GradedPoly::ring("e", k);
    std::vector<GradedPoly> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(ring.gen(i));
    return newton_power_sums(gens, k).back();
}

std::optional<std::pair<std::size_t, std::size_t>> asymmetry_witness(const MultiPoly& p) {
    for (std::size_t i = 0; i + 1 < p.nvars(); ++i) {
        if (p.swap_variables(i, i + 1) != p) return std::make_pair(i, i + 1);
    }
    return std::nullopt;
}

GradedPoly reduce_to_elementary(const MultiPoly& p) {
    const std::size_t m = p.nvars();
    if (auto w = asymmetry_witness(p)) {
        throw Error("reduce_to_elementary: polynomial is not symmetric under swapping " +
                    p.variables()[w->first] + " and " + p.variables()[w->second]);
    }
    GradedPoly result = GradedPoly::ring("e", m);
    std::vector<std::vector<MultiPoly>> sigma_powers(m + 1);
    auto sigma_power = [&](std::size_t j, unsigned k) -> const MultiPoly& {
        auto& cache = sigma_powers[j];
        if (cache.empty()) cache.push_back(MultiPoly::constant(p.variables(), 1));
        if (cache.size() <= k) {
            // sigma_j in p's own variable names
            MultiPoly sigma(p.variables());
            const MultiPoly standard = elementary_symmetric(m, j);
            for (const auto& [e, c] : standard.terms()) sigma.add_term(e, c);
            while (cache.size() <= k) cache.push_back(cache.back() * sigma);
        }
        return cache[k];
    };

    MultiPoly rest = p;
    while (!rest.is_zero()) {
        auto lead = std::prev(rest.terms().end());
        Exponents a = lead->first;
        Rational c = lead->second;
        Exponents target(m, 0);
        MultiPoly product = MultiPoly::constant(p.variables(), c);
        for (std::size_t i = 0; i < m; ++i) {
            std::uint32_t next = i + 1 < m ? a[i + 1] : 0;
            if (a[i] < next) {
                throw InvariantViolation("reduce_to_elementary: leading exponent not non-increasing");
            }
            target[i] = a[i] - next;
            if (target[i] != 0) product = product * sigma_power(i + 1, target[i]);
        }
        rest -= product;
        MultiPoly mono(result.generators());
        mono.add_term(target, c);
        result += GradedPoly(std::move(mono), result.weights());
    }
    return result;
}

MultiPoly expand_elementary(const GradedPoly& q, std::size_t m) {
    if (q.generators().size() > m) {
        throw Error("expand_elementary: more generators than variables");
    }
    std::vector<MultiPoly> sigmas;
    for (std::size_t j = 1; j <= q.generators().size(); ++j) sigmas.push_back(elementary_symmetric(m, j));
    if (sigmas.empty()) {
        return MultiPoly::constant(MultiPoly::indexed_names("b", m), q.coefficient({}));
    }
    return q.poly().compose(sigmas);
}

namespace {

template <typename T>
std::vector<T> lookup_all(const GradedPoly& p, const std::map<std::string, T>& assignments) {
    std::vector<T> values;
    for (const auto& g : p.generators()) {
        auto it = assignments.find(g);
        if (it == assignments.end()) {
            throw Error("substitute: generator '" + g + "' is unassigned");
        }
        values.push_back(it->second);
    }
    return values;
}

} // namespace

Rational substitute(const GradedPoly& p, const std::map<std::string, Rational>& assignments) {
    auto values = lookup_all(p, assignments);
    return p.poly().evaluate(values);
}

MultiPoly substitute(const GradedPoly& p, const std::map<std::string, MultiPoly>& assignments) {
    auto values = lookup_all(p, assignments);
    if (values.empty()) {
        throw Error("substitute: cannot infer target ring of a generator-free polynomial");
    }
    return p.poly().compose(values);
}

GradedPoly substitute(const GradedPoly& p, const std::map<std::string, GradedPoly>& assignments) {
    auto values = lookup_all(p, assignments);
    if (values.empty()) {
        throw Error("substitute: cannot infer target ring of a generator-free polynomial");
    }
    return substitute_terms(p.poly().terms(), values, values[0].one());
}

// ---------------------------------------------------------------- rendering

namespace {

std::string var_name(const std::string& name, bool latex) {
    if (!latex) return name;
    auto split = name.find_first_of("0123456789");
    if (split == std::string::npos || split == 0) return name;
    return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string render(const MultiPoly& p, const std::vector<unsigned>& weights, bool latex) {
    using Term = std::pair<const Exponents*, const Rational*>;
    std::vector<Term> order;
    for (const auto& [e, c] : p.terms()) order.emplace_back(&e, &c);
    auto weight = [&](const Exponents& e) {
        unsigned w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * weights[i];
        return w;
    };
    std::stable_sort(order.begin(), order.end(), [&](const Term& x, const Term& y) {
        auto wx = weight(*x.first), wy = weight(*y.first);
        if (wx != wy) return wx > wy;
        return *x.first > *y.first;
    });

    std::string out;
    for (const auto& [e, c] : order) {
        bool neg = *c < 0;
        Rational mag = abs(*c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e->size(); ++i) {
            auto k = (*e)[i];
            if (k == 0) continue;
            if (!mono.empty()) mono += latex ? " " : "*";
            mono += var_name(p.variables()[i], latex);
            if (k > 1) mono += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
        }
        std::string coeff;
        if (latex) {
            if (mag.get_den() != 1) {
                coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
            } else if (mag != 1 || mono.empty()) {
                coeff = mag.get_num().get_str();
            }
            out += coeff.empty() ? mono : (mono.empty() ? coeff : coeff + " " + mono);
        } else {
            if (mag != 1 || mono.empty()) coeff = acstk::to_string(mag);
            out += coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string to_string(const MultiPoly& p) {
    return render(p, std::vector<unsigned>(p.nvars(), 1), false);
}

std::string to_string(const GradedPoly& p) { return render(p.poly(), p.weights(), false); }

std::string to_latex(const GradedPoly& p) { return render(p.poly(), p.weights(), true); }

} // namespace acstk::sym
