#include "acstk/serialize.hpp"

namespace acstk {

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw Error("expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

json to_json(const cd::CDElement& a) {
    json coeffs = json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(to_json(c));
    return {{"level", a.level()}, {"coeffs", std::move(coeffs)}};
}

cd::CDElement cd_element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("coeffs")) {
        throw Error("CDElement JSON needs \"level\" and \"coeffs\"");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return cd::CDElement(j.at("level").get<unsigned>(), std::move(coeffs));
}

json to_json(const cd::AlternativityReport& r) {
    json out = {{"level", r.level},
                {"alternative", r.alternative},
                {"basis_triples_checked", r.basis_triples_checked},
                {"pair_sums_checked", r.pair_sums_checked},
                {"samples_checked", r.samples_checked}};
    if (r.witness) {
        out["witness"] = {{"identity", r.witness->identity},
                          {"u", to_json(r.witness->u)},
                          {"v", to_json(r.witness->v)},
                          {"w", to_json(r.witness->w)},
                          {"associator", to_json(r.witness->value)}};
    }
    return out;
}

json to_json(const acs::JVerification& r) {
    return {{"sphere", r.sphere_dim},
            {"samples", r.samples},
            {"seed", r.seed},
            {"j_squared_minus_identity", r.square_is_minus_identity},
            {"tangent", r.tangent},
            {"isometric", r.isometric},
            {"all_passed", r.all_passed()}};
}

json nijenhuis_report(const acs::SpherePoint& p, const acs::TangentVector& u,
                      const acs::TangentVector& v, const cd::CDElement& value) {
    return {{"sphere", p.sphere_dim()},
            {"point", to_json(p.vector())},
            {"u", to_json(u.vector())},
            {"v", to_json(v.vector())},
            {"nijenhuis", to_json(value)},
            {"is_zero", value.is_zero()}};
}

json to_json(const acs::SpherePoint& p, const acs::TangentVector& u, const acs::TangentVector& v,
             const acs::TangentVector& w, const acs::AssociatorComparison& c) {
    json out = {{"sphere", p.sphere_dim()},
                {"point", to_json(p.vector())},
                {"u", to_json(u.vector())},
                {"v", to_json(v.vector())},
                {"w", to_json(w.vector())},
                {"nijenhuis", to_json(c.nijenhuis)},
                {"nijenhuis_pairing_w", to_json(c.nijenhuis_pairing)},
                {"associator", to_json(c.associator)},
                {"associator_real", to_json(c.associator_real)}};
    out["ratio"] = c.ratio ? to_json(*c.ratio) : json(nullptr);
    return out;
}

json to_json(const cc::TotalClass& c) {
    json comps = json::array();
    for (unsigned i = 0; i < c.size(); ++i) comps.push_back(to_json(c.component(i)));
    return {{"kind", cc::to_string(c.kind())},
            {"sphere", c.sphere_dim()},
            {"components", std::move(comps)},
            {"text", cc::to_string(c)}};
}

json to_json(const cc::PontryaginEulerCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back({{"step", s.label}, {"value", s.value}});
    return {{"lemma", "pontryagin_euler"},
            {"k", c.k},
            {"steps", std::move(steps)},
            {"complexified_chern", to_json(c.complexified_chern)},
            {"pontryagin", to_json(c.pontryagin)},
            {"identity_holds", c.identity_holds},
            {"euler_pairing", to_json(c.euler_pairing)},
            {"pairing", to_json(c.pairing)},
            {"stably_trivial_forces_zero", c.stably_trivial_forces_zero},
            {"contradiction", c.contradiction},
            {"assumed_axioms", c.assumed_axioms}};
}

json to_json(const obs::SphereVerdict& v) {
    json certs = json::object();
    if (v.odd) {
        certs["odd_dimension"] = {{"n", v.odd->n},
                                  {"det_squared_sign", v.odd->det_squared_sign},
                                  {"assumed_axioms", v.odd->assumed_axioms}};
    }
    if (v.pontryagin) {
        certs["pontryagin_euler"] = {{"n", v.pontryagin->n},
                                     {"witness", to_json(v.pontryagin->witness)},
                                     {"lemma", to_json(v.pontryagin->lemma)}};
    }
    if (v.signature) {
        const auto& s = *v.signature;
        certs["signature_L_genus"] = {{"n", s.n},
                                      {"k", s.k},
                                      {"bernoulli_k", to_json(s.bernoulli_k)},
                                      {"s_k", to_json(s.s_k)},
                                      {"pontryagin_pairing", to_json(s.pontryagin_pairing)},
                                      {"witness", to_json(s.witness)},
                                      {"signature", to_json(s.signature)},
                                      {"assumed_axioms", s.assumed_axioms}};
    }
    if (v.chern) {
        const auto& c = *v.chern;
        certs["chern_divisibility"] = {{"n", c.n},
                                       {"m", c.m},
                                       {"chern_character", c.chern_character},
                                       {"top_coefficient", to_json(c.top_coefficient)},
                                       {"factorial", c.factorial.get_str()},
                                       {"chern_pairing", to_json(c.chern_pairing)},
                                       {"ch_pairing", to_json(c.ch_pairing)},
                                       {"integral", c.integral},
                                       {"assumed_axioms", c.assumed_axioms}};
    }
    if (v.construction) {
        certs["explicit_construction"] = to_json(v.construction->verification);
    }
    return {{"n", v.n},
            {"status", obs::to_string(v.status)},
            {"reason", obs::to_string(v.reason)},
            {"certificates", std::move(certs)},
            {"assumed_axioms", v.assumed_axioms}};
}

json to_json(const genera::PowerSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

} // namespace acstk
