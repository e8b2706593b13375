#pragma once

#include "acstk/cayley_dickson.hpp"
#include "acstk/char_class.hpp"
#include "acstk/genera.hpp"
#include "acstk/obstruction.hpp"
#include "acstk/sphere_acs.hpp"

#include <json.hpp>

namespace acstk {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"level": n, "coeffs": ["p/q", ...]}
json to_json(const cd::CDElement& a);
cd::CDElement cd_element_from_json(const json& j);

json to_json(const cd::AlternativityReport& r);
json to_json(const acs::JVerification& r);

/// {"sphere": n, "point": {...}, "u": {...}, "v": {...}, "nijenhuis": {...}, "is_zero": bool}
json nijenhuis_report(const acs::SpherePoint& p, const acs::TangentVector& u,
                      const acs::TangentVector& v, const cd::CDElement& value);
json to_json(const acs::SpherePoint& p, const acs::TangentVector& u, const acs::TangentVector& v,
             const acs::TangentVector& w, const acs::AssociatorComparison& c);

json to_json(const cc::TotalClass& c);
/// {"lemma": "pontryagin_euler", "k": k, "steps": [...], "pairing": "±4", ...}
json to_json(const cc::PontryaginEulerCertificate& c);

json to_json(const obs::SphereVerdict& v);

json to_json(const genera::PowerSeries& s);

} // namespace acstk
