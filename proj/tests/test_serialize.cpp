#include "acstk/serialize.hpp"

#include "support.hpp"

using namespace acstk;
using testing::q;

TEST_CASE("rationals serialize as reduced strings") {
    CHECK(to_json(q(6, 4)) == "3/2");
    CHECK(to_json(q(-5)) == "-5");
    CHECK(rational_from_json(json("-7/21")) == q(-1, 3));
    CHECK(rational_from_json(json(3)) == 3);
    CHECK_THROWS_AS(rational_from_json(json(0.5)), Error);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), Error);
}

TEST_CASE("CDElement round trip") {
    Sampler rng(301);
    for (unsigned level = 0; level <= 4; ++level) {
        auto a = testing::random_element(level, rng);
        auto j = to_json(a);
        CHECK(j["level"] == level);
        CHECK(j["coeffs"].size() == a.dim());
        CHECK(cd_element_from_json(j) == a);
        CHECK(cd_element_from_json(json::parse(j.dump())) == a);
    }
    CHECK_THROWS_AS(cd_element_from_json(json::object()), Error);
    CHECK_THROWS_AS(cd_element_from_json(json{{"level", 2}, {"coeffs", {"1", "0"}}}), Error);
}

TEST_CASE("Nijenhuis report schema") {
    using namespace acstk::acs;
    SpherePoint p(cd::CDElement::basis(3, 1));
    TangentVector u(p, cd::CDElement::basis(3, 2)), v(p, cd::CDElement::basis(3, 4));
    auto j = nijenhuis_report(p, u, v, nijenhuis(p, u, v));
    CHECK(j["sphere"] == 6);
    CHECK(j["is_zero"] == false);
    CHECK(j["nijenhuis"]["coeffs"][7] == "4");
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"sphere", "point", "u", "v", "nijenhuis", "is_zero"});
}

TEST_CASE("lemma certificate schema") {
    auto j = to_json(cc::replay_lemma_pontryagin_euler(3));
    CHECK(j["lemma"] == "pontryagin_euler");
    CHECK(j["k"] == 3);
    CHECK(j["pairing"] == "-4");
    CHECK(j["euler_pairing"] == "2");
    CHECK(j["steps"].is_array());
    CHECK(j["complexified_chern"]["text"] == "1 + 2c_6");
}

TEST_CASE("power series schema") {
    auto j = to_json(genera::q_series(3));
    CHECK(j["order"] == 3);
    CHECK(j["coeffs"] == json{"1", "1/3", "-1/45", "2/945"});
}
