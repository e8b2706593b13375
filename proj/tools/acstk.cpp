#include "acstk/genera.hpp"
#include "acstk/obstruction.hpp"
#include "acstk/serialize.hpp"
#include "acstk/sphere_acs.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace acstk;

namespace {

std::uint64_t default_seed() {
    const char* env = std::getenv("ACSTK_SEED");
    if (env == nullptr || *env == '\0') return 0;
    std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("ACSTK_SEED must be a non-negative integer, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw Error("ACSTK_SEED out of range: " + s);
    }
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw Error("range must look like A..B, got '" + text + "'");
    auto number = [&](const std::string& s) -> unsigned {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
            throw Error("bad range bound '" + s + "'");
        }
        return static_cast<unsigned>(std::stoul(s));
    };
    unsigned a = number(text.substr(0, dots)), b = number(text.substr(dots + 2));
    if (a == 0 || a > b) throw Error("range needs 1 <= A <= B, got '" + text + "'");
    return {a, b};
}

std::string summary(const obs::SphereVerdict& v) {
    std::string line = "S^" + std::to_string(v.n) + ": " + obs::to_string(v.status) + " (" +
                       obs::to_string(v.reason) + ")";
    switch (v.reason) {
    case obs::Reason::OddDimension:
        line += " (det J)^2 = -1";
        break;
    case obs::Reason::PontryaginEuler:
        line += " <p_k, [S^n]> = " + to_string(v.pontryagin->witness);
        if (v.signature) line += ", signature route (-1)^k 4 s_k = " + to_string(v.signature->witness);
        break;
    case obs::Reason::SignatureLGenus:
        line += " (-1)^k 4 s_k = " + to_string(v.signature->witness);
        break;
    case obs::Reason::ChernDivisibility:
        line += " <ch, [S^n]> = " + to_string(v.chern->ch_pairing) + " not an integer";
        break;
    case obs::Reason::ExplicitConstruction:
        line += " J verified on " + std::to_string(v.construction->verification.samples) + " samples";
        break;
    }
    return line;
}

struct SphereArgs {
    unsigned sphere = 0;
    std::string point, u, v, w;
};

acs::SpherePoint point_from(const SphereArgs& a) {
    return acs::rational_sphere_point(a.sphere, parse_rational_list(a.point));
}

acs::TangentVector tangent_from(const acs::SpherePoint& p, const std::string& text, const char* name) {
    auto coords = parse_rational_list(text);
    std::size_t expected = p.vector().dim() - 1;
    if (coords.size() != expected) {
        throw Error(std::string("--") + name + " needs " + std::to_string(expected) + " coordinates, got " +
                    std::to_string(coords.size()));
    }
    return acs::tangent_projection(p, cd::CDElement::imaginary(p.level(), coords));
}

void add_sphere_options(CLI::App* cmd, SphereArgs& a, bool with_w, bool only_six) {
    auto* s = cmd->add_option("--sphere", a.sphere, "sphere dimension")->required();
    if (only_six) {
        s->check(CLI::IsMember({6u}));
    } else {
        s->check(CLI::IsMember({2u, 6u}));
    }
    cmd->add_option("--point", a.point, "stereographic parameters q1,q2,...")->required();
    cmd->add_option("--u", a.u, "ambient imaginary coordinates, projected to the tangent space")->required();
    cmd->add_option("--v", a.v, "ambient imaginary coordinates, projected to the tangent space")->required();
    if (with_w) cmd->add_option("--w", a.w, "ambient imaginary coordinates, projected to the tangent space")->required();
}

int run(int argc, char** argv) {
    CLI::App app{"acstk: almost complex structures on spheres"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON");

    auto* classify = app.add_subcommand("classify", "decide whether S^n admits an almost complex structure");
    std::optional<unsigned> n;
    std::string range;
    std::size_t samples = 100;
    classify->add_option("n", n, "sphere dimension")->check(CLI::Range(1u, 100000u));
    classify->add_option("--range", range, "classify every n in A..B");
    classify->add_option("--samples", samples, "J verification samples for S^2 and S^6");
    classify->add_flag("--json", json_out, "emit JSON");

    auto* lpoly = app.add_subcommand("lpoly", "Hirzebruch L-polynomial L_k");
    unsigned k = 0;
    bool latex = false;
    lpoly->add_option("--k", k, "index")->required()->check(CLI::Range(1u, 30u));
    lpoly->add_flag("--latex", latex, "render as LaTeX");
    lpoly->add_flag("--json", json_out, "emit JSON");

    auto* series = app.add_subcommand("series", "power series coefficients");
    std::string which;
    unsigned order = 0;
    series->add_option("name", which, "q or s")->required()->check(CLI::IsMember({"q", "s"}));
    series->add_option("--order", order, "truncation order")->required()->check(CLI::Range(0u, 200u));
    series->add_flag("--json", json_out, "emit JSON");

    auto* verify = app.add_subcommand("verify-j", "check J^2 = -1, tangency and isometry on random points");
    unsigned sphere = 0;
    std::size_t verify_samples = 1000;
    std::optional<std::uint64_t> seed;
    verify->add_option("--sphere", sphere, "2 or 6")->required()->check(CLI::IsMember({2u, 6u}));
    verify->add_option("--samples", verify_samples, "number of samples");
    verify->add_option("--seed", seed, "sampling seed (default: ACSTK_SEED or 0)");
    verify->add_flag("--json", json_out, "emit JSON");

    auto* nij = app.add_subcommand("nijenhuis", "Nijenhuis tensor N_J(u, v) at a point");
    SphereArgs nij_args;
    add_sphere_options(nij, nij_args, false, false);
    nij->add_flag("--json", json_out, "emit JSON");

    auto* assoc = app.add_subcommand("assoc-compare", "<N_J(u, v), w> next to the associator [u, v, w]");
    SphereArgs assoc_args;
    add_sphere_options(assoc, assoc_args, true, true);
    assoc->add_flag("--json", json_out, "emit JSON");

    auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_k (B_1 = 1/6)");
    unsigned bk = 0;
    bern->add_option("--k", bk, "index")->required()->check(CLI::Range(1u, 200u));
    bern->add_flag("--json", json_out, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*classify) {
        if (n.has_value() == !range.empty()) throw Error("classify needs exactly one of <n> or --range");
        obs::ClassifyOptions options;
        options.samples = samples;
        options.seed = default_seed();
        unsigned lo = n.value_or(0), hi = lo;
        if (!range.empty()) std::tie(lo, hi) = parse_range(range);
        json all = json::array();
        for (unsigned m = lo; m <= hi; ++m) {
            auto v = obs::classify_sphere(m, options);
            if (json_out) {
                all.push_back(to_json(v));
            } else {
                std::cout << summary(v) << '\n';
            }
        }
        if (json_out) std::cout << (range.empty() ? all[0] : all).dump(2) << '\n';
    } else if (*lpoly) {
        auto l = genera::l_polynomial(k);
        if (json_out) {
            std::cout << json{{"k", k}, {"L", sym::to_string(l)}, {"latex", sym::to_latex(l)}}.dump(2) << '\n';
        } else {
            std::cout << (latex ? sym::to_latex(l) : sym::to_string(l)) << '\n';
        }
    } else if (*series) {
        auto s = which == "q" ? genera::q_series(order) : genera::s_series(order);
        if (json_out) {
            json j = to_json(s);
            j["series"] = which;
            std::cout << j.dump(2) << '\n';
        } else {
            for (unsigned i = 0; i <= order; ++i) std::cout << "z^" << i << ": " << to_string(s[i]) << '\n';
        }
    } else if (*verify) {
        auto r = acs::verify_j(sphere, verify_samples, seed.value_or(default_seed()));
        if (json_out) {
            std::cout << to_json(r).dump(2) << '\n';
        } else {
            std::cout << "S^" << r.sphere_dim << ", " << r.samples << " samples, seed " << r.seed << '\n'
                      << "J^2 = -1:  " << r.square_is_minus_identity << '/' << r.samples << '\n'
                      << "tangent:   " << r.tangent << '/' << r.samples << '\n'
                      << "isometric: " << r.isometric << '/' << r.samples << '\n'
                      << (r.all_passed() ? "all passed" : "FAILED") << '\n';
        }
        if (!r.all_passed()) throw InvariantViolation("J verification failed");
    } else if (*nij) {
        auto p = point_from(nij_args);
        auto u = tangent_from(p, nij_args.u, "u"), v = tangent_from(p, nij_args.v, "v");
        auto value = acs::nijenhuis(p, u, v);
        if (json_out) {
            std::cout << nijenhuis_report(p, u, v, value).dump(2) << '\n';
        } else {
            std::cout << "p = " << cd::to_string(p.vector()) << '\n'
                      << "u = " << cd::to_string(u.vector()) << '\n'
                      << "v = " << cd::to_string(v.vector()) << '\n'
                      << "N(u, v) = " << cd::to_string(value) << '\n';
        }
    } else if (*assoc) {
        auto p = point_from(assoc_args);
        auto u = tangent_from(p, assoc_args.u, "u"), v = tangent_from(p, assoc_args.v, "v");
        auto w = tangent_from(p, assoc_args.w, "w");
        auto c = acs::compare_nijenhuis_associator(p, u, v, w);
        if (json_out) {
            std::cout << to_json(p, u, v, w, c).dump(2) << '\n';
        } else {
            std::cout << "N(u, v)       = " << cd::to_string(c.nijenhuis) << '\n'
                      << "<N(u, v), w>  = " << to_string(c.nijenhuis_pairing) << '\n'
                      << "[u, v, w]     = " << cd::to_string(c.associator) << '\n'
                      << "Re [u, v, w]  = " << to_string(c.associator_real) << '\n'
                      << "ratio         = " << (c.ratio ? to_string(*c.ratio) : std::string("n/a")) << '\n';
        }
    } else if (*bern) {
        auto b = genera::bernoulli(bk);
        if (json_out) {
            std::cout << json{{"k", bk}, {"bernoulli", to_json(b)}}.dump(2) << '\n';
        } else {
            std::cout << "B_" << bk << " = " << to_string(b) << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvariantViolation& e) {
        std::cerr << "acstk: internal invariant violated: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "acstk: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "acstk: internal error: " << e.what() << '\n';
        return 3;
    }
}
