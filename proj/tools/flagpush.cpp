// flagpush: exact Gysin pushforwards, integrals, and verification suites for
// flag manifolds G/T -> G/H.
//
// Subcommands: roots, weyl, pushforward, integrate, verify.
// Exit codes: 0 success, 1 verification/route failure, 2 usage/input error.
// Results go to stdout, diagnostics to stderr. FLAGPUSH_SIZE_GUARD overrides
// the Weyl-order guard (default 51840).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "flagpush/flagpush.hpp"
#include "flagpush/json_out.hpp"

namespace {

using namespace flagpush;

struct CommandConfig {
    std::string type_string;
    std::string parabolic;
    std::string poly;
    std::string route = "all";
    std::uint64_t seed = 42;
    int max_degree = 5;
    int trials = 25;
    bool json = false;
    bool size_guard_override = false;
};

std::set<int> parse_parabolic(const std::string& text) {
    std::set<int> s;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                try {
                    s.insert(std::stoi(cur));
                } catch (const std::exception&) {
                    throw IndexOutOfRange("bad parabolic index \"" + cur + "\"");
                }
                cur.clear();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw IndexOutOfRange(std::string("bad character '") + c + "' in parabolic list");
        }
    }
    return s;
}

SizeGuard make_guard(const CommandConfig& cfg) {
    SizeGuard guard;
    if (const char* env = std::getenv("FLAGPUSH_SIZE_GUARD")) {
        const unsigned long long limit = std::strtoull(env, nullptr, 10);
        if (limit > 0) guard.max_weyl_order = limit;
    }
    guard.unlimited = cfg.size_guard_override;
    return guard;
}

OrderedJson json_envelope(const CommandConfig& cfg, const std::set<int>& S) {
    OrderedJson j;
    j["type"] = cfg.type_string;
    j["parabolic"] = S;
    j["route"] = nullptr;
    j["result"] = nullptr;
    j["checks"] = nullptr;
    return j;
}

int cmd_roots(const CommandConfig& cfg) {
    const CartanType t = parse_cartan_type(cfg.type_string);
    const std::set<int> S = parse_parabolic(cfg.parabolic);
    const RootSystem rs = build_root_system(t, make_guard(cfg));

    if (cfg.json) {
        OrderedJson j = json_envelope(cfg, S);
        OrderedJson result;
        result["positive_roots"] = weights_to_json(rs.positive_roots);
        if (!S.empty()) result["parabolic_roots"] = weights_to_json(parabolic_subsystem(rs, S).roots);
        j["result"] = std::move(result);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "Delta+ of " << t.to_string() << " (" << rs.positive_roots.size() << " roots):\n";
    for (const Weight& r : rs.positive_roots) std::cout << "  " << r.to_string() << "\n";
    if (!S.empty()) {
        const RootSubset sub = parabolic_subsystem(rs, S);
        std::cout << "Delta+(H) (" << sub.roots.size() << " roots):\n";
        for (const Weight& r : sub.roots) std::cout << "  " << r.to_string() << "\n";
    }
    return 0;
}

int cmd_weyl(const CommandConfig& cfg) {
    const CartanType t = parse_cartan_type(cfg.type_string);
    const std::set<int> S = parse_parabolic(cfg.parabolic);
    const RootSystem rs = build_root_system(t, make_guard(cfg));
    const WeylGroup W = enumerate_weyl(rs, make_guard(cfg));

    std::map<int, long> by_length;
    for (const WeylElement& w : W.elements) ++by_length[w.length];
    const int max_length = by_length.rbegin()->first;

    std::size_t subgroup_order = 0, coset_count = 0;
    if (!S.empty()) {
        subgroup_order = parabolic_subgroup(W, S).size();
        coset_count = coset_reps(W, S).size();
    }

    if (cfg.json) {
        OrderedJson j = json_envelope(cfg, S);
        OrderedJson result;
        result["order"] = W.order();
        result["max_length"] = max_length;
        OrderedJson hist = OrderedJson::array();
        for (const auto& [len, count] : by_length) hist.push_back(OrderedJson{{"length", len}, {"count", count}});
        result["length_histogram"] = std::move(hist);
        if (!S.empty()) {
            result["subgroup_order"] = subgroup_order;
            result["coset_count"] = coset_count;
        }
        j["result"] = std::move(result);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "|W(" << t.to_string() << ")| = " << W.order() << "\n";
    std::cout << "lengths:";
    for (const auto& [len, count] : by_length) std::cout << " " << len << ":" << count;
    std::cout << "\n";
    if (!S.empty()) {
        std::cout << "|W_H| = " << subgroup_order << ", cosets = " << coset_count << "\n";
        const WeylElement& w0 = longest_element(W, S);
        std::cout << "longest parabolic element: length " << w0.length << ", word";
        for (int i : w0.reduced_word) std::cout << " " << i;
        std::cout << "\n";
    }
    return 0;
}

int cmd_pushforward(const CommandConfig& cfg) {
    const CartanType t = parse_cartan_type(cfg.type_string);
    const std::set<int> S = parse_parabolic(cfg.parabolic);
    const RootSystem rs = build_root_system(t, make_guard(cfg));
    const WeylGroup W = enumerate_weyl(rs, make_guard(cfg));
    const Polynomial p = parse_poly(cfg.poly, rs.rank(), VarClass::z);

    std::map<std::string, Polynomial> results;
    if (cfg.route == "closed" || cfg.route == "all")
        results.emplace("closed", gysin_closed_form(p, W, S).result);
    if (cfg.route == "localized" || cfg.route == "all")
        results.emplace("localized", gysin_via_localization(p, W, S).result);
    if ((cfg.route == "demazure" || cfg.route == "all") && !S.empty())
        results.emplace("demazure", gysin_demazure_oracle(p, W, S).result);
    if (cfg.route == "demazure" && S.empty())
        throw EmptySubset("route demazure needs a nonempty --parabolic");
    if (results.empty()) throw Error("unknown route \"" + cfg.route + "\"");

    const Polynomial& first = results.begin()->second;
    for (const auto& [name, value] : results) {
        if (!(value == first)) {
            std::cerr << "route disagreement on " << cfg.poly << ": " << results.begin()->first << " = "
                      << first.to_string() << ", " << name << " = " << value.to_string() << "\n";
            return 1;
        }
    }

    if (cfg.json) {
        OrderedJson j = json_envelope(cfg, S);
        j["route"] = cfg.route;
        j["result"] = poly_to_json(first);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << first.to_string() << "\n";
    }
    return 0;
}

int cmd_integrate(const CommandConfig& cfg) {
    const CartanType t = parse_cartan_type(cfg.type_string);
    const std::set<int> S = parse_parabolic(cfg.parabolic);
    const RootSystem rs = build_root_system(t, make_guard(cfg));
    const WeylGroup W = enumerate_weyl(rs, make_guard(cfg));
    const Polynomial q = parse_poly(cfg.poly, rs.rank(), VarClass::z);
    const Rational value = integrate_GH(q, W, S);

    if (cfg.json) {
        OrderedJson j = json_envelope(cfg, S);
        j["result"] = to_string(value);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(value) << "\n";
    }
    return 0;
}

int cmd_verify(const CommandConfig& cfg) {
    const CartanType t = parse_cartan_type(cfg.type_string);
    const std::set<int> S = parse_parabolic(cfg.parabolic);
    const RootSystem rs = build_root_system(t, make_guard(cfg));
    const WeylGroup W = enumerate_weyl(rs, make_guard(cfg));

    VerifyOptions opt;
    opt.max_degree = cfg.max_degree;
    opt.trials = cfg.trials;
    opt.seed = cfg.seed;
    const VerifyReport report = run_verify(W, S, opt);

    if (cfg.json) {
        OrderedJson j = json_envelope(cfg, S);
        j["result"] = report.all_pass() ? "pass" : "fail";
        j["checks"] = report_to_json(report);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const CheckResult& c : report.checks) {
            if (c.pass)
                std::cout << "PASS " << c.name << " (" << c.cases << " cases)\n";
            else
                std::cout << "FAIL " << c.name << ": " << c.witness << "\n";
        }
    }
    return report.all_pass() ? 0 : 1;
}

void add_common(CLI::App* cmd, CommandConfig& cfg, bool with_parabolic = true) {
    cmd->add_option("--type", cfg.type_string, "Cartan type, e.g. A3, B2, g2")->required();
    if (with_parabolic)
        cmd->add_option("--parabolic", cfg.parabolic, "comma-separated simple indices for H (default: empty, H = T)");
    cmd->add_flag("--json", cfg.json, "JSON output");
    cmd->add_flag("--size-guard-override", cfg.size_guard_override, "disable the Weyl-order size guard (E7/E8)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gysin pushforwards for flag manifolds G/T -> G/H"};
    app.require_subcommand(1);

    CommandConfig cfg;

    CLI::App* roots = app.add_subcommand("roots", "print the positive roots (and Delta+(H))");
    add_common(roots, cfg);

    CLI::App* weyl = app.add_subcommand("weyl", "Weyl group order and length statistics");
    add_common(weyl, cfg);

    CLI::App* push = app.add_subcommand("pushforward", "compute f_*(poly) for f: G/T -> G/H");
    add_common(push, cfg);
    push->add_option("--poly", cfg.poly, "polynomial in z-variables, e.g. \"2*z1-z2\"")->required();
    push->add_option("--route", cfg.route, "closed|localized|demazure|all (default all)")
        ->check(CLI::IsMember({"closed", "localized", "demazure", "all"}));

    CLI::App* integ = app.add_subcommand("integrate", "integrate a class over G/H (over G/T when no --parabolic)");
    add_common(integ, cfg);
    integ->add_option("--poly", cfg.poly, "polynomial in z-variables")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the randomized verification checks");
    add_common(verify, cfg);
    verify->add_option("--seed", cfg.seed, "PRNG seed (default 42)");
    verify->add_option("--max-degree", cfg.max_degree, "maximum random polynomial degree (default 5)")
        ->check(CLI::Range(0, 1000));
    verify->add_option("--trials", cfg.trials, "random trials per check (default 25)")
        ->check(CLI::Range(1, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (roots->parsed()) return cmd_roots(cfg);
        if (weyl->parsed()) return cmd_weyl(cfg);
        if (push->parsed()) return cmd_pushforward(cfg);
        if (integ->parsed()) return cmd_integrate(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const NotInvariant& e) {
        std::cerr << "error: " << e.what() << " (reflection " << e.reflection_index() << ")\n";
        return 2;
    } catch (const InvalidCartanType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeGuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownVariable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExponentNotNonnegativeInteger& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptySubset& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RankMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // Route disagreement or internal inconsistency: a bug witness.
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
