// Command-line front end: every computation and verification as a
// reproducible, scriptable command with text or JSON output.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource
// guard exceeded.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qweyl/expr.hpp"
#include "qweyl/verify.hpp"

using namespace qweyl;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Report {
    std::string command;
    std::string algebra;
    Json parameters = Json::object();
    std::string status = "pass"; // pass | fail | exceeded
    Json details = Json::object();

    Json to_json() const {
        Json j;
        j["schema"] = 1;
        j["command"] = command;
        if (!algebra.empty()) j["algebra"] = algebra;
        j["parameters"] = parameters;
        j["status"] = status;
        j["details"] = details;
        return j;
    }

    int exit_code() const {
        if (status == "pass") return kExitPass;
        if (status == "exceeded") return kExitGuard;
        return kExitFail;
    }
};

void emit(const Report& rep, bool json_mode) {
    if (json_mode) {
        std::cout << rep.to_json().dump(2) << "\n";
        return;
    }
    std::cout << rep.command;
    if (!rep.algebra.empty()) std::cout << " [" << rep.algebra << "]";
    std::cout << ": " << rep.status << "\n";
    for (const auto& [key, value] : rep.details.items()) {
        if (value.is_string())
            std::cout << "  " << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << "  " << key << ": " << value.dump() << "\n";
    }
}

std::pair<long, long> parse_label(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected a pair 'a,b', got '" + s + "'");
    try {
        return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("expected integers in 'a,b', got '" + s + "'");
    }
}

LatticeFunction named_function(const RootData& rd, const std::string& name) {
    if (name == "unknot") return unknot_j(rd);
    if (name == "zero") return LatticeFunction::zero(rd);
    if (name == "trefoil-left" || name == "trefoil-right") {
        if (rd != RootData::parse("sl2"))
            throw std::invalid_argument("trefoil oracles are defined for sl2");
        Chirality c = name == "trefoil-left" ? Chirality::left : Chirality::right;
        return trefoil_colored_jones_oracle(c, kTrefoilFramingShift);
    }
    if (name.rfind("delta:", 0) == 0) {
        long long mu = std::stoll(name.substr(6));
        return LatticeFunction::delta(rd, rd.from_int(mu));
    }
    throw std::invalid_argument("unknown function '" + name +
                                "' (use unknot, zero, delta:<k>, trefoil-left, trefoil-right)");
}

Weight parse_lambda(const RootData& rd, const std::string& s) {
    std::vector<long long> v;
    size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        v.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if ((int)v.size() == rd.rank()) return rd.canonical(Weight(v));
    if (v.size() == 1) return rd.from_int(v[0]);
    throw std::invalid_argument("lambda has wrong length for " + rd.name());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in quantum Weyl algebras of classical Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit reports as JSON");

    // --- bracket ---
    std::string br_algebra = "sl2", br_x = "1,0", br_y = "0,1";
    int br_parallel = 1;
    auto* cmd_bracket = app.add_subcommand("bracket", "compare quantized and Goldman brackets");
    cmd_bracket->add_option("--algebra", br_algebra, "algebra name (sl2, sl3, sp4, so5, ...)");
    cmd_bracket->add_option("--x", br_x, "first curve label a,b")->required();
    cmd_bracket->add_option("--y", br_y, "second curve label c,d")->required();

    // --- verify ---
    std::string vf_id;
    std::string vf_algebra;
    int vf_range = -1, vf_parallel = 1, vf_lambda_max = 15, vf_radius = -1;
    std::uint64_t vf_seed = 0;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("id", vf_id,
                           "one of: inv-rec-unknot, rec-unknot-sln, goldman, iva, "
                           "trefoil-annihilation, ivacor, j-sym, properties, all")
        ->required();
    cmd_verify->add_option("--algebra", vf_algebra, "restrict goldman to one algebra");
    cmd_verify->add_option("--range", vf_range, "sweep range for goldman");
    cmd_verify->add_option("--seed", vf_seed, "seed for randomized suites (default 0)");
    cmd_verify->add_option("--parallel", vf_parallel, "max worker threads for sweeps");
    cmd_verify->add_option("--lambda-max", vf_lambda_max, "window for trefoil-annihilation");
    cmd_verify->add_option("--radius", vf_radius, "annihilation window radius override");

    // --- apply ---
    std::string ap_algebra = "sl2", ap_op, ap_fn = "unknot", ap_lambda = "0";
    auto* cmd_apply = app.add_subcommand("apply", "apply an operator to a lattice function");
    cmd_apply->add_option("--algebra", ap_algebra, "algebra name");
    cmd_apply->add_option("--op", ap_op, "operator expression")->required();
    cmd_apply->add_option("--fn", ap_fn, "function name");
    cmd_apply->add_option("--lambda", ap_lambda, "evaluation point (integer or vector)");

    // --- epsilon ---
    std::string ep_algebra = "sl2", ep_expr;
    auto* cmd_epsilon = app.add_subcommand("epsilon", "classical limit of an operator");
    cmd_epsilon->add_option("--algebra", ep_algebra, "algebra name");
    cmd_epsilon->add_option("--expr", ep_expr, "operator expression")->required();

    // --- mul ---
    std::string mu_algebra = "sl2", mu_x, mu_y;
    auto* cmd_mul = app.add_subcommand("mul", "normal-ordered product of two operators");
    cmd_mul->add_option("--algebra", mu_algebra, "algebra name");
    cmd_mul->add_option("--x", mu_x, "left factor")->required();
    cmd_mul->add_option("--y", mu_y, "right factor")->required();

    // --- groebner ---
    std::string gb_knot;
    std::vector<std::string> gb_gens, gb_member, gb_radical;
    auto* cmd_groebner = app.add_subcommand("groebner", "Groebner basis and membership queries");
    cmd_groebner->add_option("--knot", gb_knot, "A-ideal preset: unknot, trefoil-left, trefoil-right");
    cmd_groebner->add_option("--gens", gb_gens, "generators (rank-1 Laurent polynomials)");
    cmd_groebner->add_option("--member", gb_member, "membership queries");
    cmd_groebner->add_option("--radical-member", gb_radical, "radical membership queries");

    // --- oracle-export ---
    std::string ox_knot = "trefoil-left";
    int ox_range = 10, ox_framing = kTrefoilFramingShift;
    auto* cmd_oracle = app.add_subcommand("oracle-export", "export lattice-function values");
    cmd_oracle->add_option("--knot", ox_knot, "unknot, trefoil-left or trefoil-right");
    cmd_oracle->add_option("--range", ox_range, "export lambda in [-range, range]");
    cmd_oracle->add_option("--framing", ox_framing, "framing shift for the trefoil oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (cmd_bracket->parsed()) {
            RootData rd = RootData::parse(br_algebra);
            auto [a, b] = parse_label(br_x);
            auto [c, d] = parse_label(br_y);
            CommPoly lhs = poisson(tau_lift(rd, a, b), tau_lift(rd, c, d));
            CommPoly rhs = goldman_bracket(rd, TorusTrace{a, b}, TorusTrace{c, d});
            Report rep;
            rep.command = "bracket";
            rep.algebra = rd.name();
            rep.parameters = {{"x", br_x}, {"y", br_y}};
            rep.details["quantized"] = lhs.str();
            rep.details["goldman"] = rhs.str();
            rep.details["equal"] = lhs == rhs;
            rep.status = lhs == rhs ? "pass" : "fail";
            emit(rep, json_mode);
            return rep.exit_code();
        }

        if (cmd_verify->parsed()) {
            std::vector<VerifyResult> results;
            if (vf_id == "goldman" && (!vf_algebra.empty() || vf_range >= 0)) {
                results.push_back(verify_goldman(vf_parallel, vf_algebra, vf_range));
            } else if (vf_id == "trefoil-annihilation") {
                results.push_back(verify_trefoil_annihilation(vf_lambda_max));
            } else if (vf_id == "inv-rec-unknot" && vf_radius >= 0) {
                results.push_back(verify_unknot_recursion(vf_radius));
            } else if (vf_id == "rec-unknot-sln" && vf_radius >= 0) {
                results.push_back(verify_rec_unknot_sln(vf_radius));
            } else {
                try {
                    results = verify_by_id(vf_id, vf_parallel, vf_seed);
                } catch (const std::invalid_argument& e) {
                    std::cerr << e.what() << "\n";
                    return kExitUsage;
                }
            }
            Report rep;
            rep.command = "verify " + vf_id;
            rep.parameters = {{"seed", vf_seed}, {"parallel", vf_parallel}};
            if (!vf_algebra.empty()) rep.parameters["algebra"] = vf_algebra;
            if (vf_range >= 0) rep.parameters["range"] = vf_range;
            rep.details["results"] = Json::array();
            for (const auto& r : results) {
                Json jr;
                jr["id"] = r.id;
                jr["title"] = r.title;
                jr["status"] = r.status;
                // wall-clock timings stay out of the JSON report so that
                // identical invocations are bit-identical
                jr["details"] = r.details;
                rep.details["results"].push_back(jr);
                if (r.status == "exceeded" && rep.status == "pass") rep.status = "exceeded";
                if (r.status == "fail") rep.status = "fail";
            }
            if (!json_mode)
                for (const auto& r : results)
                    std::printf("%s %s (%.2fs) %s\n", r.passed() ? "PASS" : "FAIL", r.id.c_str(),
                                r.seconds, r.title.c_str());
            if (json_mode) emit(rep, true);
            return rep.exit_code();
        }

        if (cmd_apply->parsed()) {
            RootData rd = RootData::parse(ap_algebra);
            AlgebraElement op = parse_algebra_expr(rd, ap_op);
            LatticeFunction fn = named_function(rd, ap_fn);
            Weight lambda = parse_lambda(rd, ap_lambda);
            LaurentQ value = apply(op, fn, lambda);
            Report rep;
            rep.command = "apply";
            rep.algebra = rd.name();
            rep.parameters = {{"op", ap_op}, {"fn", ap_fn}, {"lambda", ap_lambda}};
            rep.details["value"] = value.str();
            emit(rep, json_mode);
            return kExitPass;
        }

        if (cmd_epsilon->parsed()) {
            RootData rd = RootData::parse(ep_algebra);
            CommPoly p = epsilon(parse_algebra_expr(rd, ep_expr));
            Report rep;
            rep.command = "epsilon";
            rep.algebra = rd.name();
            rep.parameters = {{"expr", ep_expr}};
            rep.details["value"] = p.str();
            emit(rep, json_mode);
            return kExitPass;
        }

        if (cmd_mul->parsed()) {
            RootData rd = RootData::parse(mu_algebra);
            AlgebraElement prod = parse_algebra_expr(rd, mu_x) * parse_algebra_expr(rd, mu_y);
            Report rep;
            rep.command = "mul";
            rep.algebra = rd.name();
            rep.parameters = {{"x", mu_x}, {"y", mu_y}};
            rep.details["value"] = prod.str();
            emit(rep, json_mode);
            return kExitPass;
        }

        if (cmd_groebner->parsed()) {
            RootData rd = RootData::parse("sl2");
            std::vector<CommPoly> gens;
            if (!gb_knot.empty())
                gens = a_ideal_preset(gb_knot).generators();
            for (const auto& s : gb_gens) gens.push_back(parse_comm_expr(rd, s));
            if (gens.empty()) {
                std::cerr << "groebner: no generators (use --knot or --gens)\n";
                return kExitUsage;
            }
            LaurentIdeal ideal(std::move(gens));
            Report rep;
            rep.command = "groebner";
            rep.algebra = "sl2";
            if (!gb_knot.empty()) rep.parameters["knot"] = gb_knot;
            try {
                rep.details["generators"] = Json::array();
                for (const auto& g : ideal.generators())
                    rep.details["generators"].push_back(g.str());
                rep.details["basis_size"] = ideal.basis().size();
                rep.details["queries"] = Json::array();
                for (const auto& s : gb_member) {
                    CommPoly p = parse_comm_expr(rd, s);
                    Json q;
                    q["poly"] = s;
                    q["member"] = member(p, ideal);
                    rep.details["queries"].push_back(q);
                }
                for (const auto& s : gb_radical) {
                    CommPoly p = parse_comm_expr(rd, s);
                    Json q;
                    q["poly"] = s;
                    q["radical_member"] = radical_member(p, ideal);
                    rep.details["queries"].push_back(q);
                }
            } catch (const GuardExceeded& e) {
                rep.status = "exceeded";
                rep.details["error"] = e.what();
            }
            emit(rep, json_mode);
            return rep.exit_code();
        }

        if (cmd_oracle->parsed()) {
            RootData rd = RootData::parse("sl2");
            LatticeFunction fn = ox_knot == "unknot"
                                     ? unknot_j(rd)
                                     : trefoil_colored_jones_oracle(
                                           ox_knot == "trefoil-left" ? Chirality::left
                                                                     : Chirality::right,
                                           ox_framing);
            if (ox_knot != "unknot" && ox_knot != "trefoil-left" && ox_knot != "trefoil-right") {
                std::cerr << "oracle-export: unknown knot '" << ox_knot << "'\n";
                return kExitUsage;
            }
            Json values = Json::array();
            for (long long lam = -ox_range; lam <= ox_range; ++lam)
                values.push_back(Json::array({lam, fn.eval(lam).str()}));
            Report rep;
            rep.command = "oracle-export";
            rep.algebra = "sl2";
            rep.parameters = {{"knot", ox_knot}, {"range", ox_range}, {"framing", ox_framing}};
            rep.details["values"] = values;
            emit(rep, json_mode);
            return kExitPass;
        }
    } catch (const GuardExceeded& e) {
        std::cerr << "resource guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
