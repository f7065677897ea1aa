#include "pairstab/cli.hpp"

#include "pairstab/error.hpp"
#include "pairstab/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pairstab::cli {

using jsonio::Json;
using jsonio::member;
using jsonio::to_json;

namespace {

struct Options {
    bool strict = false;
    bool explain = false;
    unsigned grid = 0;
    std::string input = "-";
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw InvalidInput("cannot open input file " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

const char* ordering_name(EventualOrdering o) {
    switch (o) {
        case EventualOrdering::Less: return "Less";
        case EventualOrdering::Equal: return "Equal";
        case EventualOrdering::Greater: return "Greater";
    }
    return "?";
}

Json comparisons_json(const std::vector<Witness>& rows) {
    Json out = Json::array();
    for (const auto& w : rows) {
        out.push_back({{"record", w.record},
                       {"lhs", to_json(w.lhs)},
                       {"rhs", to_json(w.rhs)},
                       {"ordering", ordering_name(cmp_eventual(w.lhs, w.rhs))}});
    }
    return out;
}

Json warnings_json(const PairModel& model) {
    return to_json(validate(model))["warnings"];
}

Json cmd_check(const Json& in, const Options& opt) {
    const PairModel model = jsonio::model_from(member(in, "model", ""), "/model");
    const RatPoly delta = jsonio::poly_from(member(in, "delta", ""), "/delta");
    require_valid(model);
    Json out;
    if (delta.degree() >= static_cast<int>(model.dim_x)) {
        out["regime"] = "large_delta";
        out["verdict"] = to_json(large_delta_check(model, delta));
    } else {
        out["regime"] = "standard";
        out["verdict"] = to_json(check_semistable(model, delta, opt.strict));
        if (opt.explain) {
            out["records"] = comparisons_json(record_comparisons(model, delta));
            out["quotient_form"] = to_json(check_semistable_quotient_form(model, delta, opt.strict));
        }
    }
    out["purity_violations"] = purity_violations(model, delta);
    out["warnings"] = warnings_json(model);
    return out;
}

Json cmd_jh(const Json& in, const Options& opt) {
    const PairModel model = jsonio::model_from(member(in, "model", ""), "/model");
    const RatPoly delta = jsonio::poly_from(member(in, "delta", ""), "/delta");
    require_valid(model);
    Json out;
    out["status"] = std::string(to_string(check_semistable(model, delta).status));
    out["graded"] = to_json(jordan_holder(model, delta));
    if (opt.explain) {
        Json all = Json::array();
        const auto graded = jordan_holder_all(model, delta);
        for (const auto& g : graded) all.push_back(to_json(g));
        out["all_graded"] = std::move(all);
        out["unique"] = graded.size() == 1;
    }
    return out;
}

Json cmd_walls(const Json& in, const Options& opt, bool& grid_failed) {
    const PairModel model = jsonio::model_from(member(in, "model", ""), "/model");
    const DeltaRay ray{jsonio::poly_from(member(in, "ray", ""), "/ray")};
    require_valid(model);
    Json out;
    out["report"] = to_json(chamber_report(model, ray));
    out["delta_max"] = to_json(delta_max_on_ray(model, ray));
    if (opt.grid > 0) {
        const GridCheck g = grid_check(model, ray, opt.grid);
        Json mism = Json::array();
        for (const auto& t : g.mismatches) mism.push_back(to_json(t));
        out["grid_check"] = {{"points", g.points}, {"mismatches", std::move(mism)}, {"ok", g.ok()}};
        grid_failed = !g.ok();
    }
    return out;
}

Json cmd_git(const Json& in, const Options& opt) {
    GitPointModel point;
    if (in.contains("model")) {
        // point induced by a pair at twists m <= l
        const PairModel model = jsonio::model_from(member(in, "model", ""), "/model");
        require_valid(model);
        const RatPoly delta = jsonio::poly_from(member(in, "delta", ""), "/delta");
        const long long m = jsonio::integer_from(member(in, "m", ""), "/m");
        const long long l = jsonio::integer_from(member(in, "l", ""), "/l");
        point = git_point_from_pair(model, delta, m, l).point;
    } else {
        point = jsonio::point_from(member(in, "point", ""), "/point");
    }
    Json out;
    out["point"] = to_json(point);
    out["verdict"] = to_json(git_verdict(point, opt.strict));
    out["evaluated_at_l_only"] = true;
    if (auto it = in.find("weights"); it != in.end()) {
        Json rows = Json::array();
        if (!it->is_array()) throw InvalidInput("at /weights: expected an array");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const WeightVector w = jsonio::weight_from((*it)[k], "/weights/" + std::to_string(k));
            const Rational value = git_pairing(point, w);
            rows.push_back({{"pairing", to_json(value)},
                            {"holds", opt.strict ? value > 0 : value >= 0}});
        }
        out["pairings"] = std::move(rows);
    }
    if (opt.explain) {
        Json rows = Json::array();
        for (std::size_t k = 0; k < point.subspaces.size(); ++k) {
            const auto sides = git_subspace_sides(point, point.subspaces[k]);
            Json row = {{"subspace", k}, {"lhs", to_json(sides.lhs)}, {"rhs", to_json(sides.rhs)}};
            if (const auto& P_FU = point.subspaces[k].sheaf_hilbert) {
                row["P_FU_at_l"] = to_json(evaluate(*P_FU, from_integer(point.l)));
            }
            rows.push_back(std::move(row));
        }
        out["subspaces"] = std::move(rows);
    }
    return out;
}

Json cmd_bounds(const Json& in, const Options& opt) {
    Json out = Json::object();
    if (auto it = in.find("mu_from_muhat"); it != in.end()) {
        const std::string p = "/mu_from_muhat";
        out["mu_from_muhat"] = to_json(mu_from_muhat(
            jsonio::rational_from(member(*it, "muhat", p), p + "/muhat"),
            jsonio::constants_from(member(*it, "constants", p), p + "/constants")));
    }
    if (auto it = in.find("bound_C"); it != in.end()) {
        const std::string p = "/bound_C";
        out["bound_C"] = to_json(bound_C(
            jsonio::rational_from(member(*it, "mu_P", p), p + "/mu_P"),
            jsonio::rational_from(member(*it, "r", p), p + "/r"),
            jsonio::constants_from(member(*it, "constants", p), p + "/constants")));
    }
    if (auto it = in.find("simpson"); it != in.end()) {
        const std::string p = "/simpson";
        const unsigned long r = jsonio::natural_from(member(*it, "r", p), p + "/r");
        const unsigned long d = jsonio::natural_from(member(*it, "d", p), p + "/d");
        if (r > 1000000 || d > 1000) throw InvalidInput("at " + p + ": r or d too large");
        out["simpson"] = to_json(simpson_h0_bound(
            static_cast<unsigned>(r), static_cast<unsigned>(d),
            jsonio::rational_from(member(*it, "muhat_max", p), p + "/muhat_max"),
            jsonio::rational_from(member(*it, "muhat", p), p + "/muhat"),
            jsonio::rational_from(member(*it, "m", p), p + "/m")));
    }
    if (auto it = in.find("section_criteria"); it != in.end()) {
        const std::string p = "/section_criteria";
        const PairModel model = jsonio::model_from(member(*it, "model", p), p + "/model");
        require_valid(model);
        const RatPoly delta = jsonio::poly_from(member(*it, "delta", p), p + "/delta");
        const long long m = jsonio::integer_from(member(*it, "m", p), p + "/m");
        const SectionCriteria sc = check_section_criteria(model, delta, m, opt.strict);
        out["section_criteria"] = {{"cond_ii", to_json(sc.subobjects)},
                                   {"cond_iii", to_json(sc.quotients)},
                                   {"defaulted_quotients", sc.defaulted_quotients}};
    }
    if (out.empty()) {
        throw InvalidInput(
            "bounds input needs one of mu_from_muhat, bound_C, simpson, section_criteria");
    }
    return out;
}

Json cmd_systems(const std::string& sub, const Json& in, const Options& opt) {
    const SystemModel model = jsonio::system_from(member(in, "system", ""), "/system");
    if (sub == "walls") {
        const DeltaRay ray{jsonio::poly_from(member(in, "ray", ""), "/ray")};
        return {{"report", to_json(system_chamber_report(model, ray))}};
    }
    const RatPoly alpha = jsonio::poly_from(member(in, "alpha", ""), "/alpha");
    auto [pair, delta] = system_to_pair(model, alpha);
    if (sub == "to-pair") return {{"model", to_json(pair)}, {"delta", to_json(delta)}};
    Json out;
    out["verdict"] = to_json(check_system_semistable(model, alpha, opt.strict));
    if (delta.degree() < static_cast<int>(pair.dim_x)) {
        out["pair_verdict"] = to_json(check_semistable(pair, delta, opt.strict));
    }
    return out;
}

void add_common(CLI::App* cmd, Options& opt, bool grid) {
    cmd->add_flag("--strict", opt.strict, "Ask about stability rather than semistability");
    cmd->add_flag("--explain", opt.explain, "Include per-record sides");
    if (grid) cmd->add_option("--grid-check", opt.grid, "Cross-check chambers on N grid points");
    cmd->add_option("input", opt.input, "Input JSON file, or - for stdin");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact stability checks for framed pairs and coherent systems", "pairstab"};
    app.require_subcommand(1, 1);
    Options opt;
    CLI::App* check = app.add_subcommand("check", "delta-(semi)stability verdict");
    CLI::App* jh = app.add_subcommand("jh", "Jordan-Hoelder graded object");
    CLI::App* walls = app.add_subcommand("walls", "Critical values and chambers along a ray");
    CLI::App* git = app.add_subcommand("git", "Hilbert-Mumford weights of a point");
    CLI::App* bounds = app.add_subcommand("bounds", "Boundedness and section-count formulas");
    CLI::App* systems = app.add_subcommand("systems", "Coherent systems");
    CLI::App* self = app.add_subcommand("selftest", "Run the built-in identity checks");
    for (CLI::App* c : {check, jh, git, bounds}) add_common(c, opt, false);
    add_common(walls, opt, true);
    systems->require_subcommand(1, 1);
    std::vector<CLI::App*> system_cmds;
    for (const char* name : {"check", "to-pair", "walls"}) {
        CLI::App* c = systems->add_subcommand(name);
        add_common(c, opt, false);
        system_cmds.push_back(c);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (self->parsed()) {
            std::vector<std::string> failures;
            const unsigned n = selftest(failures);
            for (const auto& f : failures) err << "identity failed: " << f << "\n";
            out << "identities verified: " << n << "\n";
            return failures.empty() ? 0 : 2;
        }
        const Json input = jsonio::parse(read_input(opt.input, in));
        if (!input.is_object()) throw InvalidInput("at /: expected an object");
        Json result;
        bool grid_failed = false;
        if (check->parsed()) result = cmd_check(input, opt);
        else if (jh->parsed()) result = cmd_jh(input, opt);
        else if (walls->parsed()) result = cmd_walls(input, opt, grid_failed);
        else if (git->parsed()) result = cmd_git(input, opt);
        else if (bounds->parsed()) result = cmd_bounds(input, opt);
        else {
            for (CLI::App* c : system_cmds) {
                if (c->parsed()) result = cmd_systems(c->get_name(), input, opt);
            }
        }
        out << result.dump(2) << "\n";
        if (grid_failed) {
            err << "grid check disagrees with the chamber report\n";
            return 2;
        }
        return 0;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pairstab::cli
