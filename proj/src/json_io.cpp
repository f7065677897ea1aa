#include "pairstab/json_io.hpp"

#include "pairstab/error.hpp"

#include <limits>

namespace pairstab::jsonio {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InvalidInput("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t idx) {
    return path + "/" + std::to_string(idx);
}

const Json& array_at(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

template <class T, class F>
std::vector<T> list_from(const Json& j, const std::string& path, F&& item) {
    std::vector<T> out;
    for (std::size_t k = 0; k < array_at(j, path).size(); ++k) {
        out.push_back(item(j[k], child(path, k)));
    }
    return out;
}

const Json* optional_member(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return nullptr;
    return &*it;
}

Json optional_rational(const std::optional<Rational>& q) {
    return q ? to_json(*q) : Json(nullptr);
}

// {"m": count} maps with integer keys.
std::map<long long, unsigned long> count_map_from(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object mapping twists to counts");
    std::map<long long, unsigned long> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        long long key = 0;
        try {
            std::size_t used = 0;
            key = std::stoll(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            fail(child(path, it.key()), "key is not an integer");
        }
        out[key] = natural_from(it.value(), child(path, it.key()));
    }
    return out;
}

Json count_map_to(const std::map<long long, unsigned long>& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

}  // namespace

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field \"" + key + "\"");
    return *it;
}

bool bool_from(const Json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

long long integer_from(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<long long>();
    fail(path, "expected an integer");
}

unsigned long natural_from(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) return j.get<unsigned long>();
    if (j.is_number_integer()) fail(path, "expected a nonnegative integer");
    fail(path, "expected an integer");
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
    if (!j.is_string()) fail(path, "expected a rational \"num/den\" string or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
        fail(path, e.what());
    }
}

Json to_json(const RatPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

RatPoly poly_from(const Json& j, const std::string& path) {
    return RatPoly(list_from<Rational>(j, path, rational_from));
}

Json to_json(const PairModel& model) {
    Json subs = Json::array();
    for (const auto& rec : model.subobjects) {
        Json r = {{"P_F", to_json(rec.hilbert)},
                  {"contains_image", rec.contains_image},
                  {"saturated", rec.saturated},
                  {"parents", rec.parents}};
        if (!rec.h0_at.empty()) r["h0_at"] = count_map_to(rec.h0_at);
        if (!rec.quotient_h0_at.empty()) r["h0_quotient_at"] = count_map_to(rec.quotient_h0_at);
        subs.push_back(std::move(r));
    }
    return {{"dim_X", model.dim_x},
            {"P", to_json(model.hilbert)},
            {"phi_nontrivial", model.phi_nontrivial},
            {"subobjects", std::move(subs)}};
}

PairModel model_from(const Json& j, const std::string& path) {
    PairModel model;
    const unsigned long dim = natural_from(member(j, "dim_X", path), child(path, "dim_X"));
    if (dim > std::numeric_limits<unsigned>::max()) fail(child(path, "dim_X"), "too large");
    model.dim_x = static_cast<unsigned>(dim);
    model.hilbert = poly_from(member(j, "P", path), child(path, "P"));
    if (const Json* phi = optional_member(j, "phi_nontrivial")) {
        model.phi_nontrivial = bool_from(*phi, child(path, "phi_nontrivial"));
    }
    if (const Json* subs = optional_member(j, "subobjects")) {
        const std::string sp = child(path, "subobjects");
        model.subobjects = list_from<SubobjectRecord>(*subs, sp, [](const Json& r,
                                                                   const std::string& rp) {
            SubobjectRecord rec;
            rec.hilbert = poly_from(member(r, "P_F", rp), child(rp, "P_F"));
            if (const Json* e = optional_member(r, "contains_image")) {
                rec.contains_image = bool_from(*e, child(rp, "contains_image"));
            }
            if (const Json* s = optional_member(r, "saturated")) {
                rec.saturated = bool_from(*s, child(rp, "saturated"));
            }
            if (const Json* ps = optional_member(r, "parents")) {
                rec.parents = list_from<std::size_t>(*ps, child(rp, "parents"), natural_from);
            }
            if (const Json* h = optional_member(r, "h0_at")) {
                rec.h0_at = count_map_from(*h, child(rp, "h0_at"));
            }
            if (const Json* h = optional_member(r, "h0_quotient_at")) {
                rec.quotient_h0_at = count_map_from(*h, child(rp, "h0_quotient_at"));
            }
            return rec;
        });
    }
    return model;
}

Json to_json(const Verdict& v) {
    Json ws = Json::array();
    for (const auto& w : v.witnesses) {
        ws.push_back({{"record", w.record}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}});
    }
    return {{"status", std::string(to_string(v.status))},
            {"strict", v.strict},
            {"holds", v.holds()},
            {"witnesses", std::move(ws)}};
}

Verdict verdict_from(const Json& j, const std::string& path) {
    Verdict v;
    const Json& st = member(j, "status", path);
    if (!st.is_string()) fail(child(path, "status"), "expected a string");
    try {
        v.status = parse_status(st.get<std::string>());
    } catch (const InvalidInput& e) {
        fail(child(path, "status"), e.what());
    }
    if (const Json* s = optional_member(j, "strict")) v.strict = bool_from(*s, child(path, "strict"));
    if (const Json* ws = optional_member(j, "witnesses")) {
        v.witnesses = list_from<Witness>(*ws, child(path, "witnesses"), [](const Json& w,
                                                                            const std::string& wp) {
            return Witness{natural_from(member(w, "record", wp), child(wp, "record")),
                           poly_from(member(w, "lhs", wp), child(wp, "lhs")),
                           poly_from(member(w, "rhs", wp), child(wp, "rhs"))};
        });
    }
    return v;
}

Json to_json(const GradedObject& g) {
    Json fs = Json::array();
    for (const auto& f : g.factors()) fs.push_back({{"P", to_json(f.hilbert)}, {"eps", f.framing}});
    return {{"factors", std::move(fs)}};
}

GradedObject graded_from(const Json& j, const std::string& path) {
    const std::string fp = child(path, "factors");
    return GradedObject(list_from<GradedFactor>(member(j, "factors", path), fp,
                                                [](const Json& f, const std::string& p) {
        return GradedFactor{poly_from(member(f, "P", p), child(p, "P")),
                            bool_from(member(f, "eps", p), child(p, "eps"))};
    }));
}

Json to_json(const ChamberReport& report) {
    Json walls = Json::array();
    for (const auto& w : report.walls) {
        walls.push_back({{"t", to_json(w.t)},
                         {"record", w.record},
                         {"kind", std::string(to_string(w.kind))}});
    }
    Json cells = Json::array();
    for (const auto& c : report.cells) {
        Json samples = Json::array();
        for (const auto& s : c.samples) samples.push_back(to_json(s));
        cells.push_back({{"kind", c.is_point ? "wall" : "interval"},
                         {"lower", to_json(c.lower)},
                         {"upper", optional_rational(c.upper)},
                         {"lower_closed", c.lower_closed},
                         {"status", std::string(to_string(c.status))},
                         {"samples", std::move(samples)}});
    }
    Json incs = Json::array();
    for (const auto& inc : report.inclusions) {
        incs.push_back({{"t", to_json(inc.t)},
                        {"semistable_inclusion", inc.semistable_inclusion},
                        {"stable_inclusion", inc.stable_inclusion}});
    }
    return {{"walls", std::move(walls)}, {"cells", std::move(cells)}, {"inclusions", std::move(incs)}};
}

ChamberReport chamber_report_from(const Json& j, const std::string& path) {
    ChamberReport report;
    report.walls = list_from<Wall>(member(j, "walls", path), child(path, "walls"),
                                   [](const Json& w, const std::string& wp) {
        const Json& kind = member(w, "kind", wp);
        if (!kind.is_string()) fail(child(wp, "kind"), "expected a string");
        Wall out{rational_from(member(w, "t", wp), child(wp, "t")),
                 natural_from(member(w, "record", wp), child(wp, "record"))};
        try {
            out.kind = parse_wall_kind(kind.get<std::string>());
        } catch (const InvalidInput& e) {
            fail(child(wp, "kind"), e.what());
        }
        return out;
    });
    report.cells = list_from<Cell>(member(j, "cells", path), child(path, "cells"),
                                   [](const Json& c, const std::string& cp) {
        Cell out;
        const Json& kind = member(c, "kind", cp);
        if (kind != "wall" && kind != "interval") fail(child(cp, "kind"), "expected wall or interval");
        out.is_point = kind == "wall";
        out.lower = rational_from(member(c, "lower", cp), child(cp, "lower"));
        if (const Json* u = optional_member(c, "upper")) out.upper = rational_from(*u, child(cp, "upper"));
        out.lower_closed = bool_from(member(c, "lower_closed", cp), child(cp, "lower_closed"));
        const Json& st = member(c, "status", cp);
        if (!st.is_string()) fail(child(cp, "status"), "expected a string");
        try {
            out.status = parse_status(st.get<std::string>());
        } catch (const InvalidInput& e) {
            fail(child(cp, "status"), e.what());
        }
        out.samples = list_from<Rational>(member(c, "samples", cp), child(cp, "samples"), rational_from);
        return out;
    });
    if (const Json* incs = optional_member(j, "inclusions")) {
        report.inclusions = list_from<WallInclusion>(*incs, child(path, "inclusions"),
                                                     [](const Json& i, const std::string& ip) {
            return WallInclusion{
                rational_from(member(i, "t", ip), child(ip, "t")),
                bool_from(member(i, "semistable_inclusion", ip), child(ip, "semistable_inclusion")),
                bool_from(member(i, "stable_inclusion", ip), child(ip, "stable_inclusion"))};
        });
    }
    return report;
}

Json to_json(const DeltaMaxReport& report) {
    return {{"t_star", optional_rational(report.t_star)},
            {"tail_sample", to_json(report.tail_sample)},
            {"tail_status", std::string(to_string(report.tail_status))},
            {"criterion_status", std::string(to_string(report.criterion_status))},
            {"agrees", report.agrees}};
}

Json to_json(const GitPointModel& point) {
    Json subs = Json::array();
    for (const auto& s : point.subspaces) {
        Json r = {{"dim_U", s.dim}, {"psi_U", s.image_dim}, {"eps_U", s.contains_image}};
        if (s.sheaf_hilbert) r["P_FU"] = to_json(*s.sheaf_hilbert);
        subs.push_back(std::move(r));
    }
    return {{"p", point.space_dim},
            {"rho", point.sections_at_l},
            {"m", point.m},
            {"l", point.l},
            {"delta_m", to_json(point.delta_m)},
            {"delta_l", to_json(point.delta_l)},
            {"n1", to_json(point.n1)},
            {"n2", to_json(point.n2)},
            {"subspaces", std::move(subs)}};
}

GitPointModel point_from(const Json& j, const std::string& path) {
    GitPointModel point;
    point.space_dim = natural_from(member(j, "p", path), child(path, "p"));
    point.sections_at_l = natural_from(member(j, "rho", path), child(path, "rho"));
    point.m = integer_from(member(j, "m", path), child(path, "m"));
    point.l = integer_from(member(j, "l", path), child(path, "l"));
    if (const Json* d = optional_member(j, "delta_m")) point.delta_m = rational_from(*d, child(path, "delta_m"));
    if (const Json* d = optional_member(j, "delta_l")) point.delta_l = rational_from(*d, child(path, "delta_l"));
    if (const Json* n = optional_member(j, "n1")) point.n1 = rational_from(*n, child(path, "n1"));
    if (const Json* n = optional_member(j, "n2")) point.n2 = rational_from(*n, child(path, "n2"));
    point.subspaces = list_from<SubspaceRecord>(member(j, "subspaces", path), child(path, "subspaces"),
                                                [](const Json& s, const std::string& sp) {
        SubspaceRecord rec;
        rec.dim = natural_from(member(s, "dim_U", sp), child(sp, "dim_U"));
        rec.image_dim = natural_from(member(s, "psi_U", sp), child(sp, "psi_U"));
        rec.contains_image = bool_from(member(s, "eps_U", sp), child(sp, "eps_U"));
        if (const Json* h = optional_member(s, "P_FU")) rec.sheaf_hilbert = poly_from(*h, child(sp, "P_FU"));
        return rec;
    });
    return point;
}

Json to_json(const WeightVector& w) {
    Json gamma = Json::array();
    for (const auto& g : w.gamma) gamma.push_back(to_json(g));
    return {{"gamma", std::move(gamma)}, {"psi", w.flag_image_dims}, {"tau", w.tau}};
}

WeightVector weight_from(const Json& j, const std::string& path) {
    WeightVector w;
    w.gamma = list_from<Rational>(member(j, "gamma", path), child(path, "gamma"), rational_from);
    w.flag_image_dims = list_from<unsigned long>(member(j, "psi", path), child(path, "psi"), natural_from);
    w.tau = natural_from(member(j, "tau", path), child(path, "tau"));
    return w;
}

Json to_json(const SystemModel& model) {
    Json subs = Json::array();
    for (const auto& rec : model.subobjects) {
        subs.push_back({{"P_F", to_json(rec.hilbert)},
                        {"gamma_prime_dim", rec.sections_inside},
                        {"saturated", rec.saturated}});
    }
    return {{"gamma_dim", model.sections},
            {"P", to_json(model.hilbert)},
            {"dim_X", model.dim_x},
            {"subobjects", std::move(subs)}};
}

SystemModel system_from(const Json& j, const std::string& path) {
    SystemModel model;
    model.sections = natural_from(member(j, "gamma_dim", path), child(path, "gamma_dim"));
    model.hilbert = poly_from(member(j, "P", path), child(path, "P"));
    const unsigned long dim = natural_from(member(j, "dim_X", path), child(path, "dim_X"));
    if (dim > std::numeric_limits<unsigned>::max()) fail(child(path, "dim_X"), "too large");
    model.dim_x = static_cast<unsigned>(dim);
    if (const Json* subs = optional_member(j, "subobjects")) {
        model.subobjects = list_from<SystemRecord>(*subs, child(path, "subobjects"),
                                                   [](const Json& r, const std::string& rp) {
            SystemRecord rec;
            rec.hilbert = poly_from(member(r, "P_F", rp), child(rp, "P_F"));
            rec.sections_inside =
                natural_from(member(r, "gamma_prime_dim", rp), child(rp, "gamma_prime_dim"));
            if (const Json* s = optional_member(r, "saturated")) {
                rec.saturated = bool_from(*s, child(rp, "saturated"));
            }
            return rec;
        });
    }
    return model;
}

Json to_json(const AmbientConstants& c) {
    return {{"alpha_d", to_json(c.alpha_top)},
            {"alpha_dm1", to_json(c.alpha_next)},
            {"mu_min_D", to_json(c.mu_min_framing)}};
}

AmbientConstants constants_from(const Json& j, const std::string& path) {
    AmbientConstants c;
    c.alpha_top = rational_from(member(j, "alpha_d", path), child(path, "alpha_d"));
    c.alpha_next = rational_from(member(j, "alpha_dm1", path), child(path, "alpha_dm1"));
    c.mu_min_framing = rational_from(member(j, "mu_min_D", path), child(path, "mu_min_D"));
    if (c.alpha_top <= 0) fail(child(path, "alpha_d"), "must be positive");
    return c;
}

Json to_json(const ValidationReport& report) {
    auto list = [](const std::vector<Diagnostic>& ds) {
        Json out = Json::array();
        for (const auto& d : ds) {
            out.push_back({{"record", d.record ? Json(*d.record) : Json(nullptr)},
                           {"message", d.message}});
        }
        return out;
    };
    return {{"ok", report.ok()},
            {"violations", list(report.violations)},
            {"warnings", list(report.warnings)}};
}

}  // namespace pairstab::jsonio
