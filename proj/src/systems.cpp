#include "pairstab/systems.hpp"

#include "pairstab/error.hpp"

#include <algorithm>
#include <string>

namespace pairstab {

namespace {

// Record-rank convention: torsion records have rank 0.
Rational poly_rank(const RatPoly& ambient, const RatPoly& P_F) {
    if (P_F.is_zero() || P_F.degree() < ambient.degree()) return 0;
    return P_F.leading();
}

}  // namespace

void validate_system(const SystemModel& model) {
    if (model.sections == 0) throw InvalidInput("dim Gamma must be positive");
    if (model.hilbert.is_zero() || model.hilbert.leading() <= 0) {
        throw InvalidInput("ambient rank must be positive");
    }
    if (model.hilbert.degree() > static_cast<int>(model.dim_x)) {
        throw InvalidInput("ambient degree exceeds dim_X");
    }
    for (std::size_t k = 0; k < model.subobjects.size(); ++k) {
        const auto& rec = model.subobjects[k];
        const std::string where = "record " + std::to_string(k) + ": ";
        if (rec.sections_inside > model.sections) {
            throw InvalidInput(where + "dim Gamma' exceeds dim Gamma");
        }
        if (!eventually_less(rec.hilbert, model.hilbert)) {
            throw InvalidInput(where + "polynomial is not eventually below the ambient one");
        }
    }
}

Verdict check_system_semistable(const SystemModel& model, const RatPoly& alpha, bool strict) {
    validate_system(model);
    if (eventual_sign(alpha) < 0) throw InvalidInput("alpha must be eventually nonnegative");
    const Rational r = model.hilbert.leading();
    const RatPoly total = alpha * Rational(model.sections) + model.hilbert;
    VerdictBuilder builder(strict);
    for (std::size_t k = 0; k < model.subobjects.size(); ++k) {
        const auto& rec = model.subobjects[k];
        if (!rec.saturated || rec.hilbert.is_zero()) continue;
        RatPoly lhs = alpha * Rational(rec.sections_inside) + rec.hilbert;
        RatPoly rhs = total * (poly_rank(model.hilbert, rec.hilbert) / r);
        builder.add(k, std::move(lhs), std::move(rhs));
    }
    return std::move(builder).finish();
}

std::pair<PairModel, RatPoly> system_to_pair(const SystemModel& model, const RatPoly& alpha) {
    validate_system(model);
    PairModel pair;
    pair.dim_x = model.dim_x;
    pair.hilbert = model.hilbert;
    pair.phi_nontrivial = true;
    for (const auto& rec : model.subobjects) {
        SubobjectRecord out;
        out.hilbert = rec.hilbert;
        out.contains_image = rec.sections_inside == model.sections;
        out.saturated = rec.saturated;
        pair.subobjects.push_back(std::move(out));
    }
    return {std::move(pair), alpha * Rational(model.sections)};
}

Rational product_weight(unsigned long i, unsigned long j, unsigned long p, unsigned long r) {
    if (r == 0) throw InvalidInput("r must be positive");
    return Rational(i) - Rational(j) * p / r;
}

std::pair<std::vector<Rational>, std::vector<Rational>>
schmitt_special_vectors(unsigned long j, unsigned long r, unsigned long i, unsigned long p) {
    if (r == 0 || p == 0) throw InvalidInput("r and p must be positive");
    if (j > r || i > p) throw InvalidInput("special vector indices out of range");
    auto build = [](unsigned long k, unsigned long n) {
        std::vector<Rational> v;
        v.reserve(n);
        const Rational low = (Rational(k) - n) / n;
        const Rational high = Rational(k) / n;
        for (unsigned long s = 0; s < n; ++s) v.push_back(s < k ? low : high);
        return v;
    };
    return {build(j, r), build(i, p)};
}

std::optional<std::vector<std::size_t>>
natural_framing_columns(unsigned long j, unsigned long r, unsigned long i, unsigned long p) {
    if (j > r || i > p) throw InvalidInput("framing indices out of range");
    if ((j >= 1 && i == 0) || (j < r && i == p)) return std::nullopt;
    std::vector<std::size_t> tau(r);
    for (unsigned long l = 0; l < r; ++l) tau[l] = l < j ? i : p;
    return tau;
}

Rational product_framing_weight(const std::vector<Rational>& first,
                                const std::vector<Rational>& second,
                                const std::vector<std::size_t>& tau) {
    if (first.empty() || tau.size() != first.size()) {
        throw InvalidInput("framing needs one index per column");
    }
    std::optional<Rational> best;
    for (std::size_t l = 0; l < first.size(); ++l) {
        if (tau[l] < 1 || tau[l] > second.size()) throw InvalidInput("framing index out of range");
        Rational w = second[tau[l] - 1] - first[l];
        if (!best || w > *best) best = w;
    }
    return *best;
}

std::optional<Rational> schmitt_pairing(unsigned long j, unsigned long r, unsigned long i,
                                        unsigned long p) {
    auto tau = natural_framing_columns(j, r, i, p);
    if (!tau) return std::nullopt;
    const auto [first, second] = schmitt_special_vectors(j, r, i, p);
    return Rational(p) * product_framing_weight(first, second, *tau);
}

bool git_system_check(unsigned long i, unsigned long j, unsigned long p, unsigned long r,
                      const RatPoly& P, const RatPoly& P_F, const RatPoly& alpha, bool strict) {
    if (r == 0) throw InvalidInput("r must be positive");
    if (P.is_zero() || P.leading() <= 0) throw InvalidInput("ambient rank must be positive");
    if (j > r || i > p) throw InvalidInput("weight indices out of range");
    const RatPoly lhs = alpha * Rational(j) + P_F;
    const RatPoly rhs = (P + alpha * Rational(r)) * (poly_rank(P, P_F) / P.leading());
    return eventually_holds(lhs, rhs, strict);
}

std::vector<Wall> system_walls(const SystemModel& model, const DeltaRay& ray) {
    validate_system(model);
    if (eventual_sign(ray.base) <= 0) throw InvalidInput("ray base must be eventually positive");
    const Rational r = model.hilbert.leading();
    std::vector<Wall> out;
    for (std::size_t k = 0; k < model.subobjects.size(); ++k) {
        const auto& rec = model.subobjects[k];
        if (!rec.saturated || rec.hilbert.is_zero()) continue;
        const Rational ratio = poly_rank(model.hilbert, rec.hilbert) / r;
        const RatPoly a = model.hilbert * ratio - rec.hilbert;
        const RatPoly b =
            ray.base * (ratio * Rational(model.sections) - Rational(rec.sections_inside));
        if (auto w = affine_wall(a, b, k)) out.push_back(std::move(*w));
    }
    std::sort(out.begin(), out.end(), [](const Wall& x, const Wall& y) {
        if (x.t != y.t) return x.t < y.t;
        return x.record < y.record;
    });
    return out;
}

ChamberReport system_chamber_report(const SystemModel& model, const DeltaRay& ray) {
    auto walls = system_walls(model, ray);
    return assemble_chambers(std::move(walls), [&](const Rational& t) {
        return check_system_semistable(model, ray.base * t).status;
    });
}

}  // namespace pairstab
