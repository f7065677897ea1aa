#include "pairstab/stability.hpp"

#include "pairstab/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace pairstab {

namespace {

bool checked_record(const SubobjectRecord& rec) { return rec.saturated && !rec.hilbert.is_zero(); }

RatPoly framing_term(bool contains, const RatPoly& delta) { return contains ? delta : RatPoly{}; }

}  // namespace

void require_parameter(const PairModel& model, const RatPoly& delta, bool low_degree) {
    if (!model.phi_nontrivial) throw InvalidInput("stability checks need a nontrivial framing");
    if (model.hilbert.is_zero() || model.hilbert.leading() <= 0) {
        throw InvalidInput("ambient Hilbert polynomial must have positive rank");
    }
    if (eventual_sign(delta) < 0) throw InvalidInput("stability parameter is eventually negative");
    if (low_degree && delta.degree() >= static_cast<int>(model.dim_x)) {
        throw InvalidInput("stability parameter must have degree < dim_X");
    }
    if (!low_degree && delta.degree() < static_cast<int>(model.dim_x)) {
        throw InvalidInput("large-parameter criterion needs deg delta >= dim_X");
    }
}

std::vector<Witness> record_comparisons(const PairModel& model, const RatPoly& delta) {
    require_parameter(model, delta, true);
    const Rational r = model.rank();
    const RatPoly total = model.hilbert + delta;
    std::vector<Witness> out;
    for (std::size_t i = 0; i < model.subobjects.size(); ++i) {
        const auto& rec = model.subobjects[i];
        if (!checked_record(rec)) continue;
        const Rational ratio = record_rank(model, i) / r;
        out.push_back({i, rec.hilbert + framing_term(rec.contains_image, delta), total * ratio});
    }
    return out;
}

Verdict check_semistable(const PairModel& model, const RatPoly& delta, bool strict) {
    VerdictBuilder out(strict);
    for (auto& c : record_comparisons(model, delta)) {
        out.add(c.record, std::move(c.lhs), std::move(c.rhs));
    }
    return std::move(out).finish();
}

Verdict check_semistable_quotient_form(const PairModel& model, const RatPoly& delta, bool strict) {
    require_parameter(model, delta, true);
    const Rational r = model.rank();
    const RatPoly total = model.hilbert + delta;
    VerdictBuilder out(strict);
    for (std::size_t i = 0; i < model.subobjects.size(); ++i) {
        if (!checked_record(model.subobjects[i])) continue;
        const QuotientRecord q = quotient_of(model, i);
        const Rational quotient_rank = r - record_rank(model, i);
        out.add(i, total * (quotient_rank / r), q.hilbert + framing_term(q.receives_framing, delta));
    }
    return std::move(out).finish();
}

std::vector<std::size_t> purity_violations(const PairModel& model, const RatPoly& delta) {
    if (eventual_sign(delta) < 0) throw InvalidInput("stability parameter is eventually negative");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < model.subobjects.size(); ++i) {
        if (!is_torsion(model, i)) continue;
        const auto& rec = model.subobjects[i];
        if (eventual_sign(rec.hilbert + framing_term(rec.contains_image, delta)) > 0) {
            out.push_back(i);
        }
    }
    return out;
}

Verdict large_delta_check(const PairModel& model, const RatPoly& delta) {
    require_parameter(model, delta, false);
    const Rational r = model.rank();
    const RatPoly total = model.hilbert + delta;
    const auto impure = purity_violations(model, delta);

    Verdict out;
    for (std::size_t i = 0; i < model.subobjects.size(); ++i) {
        const auto& rec = model.subobjects[i];
        const Rational rank = record_rank(model, i);
        const bool blocks_surjectivity = checked_record(rec) && rec.contains_image && rank < r;
        const bool torsion = std::find(impure.begin(), impure.end(), i) != impure.end();
        if (!blocks_surjectivity && !torsion) continue;
        out.witnesses.push_back(
            {i, rec.hilbert + framing_term(rec.contains_image, delta), total * (rank / r)});
    }
    out.status = out.witnesses.empty() ? Status::Stable : Status::Unstable;
    return out;
}

// --- Jordan-Hoelder ---------------------------------------------------------

bool factor_less(const GradedFactor& a, const GradedFactor& b) {
    const auto ord = cmp_eventual(a.hilbert, b.hilbert);
    if (ord != EventualOrdering::Equal) return ord == EventualOrdering::Less;
    return a.framing < b.framing;
}

GradedObject::GradedObject(std::vector<GradedFactor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(), factor_less);
}

RatPoly GradedObject::total() const {
    RatPoly sum;
    for (const auto& f : factors_) sum += f.hilbert;
    return sum;
}

std::size_t GradedObject::framing_count() const {
    return static_cast<std::size_t>(
        std::count_if(factors_.begin(), factors_.end(), [](const auto& f) { return f.framing; }));
}

bool s_equivalent(const GradedObject& a, const GradedObject& b) { return a == b; }

namespace {

constexpr std::size_t kAmbient = std::numeric_limits<std::size_t>::max();

struct FiltrationContext {
    const PairModel& model;
    RatPoly delta;
    std::vector<bool> candidate;  // record has the ambient reduced pair polynomial
    std::vector<std::vector<bool>> contained;

    bool inside(std::size_t outer, std::size_t rec) const {
        return outer == kAmbient || contained[outer][rec];
    }

    const RatPoly& hilbert(std::size_t idx) const {
        return idx == kAmbient ? model.hilbert : model.subobjects[idx].hilbert;
    }
    bool framing(std::size_t idx) const {
        return idx == kAmbient || model.subobjects[idx].contains_image;
    }
    Rational rank(std::size_t idx) const {
        return idx == kAmbient ? model.rank() : record_rank(model, idx);
    }

    std::vector<std::size_t> maximal_inside(std::size_t outer) const {
        std::vector<std::size_t> in;
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            if (candidate[i] && inside(outer, i)) in.push_back(i);
        }
        std::vector<std::size_t> out;
        for (std::size_t c : in) {
            const bool dominated =
                std::any_of(in.begin(), in.end(), [&](std::size_t o) { return contained[o][c]; });
            if (!dominated) out.push_back(c);
        }
        return out;
    }

    GradedFactor step_factor(std::size_t outer, std::size_t sub) const {
        if (framing(sub) && !framing(outer)) {
            throw InvalidInput("lattice inconsistent: record " + std::to_string(sub) +
                               " contains the framing image but its container does not");
        }
        if (rank(sub) >= rank(outer)) {
            throw InvalidInput("lattice insufficient: record " + std::to_string(sub) +
                               " does not drop rank inside its container");
        }
        return {hilbert(outer) - hilbert(sub), framing(outer) && !framing(sub)};
    }
};

FiltrationContext make_context(const PairModel& model, const RatPoly& delta) {
    const Verdict v = check_semistable(model, delta, false);
    if (!v.semistable()) throw InvalidInput("Jordan-Hoelder filtration needs a semistable pair");

    FiltrationContext ctx{model, delta, std::vector<bool>(model.subobjects.size(), false),
                          containment_closure(model)};
    const Rational r = model.rank();
    const RatPoly total = model.hilbert + delta;
    for (std::size_t i = 0; i < model.subobjects.size(); ++i) {
        const auto& rec = model.subobjects[i];
        if (!checked_record(rec)) continue;
        const Rational rank = record_rank(model, i);
        if (rank <= 0) continue;
        // (P_F + eps delta) / r' == (P + delta) / r
        const RatPoly pair_poly = rec.hilbert + framing_term(rec.contains_image, delta);
        ctx.candidate[i] = pair_poly * r == total * rank;
    }
    return ctx;
}

}  // namespace

GradedObject jordan_holder(const PairModel& model, const RatPoly& delta) {
    const FiltrationContext ctx = make_context(model, delta);
    std::vector<GradedFactor> factors;
    std::size_t current = kAmbient;
    for (;;) {
        const auto next = ctx.maximal_inside(current);
        if (next.empty()) break;
        const std::size_t sub = next.front();
        factors.push_back(ctx.step_factor(current, sub));
        current = sub;
    }
    factors.push_back({ctx.hilbert(current), ctx.framing(current)});
    return GradedObject(std::move(factors));
}

std::vector<GradedObject> jordan_holder_all(const PairModel& model, const RatPoly& delta) {
    const FiltrationContext ctx = make_context(model, delta);
    std::vector<GradedObject> found;
    std::vector<GradedFactor> prefix;
    std::function<void(std::size_t)> descend = [&](std::size_t current) {
        const auto next = ctx.maximal_inside(current);
        if (next.empty()) {
            auto factors = prefix;
            factors.push_back({ctx.hilbert(current), ctx.framing(current)});
            GradedObject g(std::move(factors));
            if (std::find(found.begin(), found.end(), g) == found.end()) found.push_back(std::move(g));
            return;
        }
        for (std::size_t sub : next) {
            prefix.push_back(ctx.step_factor(current, sub));
            descend(sub);
            prefix.pop_back();
        }
    };
    descend(kAmbient);
    return found;
}

}  // namespace pairstab
