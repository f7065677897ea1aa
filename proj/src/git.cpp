#include "pairstab/git.hpp"

#include "pairstab/error.hpp"

#include <numeric>

namespace pairstab {

namespace {

unsigned long to_natural(const Rational& v, const char* what) {
    if (!is_integer(v) || v < 0 || !v.get_num().fits_ulong_p()) {
        throw InvalidInput(std::string(what) + " must be a natural number, got " + to_string(v));
    }
    return v.get_num().get_ui();
}

}  // namespace

void validate_weight_vector(const WeightVector& w) {
    const std::size_t p = w.gamma.size();
    if (p == 0) throw InvalidInput("weight vector is empty");
    Rational sum = 0;
    for (std::size_t i = 0; i < p; ++i) {
        sum += w.gamma[i];
        if (i > 0 && w.gamma[i] < w.gamma[i - 1]) throw InvalidInput("weights must be nondecreasing");
    }
    if (sum != 0) throw InvalidInput("weights must sum to zero");
    if (w.flag_image_dims.size() != p + 1) {
        throw InvalidInput("flag dimensions need p + 1 entries");
    }
    if (w.flag_image_dims.front() != 0) throw InvalidInput("flag dimensions must start at 0");
    for (std::size_t i = 1; i <= p; ++i) {
        if (w.flag_image_dims[i] < w.flag_image_dims[i - 1]) {
            throw InvalidInput("flag dimensions must be nondecreasing");
        }
    }
    if (w.tau < 1 || w.tau > p) throw InvalidInput("framing index tau out of range");
}

void validate_point(const GitPointModel& point) {
    if (point.n1 <= 0 || point.n2 <= 0) throw InvalidInput("n1 and n2 must be positive");
    if (point.l < point.m) throw InvalidInput("need l >= m");
    for (std::size_t k = 0; k < point.subspaces.size(); ++k) {
        const auto& s = point.subspaces[k];
        if (s.dim == 0 || s.dim >= point.space_dim) {
            throw InvalidInput("subspace " + std::to_string(k) + " is not nontrivial and proper");
        }
        if (s.image_dim > point.sections_at_l) {
            throw InvalidInput("subspace " + std::to_string(k) + " has image larger than P(l)");
        }
    }
}

Rational hm_weight_quot(const WeightVector& w) {
    validate_weight_vector(w);
    Rational acc = 0;
    for (std::size_t i = 1; i <= w.gamma.size(); ++i) {
        const Rational step = w.flag_image_dims[i] - w.flag_image_dims[i - 1];
        acc += w.gamma[i - 1] * step;
    }
    return -acc;
}

Rational hm_weight_framing(const WeightVector& w) {
    validate_weight_vector(w);
    return w.gamma[w.tau - 1];
}

Rational git_pairing(const GitPointModel& point, const WeightVector& w) {
    if (w.gamma.size() != point.space_dim) {
        throw InvalidInput("weight vector length differs from dim V");
    }
    if (!w.flag_image_dims.empty() && w.flag_image_dims.back() != point.sections_at_l) {
        throw InvalidInput("flag dimensions must end at P(l)");
    }
    return point.n1 * hm_weight_quot(w) + point.n2 * hm_weight_framing(w);
}

std::vector<Rational> special_gamma(std::size_t i, std::size_t p) {
    if (i < 1 || i >= p) throw InvalidInput("special weight index must satisfy 1 <= i < p");
    const Rational low = Rational(static_cast<long>(i)) - static_cast<long>(p);
    const Rational high = static_cast<long>(i);
    std::vector<Rational> out(p, high);
    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i), low);
    return out;
}

std::vector<Rational> decompose_weight_vector(const std::vector<Rational>& gamma) {
    const std::size_t p = gamma.size();
    if (p == 0) throw InvalidInput("weight vector is empty");
    Rational sum = 0;
    for (std::size_t i = 0; i < p; ++i) {
        sum += gamma[i];
        if (i > 0 && gamma[i] < gamma[i - 1]) throw InvalidInput("weights must be nondecreasing");
    }
    if (sum != 0) throw InvalidInput("weights must sum to zero");
    std::vector<Rational> c(p - 1);
    const Rational scale = static_cast<long>(p);
    for (std::size_t i = 0; i + 1 < p; ++i) c[i] = (gamma[i + 1] - gamma[i]) / scale;
    return c;
}

ScalarInequality git_subspace_sides(const GitPointModel& point, const SubspaceRecord& s) {
    const Rational rho = point.sections_at_l;
    const Rational p = point.space_dim;
    const Rational dim = s.dim;
    const Rational psi = s.image_dim;
    const Rational eps = s.contains_image ? 1 : 0;
    return {dim * (point.n1 * rho - point.n2), p * (point.n1 * psi - eps * point.n2)};
}

bool git_check_subspace(const GitPointModel& point, const SubspaceRecord& s, bool strict) {
    const auto [lhs, rhs] = git_subspace_sides(point, s);
    return strict ? lhs < rhs : lhs <= rhs;
}

Verdict git_verdict(const GitPointModel& point, bool strict) {
    if (point.subspaces.empty()) throw InvalidInput("git verdict needs at least one subspace record");
    validate_point(point);
    VerdictBuilder out(strict);
    for (std::size_t k = 0; k < point.subspaces.size(); ++k) {
        const auto [lhs, rhs] = git_subspace_sides(point, point.subspaces[k]);
        out.add(k, RatPoly::constant(lhs), RatPoly::constant(rhs));
    }
    return std::move(out).finish();
}

WeightVector special_weight_vector(const GitPointModel& point, const SubspaceRecord& s) {
    const std::size_t p = point.space_dim;
    const std::size_t i = s.dim;
    WeightVector w;
    w.gamma = special_gamma(i, p);
    w.flag_image_dims.assign(p + 1, s.image_dim);
    std::fill(w.flag_image_dims.begin(), w.flag_image_dims.begin() + static_cast<std::ptrdiff_t>(i), 0);
    w.flag_image_dims.back() = point.sections_at_l;
    w.tau = s.contains_image ? i : p;
    return w;
}

Rational linearization_ratio(const RatPoly& P, const RatPoly& delta, long long m, long long l) {
    const Rational at_m = from_integer(m);
    const Rational at_l = from_integer(l);
    const Rational P_m = evaluate(P, at_m);
    const Rational delta_m = evaluate(delta, at_m);
    const Rational denom = P_m + delta_m;
    if (denom == 0) throw InvalidInput("P(m) + delta(m) vanishes");
    return (evaluate(P, at_l) * delta_m - evaluate(delta, at_l) * P_m) / denom;
}

PolyInequality reduced_git_inequality(const RatPoly& P, const RatPoly& delta, long long m,
                                      const Rational& dim_U, bool eps, const RatPoly& P_FU) {
    const Rational at_m = from_integer(m);
    const Rational P_m = evaluate(P, at_m);
    const Rational delta_m = evaluate(delta, at_m);
    const Rational e = eps ? 1 : 0;
    return {P * (dim_U + e * delta_m) + delta * (dim_U - e * P_m), P_FU * (P_m + delta_m)};
}

bool eqconstr3_check(const RatPoly& P, const RatPoly& delta, long long m, const Rational& dim_U,
                     bool eps, const RatPoly& P_FU, bool strict) {
    const auto [lhs, rhs] = reduced_git_inequality(P, delta, m, dim_U, eps, P_FU);
    return eventually_holds(lhs, rhs, strict);
}

PolyInequality substituted_git_inequality(const RatPoly& P, const RatPoly& delta, long long m,
                                          const Rational& dim_U, bool eps, const RatPoly& P_FU) {
    const Rational at_m = from_integer(m);
    const Rational P_m = evaluate(P, at_m);
    const Rational delta_m = evaluate(delta, at_m);
    const Rational denom = P_m + delta_m;
    if (denom == 0) throw InvalidInput("P(m) + delta(m) vanishes");
    // n2 as a polynomial in l, with n1 = 1.
    const RatPoly n2 = (P * delta_m - delta * P_m) * (1 / denom);
    const Rational e = eps ? 1 : 0;
    return {(P - n2) * dim_U, (P_FU - n2 * e) * P_m};
}

bool is_positive_multiple(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const Rational c = a.leading() / b.leading();
    return c > 0 && a == b * c;
}

bool verify_ratio_substitution(const RatPoly& P, const RatPoly& delta, long long m,
                               const Rational& dim_U, bool eps, const RatPoly& P_FU) {
    const auto sub = substituted_git_inequality(P, delta, m, dim_U, eps, P_FU);
    const auto red = reduced_git_inequality(P, delta, m, dim_U, eps, P_FU);
    return is_positive_multiple(sub.rhs - sub.lhs, red.rhs - red.lhs);
}

InducedPoint git_point_from_pair(const PairModel& model, const RatPoly& delta, long long m,
                                 long long l) {
    if (l < m) throw InvalidInput("need l >= m");
    const Rational at_m = from_integer(m);
    const Rational at_l = from_integer(l);
    InducedPoint out;
    auto& pt = out.point;
    pt.space_dim = to_natural(evaluate(model.hilbert, at_m), "P(m)");
    pt.sections_at_l = to_natural(evaluate(model.hilbert, at_l), "P(l)");
    pt.m = m;
    pt.l = l;
    pt.delta_m = evaluate(delta, at_m);
    pt.delta_l = evaluate(delta, at_l);
    pt.n1 = 1;
    pt.n2 = linearization_ratio(model.hilbert, delta, m, l);
    if (pt.n2 <= 0) throw InvalidInput("linearization ratio is not positive at these twists");
    for (std::size_t i = 0; i < model.subobjects.size(); ++i) {
        const auto& rec = model.subobjects[i];
        if (!rec.saturated || rec.hilbert.is_zero()) continue;
        SubspaceRecord s;
        s.dim = to_natural(evaluate(rec.hilbert, at_m), "P_F(m)");
        s.image_dim = to_natural(evaluate(rec.hilbert, at_l), "P_F(l)");
        s.contains_image = rec.contains_image;
        s.sheaf_hilbert = rec.hilbert;
        pt.subspaces.push_back(std::move(s));
        out.source_record.push_back(i);
    }
    validate_point(pt);
    return out;
}

}  // namespace pairstab
