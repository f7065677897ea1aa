#include "pairstab/walls.hpp"

#include "pairstab/error.hpp"
#include "pairstab/stability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pairstab {

namespace {

Status record_status(int sign) {
    if (sign > 0) return Status::Stable;
    if (sign == 0) return Status::StrictlySemistable;
    return Status::Unstable;
}

}  // namespace

void validate_ray(const PairModel& model, const DeltaRay& ray) {
    if (eventual_sign(ray.base) <= 0) throw InvalidInput("ray base must be eventually positive");
    if (ray.base.degree() >= static_cast<int>(model.dim_x)) {
        throw InvalidInput("ray base must have degree < dim_X");
    }
}

std::string_view to_string(WallKind kind) {
    return kind == WallKind::SignFlip ? "SignFlip" : "BecomesEqual";
}

WallKind parse_wall_kind(std::string_view text) {
    if (text == "SignFlip") return WallKind::SignFlip;
    if (text == "BecomesEqual") return WallKind::BecomesEqual;
    throw InvalidInput("unknown wall kind \"" + std::string(text) + "\"");
}

std::optional<Wall> affine_wall(const RatPoly& a, const RatPoly& b, std::size_t record) {
    for (int k = std::max(a.degree(), b.degree()); k >= 0; --k) {
        const Rational ak = a.coeff(k);
        const Rational bk = b.coeff(k);
        if (ak == 0 && bk == 0) continue;
        // A t-independent top coefficient fixes the sign on the whole ray.
        if (bk == 0) return std::nullopt;
        const Rational t = -ak / bk;
        if (t < 0) return std::nullopt;
        // At the start of the ray only the upper side exists; the lower
        // coefficients of a may already give the status found above 0.
        if (t == 0 && record_status(eventual_sign(a)) == record_status(sgn(bk))) return std::nullopt;
        // Compare the record's status just below and just above t. The top
        // coefficient is affine, so its sign on either side is sign(+-bk).
        const int below = -sgn(bk);
        const int above = sgn(bk);
        const WallKind kind = record_status(below) != record_status(above) ? WallKind::SignFlip
                                                                            : WallKind::BecomesEqual;
        return Wall{t, record, kind};
    }
    return std::nullopt;
}

std::vector<Wall> wall_ts(const PairModel& model, const DeltaRay& ray) {
    validate_ray(model, ray);
    const Rational r = model.rank();
    std::vector<Wall> out;
    for (std::size_t i = 0; i < model.subobjects.size(); ++i) {
        const auto& rec = model.subobjects[i];
        if (!rec.saturated || rec.hilbert.is_zero()) continue;
        const Rational ratio = record_rank(model, i) / r;
        // rhs - lhs = ratio (P + t base) - P_F - eps t base
        const RatPoly a = model.hilbert * ratio - rec.hilbert;
        const RatPoly b = ray.base * (ratio - (rec.contains_image ? 1 : 0));
        if (auto w = affine_wall(a, b, i)) out.push_back(std::move(*w));
    }
    std::sort(out.begin(), out.end(), [](const Wall& x, const Wall& y) {
        if (x.t != y.t) return x.t < y.t;
        return x.record < y.record;
    });
    return out;
}

bool Cell::contains(const Rational& t) const {
    if (is_point) return t == lower;
    const bool above_lower = lower_closed ? t >= lower : t > lower;
    return above_lower && (!upper || t < *upper);
}

const Cell& ChamberReport::cell_at(const Rational& t) const {
    for (const auto& c : cells) {
        if (c.contains(t)) return c;
    }
    throw InvalidInput("parameter " + to_string(t) + " lies outside the ray");
}

ChamberReport assemble_chambers(std::vector<Wall> walls,
                                const std::function<Status(const Rational&)>& status_at) {
    ChamberReport report;
    report.walls = std::move(walls);

    std::vector<Rational> ts;
    for (const auto& w : report.walls) {
        if (ts.empty() || ts.back() != w.t) ts.push_back(w.t);
    }

    auto interval = [&](Rational lower, std::optional<Rational> upper, bool closed) {
        Cell c;
        c.lower = lower;
        c.upper = upper;
        c.lower_closed = closed;
        if (upper) {
            c.samples = {(lower + *upper) / 2, lower + (*upper - lower) / 4};
        } else {
            c.samples = {lower + 1, lower + 2};
        }
        c.status = status_at(c.samples[0]);
        if (status_at(c.samples[1]) != c.status) {
            throw std::logic_error("verdict is not constant on the chamber starting at " +
                                   to_string(lower));
        }
        report.cells.push_back(std::move(c));
    };
    auto point = [&](const Rational& t) {
        Cell c;
        c.is_point = true;
        c.lower = t;
        c.upper = t;
        c.lower_closed = true;
        c.samples = {t};
        c.status = status_at(t);
        report.cells.push_back(std::move(c));
    };

    if (ts.empty()) {
        interval(0, std::nullopt, true);
        return report;
    }
    if (ts.front() > 0) interval(0, ts.front(), true);
    for (std::size_t k = 0; k < ts.size(); ++k) {
        point(ts[k]);
        if (k + 1 < ts.size()) {
            interval(ts[k], ts[k + 1], false);
        } else {
            interval(ts[k], std::nullopt, false);
        }
    }

    for (std::size_t k = 0; k < report.cells.size(); ++k) {
        const Cell& wall = report.cells[k];
        if (!wall.is_point) continue;
        WallInclusion inc{wall.lower};
        for (std::size_t nb : {k - 1, k + 1}) {
            if (nb >= report.cells.size()) continue;  // k - 1 wraps for k == 0
            const Status chamber = report.cells[nb].status;
            if (chamber != Status::Unstable && wall.status == Status::Unstable) {
                inc.semistable_inclusion = false;
            }
            if (wall.status == Status::Stable && chamber != Status::Stable) {
                inc.stable_inclusion = false;
            }
        }
        report.inclusions.push_back(inc);
    }
    return report;
}

ChamberReport chamber_report(const PairModel& model, const DeltaRay& ray) {
    auto walls = wall_ts(model, ray);
    return assemble_chambers(std::move(walls), [&](const Rational& t) {
        return check_semistable(model, ray.base * t).status;
    });
}

DeltaMaxReport delta_max_on_ray(const PairModel& model, const DeltaRay& ray) {
    const auto walls = wall_ts(model, ray);
    DeltaMaxReport out;
    if (!walls.empty()) out.t_star = walls.back().t;
    out.tail_sample = out.t_star ? *out.t_star + 1 : Rational(1);
    const RatPoly delta = ray.base * out.tail_sample;
    out.tail_status = check_semistable(model, delta).status;

    const Rational r = model.rank();
    bool blocked = !purity_violations(model, delta).empty();
    for (std::size_t i = 0; i < model.subobjects.size() && !blocked; ++i) {
        const auto& rec = model.subobjects[i];
        if (!rec.saturated || rec.hilbert.is_zero()) continue;
        if (rec.contains_image && record_rank(model, i) < r) blocked = true;
    }
    out.criterion_status = blocked ? Status::Unstable : Status::Stable;
    out.agrees = out.criterion_status == out.tail_status;
    return out;
}

GridCheck grid_check(const PairModel& model, const DeltaRay& ray, unsigned n) {
    const ChamberReport report = chamber_report(model, ray);
    GridCheck out;
    if (n == 0) return out;
    const Rational upper = report.walls.empty() ? Rational(1) : report.walls.back().t + 1;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational t = upper * k / n;
        ++out.points;
        const Status direct = check_semistable(model, ray.base * t).status;
        if (direct != report.cell_at(t).status) out.mismatches.push_back(t);
    }
    return out;
}

}  // namespace pairstab
