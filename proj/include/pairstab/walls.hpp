#pragma once

#include "pairstab/pair_model.hpp"
#include "pairstab/verdict.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace pairstab {

/// The ray delta(t) = t * base, t >= 0.
struct DeltaRay {
    RatPoly base;
};

/// Throws InvalidInput unless the base is eventually positive with degree
/// below dim_X.
void validate_ray(const PairModel& model, const DeltaRay& ray);

enum class WallKind { SignFlip, BecomesEqual };

std::string_view to_string(WallKind kind);
WallKind parse_wall_kind(std::string_view text);

struct Wall {
    Rational t;
    std::size_t record = 0;
    WallKind kind = WallKind::SignFlip;
};

/// For a record whose comparison polynomial (rhs - lhs) along the ray is
/// a + t*b, the critical parameter: the root of the highest coefficient that
/// is not identically zero in t, when that root is >= 0.
std::optional<Wall> affine_wall(const RatPoly& a, const RatPoly& b, std::size_t record);

/// Critical values of every saturated record along the ray, sorted by t then
/// record. At most one per record.
std::vector<Wall> wall_ts(const PairModel& model, const DeltaRay& ray);

/// A chamber (open interval, or [0, t1) when 0 is not critical) or a wall
/// point, with the verdict there.
struct Cell {
    bool is_point = false;
    Rational lower;
    std::optional<Rational> upper;  // none means +infinity
    bool lower_closed = false;
    Status status = Status::Stable;
    std::vector<Rational> samples;

    bool contains(const Rational& t) const;
};

/// Semistable in a chamber implies semistable at the bounding wall; stable at
/// the wall implies stable in the chamber. Checked for each adjacent chamber.
struct WallInclusion {
    Rational t;
    bool semistable_inclusion = true;
    bool stable_inclusion = true;
};

struct ChamberReport {
    std::vector<Wall> walls;
    std::vector<Cell> cells;
    std::vector<WallInclusion> inclusions;

    const Cell& cell_at(const Rational& t) const;
};

/// Assembles chambers from critical values. Each chamber is sampled twice
/// (midpoint and quarter point; last wall + 1 and + 2 on the unbounded tail)
/// and std::logic_error is thrown if the samples disagree.
ChamberReport assemble_chambers(std::vector<Wall> walls,
                                const std::function<Status(const Rational&)>& status_at);

ChamberReport chamber_report(const PairModel& model, const DeltaRay& ray);

/// Tail behaviour of the ray beyond its largest critical value, compared with
/// the large-parameter criterion (no proper saturated record of rank below r
/// contains the framing image, and the sheaf is pure).
struct DeltaMaxReport {
    std::optional<Rational> t_star;
    Rational tail_sample;
    Status tail_status = Status::Stable;
    Status criterion_status = Status::Stable;
    bool agrees = true;
};

DeltaMaxReport delta_max_on_ray(const PairModel& model, const DeltaRay& ray);

/// Samples n + 1 evenly spaced parameters on [0, last wall + 1] and compares
/// the directly computed verdict with the chamber the report assigns.
struct GridCheck {
    unsigned points = 0;
    std::vector<Rational> mismatches;

    bool ok() const { return mismatches.empty(); }
};

GridCheck grid_check(const PairModel& model, const DeltaRay& ray, unsigned n);

}  // namespace pairstab
