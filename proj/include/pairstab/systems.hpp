#pragma once

#include "pairstab/pair_model.hpp"
#include "pairstab/verdict.hpp"
#include "pairstab/walls.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace pairstab {

/// A subsheaf F of a coherent system (Gamma, E) with Gamma' = Gamma cap H0(F).
struct SystemRecord {
    RatPoly hilbert;
    unsigned long sections_inside = 0;  // dim Gamma'
    bool saturated = true;
};

struct SystemModel {
    unsigned long sections = 0;  // dim Gamma
    RatPoly hilbert;
    unsigned dim_x = 0;
    std::vector<SystemRecord> subobjects;
};

/// Throws InvalidInput unless dim Gamma > 0, the rank is positive, and every
/// record is proper with dim Gamma' <= dim Gamma.
void validate_system(const SystemModel& model);

/// Per saturated record of rank r_F (0 for torsion):
///
///     dim Gamma' * alpha + P_F  (<=)  r_F/r * (dim Gamma * alpha + P)
Verdict check_system_semistable(const SystemModel& model, const RatPoly& alpha,
                                bool strict = false);

/// The pair (E, ev) with delta = dim Gamma * alpha; a record contains the
/// image of the evaluation map exactly when Gamma' = Gamma.
std::pair<PairModel, RatPoly> system_to_pair(const SystemModel& model, const RatPoly& alpha);

/// i - j p / r.
Rational product_weight(unsigned long i, unsigned long j, unsigned long p, unsigned long r);

/// ((j-r)^j, j^(r-j)) / r  and  ((i-p)^i, i^(p-i)) / p, exponents meaning
/// repetition.
std::pair<std::vector<Rational>, std::vector<Rational>>
schmitt_special_vectors(unsigned long j, unsigned long r, unsigned long i, unsigned long p);

/// Framing index (1-based row) of each of the r columns of a: the first j
/// columns span Gamma' and map into the first i basis vectors of V, the rest
/// do not. None when no such framing exists (j >= 1 with i = 0, or j < r with
/// i = p).
std::optional<std::vector<std::size_t>>
natural_framing_columns(unsigned long j, unsigned long r, unsigned long i, unsigned long p);

/// Weight of the framing under the product torus with weights `first` on k^r
/// and `second` on V: max over columns l of second[tau_l] - first[l].
Rational product_framing_weight(const std::vector<Rational>& first,
                                const std::vector<Rational>& second,
                                const std::vector<std::size_t>& tau);

/// p * product_framing_weight for the special vectors and natural framing.
std::optional<Rational> schmitt_pairing(unsigned long j, unsigned long r, unsigned long i,
                                        unsigned long p);

/// j alpha + P_F (<=) r_F/r_E (P + r alpha), where r = dim Gamma and r_F, r_E
/// are record ranks.
bool git_system_check(unsigned long i, unsigned long j, unsigned long p, unsigned long r,
                      const RatPoly& P, const RatPoly& P_F, const RatPoly& alpha,
                      bool strict = false);

/// Critical values of alpha(t) = t * base for the system inequality.
std::vector<Wall> system_walls(const SystemModel& model, const DeltaRay& ray);
ChamberReport system_chamber_report(const SystemModel& model, const DeltaRay& ray);

}  // namespace pairstab
