#pragma once

#include "pairstab/pair_model.hpp"
#include "pairstab/verdict.hpp"

#include <cstddef>
#include <vector>

namespace pairstab {

/// delta-(semi)stability of a pair: for every saturated record F of rank r'
///
///     P_F + eps(F) * delta  (<=)  r'/r * (P + delta)
///
/// in the eventual order. Torsion records have r' = 0, so their right-hand
/// side is the zero polynomial. Non-saturated and zero records are skipped.
///
/// Throws InvalidInput if delta is eventually negative, deg delta >= dim_X, or
/// the framing is trivial.
Verdict check_semistable(const PairModel& model, const RatPoly& delta, bool strict = false);

/// Both sides of the inequality above for every record check_semistable
/// looks at, whether or not it holds strictly.
std::vector<Witness> record_comparisons(const PairModel& model, const RatPoly& delta);

/// The same verdict phrased through quotients G = E/F of rank r'' = r - r':
///
///     r''/r * (P + delta)  (<=)  P_G + eps(G) * delta
///
/// Witnesses carry the quotient-form sides and the index of the kernel record.
Verdict check_semistable_quotient_form(const PairModel& model, const RatPoly& delta,
                                       bool strict = false);

/// Torsion records F with P_F + eps(F) * delta eventually positive. A
/// semistable pair has none.
std::vector<std::size_t> purity_violations(const PairModel& model, const RatPoly& delta);

/// Criterion for deg delta >= dim_X: the pair is semistable exactly when no
/// proper saturated record of rank below r contains the framing image and the
/// sheaf is pure. Returns Stable or Unstable.
Verdict large_delta_check(const PairModel& model, const RatPoly& delta);

struct GradedFactor {
    RatPoly hilbert;
    bool framing = false;  // the graded framing lands in this factor

    friend bool operator==(const GradedFactor&, const GradedFactor&) = default;
};

/// Graded object of a Jordan-Hoelder filtration, kept as a sorted multiset.
class GradedObject {
public:
    GradedObject() = default;
    explicit GradedObject(std::vector<GradedFactor> factors);

    const std::vector<GradedFactor>& factors() const { return factors_; }
    RatPoly total() const;
    std::size_t framing_count() const;

    friend bool operator==(const GradedObject&, const GradedObject&) = default;

private:
    std::vector<GradedFactor> factors_;
};

bool factor_less(const GradedFactor& a, const GradedFactor& b);

/// Jordan-Hoelder graded object computed from the declared record lattice.
/// At each step the lattice-maximal record with the ambient reduced pair
/// polynomial is taken (lowest index on ties).
///
/// Throws InvalidInput if the pair is unstable or the lattice cannot realize a
/// filtration (an equal-rank step or a framing flag that is not monotone).
GradedObject jordan_holder(const PairModel& model, const RatPoly& delta);

/// Every distinct graded object reachable by some choice of lattice-maximal
/// record at each step. A well-formed lattice yields exactly one.
std::vector<GradedObject> jordan_holder_all(const PairModel& model, const RatPoly& delta);

bool s_equivalent(const GradedObject& a, const GradedObject& b);

/// Throws InvalidInput unless delta is usable as a stability parameter for the
/// model; `low_degree` additionally requires deg delta < dim_X.
void require_parameter(const PairModel& model, const RatPoly& delta, bool low_degree);

}  // namespace pairstab
