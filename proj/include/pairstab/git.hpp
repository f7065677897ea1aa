#pragma once

#include "pairstab/pair_model.hpp"
#include "pairstab/verdict.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pairstab {

/// A nontrivial proper subspace U of V = k^{P(m)}.
struct SubspaceRecord {
    unsigned long dim = 0;        // dim U
    unsigned long image_dim = 0;  // dim q'(U (x) W), i.e. h0 of the generated sheaf at l
    bool contains_image = false;  // the framing image lies in U
    std::optional<RatPoly> sheaf_hilbert;  // Hilbert polynomial of the sheaf generated by U
};

/// Finite model of a point (a, q) of the parameter space at fixed twists m <= l.
struct GitPointModel {
    unsigned long space_dim = 0;     // p = dim V = P(m)
    unsigned long sections_at_l = 0; // rho = P(l)
    long long m = 0;
    long long l = 0;
    Rational delta_m;
    Rational delta_l;
    Rational n1 = 1;
    Rational n2 = 1;
    std::vector<SubspaceRecord> subspaces;
};

/// One-parameter subgroup data for a fixed basis: the weights, the flag
/// dimensions psi(0..p) and the framing index tau (1-based).
struct WeightVector {
    std::vector<Rational> gamma;
    std::vector<unsigned long> flag_image_dims;
    std::size_t tau = 1;
};

/// Throws InvalidInput unless gamma is nondecreasing with zero sum, psi starts
/// at 0 and is nondecreasing with one more entry than gamma, and 1 <= tau <= p.
void validate_weight_vector(const WeightVector& w);
void validate_point(const GitPointModel& point);

/// Weight of the quotient part: -sum_i gamma_i (psi(i) - psi(i-1)).
Rational hm_weight_quot(const WeightVector& w);

/// Weight of the framing part: gamma_tau.
Rational hm_weight_framing(const WeightVector& w);

/// n1 * hm_weight_quot + n2 * hm_weight_framing. The point is GIT-(semi)stable
/// for this subgroup iff the value is (>) >= 0.
Rational git_pairing(const GitPointModel& point, const WeightVector& w);

/// gamma^(i) = (i-p, ..., i-p, i, ..., i) with i leading entries. 1 <= i < p.
std::vector<Rational> special_gamma(std::size_t i, std::size_t p);

/// Nonnegative c_1..c_{p-1} with sum_i c_i gamma^(i) = gamma.
std::vector<Rational> decompose_weight_vector(const std::vector<Rational>& gamma);

struct ScalarInequality {
    Rational lhs;
    Rational rhs;
};

/// dim U (n1 rho - n2)  versus  p (n1 psi_U - eps(U) n2).
ScalarInequality git_subspace_sides(const GitPointModel& point, const SubspaceRecord& s);
bool git_check_subspace(const GitPointModel& point, const SubspaceRecord& s, bool strict = false);

/// Aggregates git_check_subspace over every subspace record. Throws
/// InvalidInput for an empty record list.
Verdict git_verdict(const GitPointModel& point, bool strict = false);

/// Special weight vector gamma^(dim U) for a flag through U, with flag data
/// consistent with the record.
WeightVector special_weight_vector(const GitPointModel& point, const SubspaceRecord& s);

/// n2/n1 = (P(l) delta(m) - delta(l) P(m)) / (P(m) + delta(m)).
Rational linearization_ratio(const RatPoly& P, const RatPoly& delta, long long m, long long l);

struct PolyInequality {
    RatPoly lhs;
    RatPoly rhs;
};

/// P (dim U + eps delta(m)) + delta (dim U - eps P(m))  versus  P_FU (P(m) + delta(m)).
PolyInequality reduced_git_inequality(const RatPoly& P, const RatPoly& delta, long long m,
                                      const Rational& dim_U, bool eps, const RatPoly& P_FU);

bool eqconstr3_check(const RatPoly& P, const RatPoly& delta, long long m, const Rational& dim_U,
                     bool eps, const RatPoly& P_FU, bool strict = false);

/// The per-subspace inequality with the sheaf polynomial in l,
///   dim U (n1 P(l) - n2)  versus  P(m) (n1 P_FU(l) - eps n2),
/// after substituting n1 = 1 and n2 = the linearization ratio as a
/// polynomial in l.
PolyInequality substituted_git_inequality(const RatPoly& P, const RatPoly& delta, long long m,
                                          const Rational& dim_U, bool eps, const RatPoly& P_FU);

/// True when a = c * b for some rational c > 0 (or both are zero).
bool is_positive_multiple(const RatPoly& a, const RatPoly& b);

/// Expands the substituted inequality symbolically in l and confirms that
/// (rhs - lhs) is a positive multiple of the reduced inequality's (rhs - lhs).
bool verify_ratio_substitution(const RatPoly& P, const RatPoly& delta, long long m,
                               const Rational& dim_U, bool eps, const RatPoly& P_FU);

/// Point model induced by a pair at twists m <= l: p = P(m), rho = P(l),
/// n1 = 1, n2 = linearization ratio, and one subspace per saturated nonzero
/// record with dim U = P_F(m), psi_U = P_F(l). `source_record[k]` is the record
/// behind subspace k. Throws InvalidInput when the values are not admissible.
struct InducedPoint {
    GitPointModel point;
    std::vector<std::size_t> source_record;
};

InducedPoint git_point_from_pair(const PairModel& model, const RatPoly& delta, long long m,
                                 long long l);

}  // namespace pairstab
