#pragma once

#include "pairstab/pair_model.hpp"
#include "pairstab/verdict.hpp"

#include <cstddef>
#include <vector>

namespace pairstab {

/// Numerical data of the polarized variety and the framing sheaf.
struct AmbientConstants {
    Rational alpha_top;       // coefficient of P_{O_X} in degree d (> 0)
    Rational alpha_next;      // coefficient of P_{O_X} in degree d - 1
    Rational mu_min_framing;  // minimal slope of the framing sheaf
};

/// Slope mu from the normalized slope: mu = mu_hat * alpha_d - alpha_{d-1}.
Rational mu_from_muhat(const Rational& muhat, const AmbientConstants& c);

/// Uniform upper bound on the maximal slope of sheaves in semistable pairs:
/// max{mu_P, mu_P r - mu_min r, mu_P r - mu_min / r}. Throws for r <= 0.
Rational bound_C(const Rational& mu_P, const Rational& r, const AmbientConstants& c);

/// Upper bound on h0(E(m)) for a sheaf of rank r and dimension d:
///
///   r * [ (r-1)/r * [mu_max + C - 1 + m]_+^d / d!  +  1/r * [mu + C - 1 + m]_+^d / d! ]
///
/// with C = r(r+d)/2. Pass mu_hat_max = mu_hat for semistable sheaves.
Rational simpson_h0_bound(unsigned r, unsigned d, const Rational& mu_hat_max,
                          const Rational& mu_hat, const Rational& m);

/// Section-count form of the stability conditions at a fixed twist m.
struct SectionCriteria {
    Verdict subobjects;  // h0(F(m)) + eps(F) delta(m) (<=) r'/r (P(m) + delta(m))
    Verdict quotients;   // r''/r (P(m) + delta(m)) (<=) h0(G(m)) + eps(G) delta(m)
    // Records whose h0(G(m)) was not supplied and was replaced by the lower
    // bound P(m) - h0(F(m)).
    std::vector<std::size_t> defaulted_quotients;
};

/// Only records with 0 < r' < r take part. Throws InvalidInput when a
/// participating record lacks h0_at[m].
SectionCriteria check_section_criteria(const PairModel& model, const RatPoly& delta, long long m,
                                       bool strict = false);

}  // namespace pairstab
