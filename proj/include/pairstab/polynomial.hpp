#pragma once

#include "pairstab/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pairstab {

/// Exact polynomial in one variable with rational coefficients, stored densely
/// from degree 0 upward. The highest stored coefficient is always nonzero, so
/// the zero polynomial has no coefficients and degree -1.
///
/// Hilbert polynomials, stability parameters and every side of every stability
/// inequality in the library are RatPoly values.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs);

    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, int degree);
    static RatPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^k; zero outside the stored range.
    Rational coeff(int k) const;
    Rational leading() const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    RatPoly& operator+=(const RatPoly& other);
    RatPoly& operator-=(const RatPoly& other);
    RatPoly& operator*=(const Rational& scalar);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
    friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Result of comparing two polynomials for all sufficiently large arguments.
enum class EventualOrdering { Less, Equal, Greater };

/// p(m) versus q(m) for m >> 0: lexicographic comparison of coefficients from
/// the highest degree down.
EventualOrdering cmp_eventual(const RatPoly& p, const RatPoly& q);

/// -1, 0 or +1: the sign of p(m) for m >> 0.
int eventual_sign(const RatPoly& p);

/// `lhs (<=) rhs` in the eventual order: `<` when strict, `<=` otherwise.
bool eventually_holds(const RatPoly& lhs, const RatPoly& rhs, bool strict);

/// Strict-weak ordering usable with std::sort (it is the eventual order).
inline bool eventually_less(const RatPoly& a, const RatPoly& b) {
    return cmp_eventual(a, b) == EventualOrdering::Less;
}

Rational evaluate(const RatPoly& p, const Rational& m);

/// Leading coefficient, which is the rank of a sheaf with Hilbert polynomial p.
/// Throws InvalidInput for the zero polynomial.
Rational rank_of(const RatPoly& p);

/// Coefficient of p / rank_of(p) in degree deg(p) - 1. Throws InvalidInput for
/// zero or constant polynomials.
Rational mu_hat(const RatPoly& p);

/// (max(x, 0))^d, with 0^0 = 1.
Rational bracket_plus_pow(const Rational& x, unsigned d);

/// A bound B >= 1 such that p has no real root >= B (Cauchy's bound), so the
/// sign of p(m) equals eventual_sign(p) for every m >= B.
Rational sign_stable_bound(const RatPoly& p);

/// Human-readable form such as "2x^2 - 1/2x + 3". Not a serialization format.
std::string to_string(const RatPoly& p);

}  // namespace pairstab
