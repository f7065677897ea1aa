#include "pairstab/polynomial.hpp"

#include "pairstab/error.hpp"

#include <algorithm>
#include <utility>

namespace pairstab {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw InvalidInput("negative monomial degree");
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return RatPoly(std::move(coeffs));
}

void RatPoly::trim() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational RatPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

RatPoly& RatPoly::operator+=(const RatPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-() const {
    RatPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

EventualOrdering cmp_eventual(const RatPoly& p, const RatPoly& q) {
    for (int k = std::max(p.degree(), q.degree()); k >= 0; --k) {
        const int c = cmp(p.coeff(k), q.coeff(k));
        if (c < 0) return EventualOrdering::Less;
        if (c > 0) return EventualOrdering::Greater;
    }
    return EventualOrdering::Equal;
}

int eventual_sign(const RatPoly& p) { return p.is_zero() ? 0 : sgn(p.leading()); }

bool eventually_holds(const RatPoly& lhs, const RatPoly& rhs, bool strict) {
    const auto ord = cmp_eventual(lhs, rhs);
    return ord == EventualOrdering::Less || (!strict && ord == EventualOrdering::Equal);
}

Rational evaluate(const RatPoly& p, const Rational& m) {
    Rational acc = 0;
    const auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * m + *it;
    return acc;
}

Rational rank_of(const RatPoly& p) {
    if (p.is_zero()) throw InvalidInput("rank of the zero polynomial is undefined");
    return p.leading();
}

Rational mu_hat(const RatPoly& p) {
    if (p.degree() < 1) throw InvalidInput("mu_hat needs a polynomial of degree >= 1");
    return p.coeff(p.degree() - 1) / p.leading();
}

Rational bracket_plus_pow(const Rational& x, unsigned d) {
    const Rational base = x > 0 ? x : Rational(0);
    Rational out = 1;
    for (unsigned i = 0; i < d; ++i) out *= base;
    return out;
}

Rational sign_stable_bound(const RatPoly& p) {
    Rational bound = 1;
    if (p.degree() < 1) return bound;
    const Rational lead = abs(p.leading());
    Rational worst = 0;
    for (int k = 0; k < p.degree(); ++k) {
        const Rational ratio = abs(p.coeff(k)) / lead;
        if (ratio > worst) worst = ratio;
    }
    bound += worst;
    return bound;
}

std::string to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += mag.get_str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace pairstab
