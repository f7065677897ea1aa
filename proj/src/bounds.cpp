#include "pairstab/bounds.hpp"

#include "pairstab/error.hpp"

#include <algorithm>

namespace pairstab {

Rational mu_from_muhat(const Rational& muhat, const AmbientConstants& c) {
    return muhat * c.alpha_top - c.alpha_next;
}

Rational bound_C(const Rational& mu_P, const Rational& r, const AmbientConstants& c) {
    if (r <= 0) throw InvalidInput("bound_C needs a positive rank");
    const Rational a = mu_P;
    const Rational b = mu_P * r - c.mu_min_framing * r;
    const Rational d = mu_P * r - c.mu_min_framing / r;
    return std::max({a, b, d});
}

Rational simpson_h0_bound(unsigned r, unsigned d, const Rational& mu_hat_max,
                          const Rational& mu_hat, const Rational& m) {
    if (r == 0) throw InvalidInput("simpson_h0_bound needs rank >= 1");
    Rational factorial = 1;
    for (unsigned k = 2; k <= d; ++k) factorial *= k;
    const Rational rank = r;
    const Rational C = Rational(r * (r + d)) / 2;
    const Rational top = bracket_plus_pow(mu_hat_max + C - 1 + m, d) / factorial;
    const Rational own = bracket_plus_pow(mu_hat + C - 1 + m, d) / factorial;
    return rank * ((rank - 1) / rank * top + own / rank);
}

SectionCriteria check_section_criteria(const PairModel& model, const RatPoly& delta, long long m,
                                       bool strict) {
    if (eventual_sign(delta) < 0) throw InvalidInput("stability parameter is eventually negative");
    const Rational r = model.rank();
    const Rational at = from_integer(m);
    const Rational P_m = evaluate(model.hilbert, at);
    const Rational delta_m = evaluate(delta, at);
    const Rational total = P_m + delta_m;

    SectionCriteria out;
    VerdictBuilder subs(strict);
    VerdictBuilder quots(strict);
    for (std::size_t i = 0; i < model.subobjects.size(); ++i) {
        const auto& rec = model.subobjects[i];
        const Rational sub_rank = record_rank(model, i);
        if (sub_rank <= 0 || sub_rank >= r) continue;
        const auto h0 = rec.h0_at.find(m);
        if (h0 == rec.h0_at.end()) {
            throw InvalidInput("record " + std::to_string(i) + " has no h0 value at m = " +
                               std::to_string(m));
        }
        const Rational h0_sub = h0->second;
        const Rational eps_sub = rec.contains_image ? 1 : 0;
        subs.add(i, RatPoly::constant(h0_sub + eps_sub * delta_m),
                 RatPoly::constant(sub_rank / r * total));

        Rational h0_quot;
        if (const auto q = rec.quotient_h0_at.find(m); q != rec.quotient_h0_at.end()) {
            h0_quot = q->second;
        } else {
            h0_quot = P_m - h0_sub;
            out.defaulted_quotients.push_back(i);
        }
        quots.add(i, RatPoly::constant((r - sub_rank) / r * total),
                  RatPoly::constant(h0_quot + (1 - eps_sub) * delta_m));
    }
    out.subobjects = std::move(subs).finish();
    out.quotients = std::move(quots).finish();
    return out;
}

}  // namespace pairstab
