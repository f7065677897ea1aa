#include "pairstab/cli.hpp"

#include "pairstab/git.hpp"
#include "pairstab/stability.hpp"
#include "pairstab/systems.hpp"

#include <string>

namespace pairstab::cli {

namespace {

class Tally {
public:
    explicit Tally(std::vector<std::string>& failures) : failures_(failures) {}

    void expect(bool ok, const std::string& what) {
        if (ok) ++count_;
        else failures_.push_back(what);
    }
    unsigned count() const { return count_; }

private:
    std::vector<std::string>& failures_;
    unsigned count_ = 0;
};

}  // namespace

unsigned selftest(std::vector<std::string>& failures) {
    Tally tally(failures);

    // Substituting the linearization ratio turns the per-subspace inequality
    // into a positive multiple of the reduced one, symbolically in l.
    const std::vector<RatPoly> ambients = {{2, 2}, {1, 3, 1}, {Rational(1, 2), 1, 3}};
    const std::vector<RatPoly> deltas = {{}, {2}, {Rational(3, 2), 1}};
    for (std::size_t a = 0; a < ambients.size(); ++a) {
        const RatPoly& P = ambients[a];
        for (const RatPoly& delta : deltas) {
            if (delta.degree() >= P.degree()) continue;
            for (long long m = 1; m <= 3; ++m) {
                for (int dim_U = 1; dim_U <= 3; ++dim_U) {
                    for (bool eps : {false, true}) {
                        const RatPoly P_FU = P - RatPoly{Rational(dim_U)};
                        tally.expect(verify_ratio_substitution(P, delta, m, dim_U, eps, P_FU),
                                     "ratio substitution, ambient " + to_string(P) + ", delta " +
                                         to_string(delta) + ", m " + std::to_string(m));
                    }
                }
            }
        }
    }

    // Special weight vectors form a basis of the cone of admissible weights.
    for (std::size_t p = 2; p <= 6; ++p) {
        for (std::size_t i = 1; i < p; ++i) {
            const auto c = decompose_weight_vector(special_gamma(i, p));
            bool unit = true;
            for (std::size_t k = 0; k < c.size(); ++k) unit = unit && c[k] == (k + 1 == i ? 1 : 0);
            tally.expect(unit, "special vector " + std::to_string(i) + " of " + std::to_string(p));
        }
    }

    // Product-group weight of the special vectors.
    for (unsigned long r = 1; r <= 4; ++r) {
        for (unsigned long j = 0; j <= r; ++j) {
            for (unsigned long p = 1; p <= 8; ++p) {
                for (unsigned long i = 0; i <= p; ++i) {
                    const auto w = schmitt_pairing(j, r, i, p);
                    if (!w) continue;
                    tally.expect(*w == product_weight(i, j, p, r),
                                 "product weight (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ", " + std::to_string(p) + ", " + std::to_string(r) + ")");
                }
            }
        }
    }

    // Subobject and quotient forms agree on a pair with one wall.
    PairModel model;
    model.dim_x = 1;
    model.hilbert = {2, 2};
    SubobjectRecord rec;
    rec.hilbert = {2, 1};
    model.subobjects.push_back(rec);
    for (int d = 0; d <= 4; ++d) {
        const RatPoly delta{Rational(d)};
        tally.expect(check_semistable(model, delta).status ==
                         check_semistable_quotient_form(model, delta).status,
                     "duality at delta " + std::to_string(d));
    }
    return tally.count();
}

}  // namespace pairstab::cli
