#include "pairstab/pair_model.hpp"

#include "pairstab/error.hpp"

namespace pairstab {

namespace {

void check_index(const PairModel& model, std::size_t idx) {
    if (idx >= model.subobjects.size()) {
        throw InvalidInput("record index " + std::to_string(idx) + " out of range");
    }
}

}  // namespace

bool is_torsion(const PairModel& model, std::size_t idx) {
    check_index(model, idx);
    return model.subobjects[idx].hilbert.degree() < model.hilbert.degree();
}

Rational record_rank(const PairModel& model, std::size_t idx) {
    if (is_torsion(model, idx)) return 0;
    return rank_of(model.subobjects[idx].hilbert);
}

QuotientRecord quotient_of(const PairModel& model, std::size_t idx) {
    check_index(model, idx);
    const auto& rec = model.subobjects[idx];
    return {model.hilbert - rec.hilbert, !rec.contains_image};
}

KernelData kernel_of(const RatPoly& ambient, const QuotientRecord& quotient) {
    return {ambient - quotient.hilbert, !quotient.receives_framing};
}

ValidationReport validate(const PairModel& model) {
    ValidationReport report;
    auto violation = [&](std::optional<std::size_t> rec, std::string msg) {
        report.violations.push_back({rec, std::move(msg)});
    };
    auto warning = [&](std::optional<std::size_t> rec, std::string msg) {
        report.warnings.push_back({rec, std::move(msg)});
    };

    const RatPoly& P = model.hilbert;
    if (P.is_zero() || P.leading() <= 0) {
        violation(std::nullopt, "ambient Hilbert polynomial must have positive rank");
    }
    if (P.degree() > static_cast<int>(model.dim_x)) {
        violation(std::nullopt, "ambient degree exceeds dim_X");
    }
    if (!model.phi_nontrivial) {
        violation(std::nullopt, "the framing homomorphism must be nontrivial");
    }

    const std::size_t n = model.subobjects.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& rec = model.subobjects[i];
        if (rec.hilbert.degree() > P.degree()) {
            violation(i, "subobject degree exceeds ambient degree");
        }
        const auto ord = cmp_eventual(rec.hilbert, P);
        if (ord == EventualOrdering::Greater) {
            violation(i, "subobject polynomial is eventually larger than the ambient one");
        } else if (ord == EventualOrdering::Equal) {
            violation(i, "record equals the ambient object (records must be proper)");
        }
        if (rec.hilbert.is_zero() && rec.contains_image && model.phi_nontrivial) {
            violation(i, "zero subobject cannot contain the image of a nontrivial framing");
        }
        for (std::size_t parent : rec.parents) {
            if (parent >= n) {
                violation(i, "parent index " + std::to_string(parent) + " out of range");
                continue;
            }
            if (parent == i) {
                violation(i, "record lists itself as a parent");
                continue;
            }
            if (rec.contains_image && !model.subobjects[parent].contains_image) {
                violation(i, "contains the framing image but parent " + std::to_string(parent) +
                                 " does not");
            }
            if (cmp_eventual(rec.hilbert, model.subobjects[parent].hilbert) !=
                EventualOrdering::Less) {
                violation(i, "polynomial is not eventually smaller than parent " +
                                 std::to_string(parent));
            }
        }
        if (!rec.saturated) {
            warning(i, "record is not saturated and is ignored by the stability checks");
        }
    }
    return report;
}

void require_valid(const PairModel& model) {
    const auto report = validate(model);
    if (report.ok()) return;
    std::string msg = "invalid pair model:";
    for (const auto& d : report.violations) msg += "\n  " + describe(d);
    throw InvalidInput(msg);
}

std::vector<std::vector<bool>> containment_closure(const PairModel& model) {
    const std::size_t n = model.subobjects.size();
    std::vector<std::vector<bool>> contained(n, std::vector<bool>(n, false));
    for (std::size_t child = 0; child < n; ++child) {
        for (std::size_t parent : model.subobjects[child].parents) {
            if (parent < n && parent != child) contained[parent][child] = true;
        }
    }
    // Warshall.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!contained[a][k]) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (contained[k][b]) contained[a][b] = true;
            }
        }
    }
    return contained;
}

std::string describe(const Diagnostic& d) {
    if (d.record) return "record " + std::to_string(*d.record) + ": " + d.message;
    return "model: " + d.message;
}

}  // namespace pairstab
