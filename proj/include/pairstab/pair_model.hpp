#pragma once

#include "pairstab/polynomial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pairstab {

/// Numerical record of one subobject F of the ambient sheaf E.
struct SubobjectRecord {
    RatPoly hilbert;              // Hilbert polynomial of F
    bool contains_image = false;  // the framing image lies in F
    bool saturated = true;
    // Supplied section counts h0(F(m)) and, optionally, h0(G(m)) for the
    // quotient G = E/F. Only the section-count criteria read these.
    std::map<long long, unsigned long> h0_at;
    std::map<long long, unsigned long> quotient_h0_at;
    // Records known to contain this one (direct inclusions suffice).
    std::vector<std::size_t> parents;
};

/// Finite numerical model of a pair (E, phi): the Hilbert polynomial of E and
/// a user-declared set of subobject records. Verdicts computed from a model
/// are relative to the declared records.
struct PairModel {
    unsigned dim_x = 0;
    RatPoly hilbert;
    bool phi_nontrivial = true;
    std::vector<SubobjectRecord> subobjects;

    Rational rank() const { return rank_of(hilbert); }
    int dimension() const { return hilbert.degree(); }
};

/// Rank of a record: the leading coefficient when the record has the ambient
/// dimension, 0 for torsion records.
Rational record_rank(const PairModel& model, std::size_t idx);

bool is_torsion(const PairModel& model, std::size_t idx);

/// Quotient G = E/F of a record: its Hilbert polynomial and whether the
/// framing survives in G.
struct QuotientRecord {
    RatPoly hilbert;
    bool receives_framing = false;
};

QuotientRecord quotient_of(const PairModel& model, std::size_t idx);

/// Inverse of quotient_of at the polynomial level.
struct KernelData {
    RatPoly hilbert;
    bool contains_image = false;
};

KernelData kernel_of(const RatPoly& ambient, const QuotientRecord& quotient);

struct Diagnostic {
    std::optional<std::size_t> record;
    std::string message;
};

struct ValidationReport {
    std::vector<Diagnostic> violations;
    std::vector<Diagnostic> warnings;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const PairModel& model);

/// Throws InvalidInput listing every violation if the model is invalid.
void require_valid(const PairModel& model);

/// contained[a][b] is true when record b is (transitively) contained in a,
/// following the declared parent links.
std::vector<std::vector<bool>> containment_closure(const PairModel& model);

std::string describe(const Diagnostic& d);

}  // namespace pairstab
