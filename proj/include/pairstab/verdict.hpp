#pragma once

#include "pairstab/polynomial.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace pairstab {

enum class Status { Stable, StrictlySemistable, Unstable };

std::string_view to_string(Status status);
Status parse_status(std::string_view text);

/// One record whose inequality `lhs (<=) rhs` is tight or violated.
struct Witness {
    std::size_t record = 0;
    RatPoly lhs;
    RatPoly rhs;

    bool violated() const { return cmp_eventual(lhs, rhs) == EventualOrdering::Greater; }
};

/// Aggregated stability verdict. `strict` records which notion the caller
/// asked about; `holds()` answers it.
struct Verdict {
    Status status = Status::Stable;
    bool strict = false;
    std::vector<Witness> witnesses;

    bool semistable() const { return status != Status::Unstable; }
    bool holds() const { return strict ? status == Status::Stable : semistable(); }
};

/// Collects per-record comparisons `lhs (<=) rhs` into a Verdict. Records
/// whose inequality holds strictly leave no witness.
class VerdictBuilder {
public:
    explicit VerdictBuilder(bool strict) { verdict_.strict = strict; }

    void add(std::size_t record, RatPoly lhs, RatPoly rhs);
    Verdict finish() &&;

private:
    Verdict verdict_;
    bool any_equal_ = false;
    bool any_violation_ = false;
};

/// Stable if every status is Stable, Unstable if any is, otherwise strictly
/// semistable.
Status combine(Status a, Status b);

}  // namespace pairstab
