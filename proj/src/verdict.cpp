#include "pairstab/verdict.hpp"

#include "pairstab/error.hpp"

#include <string>
#include <utility>

namespace pairstab {

std::string_view to_string(Status status) {
    switch (status) {
        case Status::Stable: return "Stable";
        case Status::StrictlySemistable: return "StrictlySemistable";
        case Status::Unstable: return "Unstable";
    }
    return "Unstable";
}

Status parse_status(std::string_view text) {
    if (text == "Stable") return Status::Stable;
    if (text == "StrictlySemistable") return Status::StrictlySemistable;
    if (text == "Unstable") return Status::Unstable;
    throw InvalidInput("unknown status \"" + std::string(text) + "\"");
}

void VerdictBuilder::add(std::size_t record, RatPoly lhs, RatPoly rhs) {
    const auto ord = cmp_eventual(lhs, rhs);
    if (ord == EventualOrdering::Less) return;
    if (ord == EventualOrdering::Equal) any_equal_ = true;
    if (ord == EventualOrdering::Greater) any_violation_ = true;
    verdict_.witnesses.push_back({record, std::move(lhs), std::move(rhs)});
}

Verdict VerdictBuilder::finish() && {
    verdict_.status = any_violation_ ? Status::Unstable
                      : any_equal_   ? Status::StrictlySemistable
                                     : Status::Stable;
    return std::move(verdict_);
}

Status combine(Status a, Status b) {
    if (a == Status::Unstable || b == Status::Unstable) return Status::Unstable;
    if (a == Status::StrictlySemistable || b == Status::StrictlySemistable) {
        return Status::StrictlySemistable;
    }
    return Status::Stable;
}

}  // namespace pairstab
