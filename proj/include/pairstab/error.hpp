#pragma once

#include <stdexcept>
#include <string>

namespace pairstab {

// Raised for malformed input and violated preconditions. The CLI maps it to
// exit code 1; anything else escaping a command is an internal error.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace pairstab
