#pragma once

#include <stdexcept>
#include <string>

namespace formclass {

// User-facing precondition failure (bad input): CLI exit code 2.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Broken internal invariant (a bug, never reachable from valid input):
// CLI exit code 1.  Used for the convention tripwires.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what)
        : std::logic_error(what) {}
};

inline void check_input(bool ok, const std::string& what) {
    if (!ok) throw validation_error(what);
}

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace formclass
