#pragma once
#include <sstream>
#include <stdexcept>
#include <string>

namespace deodhar {

// Invariant failure in the mathematical core.  These are never compiled out:
// a violated invariant means a wrong theorem or a wrong input, and silent
// continuation would poison every downstream exact computation.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

[[noreturn]] inline void require_fail(const char* expr, const char* file, int line,
                                      const std::string& msg) {
    std::ostringstream os;
    os << "invariant violated: " << expr;
    if (!msg.empty()) os << " — " << msg;
    os << " [" << file << ":" << line << "]";
    throw invariant_error(os.str());
}

} // namespace deodhar

#define DEODHAR_REQUIRE(cond, msg)                                                   \
    do {                                                                             \
        if (!(cond)) ::deodhar::require_fail(#cond, __FILE__, __LINE__, (msg));      \
    } while (0)
