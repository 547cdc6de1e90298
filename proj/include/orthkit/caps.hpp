#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace orthkit {

// Raised when an operation's declared precondition is violated by the caller.
struct InvalidArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an input exceeds a documented size cap for an exhaustive routine.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on malformed textual input; carries the offending 1-based line number
// (0 when no single line is to blame).
struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                         : msg),
          line(line_no) {}
};

// Size caps for the exhaustive routines.  The environment variable
// ORTHKIT_MAX_N, when set to a positive integer, replaces every cap; this is
// an escape hatch for callers who accept the runtime cost.
struct Caps {
    int isomorphism = 12;     // is_isomorphic
    int bruteforce = 9;       // bruteforce_layout (number of leaves)
    int subdivision = 64;     // contains_subdivision / is_planar (host order)
    int root = 512;           // root_graph (order of the input graph)
};

inline Caps default_caps() {
    Caps caps;
    if (const char* env = std::getenv("ORTHKIT_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            caps.isomorphism = caps.bruteforce = caps.subdivision = caps.root = static_cast<int>(v);
        }
    }
    return caps;
}

}  // namespace orthkit
