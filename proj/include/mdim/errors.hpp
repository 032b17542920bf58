#ifndef MDIM_ERRORS_HPP
#define MDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mdim {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A (di)graph violates a structural invariant (bad endpoint, parallel
/// edge, forbidden self-loop).
struct invalid_graph_error : error {
    using error::error;
};

/// Edge-list file could not be parsed; `line` is 1-based, 0 if unknown.
struct parse_error : error {
    int line;
    parse_error(const std::string& msg, int line_no = 0)
        : error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

/// Operation needs a (strongly) connected input and got one that is not.
struct disconnected_error : error {
    using error::error;
};

/// Instance exceeds the exhaustive-search size cap.
struct cap_exceeded_error : error {
    using error::error;
};

/// Parameters fall outside the range an operation supports.
struct unsupported_error : error {
    using error::error;
};

} // namespace mdim

#endif // MDIM_ERRORS_HPP
