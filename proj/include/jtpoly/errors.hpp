#ifndef JTPOLY_ERRORS_HPP
#define JTPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jtpoly {

// Invalid or inadmissible input: bad JSON, malformed families, parameters
// outside the mode an operation requires. CLI exit code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A quantity the theory requires to be finite/nonzero degenerated: a vanishing
// quasi-Casoratian, a pole surviving the epsilon limit, a divergent continued
// integral. CLI exit code 2.
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// A checked structural property failed (orthogonality, banding, measure fit).
// CLI exit code 3.
struct PropertyViolation : std::runtime_error {
    explicit PropertyViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jtpoly

#endif
