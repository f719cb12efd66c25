#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace nullflat {

/// Mathematical degeneracies, as opposed to malformed input. The command
/// line tool reports these with exit code 2 and a machine-readable code;
/// malformed input surfaces as std::invalid_argument and exit code 1.
enum class Degeneracy {
    NonPositiveRadicand,    // jet square root at a value <= 0
    DegenerateDelta,        // speed radical has an isolated zero at tau
    SigmaNotMonotone,       // |sigma'(tau)| below the monotonicity floor
    DegenerateGerm,         // inversion divisor below eps_den
    IdenticallyDegenerate,  // exact engine: inversion divisor is the zero polynomial
    DegenerateInterval,     // planning interval has zero length
};

/// Stable identifier used in error objects and messages.
const char* degeneracy_code(Degeneracy kind) noexcept;

class DegeneracyError : public std::runtime_error {
public:
    DegeneracyError(Degeneracy kind, const std::string& message,
                    std::optional<double> tau = std::nullopt);

    Degeneracy kind() const noexcept { return kind_; }
    const char* code() const noexcept { return degeneracy_code(kind_); }
    std::optional<double> tau() const noexcept { return tau_; }

    /// Same error annotated with the sample location that produced it.
    DegeneracyError at_tau(double tau) const;

private:
    Degeneracy kind_;
    std::optional<double> tau_;
};

}  // namespace nullflat
