#include "nullflat/errors.hpp"

namespace nullflat {

const char* degeneracy_code(Degeneracy kind) noexcept {
    switch (kind) {
        case Degeneracy::NonPositiveRadicand: return "NonPositiveRadicand";
        case Degeneracy::DegenerateDelta: return "DegenerateDelta";
        case Degeneracy::SigmaNotMonotone: return "SigmaNotMonotone";
        case Degeneracy::DegenerateGerm: return "DegenerateGerm";
        case Degeneracy::IdenticallyDegenerate: return "IdenticallyDegenerate";
        case Degeneracy::DegenerateInterval: return "DegenerateInterval";
    }
    return "UnknownDegeneracy";
}

DegeneracyError::DegeneracyError(Degeneracy kind, const std::string& message,
                                 std::optional<double> tau)
    : std::runtime_error(std::string(degeneracy_code(kind)) + ": " + message),
      kind_(kind),
      tau_(tau) {}

DegeneracyError DegeneracyError::at_tau(double tau) const {
    std::string message = what();
    const std::string prefix = std::string(code()) + ": ";
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    return DegeneracyError(kind_, message, tau);
}

}  // namespace nullflat
