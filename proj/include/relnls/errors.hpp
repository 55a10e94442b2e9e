#pragma once

#include <stdexcept>
#include <string>

namespace relnls {

// Thrown by formal_integrate in strict mode when the argument is not a total
// x-derivative of a local differential polynomial.
struct NotExactDerivative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |psi| dips below the admissible fraction of its maximum on the window.
struct NearZeroAmplitude : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Backlund denominator vanishes on the requested window.
struct SingularLocus : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShockReached : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoBracket : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoalescedVortices : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootTrackingAmbiguous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StabilityGuard : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlowUp : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace relnls
