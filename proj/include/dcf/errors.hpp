#pragma once

#include <stdexcept>
#include <string>

namespace dcf {

struct OverdampedRegime : std::domain_error {
    explicit OverdampedRegime(const std::string& what) : std::domain_error(what) {}
};

struct NonpositiveEnergy : std::domain_error {
    explicit NonpositiveEnergy(const std::string& what) : std::domain_error(what) {}
};

struct CollisionSingularity : std::domain_error {
    explicit CollisionSingularity(const std::string& what) : std::domain_error(what) {}
};

struct FrameMismatch : std::logic_error {
    explicit FrameMismatch(const std::string& what) : std::logic_error(what) {}
};

struct BranchAmbiguity : std::domain_error {
    explicit BranchAmbiguity(const std::string& what) : std::domain_error(what) {}
};

struct OriginSingularity : std::domain_error {
    explicit OriginSingularity(const std::string& what) : std::domain_error(what) {}
};

// A Pochhammer zero in a denominator that survives symbolic cancellation.
struct NonCancellableSingularity : std::domain_error {
    explicit NonCancellableSingularity(const std::string& what) : std::domain_error(what) {}
};

struct NoBoundState : std::runtime_error {
    explicit NoBoundState(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dcf
