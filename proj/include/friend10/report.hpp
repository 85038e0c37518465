#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace friend10 {

// Outcome of a pointwise verification sweep. A violation is a result,
// not an exception: sweeps run to completion and keep the first failure
// for diagnostics.
struct VerifyReport {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::optional<std::string> first_violation;

    bool ok() const { return violations == 0; }

    void record_failure(std::string message) {
        ++violations;
        if (!first_violation) first_violation = std::move(message);
    }

    void merge(const VerifyReport& other) {
        checks += other.checks;
        violations += other.violations;
        if (!first_violation && other.first_violation) first_violation = other.first_violation;
    }
};

}  // namespace friend10
