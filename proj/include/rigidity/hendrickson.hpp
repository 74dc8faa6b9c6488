#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/framework.hpp"

namespace rigidity {

// Outcome of the necessary-condition checks for generic global rigidity:
// k-connectivity plus redundant rigidity. These are necessary conditions
// only; the verdict never claims global rigidity except for the small
// complete graphs, where equivalence and congruence coincide.
struct GlobalRigidityVerdict {
    enum class Verdict { FailsNecessary, PassesNecessary, TriviallyGloballyRigid };

    bool connectivity_ok = false;
    int required_k = 0;
    bool redundancy_ok = false;
    bool small_complete_exception = false;
    Verdict verdict = Verdict::FailsNecessary;
    std::optional<std::string> conjecture_note;
    std::vector<std::string> notes;

    friend bool operator==(const GlobalRigidityVerdict&, const GlobalRigidityVerdict&) = default;
};

const char* verdict_name(GlobalRigidityVerdict::Verdict v);
GlobalRigidityVerdict::Verdict verdict_from_name(const std::string& name);

// Checks the necessary conditions on `trials` sampled configurations.
// Complete graphs below the theorems' vertex thresholds short-circuit to
// trivially_globally_rigid; graphs on fewer than four vertices skip the
// connectivity requirement (flagged in the notes).
GlobalRigidityVerdict check_necessary_conditions(const Graph& g, const Surface& s, int trials,
                                                 std::uint64_t seed);

}  // namespace rigidity
