#pragma once

#include <string_view>

namespace hyperlab {

// Asymptotic conditions checked at a finite horizon can only ever produce
// evidence or a violation inside the sampled data; everything else is
// reported as undetermined.
enum class Verdict {
    EvidenceHypercyclic,
    Violated,
    UndeterminedAtHorizon,
};

std::string_view to_string(Verdict v) noexcept;
Verdict verdict_from_string(std::string_view s);

}  // namespace hyperlab
