#include "hyperlab/verdict.hpp"

#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::EvidenceHypercyclic:
            return "EVIDENCE_HYPERCYCLIC";
        case Verdict::Violated:
            return "VIOLATED";
        case Verdict::UndeterminedAtHorizon:
            return "UNDETERMINED_AT_HORIZON";
    }
    return "UNDETERMINED_AT_HORIZON";
}

Verdict verdict_from_string(std::string_view s) {
    for (Verdict v : {Verdict::EvidenceHypercyclic, Verdict::Violated, Verdict::UndeterminedAtHorizon}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    throw InputError("unknown verdict '" + std::string(s) + "'");
}

}  // namespace hyperlab
