#include "coupled_fp/report.hpp"

namespace coupled_fp {

std::string_view to_string(ConditionId id) {
  switch (id) {
    case ConditionId::banach_k: return "banach_k";
    case ConditionId::samet_mk: return "samet_mk";
    case ConditionId::symmetric_mk: return "symmetric_mk";
    case ConditionId::strict_contraction: return "strict_contraction";
    case ConditionId::mixed_monotone: return "mixed_monotone";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_on_samples: return "holds_on_samples";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(Basis b) { return b == Basis::exhaustive ? "exhaustive" : "sampled"; }

}  // namespace coupled_fp
