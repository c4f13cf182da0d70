#pragma once

#include <string_view>

namespace idealis {

/// Three-valued answer of a finite-stage evaluator.
///
/// Contract: refining the point prefix or raising a stage bound may turn
/// InsufficientData into a decisive answer, but never turns HoldsAtStage into
/// FailsAtStage or back.
enum class Tri { HoldsAtStage, FailsAtStage, InsufficientData };

constexpr std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::HoldsAtStage: return "HoldsAtStage";
    case Tri::FailsAtStage: return "FailsAtStage";
    case Tri::InsufficientData: return "InsufficientData";
  }
  return "InsufficientData";
}

constexpr bool decisive(Tri t) { return t != Tri::InsufficientData; }

/// True when going from `before` to `after` respects the refinement contract.
constexpr bool refines(Tri before, Tri after) {
  return !(decisive(before) && decisive(after) && before != after);
}

/// Kleene disjunction.
constexpr Tri tri_or(Tri a, Tri b) {
  if (a == Tri::HoldsAtStage || b == Tri::HoldsAtStage) return Tri::HoldsAtStage;
  if (a == Tri::FailsAtStage && b == Tri::FailsAtStage) return Tri::FailsAtStage;
  return Tri::InsufficientData;
}

/// Kleene conjunction.
constexpr Tri tri_and(Tri a, Tri b) {
  if (a == Tri::FailsAtStage || b == Tri::FailsAtStage) return Tri::FailsAtStage;
  if (a == Tri::HoldsAtStage && b == Tri::HoldsAtStage) return Tri::HoldsAtStage;
  return Tri::InsufficientData;
}

}  // namespace idealis
