#pragma once

#include <functional>
#include <vector>

#include "boxcert/closure.hpp"
#include "boxcert/trail.hpp"

namespace boxcert {

/// One rewrite of the point sequence. Indices are 1-based positions in the
/// sequence as it stood just before the step was applied.
///
///  - Loop:   Y_i == Y_j (i < j); points Y_{i+1}..Y_j are deleted.
///  - Sum:    Y_i lies in the closed segment [Y_{i-1}, Y_{i+1}]; the two
///            steps around Y_i become one step of their summed length.
///  - Triple: strict zigzag; i is the smallest index > 2 whose outgoing step
///            is longer than its incoming one; Y_{i-1} and Y_i are deleted.
struct RewriteStep {
  enum class Kind { Loop, Sum, Triple };

  Kind kind = Kind::Loop;
  std::size_t i = 0;
  std::size_t j = 0;         // Loop only
  std::vector<Rat> lengths;  // step lengths consumed, in sequence order
  Rat merged;                // replacement step length; zero for Loop

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

const char* to_string(RewriteStep::Kind kind);

struct ReductionCertificate {
  YSequence input;
  std::vector<RewriteStep> steps;
  Rat result;
  Derivation derivation;

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

/// Supplies the derivation for an original step length.
using LeafDerivation = std::function<Derivation(const Rat&)>;

/// Throws InvalidArgument when y is malformed.
void check_y_sequence(const YSequence& y);

/// Rewrites the sequence down to [0, length] with priority
/// Loop > Sum > Triple, building the derivation alongside. Throws
/// ZigzagIndexMissing (or InvariantFailure) if the geometric facts the
/// rewrite relies on ever fail.
ReductionCertificate reduce(const YSequence& y, const LeafDerivation& leaf);

/// Independently re-executes every step on the stored input, checking each
/// step's precondition and canonical index choice, then verifies the
/// derivation against `gens`. Throws ReplayMismatch on any discrepancy.
Rat replay(const ReductionCertificate& cert, const GeneratorSet& gens);

}  // namespace boxcert
