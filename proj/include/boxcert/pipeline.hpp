#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxcert/closure.hpp"
#include "boxcert/geometry.hpp"
#include "boxcert/reducer.hpp"
#include "boxcert/trail.hpp"

namespace boxcert {

struct ClaimedSide {
  Axis axis = 1;
  Rat length;

  friend bool operator==(const ClaimedSide&, const ClaimedSide&) = default;
};

/// Everything needed to replay one run of the certify pipeline.
struct Certificate {
  std::string partition_sha256;
  GeneratorSet gens;
  Rat bound;
  AxisAssignment assignment;
  Trail trail;
  YSequence y;
  ReductionCertificate reduction;
  ClaimedSide claimed;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOptions {
  std::optional<Rat> bound;   // defaults to the largest outer extent
  std::optional<Point> start;  // defaults to outer.lo
};

/// validate -> closure -> assign_axes -> build_graph -> parity_audit ->
/// extract_trail -> project_to_axis -> reduce.
///
/// Throws InvalidPartition, HypothesisViolated, or an InvariantFailure
/// subclass (ParityViolation, StuckAtEvenVertex, ZigzagIndexMissing); each
/// carries the name of the failing stage.
Certificate certify(const Partition& p, const GeneratorSet& gens, const CertifyOptions& options = {});

struct CheckResult {
  bool ok = false;
  std::vector<std::string> reasons;  // "stage: reason"
};

/// Revalidates every recorded stage against the partition and generators
/// without trusting any derived field. Never throws.
CheckResult check_certificate(const Certificate& cert, const Partition& p, const GeneratorSet& gens);

/// Default closure bound for a partition: its largest outer extent.
Rat default_bound(const Partition& p);

}  // namespace boxcert
