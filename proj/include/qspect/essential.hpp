#pragma once

#include <optional>
#include <vector>

#include "qspect/fredholm.hpp"
#include "qspect/structured.hpp"

namespace qspect {

/// Atkinson-style verdict at one sphere class: q is in the essential
/// S-spectrum exactly when R_q(T) fails to be Fredholm.  When R_q(T) is
/// Fredholm, `k` carries its index if q lies in the S-spectrum (R_q not
/// invertible) and stays empty on the resolvent set.
struct EssentialVerdict {
  SphereClass cls{0.0, 0.0};
  bool in_sigma_e = false;
  bool left_only = false;   // left semi-Fredholm but not Fredholm
  bool right_only = false;  // right semi-Fredholm but not Fredholm
  std::optional<int> k;
  bool resolvent = false;   // R_q(T) certified invertible
  FredholmData data;        // underlying evidence for R_q(T)
};

EssentialVerdict is_fredholm_at(const StructuredOperator& t, const Quaternion& q);

enum class PartitionKind { Resolvent, Essential, SigmaK };

struct Partition {
  PartitionKind kind = PartitionKind::Essential;
  int k = 0;  // meaningful when kind == SigmaK
};

/// Splits a sample point into resolvent set, essential S-spectrum, or
/// the index layer sigma_k.  Invertibility of R_q(T) is certified by
/// stabilized oracle dims (0, 0) with the truncation gap bounded below
/// and non-decaying across sizes.
Partition sigma_partition_at(const StructuredOperator& t, const Quaternion& q);

struct EssentialComparison {
  struct Disagreement {
    Quaternion q;
    bool base_in_sigma_e = false;
    bool perturbed_in_sigma_e = false;
  };
  int samples = 0;
  int agreements = 0;
  std::vector<Disagreement> disagreements;
};

/// Checks invariance of the essential S-spectrum under a compact
/// perturbation: for every sample q the verdicts for T and T + K must
/// coincide.  Throws NonCompactPerturbation when K is not compact in
/// the structured sense.
EssentialComparison compare_essential(const StructuredOperator& t, const StructuredOperator& k,
                                      const std::vector<Quaternion>& samples);

}  // namespace qspect
