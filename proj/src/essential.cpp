#include "qspect/essential.hpp"

#include "qspect/errors.hpp"

namespace qspect {

EssentialVerdict is_fredholm_at(const StructuredOperator& t, const Quaternion& q) {
  EssentialVerdict v;
  v.cls = sphere_rep(q);
  v.data = fredholm_data(t.pseudo_resolvent(q));
  v.in_sigma_e = v.data.status != FredholmStatus::Fredholm;
  v.left_only = v.data.status == FredholmStatus::LeftSemiOnly;
  v.right_only = v.data.status == FredholmStatus::RightSemiOnly;
  if (!v.in_sigma_e) {
    const bool invertible = v.data.dim_ker == 0 && v.data.dim_coker == 0;
    if (invertible)
      v.resolvent = true;
    else
      v.k = v.data.index;
  }
  return v;
}

Partition sigma_partition_at(const StructuredOperator& t, const Quaternion& q) {
  const EssentialVerdict v = is_fredholm_at(t, q);
  Partition p;
  if (v.in_sigma_e) {
    p.kind = PartitionKind::Essential;
  } else if (v.resolvent) {
    p.kind = PartitionKind::Resolvent;
  } else {
    p.kind = PartitionKind::SigmaK;
    p.k = v.k.value_or(0);
  }
  return p;
}

EssentialComparison compare_essential(const StructuredOperator& t, const StructuredOperator& k,
                                      const std::vector<Quaternion>& samples) {
  if (!k.is_compact())
    throw NonCompactPerturbation("compare_essential: perturbation is not compact");
  const StructuredOperator perturbed = t + k;
  EssentialComparison report;
  for (const auto& q : samples) {
    const bool base = is_fredholm_at(t, q).in_sigma_e;
    const bool pert = is_fredholm_at(perturbed, q).in_sigma_e;
    ++report.samples;
    if (base == pert)
      ++report.agreements;
    else
      report.disagreements.push_back({q, base, pert});
  }
  return report;
}

}  // namespace qspect
