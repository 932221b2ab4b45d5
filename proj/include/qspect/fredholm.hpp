#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "qspect/structured.hpp"

namespace qspect {

/// One side (kernel or cokernel) of the truncation oracle: the count of
/// singular values below the relative cutoff at each ladder size, and
/// the relative gap above the cutoff (smallest retained singular value
/// divided by the largest).
struct OracleSide {
  std::vector<int> counts;
  std::vector<double> gap_rel;
  int dim = -1;            // meaningful when stabilized
  bool stabilized = false; // identical counts across the whole ladder

  /// Closed-range certificate: gap stays above the floor at every size
  /// and does not decay along the ladder (a decaying gap is the
  /// signature of spectrum touching zero in the limit, i.e. non-closed
  /// range that every finite truncation hides).
  bool gap_ok(double floor_rel = 1e-4, double decay_ratio = 0.75) const;
};

struct KernelDims {
  OracleSide ker;
  OracleSide coker;
  std::vector<std::size_t> sizes;  // ladder actually used
  bool stabilized = false;         // both sides stabilized
};

/// Estimates dim ker(T) and dim coker(T) from rectangular truncations.
/// The kernel side uses the (N + p) x N corner (p = lower band width) so
/// every column constraint is present; the cokernel side does the same
/// on the adjoint expression.  Counts must agree across a ladder of
/// three sizes to count as stabilized; the ladder escalates up to
/// N = 512 before giving up.
KernelDims kernel_dims_oracle(const StructuredOperator& t, double delta = 1e-6);

/// Symbolic index by rewriting: atoms have known indices, products add
/// them, compact summands are dropped, and a sum dominated by one
/// principal term with the rest below its invertibility margin keeps the
/// principal's index.  Unmatched patterns yield std::nullopt
/// (undecidable), as does any tree that is itself compact.
std::optional<int> index_symbolic(const StructuredOperator& t);

enum class FredholmStatus { Fredholm, LeftSemiOnly, RightSemiOnly, Neither };
enum class FredholmMethod { Symbolic, Oracle, BothAgree };

struct FredholmData {
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  int dim_ker = kInfinite;    // kInfinite encodes "infinite/unbounded"
  int dim_coker = kInfinite;
  std::optional<int> index;   // defined iff status == Fredholm
  FredholmStatus status = FredholmStatus::Neither;
  FredholmMethod method = FredholmMethod::Oracle;
  KernelDims oracle;          // raw oracle evidence
};

/// Combines the symbolic rules with the truncation oracle.  Throws
/// ConflictError when both produce definite answers that disagree: that
/// is an implementation bug, never silently resolved.
FredholmData fredholm_data(const StructuredOperator& t);

struct ParametrixResult {
  StructuredOperator approx_inverse;
  std::size_t block = 0;        // residuals live in the top-left block
  double max_residual_st = 0;   // max entry of P*T - I outside nothing / inside block
  double max_residual_ts = 0;   // max entry of T*P - I
  double max_outside = 0;       // max entry outside the certified block
};

/// Structural approximate inverse for products of atoms: shifts swap,
/// diagonals invert entrywise (pseudo-inverse over zero entries), and
/// factors compose in reverse.  Both residuals P*T - I and T*P - I are
/// finite rank, verified on truncations.  Throws NotFredholm when the
/// operator is not Fredholm and UnsupportedShape when the tree is not a
/// product of atoms.
ParametrixResult parametrix(const StructuredOperator& t);

/// Fredholm with index zero.
bool is_weyl(const StructuredOperator& t);

}  // namespace qspect
