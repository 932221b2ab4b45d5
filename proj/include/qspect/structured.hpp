#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qspect/qmatrix.hpp"

namespace qspect {

/// Finitely supported vector on l2(N, H).
struct SparseVector {
  std::vector<std::size_t> support;
  std::vector<Quaternion> values;

  std::size_t max_index() const;
  double norm() const;
  QVector dense(std::size_t n) const;
};

/// Eventually constant diagonal: entries prefix[0..m) then limit forever.
struct DiagonalSpec {
  std::vector<Quaternion> prefix;
  Quaternion limit;
};

/// Finite rank patch F phi = sum_p u_p <v_p|phi> with finitely
/// supported u_p, v_p.
struct FiniteRankPatch {
  struct Pair {
    SparseVector u;
    SparseVector v;
  };
  std::vector<Pair> pairs;

  std::size_t max_index() const;
};

/// Symbolic element of the operator algebra generated on l2(N, H) by
/// the unilateral shift S (subdiagonal ones), its adjoint S', the
/// identity, eventually constant diagonals and finite rank patches,
/// closed under +, * and integer powers.  Scalars are stored as
/// constant diagonals, so every tree is built from the five atoms.
///
/// Every instance carries computable lower/upper band widths and a
/// stabilization index beyond which the entries are Toeplitz with
/// constant diagonals; truncations are assembled exactly from the tree.
class StructuredOperator {
 public:
  enum class Kind { Shift, AdjointShift, Identity, Diagonal, FiniteRank, Sum, Product };

  static StructuredOperator shift();
  static StructuredOperator adjoint_shift();
  static StructuredOperator identity();
  static StructuredOperator diagonal(DiagonalSpec spec);
  static StructuredOperator finite_rank(FiniteRankPatch patch);
  static StructuredOperator scalar(const Quaternion& q);  // Diagonal with limit q

  friend StructuredOperator operator+(const StructuredOperator& a, const StructuredOperator& b);
  friend StructuredOperator operator-(const StructuredOperator& a, const StructuredOperator& b);
  friend StructuredOperator operator*(const StructuredOperator& a, const StructuredOperator& b);
  StructuredOperator pow(unsigned n) const;

  Kind kind() const;
  const std::vector<StructuredOperator>& children() const;
  const DiagonalSpec& diagonal_spec() const;      // Kind::Diagonal only
  const FiniteRankPatch& finite_rank_patch() const;  // Kind::FiniteRank only

  /// Lower / upper band widths: entries vanish outside
  /// j - upper <= i <= j + lower (away from finite rank patches, which
  /// are absorbed into the bounds through their support box).
  int lower_band() const;
  int upper_band() const;

  /// Index beyond which all diagonals are constant.
  std::size_t stabilization_index() const;

  /// Exact rows x cols top-left corner of the infinite matrix.  Throws
  /// TruncationError when the requested size cannot hold the
  /// non-stabilized part plus band widths.
  QMatrix truncate(std::size_t rows, std::size_t cols) const;

  /// Unchecked truncation of any size (used internally and by tests).
  QMatrix truncate_unchecked(std::size_t rows, std::size_t cols) const;

  StructuredOperator adjoint() const;

  /// Structural compactness: finite rank patches and zero-limit
  /// diagonals are compact, sums of compacts are compact, and a product
  /// is compact when any factor is.
  bool is_compact() const;

  /// Certified upper bound on the operator norm (triangle and
  /// submultiplicative estimates over the tree).
  double norm_bound() const;

  /// True when the tree is a product of atoms (powers allowed, no sums
  /// above atom level).
  bool is_atom_product() const;

  /// R_q(T) = T^2 - 2 Re(q) T + |q|^2 I as a structured expression.
  StructuredOperator pseudo_resolvent(const Quaternion& q) const;

  std::string to_string() const;

 private:
  struct Node;
  explicit StructuredOperator(std::shared_ptr<const Node> node);
  static StructuredOperator make_atom(Kind kind, DiagonalSpec diag, FiniteRankPatch patch);
  std::shared_ptr<const Node> node_;
};

}  // namespace qspect
