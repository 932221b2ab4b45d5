#include "qspect/fredholm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "qspect/errors.hpp"

namespace qspect {

namespace {

/// Quaternionic count of singular values below delta * sigma_max on a
/// truncation, plus the relative gap above the cutoff.  Returns count
/// -1 when the complex count is odd (paired singular values split by
/// rounding: treat as non-stabilized) or the truncation is zero.
std::pair<int, double> count_and_gap(const QMatrix& m, double delta) {
  const Eigen::MatrixXcd c = chi(m);
  const Eigen::MatrixXcd gram = c.adjoint() * c;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericalError("kernel_dims_oracle: eigensolver did not converge");
  const Eigen::VectorXd ev = es.eigenvalues();  // ascending
  std::vector<double> sv(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    sv[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, ev(i)));
  const double top = sv.empty() ? 0.0 : sv.back();
  if (top <= 0.0) return {-1, 0.0};
  const double cutoff = delta * top;
  int count = 0;
  double gap = 0.0;
  for (double s : sv) {
    if (s < cutoff) {
      ++count;
    } else {
      gap = s / top;
      break;
    }
  }
  if (count % 2 != 0) return {-1, gap};
  return {count / 2, gap};
}

struct SideProbe {
  StructuredOperator op;  // operator whose kernel is probed
  std::map<std::size_t, std::pair<int, double>> cache;

  std::pair<int, double> at(std::size_t n, double delta) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const auto p = static_cast<std::size_t>(op.lower_band());
    const auto r = count_and_gap(op.truncate_unchecked(n + p, n), delta);
    cache.emplace(n, r);
    return r;
  }
};

OracleSide run_side(SideProbe& probe, const std::vector<std::size_t>& sizes, double delta) {
  OracleSide side;
  for (std::size_t n : sizes) {
    const auto [count, gap] = probe.at(n, delta);
    side.counts.push_back(count);
    side.gap_rel.push_back(gap);
    // A mismatch can never stabilize; skip the remaining (larger) sizes.
    if (count < 0 || count != side.counts.front()) return side;
  }
  side.stabilized = side.counts.front() >= 0;
  if (side.stabilized) side.dim = side.counts.front();
  return side;
}

}  // namespace

bool OracleSide::gap_ok(double floor_rel, double decay_ratio) const {
  if (gap_rel.empty()) return false;
  for (double g : gap_rel)
    if (g < floor_rel) return false;
  return gap_rel.back() >= decay_ratio * gap_rel.front();
}

KernelDims kernel_dims_oracle(const StructuredOperator& t, double delta) {
  if (delta <= 0.0) throw DimensionError("kernel_dims_oracle: delta must be positive");
  const std::size_t need =
      t.stabilization_index() + static_cast<std::size_t>(t.lower_band() + t.upper_band());
  std::size_t base = 64;
  while (base < need) base *= 2;

  SideProbe ker_probe{t, {}};
  SideProbe coker_probe{t.adjoint(), {}};

  KernelDims out;
  for (int ladder = 0; ladder < 3; ++ladder) {
    const std::size_t b = base << ladder;
    const std::vector<std::size_t> sizes{b, b + b / 2, 2 * b};
    out.sizes = sizes;
    out.ker = run_side(ker_probe, sizes, delta);
    out.coker = run_side(coker_probe, sizes, delta);
    out.stabilized = out.ker.stabilized && out.coker.stabilized;
    if (out.stabilized) break;
  }
  return out;
}

namespace {

/// Structural approximate inverse of a product of atoms.  Throws
/// NotFredholm for compact factors (zero-limit diagonals, finite rank).
StructuredOperator parametrix_expr(const StructuredOperator& t) {
  using Kind = StructuredOperator::Kind;
  switch (t.kind()) {
    case Kind::Shift:
      return StructuredOperator::adjoint_shift();
    case Kind::AdjointShift:
      return StructuredOperator::shift();
    case Kind::Identity:
      return StructuredOperator::identity();
    case Kind::Diagonal: {
      const auto& d = t.diagonal_spec();
      if (d.limit.is_zero())
        throw NotFredholm("parametrix: diagonal with zero limit is compact, not Fredholm");
      DiagonalSpec inv;
      for (const auto& q : d.prefix)
        inv.prefix.push_back(q.is_zero() ? Quaternion{} : qinv(q));
      inv.limit = qinv(d.limit);
      return StructuredOperator::diagonal(std::move(inv));
    }
    case Kind::Product: {
      const auto& cs = t.children();
      StructuredOperator out = parametrix_expr(cs.back());
      for (std::size_t i = cs.size() - 1; i-- > 0;) out = out * parametrix_expr(cs[i]);
      return out;
    }
    default:
      throw UnsupportedShape("parametrix: expected a product of atoms");
  }
}

std::optional<int> atom_index(const StructuredOperator& t) {
  using Kind = StructuredOperator::Kind;
  switch (t.kind()) {
    case Kind::Shift:
      return -1;
    case Kind::AdjointShift:
      return 1;
    case Kind::Identity:
      return 0;
    case Kind::Diagonal:
      // Zero prefix entries add equal kernel and cokernel dimensions;
      // a zero limit makes the operator compact (not Fredholm).
      return t.diagonal_spec().limit.is_zero() ? std::nullopt : std::optional<int>(0);
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<int> index_symbolic(const StructuredOperator& t) {
  using Kind = StructuredOperator::Kind;
  switch (t.kind()) {
    case Kind::Shift:
    case Kind::AdjointShift:
    case Kind::Identity:
    case Kind::Diagonal:
      return atom_index(t);
    case Kind::FiniteRank:
      return std::nullopt;  // compact, not Fredholm by itself
    case Kind::Product: {
      int acc = 0;
      for (const auto& c : t.children()) {
        const auto idx = index_symbolic(c);
        if (!idx) return std::nullopt;
        acc += *idx;
      }
      return acc;
    }
    case Kind::Sum: {
      // Drop compact summands (index invariance under compact
      // perturbation), then look for one dominant Fredholm term with
      // the remainder below its invertibility margin.
      std::vector<StructuredOperator> principal;
      for (const auto& c : t.children())
        if (!c.is_compact()) principal.push_back(c);
      if (principal.empty()) return std::nullopt;  // sum is compact
      if (principal.size() == 1) return index_symbolic(principal.front());

      for (std::size_t lead = 0; lead < principal.size(); ++lead) {
        const auto idx = index_symbolic(principal[lead]);
        if (!idx || !principal[lead].is_atom_product()) continue;
        double margin;
        try {
          margin = 1.0 / parametrix_expr(principal[lead]).norm_bound();
        } catch (const NotFredholm&) {
          continue;
        }
        double rest = 0.0;
        for (std::size_t j = 0; j < principal.size(); ++j)
          if (j != lead) rest += principal[j].norm_bound();
        if (rest < margin) return idx;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

FredholmData fredholm_data(const StructuredOperator& t) {
  FredholmData d;
  if (t.is_compact()) {
    // Compact operators on an infinite-dimensional space never have
    // closed range with finite codimension; skip the (never
    // stabilizing) oracle ladder.
    d.status = FredholmStatus::Neither;
    d.method = FredholmMethod::Symbolic;
    return d;
  }

  d.oracle = kernel_dims_oracle(t);
  const std::optional<int> sym = index_symbolic(t);

  const bool left_ok = d.oracle.ker.stabilized && d.oracle.ker.gap_ok();
  const bool right_ok = d.oracle.coker.stabilized && d.oracle.coker.gap_ok();

  if (left_ok && right_ok) {
    d.dim_ker = d.oracle.ker.dim;
    d.dim_coker = d.oracle.coker.dim;
    d.status = FredholmStatus::Fredholm;
    d.index = d.dim_ker - d.dim_coker;
    if (sym) {
      if (*sym != *d.index)
        throw ConflictError("fredholm_data: symbolic index " + std::to_string(*sym) +
                            " disagrees with stabilized oracle index " +
                            std::to_string(*d.index));
      d.method = FredholmMethod::BothAgree;
    } else {
      d.method = FredholmMethod::Oracle;
    }
    return d;
  }

  if (sym) {
    // The symbolic laws certify Fredholmness even when the oracle
    // ladder gave up; dims stay unknown (-1) on the unstabilized side.
    d.status = FredholmStatus::Fredholm;
    d.index = *sym;
    d.method = FredholmMethod::Symbolic;
    d.dim_ker = left_ok ? d.oracle.ker.dim : -1;
    d.dim_coker = right_ok ? d.oracle.coker.dim : -1;
    if (d.dim_ker >= 0 && d.dim_coker < 0) d.dim_coker = d.dim_ker - *sym;
    if (d.dim_coker >= 0 && d.dim_ker < 0) d.dim_ker = d.dim_coker + *sym;
    return d;
  }

  if (left_ok) {
    d.status = FredholmStatus::LeftSemiOnly;
    d.dim_ker = d.oracle.ker.dim;
  } else if (right_ok) {
    d.status = FredholmStatus::RightSemiOnly;
    d.dim_coker = d.oracle.coker.dim;
  } else {
    d.status = FredholmStatus::Neither;
  }
  d.method = FredholmMethod::Oracle;
  return d;
}

ParametrixResult parametrix(const StructuredOperator& t) {
  if (!t.is_atom_product()) throw UnsupportedShape("parametrix: expected a product of atoms");
  const FredholmData d = fredholm_data(t);
  if (d.status != FredholmStatus::Fredholm)
    throw NotFredholm("parametrix: operator is not Fredholm");

  StructuredOperator p = parametrix_expr(t);
  const StructuredOperator id = StructuredOperator::identity();
  const StructuredOperator r_st = p * t - id;
  const StructuredOperator r_ts = t * p - id;

  std::size_t block = 0;
  for (const auto& r : {r_st, r_ts})
    block = std::max(block, r.stabilization_index() +
                                static_cast<std::size_t>(r.lower_band() + r.upper_band()));

  ParametrixResult out{p};
  out.block = block;
  const std::size_t check = 2 * block + 8;
  const QMatrix m_st = r_st.truncate_unchecked(check, check);
  const QMatrix m_ts = r_ts.truncate_unchecked(check, check);
  auto scan_residual = [&](const QMatrix& m, double& inside) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const double a = m.at(i, j).norm();
        if (i < block && j < block)
          inside = std::max(inside, a);
        else
          out.max_outside = std::max(out.max_outside, a);
      }
  };
  scan_residual(m_st, out.max_residual_st);
  scan_residual(m_ts, out.max_residual_ts);
  if (out.max_outside > 1e-8)
    throw NumericalError("parametrix: residual leaks outside the certified block");
  return out;
}

bool is_weyl(const StructuredOperator& t) {
  const FredholmData d = fredholm_data(t);
  return d.status == FredholmStatus::Fredholm && d.index && *d.index == 0;
}

}  // namespace qspect
