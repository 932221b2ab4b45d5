#include "qspect/structured.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qspect/errors.hpp"

namespace qspect {

std::size_t SparseVector::max_index() const {
  std::size_t m = 0;
  for (std::size_t s : support) m = std::max(m, s);
  return m;
}

double SparseVector::norm() const {
  double acc = 0.0;
  for (const auto& q : values) acc += q.norm_sq();
  return std::sqrt(acc);
}

QVector SparseVector::dense(std::size_t n) const {
  QVector out(n);
  for (std::size_t t = 0; t < support.size(); ++t)
    if (support[t] < n) out[support[t]] += values[t];
  return out;
}

std::size_t FiniteRankPatch::max_index() const {
  std::size_t m = 0;
  for (const auto& p : pairs) {
    if (!p.u.support.empty()) m = std::max(m, p.u.max_index());
    if (!p.v.support.empty()) m = std::max(m, p.v.max_index());
  }
  return m;
}

struct StructuredOperator::Node {
  Kind kind;
  std::vector<StructuredOperator> children;
  DiagonalSpec diag;
  FiniteRankPatch patch;

  int lower = 0;
  int upper = 0;
  std::size_t stab = 0;
};

StructuredOperator::StructuredOperator(std::shared_ptr<const StructuredOperator::Node> node)
    : node_(std::move(node)) {}

StructuredOperator::Kind StructuredOperator::kind() const { return node_->kind; }
const std::vector<StructuredOperator>& StructuredOperator::children() const {
  return node_->children;
}
const DiagonalSpec& StructuredOperator::diagonal_spec() const { return node_->diag; }
const FiniteRankPatch& StructuredOperator::finite_rank_patch() const { return node_->patch; }
int StructuredOperator::lower_band() const { return node_->lower; }
int StructuredOperator::upper_band() const { return node_->upper; }
std::size_t StructuredOperator::stabilization_index() const { return node_->stab; }

StructuredOperator StructuredOperator::make_atom(StructuredOperator::Kind kind, DiagonalSpec diag,
                                                 FiniteRankPatch patch) {
  auto node = std::make_shared<StructuredOperator::Node>();
  node->kind = kind;
  switch (kind) {
    case StructuredOperator::Kind::Shift:
      node->lower = 1;
      break;
    case StructuredOperator::Kind::AdjointShift:
      node->upper = 1;
      break;
    case StructuredOperator::Kind::Identity:
      break;
    case StructuredOperator::Kind::Diagonal:
      node->diag = std::move(diag);
      node->stab = node->diag.prefix.size();
      break;
    case StructuredOperator::Kind::FiniteRank: {
      node->patch = std::move(patch);
      const std::size_t m = node->patch.pairs.empty() ? 0 : node->patch.max_index();
      node->lower = node->upper = static_cast<int>(m);
      node->stab = m + 1;
      break;
    }
    default:
      throw UnsupportedShape("make_atom: not an atom kind");
  }
  return StructuredOperator(std::move(node));
}

StructuredOperator StructuredOperator::shift() { return make_atom(Kind::Shift, {}, {}); }
StructuredOperator StructuredOperator::adjoint_shift() {
  return make_atom(Kind::AdjointShift, {}, {});
}
StructuredOperator StructuredOperator::identity() { return make_atom(Kind::Identity, {}, {}); }
StructuredOperator StructuredOperator::diagonal(DiagonalSpec spec) {
  return make_atom(Kind::Diagonal, std::move(spec), {});
}
StructuredOperator StructuredOperator::finite_rank(FiniteRankPatch patch) {
  return make_atom(Kind::FiniteRank, {}, std::move(patch));
}
StructuredOperator StructuredOperator::scalar(const Quaternion& q) {
  return diagonal(DiagonalSpec{{}, q});
}

StructuredOperator operator+(const StructuredOperator& a, const StructuredOperator& b) {
  auto node = std::make_shared<StructuredOperator::Node>();
  node->kind = StructuredOperator::Kind::Sum;
  // Flatten nested sums for readable trees and simpler symbolic rules.
  for (const auto& t : {a, b}) {
    if (t.kind() == StructuredOperator::Kind::Sum)
      node->children.insert(node->children.end(), t.children().begin(), t.children().end());
    else
      node->children.push_back(t);
  }
  for (const auto& c : node->children) {
    node->lower = std::max(node->lower, c.lower_band());
    node->upper = std::max(node->upper, c.upper_band());
    node->stab = std::max(node->stab, c.stabilization_index());
  }
  return StructuredOperator(std::move(node));
}

StructuredOperator operator-(const StructuredOperator& a, const StructuredOperator& b) {
  return a + StructuredOperator::scalar(Quaternion(-1.0)) * b;
}

StructuredOperator operator*(const StructuredOperator& a, const StructuredOperator& b) {
  auto node = std::make_shared<StructuredOperator::Node>();
  node->kind = StructuredOperator::Kind::Product;
  for (const auto& t : {a, b}) {
    if (t.kind() == StructuredOperator::Kind::Product)
      node->children.insert(node->children.end(), t.children().begin(), t.children().end());
    else
      node->children.push_back(t);
  }
  std::size_t max_stab = 0;
  for (const auto& c : node->children) {
    node->lower += c.lower_band();
    node->upper += c.upper_band();
    max_stab = std::max(max_stab, c.stabilization_index());
  }
  // Entry (i, j) of the product only reads factor entries whose indices
  // stay within the total band width of i, so all diagonals are
  // constant once every factor is past its own stabilization index.
  node->stab = max_stab + static_cast<std::size_t>(node->lower + node->upper);
  return StructuredOperator(std::move(node));
}

StructuredOperator StructuredOperator::pow(unsigned n) const {
  StructuredOperator out = identity();
  for (unsigned t = 0; t < n; ++t) out = out * (*this);
  return out;
}

QMatrix StructuredOperator::truncate(std::size_t rows, std::size_t cols) const {
  const std::size_t need = stabilization_index() +
                           static_cast<std::size_t>(lower_band() + upper_band());
  if (rows < need || cols < need)
    throw TruncationError("truncate: size too small for the non-stabilized part");
  return truncate_unchecked(rows, cols);
}

QMatrix StructuredOperator::truncate_unchecked(std::size_t rows, std::size_t cols) const {
  switch (kind()) {
    case Kind::Shift: {
      QMatrix m(rows, cols);
      for (std::size_t j = 0; j < cols; ++j)
        if (j + 1 < rows) m.at(j + 1, j) = Quaternion::one();
      return m;
    }
    case Kind::AdjointShift: {
      QMatrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        if (i + 1 < cols) m.at(i, i + 1) = Quaternion::one();
      return m;
    }
    case Kind::Identity: {
      QMatrix m(rows, cols);
      for (std::size_t i = 0; i < std::min(rows, cols); ++i) m.at(i, i) = Quaternion::one();
      return m;
    }
    case Kind::Diagonal: {
      const auto& d = diagonal_spec();
      QMatrix m(rows, cols);
      for (std::size_t i = 0; i < std::min(rows, cols); ++i)
        m.at(i, i) = i < d.prefix.size() ? d.prefix[i] : d.limit;
      return m;
    }
    case Kind::FiniteRank: {
      QMatrix m(rows, cols);
      for (const auto& p : finite_rank_patch().pairs)
        for (std::size_t s = 0; s < p.u.support.size(); ++s)
          for (std::size_t t = 0; t < p.v.support.size(); ++t) {
            const std::size_t i = p.u.support[s];
            const std::size_t j = p.v.support[t];
            if (i < rows && j < cols) m.at(i, j) += p.u.values[s] * p.v.values[t].conj();
          }
      return m;
    }
    case Kind::Sum: {
      QMatrix m(rows, cols);
      for (const auto& c : children()) m = m + c.truncate_unchecked(rows, cols);
      return m;
    }
    case Kind::Product: {
      // Fold left to right; the inner dimension is padded by the left
      // factor's upper band so every contributing term is present.
      const auto& cs = children();
      std::function<QMatrix(std::size_t, std::size_t, std::size_t)> fold =
          [&](std::size_t idx, std::size_t r, std::size_t c) -> QMatrix {
        if (idx + 1 == cs.size()) return cs[idx].truncate_unchecked(r, c);
        const std::size_t k = r + static_cast<std::size_t>(cs[idx].upper_band());
        return cs[idx].truncate_unchecked(r, k) * fold(idx + 1, k, c);
      };
      return fold(0, rows, cols);
    }
  }
  throw UnsupportedShape("truncate: unknown node kind");
}

StructuredOperator StructuredOperator::adjoint() const {
  switch (kind()) {
    case Kind::Shift:
      return adjoint_shift();
    case Kind::AdjointShift:
      return shift();
    case Kind::Identity:
      return identity();
    case Kind::Diagonal: {
      DiagonalSpec d = diagonal_spec();
      for (auto& q : d.prefix) q = q.conj();
      d.limit = d.limit.conj();
      return diagonal(std::move(d));
    }
    case Kind::FiniteRank: {
      FiniteRankPatch p;
      for (const auto& pair : finite_rank_patch().pairs) p.pairs.push_back({pair.v, pair.u});
      return finite_rank(std::move(p));
    }
    case Kind::Sum: {
      StructuredOperator out = children()[0].adjoint();
      for (std::size_t t = 1; t < children().size(); ++t) out = out + children()[t].adjoint();
      return out;
    }
    case Kind::Product: {
      StructuredOperator out = children().back().adjoint();
      for (std::size_t t = children().size() - 1; t-- > 0;) out = out * children()[t].adjoint();
      return out;
    }
  }
  throw UnsupportedShape("adjoint: unknown node kind");
}

bool StructuredOperator::is_compact() const {
  switch (kind()) {
    case Kind::Shift:
    case Kind::AdjointShift:
    case Kind::Identity:
      return false;
    case Kind::Diagonal:
      return diagonal_spec().limit.is_zero();
    case Kind::FiniteRank:
      return true;
    case Kind::Sum: {
      for (const auto& c : children())
        if (!c.is_compact()) return false;
      return true;
    }
    case Kind::Product: {
      for (const auto& c : children())
        if (c.is_compact()) return true;
      return false;
    }
  }
  return false;
}

double StructuredOperator::norm_bound() const {
  switch (kind()) {
    case Kind::Shift:
    case Kind::AdjointShift:
    case Kind::Identity:
      return 1.0;
    case Kind::Diagonal: {
      double m = diagonal_spec().limit.norm();
      for (const auto& q : diagonal_spec().prefix) m = std::max(m, q.norm());
      return m;
    }
    case Kind::FiniteRank: {
      double acc = 0.0;
      for (const auto& p : finite_rank_patch().pairs) acc += p.u.norm() * p.v.norm();
      return acc;
    }
    case Kind::Sum: {
      double acc = 0.0;
      for (const auto& c : children()) acc += c.norm_bound();
      return acc;
    }
    case Kind::Product: {
      double acc = 1.0;
      for (const auto& c : children()) acc *= c.norm_bound();
      return acc;
    }
  }
  return 0.0;
}

bool StructuredOperator::is_atom_product() const {
  switch (kind()) {
    case Kind::Shift:
    case Kind::AdjointShift:
    case Kind::Identity:
    case Kind::Diagonal:
      return true;
    case Kind::Product: {
      for (const auto& c : children())
        if (!c.is_atom_product()) return false;
      return true;
    }
    default:
      return false;
  }
}

StructuredOperator StructuredOperator::pseudo_resolvent(const Quaternion& q) const {
  return (*this) * (*this) + scalar(Quaternion(-2.0 * q.re())) * (*this) +
         scalar(Quaternion(q.norm_sq())) * identity();
}

std::string StructuredOperator::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Shift:
      return "S";
    case Kind::AdjointShift:
      return "S'";
    case Kind::Identity:
      return "I";
    case Kind::Diagonal: {
      const auto& d = diagonal_spec();
      if (d.prefix.empty()) {
        os << "q(" << d.limit.q0 << ',' << d.limit.q1 << ',' << d.limit.q2 << ',' << d.limit.q3
           << ')';
      } else {
        os << "D(prefix=" << d.prefix.size() << ")";
      }
      return os.str();
    }
    case Kind::FiniteRank:
      os << "F(rank<=" << finite_rank_patch().pairs.size() << ")";
      return os.str();
    case Kind::Sum: {
      os << '(';
      for (std::size_t t = 0; t < children().size(); ++t)
        os << (t ? " + " : "") << children()[t].to_string();
      os << ')';
      return os.str();
    }
    case Kind::Product: {
      for (std::size_t t = 0; t < children().size(); ++t)
        os << (t ? "*" : "") << children()[t].to_string();
      return os.str();
    }
  }
  return "?";
}

}  // namespace qspect
