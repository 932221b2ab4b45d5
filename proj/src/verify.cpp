#include "qspect/verify.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "qspect/errors.hpp"
#include "qspect/essential.hpp"
#include "qspect/fredholm.hpp"
#include "qspect/io.hpp"
#include "qspect/parser.hpp"
#include "qspect/rng.hpp"
#include "qspect/s_spectrum.hpp"

namespace qspect {

namespace {

QMatrix random_matrix(Rng& rng, std::size_t n, double scale = 1.0) {
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng.quaternion(scale);
  return a;
}

void fail(SuiteReport& r, const std::string& message) {
  if (r.failures.size() < 32) r.failures.push_back(message);
}

// ---------------------------------------------------------------- 1 --
void suite_chi_embedding(Rng& rng, SuiteReport& r) {
  for (int t = 0; t < 1000; ++t) {
    ++r.cases;
    const std::size_t n = 1 + rng.below(6);
    const QMatrix a = random_matrix(rng, n);
    const QMatrix b = random_matrix(rng, n);
    const Eigen::MatrixXcd lhs = chi(a * b);
    const Eigen::MatrixXcd rhs = chi(a) * chi(b);
    const double rel = (lhs - rhs).norm() / std::max(1.0, rhs.norm());
    if (rel > 1e-12)
      fail(r, "chi multiplicativity violated: rel error " + format_double(rel));

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(chi(a));
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > 1e-10 * sv(0)) ++rank;
    if (rank % 2 != 0) fail(r, "odd complex rank of chi at case " + std::to_string(t));
  }
}

// ---------------------------------------------------------------- 2 --
void suite_point_spectrum(Rng& rng, SuiteReport& r) {
  for (int t = 0; t < 200; ++t) {
    ++r.cases;
    const std::size_t n = 1 + rng.below(5);
    const QMatrix a = random_matrix(rng, n);
    const double norm_a = op_norm(a);
    const double tol = 1e-8 * std::max(1.0, norm_a * norm_a);
    const auto spheres = point_spectrum(a);
    for (const auto& [cls, mult] : spheres) {
      const double m = mu(a, cls.representative());
      if (m > tol)
        fail(r, "eigen-sphere rep has mu " + format_double(m) + " > tol " + format_double(tol));
      if (mult < 1) fail(r, "nonpositive multiplicity");
    }
    for (int s = 0; s < 20; ++s) {
      double re = 0, rad = 0;
      bool found = false;
      for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        re = rng.uniform(-norm_a - 0.5, norm_a + 0.5);
        rad = rng.uniform(0.0, norm_a + 0.5);
        found = true;
        for (const auto& [cls, mult] : spheres)
          if (std::hypot(re - cls.re, rad - cls.rad) < 0.1) found = false;
      }
      if (!found) continue;  // spectrum crowds the window; skip sample
      const double m = mu(a, Quaternion{re, rad, 0, 0});
      if (m <= 1e-6)
        fail(r, "mu " + format_double(m) + " <= 1e-6 away from every eigen-sphere");
    }
  }
}

// ---------------------------------------------------------------- 3 --
void suite_axial_symmetry(Rng& rng, SuiteReport& r) {
  for (int t = 0; t < 500; ++t) {
    ++r.cases;
    const std::size_t n = 1 + rng.below(4);
    const QMatrix a = random_matrix(rng, n);
    const Quaternion q = rng.quaternion(1.5);
    const Quaternion s = rng.unit_quaternion();

    const double m0 = mu(a, q);
    const double m1 = mu(a, conjugate_by(q, s));
    const double m2 = mu(adjoint(a), q.conj());
    const double scale = std::max(1.0, m0);
    if (std::abs(m0 - m1) > 1e-10 * scale)
      fail(r, "mu not conjugation invariant: " + format_double(std::abs(m0 - m1)));
    if (std::abs(m0 - m2) > 1e-10 * scale)
      fail(r, "mu(A,q) != mu(A^,qbar): " + format_double(std::abs(m0 - m2)));
  }
}

// ---------------------------------------------------------------- 4 --
void suite_nonempty_radius(Rng& rng, SuiteReport& r) {
  for (int t = 0; t < 200; ++t) {
    ++r.cases;
    const std::size_t n = 1 + rng.below(5);
    const QMatrix a = random_matrix(rng, n);
    const auto spheres = point_spectrum(a);
    if (spheres.empty()) {
      fail(r, "empty point spectrum for a " + std::to_string(n) + "x" + std::to_string(n) +
                  " matrix");
      continue;
    }
    const double bound = op_norm(a) + 1e-9;
    for (const auto& [cls, mult] : spheres)
      if (std::hypot(cls.re, cls.rad) > bound)
        fail(r, "eigen-sphere radius exceeds the operator norm bound");
  }
}

// ---------------------------------------------------------------- 5 --
void suite_finite_dim_index(Rng& rng, SuiteReport& r) {
  for (int t = 0; t < 200; ++t) {
    ++r.cases;
    const std::size_t n = 2 + rng.below(5);
    QMatrix a = random_matrix(rng, n);
    if (t % 2 == 0) {
      // Force singularity: one column becomes a right multiple of
      // another, producing an exact kernel vector.
      const std::size_t j = rng.below(n);
      std::size_t k = rng.below(n);
      if (k == j) k = (k + 1) % n;
      const Quaternion f = rng.quaternion();
      for (std::size_t i = 0; i < n; ++i) a.at(i, j) = a.at(i, k) * f;
    }
    const RankKernel ka = rank_kernel(a);
    const RankKernel kadj = rank_kernel(adjoint(a));
    if (ka.kernel.size() != kadj.kernel.size())
      fail(r, "dim ker(A) != dim ker(A^) on square input");
    if (ka.rank + static_cast<int>(ka.kernel.size()) != static_cast<int>(n))
      fail(r, "rank-nullity violated");
    if (t % 2 == 0 && ka.kernel.empty()) fail(r, "constructed singular matrix looks invertible");
  }
}

// ---------------------------------------------------------------- 6 --
void suite_index_laws(Rng& rng, SuiteReport& r) {
  const StructuredOperator s = StructuredOperator::shift();
  struct Case {
    StructuredOperator op;
    int expected;
    const char* label;
  };
  std::vector<Case> cases;
  cases.push_back({s, -1, "S"});
  cases.push_back({StructuredOperator::adjoint_shift(), 1, "S'"});
  for (unsigned k = 2; k <= 5; ++k)
    cases.push_back({s.pow(k), -static_cast<int>(k), "S^k"});
  cases.push_back({s * StructuredOperator::adjoint_shift(), 0, "S*S'"});

  for (const auto& c : cases) {
    ++r.cases;
    const FredholmData d = fredholm_data(c.op);
    if (d.status != FredholmStatus::Fredholm || !d.index || *d.index != c.expected)
      fail(r, std::string("wrong Fredholm data for ") + c.label);
    else if (d.method != FredholmMethod::BothAgree)
      fail(r, std::string("symbolic and oracle did not both certify ") + c.label);
    const auto sym = index_symbolic(c.op);
    if (!sym || *sym != c.expected)
      fail(r, std::string("symbolic index wrong for ") + c.label);
  }

  const Quaternion dirs[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  auto sample = [&](double radius, const Quaternion& dir) {
    return Quaternion{0.6 * radius, 0, 0, 0} + dir * (0.8 * radius);
  };
  for (double radius : {0.3, 0.7, 0.9}) {
    for (const auto& dir : dirs) {
      ++r.cases;
      const Partition p = sigma_partition_at(s, sample(radius, dir));
      if (p.kind != PartitionKind::SigmaK || p.k != -2)
        fail(r, "expected sigma_k(-2) for the shift at |q| = " + format_double(radius));
    }
  }
  for (const auto& dir : dirs) {
    ++r.cases;
    if (sigma_partition_at(s, sample(1.0, dir)).kind != PartitionKind::Essential)
      fail(r, "expected essential verdict for the shift at |q| = 1");
    ++r.cases;
    if (sigma_partition_at(s, sample(1.5, dir)).kind != PartitionKind::Resolvent)
      fail(r, "expected resolvent verdict for the shift at |q| = 1.5");
  }
  (void)rng;
}

// ---------------------------------------------------------------- 7 --
SparseVector random_sparse(Rng& rng, std::size_t max_support) {
  SparseVector v;
  const std::size_t len = 1 + rng.below(max_support);
  for (std::size_t i = 0; i < max_support; ++i) {
    if (v.support.size() >= len) break;
    if (rng.uniform() < 0.7 || max_support - i <= len - v.support.size()) {
      v.support.push_back(i);
      v.values.push_back(rng.quaternion());
    }
  }
  if (v.support.empty()) {
    v.support.push_back(0);
    v.values.push_back(rng.quaternion());
  }
  return v;
}

StructuredOperator random_finite_rank(Rng& rng) {
  FiniteRankPatch patch;
  const std::size_t rank = 1 + rng.below(3);
  for (std::size_t p = 0; p < rank; ++p)
    patch.pairs.push_back({random_sparse(rng, 8), random_sparse(rng, 8)});
  return StructuredOperator::finite_rank(std::move(patch));
}

void suite_perturbation(Rng& rng, SuiteReport& r) {
  const StructuredOperator s = StructuredOperator::shift();

  for (int t = 0; t < 50; ++t) {
    ++r.cases;
    const FredholmData d = fredholm_data(s + random_finite_rank(rng));
    if (d.status != FredholmStatus::Fredholm || !d.index || *d.index != -1)
      fail(r, "ind(S + finite rank) != -1 at case " + std::to_string(t));
  }

  for (int t = 0; t < 10; ++t) {
    ++r.cases;
    // Banded B with norm certificate exactly 1: four terms of norm
    // bound 1/4 each, diagonal entries on the unit sphere.
    auto unit_diag = [&] {
      DiagonalSpec d;
      const std::size_t m = 1 + rng.below(5);
      for (std::size_t i = 0; i < m; ++i) d.prefix.push_back(rng.unit_quaternion());
      d.limit = rng.unit_quaternion();
      return StructuredOperator::diagonal(std::move(d));
    };
    const StructuredOperator quarter = StructuredOperator::scalar(Quaternion(0.25));
    const StructuredOperator b = quarter * unit_diag() + quarter * s * unit_diag() +
                                 quarter * unit_diag() * StructuredOperator::adjoint_shift() +
                                 quarter * StructuredOperator::identity();
    if (b.norm_bound() > 1.0 + 1e-12) {
      fail(r, "banded perturbation norm certificate exceeds 1");
      continue;
    }
    const FredholmData d = fredholm_data(s + StructuredOperator::scalar(Quaternion(0.01)) * b);
    if (d.status != FredholmStatus::Fredholm || !d.index || *d.index != -1)
      fail(r, "ind(S + 0.01 B) != -1 at case " + std::to_string(t));
  }

  // Essential verdict invariance under one fixed compact perturbation,
  // 100 sampled q spread over radii inside, on, and outside the unit
  // sphere.
  const StructuredOperator f = random_finite_rank(rng);
  std::vector<Quaternion> samples;
  const double radii[10] = {0.3, 0.45, 0.6, 0.75, 0.9, 1.0, 1.2, 1.5, 1.8, 2.2};
  for (int t = 0; t < 100; ++t) {
    const double radius = radii[t % 10];
    const Quaternion dir = rng.imaginary_unit();
    double c;
    do {
      c = rng.uniform(-0.95, 0.95);
    } while (std::abs(c) < 0.05);  // keep Re q away from 0
    samples.push_back(Quaternion{radius * c, 0, 0, 0} +
                      dir * (radius * std::sqrt(1.0 - c * c)));
  }
  const EssentialComparison cmp = compare_essential(s, f, samples);
  r.cases += cmp.samples;
  for (const auto& d : cmp.disagreements)
    fail(r, "essential verdict changed under compact perturbation at |q| = " +
                format_double(d.q.norm()));
}

// ---------------------------------------------------------------- 8 --
void suite_parametrix(Rng& rng, SuiteReport& r) {
  auto invertible_diag = [&] {
    DiagonalSpec d;
    const std::size_t m = 1 + rng.below(4);
    for (std::size_t i = 0; i < m; ++i)
      d.prefix.push_back(rng.unit_quaternion() * rng.uniform(0.5, 2.0));
    d.limit = rng.unit_quaternion() * rng.uniform(0.5, 2.0);
    return StructuredOperator::diagonal(std::move(d));
  };
  const StructuredOperator s = StructuredOperator::shift();
  std::vector<std::pair<StructuredOperator, const char*>> cases;
  cases.push_back({s, "S"});
  cases.push_back({s.pow(2), "S^2"});
  cases.push_back({invertible_diag(), "diagonal"});
  cases.push_back({s * invertible_diag(), "S*diagonal"});
  cases.push_back({invertible_diag() * StructuredOperator::adjoint_shift(), "diagonal*S'"});

  for (const auto& [op, label] : cases) {
    ++r.cases;
    try {
      const ParametrixResult p = parametrix(op);
      if (p.max_outside > 1e-8)
        fail(r, std::string("parametrix residual outside certified block for ") + label);
    } catch (const std::exception& e) {
      fail(r, std::string("parametrix failed for ") + label + ": " + e.what());
    }
  }

  // Pure invertible diagonals must have exactly vanishing residuals.
  ++r.cases;
  const ParametrixResult p = parametrix(invertible_diag());
  if (p.max_residual_st > 1e-12 || p.max_residual_ts > 1e-12)
    fail(r, "invertible diagonal parametrix residual is not numerically zero");
}

// ---------------------------------------------------------------- 9 --
void suite_finite_rank(Rng& rng, SuiteReport& r) {
  for (int t = 0; t < 100; ++t) {
    ++r.cases;
    const std::size_t n = 2 + rng.below(5);
    const std::size_t rank = 1 + rng.below(n);
    QMatrix a(n, n);
    for (std::size_t p = 0; p < rank; ++p) {
      QVector u(n), v(n);
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = rng.quaternion();
        v[i] = rng.quaternion();
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) += u[i] * v[j].conj();
    }

    const FiniteRankDecomp dec = finite_rank_decomp(a);
    QMatrix rebuilt(n, n);
    for (std::size_t p = 0; p < dec.u.size(); ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rebuilt.at(i, j) += dec.u[p][i] * dec.v[p][j].conj();
    const double scale = std::max(1.0, a.frobenius_norm());
    if ((a - rebuilt).frobenius_norm() > 1e-10 * scale)
      fail(r, "finite rank decomposition does not rebuild the matrix");

    const QMatrix adj = adjoint(a);
    for (std::size_t p = 0; p < dec.u.size(); ++p) {
      const QVector want = apply(adj, dec.u[p]);
      double err = 0;
      for (std::size_t i = 0; i < n; ++i) err = std::max(err, (want[i] - dec.v[p][i]).norm());
      if (err > 1e-10 * scale) fail(r, "A^ u_p != v_p in the decomposition");
    }

    const RankKernel ka = rank_kernel(a);
    const RankKernel kadj = rank_kernel(adj);
    if (ka.rank != kadj.rank) fail(r, "rank(A) != rank(A^)");
    if (ka.rank != static_cast<int>(dec.u.size()))
      fail(r, "decomposition length differs from rank");
  }
}

// --------------------------------------------------------------- 10 --
void suite_neumann(Rng& rng, SuiteReport& r) {
  for (int t = 0; t < 100; ++t) {
    ++r.cases;
    const std::size_t n = 1 + rng.below(5);
    QMatrix a = random_matrix(rng, n);
    const double target = rng.uniform(0.1, 0.9);
    a = (target / std::max(op_norm(a), 1e-12)) * a;
    const QMatrix inv = neumann_inverse(a, 1e-13);
    const QMatrix residual = (QMatrix::identity(n) - a) * inv - QMatrix::identity(n);
    if (op_norm(residual) > 1e-10)
      fail(r, "Neumann inverse residual " + format_double(op_norm(residual)));
  }
}

// --------------------------------------------------------------- 11 --
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void suite_golden_files(const std::string& data_dir, SuiteReport& r) {
  // Spectrum of diag(1, 2).
  {
    ++r.cases;
    const QMatrix a = read_matrix(data_dir + "/fixtures/diag12.json");
    const std::string got = spectrum_to_json(spectrum_report(a));
    if (got != slurp(data_dir + "/golden/spectrum_diag12.json"))
      fail(r, "spectrum of diag(1,2) differs from the committed golden file");
  }
  // Scan of the 1x1 identity over [0,2] x [0,1] on a 21x11 grid.
  {
    ++r.cases;
    const QMatrix a = read_matrix(data_dir + "/fixtures/identity1.json");
    const ScanField field = scan(a, 0.0, 2.0, 1.0, 21, 11);
    const std::string got = scan_to_csv(field);
    if (got != slurp(data_dir + "/golden/scan_identity.csv"))
      fail(r, "identity scan differs from the committed golden file");

    std::size_t zero_cells = 0, min_cell = 0;
    for (std::size_t t = 0; t < field.mu.size(); ++t) {
      if (field.mu[t] < 1e-8) {
        ++zero_cells;
        min_cell = t;
      }
    }
    const double re = field.re[min_cell / field.rad.size()];
    const double rad = field.rad[min_cell % field.rad.size()];
    if (zero_cells != 1 || re != 1.0 || rad != 0.0)
      fail(r, "identity scan does not have its unique zero cell at (1, 0)");
  }
  // Fredholm data of S^3.
  {
    ++r.cases;
    const FredholmData d = fredholm_data(parse_expr("S^3"));
    const std::string got = fredholm_to_json("S^3", d);
    if (got != slurp(data_dir + "/golden/fredholm_s3.json"))
      fail(r, "Fredholm report for S^3 differs from the committed golden file");
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"chi-embedding", "point-spectrum", "axial-symmetry",  "nonempty-radius",
          "finite-dim-index", "index-laws",  "perturbation",    "parametrix",
          "finite-rank",   "neumann",        "golden-files"};
}

std::vector<SuiteReport> run_verify(const std::string& suite, std::uint64_t seed,
                                    const std::string& data_dir) {
  using Runner = std::function<void(Rng&, SuiteReport&)>;
  const std::map<std::string, Runner> runners = {
      {"chi-embedding", suite_chi_embedding},
      {"point-spectrum", suite_point_spectrum},
      {"axial-symmetry", suite_axial_symmetry},
      {"nonempty-radius", suite_nonempty_radius},
      {"finite-dim-index", suite_finite_dim_index},
      {"index-laws", suite_index_laws},
      {"perturbation", suite_perturbation},
      {"parametrix", suite_parametrix},
      {"finite-rank", suite_finite_rank},
      {"neumann", suite_neumann},
      {"golden-files",
       [&data_dir](Rng&, SuiteReport& r) { suite_golden_files(data_dir, r); }},
  };

  std::vector<std::string> todo;
  if (suite == "all") {
    todo = suite_names();
  } else {
    if (runners.find(suite) == runners.end())
      throw UnknownName("unknown verification suite '" + suite + "'");
    todo.push_back(suite);
  }

  std::vector<SuiteReport> reports;
  for (const auto& name : todo) {
    SuiteReport r;
    r.suite = name;
    r.seed = seed;
    // FNV-1a over the suite name: decorrelates suites while staying
    // bit-identical across platforms (std::hash is not portable).
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
    Rng rng(seed ^ h);
    runners.at(name)(rng, r);
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string verify_to_json(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  os << "{\n  \"suites\": [";
  for (std::size_t t = 0; t < reports.size(); ++t) {
    const auto& r = reports[t];
    os << (t ? ",\n    " : "\n    ");
    os << "{\"suite\": \"" << r.suite << "\", \"seed\": " << r.seed
       << ", \"cases\": " << r.cases << ", \"failures\": [";
    for (std::size_t f = 0; f < r.failures.size(); ++f) {
      os << (f ? ", " : "") << '"';
      for (char c : r.failures[f]) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
      }
      os << '"';
    }
    os << "]}";
  }
  os << (reports.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

}  // namespace qspect
