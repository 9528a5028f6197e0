#include "mdssd/grs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "mdssd/errors.hpp"
#include "mdssd/polynomial.hpp"

namespace mdssd {

std::string to_string(CodeKind kind) { return kind == CodeKind::grs ? "grs" : "egrs"; }

CodeKind code_kind_from_string(const std::string& s) {
  if (s == "grs") return CodeKind::grs;
  if (s == "egrs") return CodeKind::egrs;
  throw InvalidArgument("unknown code kind '" + s + "'");
}

std::string to_string(MdsMethod m) {
  switch (m) {
    case MdsMethod::minors:
      return "minors";
    case MdsMethod::codewords:
      return "codewords";
    case MdsMethod::grs_structure:
      return "grs_structure";
  }
  return "?";
}

EvaluationSet::EvaluationSet(FieldPtr field, std::vector<Element> points, std::string provenance)
    : field_(std::move(field)), points_(std::move(points)), provenance_(std::move(provenance)) {
  if (!field_) throw InvalidArgument("evaluation set without field");
  if (points_.empty()) throw InvalidArgument("evaluation set is empty");
  if (points_.size() > field_->q()) throw InvalidArgument("evaluation set larger than the field");
  std::vector<bool> seen(field_->q(), false);
  for (Element a : points_) {
    if (!field_->contains(a)) throw InvalidArgument("evaluation point out of range");
    if (seen[a.index]) throw InvalidArgument("evaluation set has duplicate point " + std::to_string(a.index));
    seen[a.index] = true;
  }
}

bool EvaluationSet::contains(Element a) const { return std::find(points_.begin(), points_.end(), a) != points_.end(); }

std::size_t EvaluationSet::position(Element a) const {
  auto it = std::find(points_.begin(), points_.end(), a);
  if (it == points_.end()) throw InvalidArgument("point " + std::to_string(a.index) + " is not in the set");
  return static_cast<std::size_t>(it - points_.begin());
}

WeightVector::WeightVector(std::vector<Element> entries) : entries_(std::move(entries)) {
  for (Element v : entries_) {
    if (v.index == 0) throw InvalidArgument("weight vector has a zero entry");
  }
}

Element delta(const EvaluationSet& S, Element a) {
  const Field& F = *S.field();
  S.position(a);
  Element acc = F.one();
  for (Element b : S.points()) {
    if (b != a) acc = F.mul(acc, F.sub(a, b));
  }
  return acc;
}

Element delta_derivative(const EvaluationSet& S, Element a) {
  const Field& F = *S.field();
  S.position(a);
  return eval(F, derive(F, expand_from_roots(F, S.points())), a);
}

std::vector<Element> deltas(const EvaluationSet& S) {
  std::vector<Element> out;
  out.reserve(S.size());
  for (Element a : S.points()) out.push_back(delta(S, a));
  return out;
}

std::vector<Element> deltas_derivative(const EvaluationSet& S) {
  const Field& F = *S.field();
  const Polynomial d = derive(F, expand_from_roots(F, S.points()));
  std::vector<Element> out;
  out.reserve(S.size());
  for (Element a : S.points()) out.push_back(eval(F, d, a));
  return out;
}

std::string ConditionWitness::describe(const Field& F) const {
  std::ostringstream os;
  auto sign = [](int s) { return s > 0 ? "+1" : "-1"; };
  if (b) {
    os << "eta(Delta(" << F.to_string(a) << ")) = " << sign(sign_a) << " but eta(Delta(" << F.to_string(*b)
       << ")) = " << sign(sign_b) << " [indices " << a.index << ", " << b->index << "]";
  } else {
    os << "eta(-Delta(" << F.to_string(a) << ")) = " << sign(sign_a) << " [index " << a.index << "]";
  }
  return os.str();
}

GrsCondition grs_condition(const EvaluationSet& S) {
  if (S.size() < 2 || S.size() % 2 != 0) throw InvalidArgument("GRS criterion needs an even set size >= 2");
  const Field& F = *S.field();
  const auto d = deltas(S);
  GrsCondition out;
  const int first = F.character(d[0]);
  for (std::size_t i = 1; i < d.size(); ++i) {
    const int s = F.character(d[i]);
    if (s != first) {
      out.witness = ConditionWitness{S.points()[0], first, S.points()[i], s};
      return out;
    }
  }
  out.uniform = true;
  out.sign = first;
  return out;
}

EgrsCondition egrs_condition(const EvaluationSet& S) {
  if (S.size() % 2 != 1) throw InvalidArgument("EGRS criterion needs an odd set size");
  const Field& F = *S.field();
  const auto d = deltas(S);
  EgrsCondition out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int s = F.character(F.neg(d[i]));
    if (s != 1) {
      out.witness = ConditionWitness{S.points()[i], s, std::nullopt, 0};
      return out;
    }
  }
  out.ok = true;
  return out;
}

WeightVector solve_weights(CodeKind kind, const EvaluationSet& S) {
  const Field& F = *S.field();
  Element lambda = F.one();
  if (kind == CodeKind::grs) {
    const auto cond = grs_condition(S);
    if (!cond.uniform) throw ConditionUnsatisfied("GRS criterion fails: " + cond.witness->describe(F));
    if (cond.sign < 0) lambda = F.generator();
  } else {
    const auto cond = egrs_condition(S);
    if (!cond.ok) throw ConditionUnsatisfied("EGRS criterion fails: " + cond.witness->describe(F));
    lambda = F.minus_one();
  }
  std::vector<Element> v;
  v.reserve(S.size());
  for (Element d : deltas(S)) {
    auto root = F.sqrt(F.div(lambda, d));
    if (!root) throw InternalError("weight square root does not exist despite the criterion");
    v.push_back(*root);
  }
  return WeightVector(std::move(v));
}

CodeArtifact generator_matrix(CodeKind kind, const EvaluationSet& S, const WeightVector& v) {
  const Field& F = *S.field();
  const std::size_t n = S.size();
  if (v.size() != n) throw InvalidArgument("weight vector length does not match the evaluation set");
  std::size_t k = 0;
  std::size_t N = n;
  if (kind == CodeKind::grs) {
    if (n % 2 != 0) throw InvalidArgument("GRS self-dual code needs an even set size");
    k = n / 2;
  } else {
    if (n % 2 != 1) throw InvalidArgument("EGRS self-dual code needs an odd set size");
    k = (n + 1) / 2;
    N = n + 1;
  }
  Matrix G(k, N);
  for (std::size_t j = 0; j < n; ++j) {
    Element x = v.entries()[j];
    for (std::size_t i = 0; i < k; ++i) {
      G(i, j) = x;
      x = F.mul(x, S.points()[j]);
    }
  }
  if (kind == CodeKind::egrs) G(k - 1, n) = F.one();
  return CodeArtifact{kind, S, v, k, std::move(G)};
}

SelfDualCheck check_self_dual(const Field& F, const Matrix& G) {
  SelfDualCheck out;
  const std::size_t N = G.cols();
  if (N % 2 != 0) {
    out.reason = "odd length";
    return out;
  }
  const Matrix gg = gram(F, G);
  out.orthogonal = true;
  for (std::size_t i = 0; i < gg.rows() && out.orthogonal; ++i) {
    for (Element e : gg.row(i)) {
      if (e.index != 0) {
        out.orthogonal = false;
        out.reason = "G G^T has a nonzero entry in row " + std::to_string(i);
        break;
      }
    }
  }
  out.rank = rank(F, G);
  out.rank_ok = out.rank == N / 2;
  if (!out.rank_ok && out.reason.empty()) {
    out.reason = "rank " + std::to_string(out.rank) + " differs from N/2 = " + std::to_string(N / 2);
  }
  out.ok = out.orthogonal && out.rank_ok;
  return out;
}

bool verify_self_dual(const CodeArtifact& A) { return check_self_dual(A.field(), A.matrix).ok; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kSat = std::uint64_t{1} << 62;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  constexpr std::uint64_t kSat = std::uint64_t{1} << 62;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > kSat / base) return kSat;
    r *= base;
  }
  return r;
}

// Columns taken left to right into a reduced echelon basis; the first
// dependent prefix found in lexicographic order is the witness.
class MinorSearch {
 public:
  MinorSearch(const Field& F, const Matrix& G) : F_(F), G_(G), k_(G.rows()), N_(G.cols()) {}

  std::optional<std::vector<std::size_t>> run() {
    chosen_.clear();
    basis_.clear();
    pivots_.clear();
    if (descend(0)) return witness_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t start) {
    const std::size_t depth = chosen_.size();
    if (depth == k_) return false;
    for (std::size_t c = start; c + (k_ - depth) <= N_; ++c) {
      std::vector<Element> v(k_);
      for (std::size_t i = 0; i < k_; ++i) v[i] = G_(i, c);
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Element f = v[pivots_[b]];
        if (f.index == 0) continue;
        for (std::size_t i = 0; i < k_; ++i) v[i] = F_.sub(v[i], F_.mul(f, basis_[b][i]));
      }
      std::size_t pivot = 0;
      while (pivot < k_ && v[pivot].index == 0) ++pivot;
      if (pivot == k_) {
        witness_ = chosen_;
        witness_.push_back(c);
        for (std::size_t extra = 0; witness_.size() < k_ && extra < N_; ++extra) {
          if (std::find(witness_.begin(), witness_.end(), extra) == witness_.end()) witness_.push_back(extra);
        }
        std::sort(witness_.begin(), witness_.end());
        return true;
      }
      const Element inv = F_.inv(v[pivot]);
      for (auto& e : v) e = F_.mul(e, inv);
      chosen_.push_back(c);
      basis_.push_back(std::move(v));
      pivots_.push_back(pivot);
      const bool found = descend(c + 1);
      chosen_.pop_back();
      basis_.pop_back();
      pivots_.pop_back();
      if (found) return true;
    }
    return false;
  }

  const Field& F_;
  const Matrix& G_;
  std::size_t k_;
  std::size_t N_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<Element>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> witness_;
};

// Searches for a nonzero codeword of weight <= N - k among messages whose
// first nonzero coordinate is 1.
std::optional<std::vector<std::size_t>> low_weight_codeword(const Field& F, const Matrix& G) {
  const std::size_t k = G.rows();
  const std::size_t N = G.cols();
  const std::uint32_t q = F.q();
  std::vector<Element> codeword(N);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<std::uint32_t> tail(k - lead - 1, 0);
    while (true) {
      for (std::size_t c = 0; c < N; ++c) {
        Element acc = G(lead, c);
        for (std::size_t t = 0; t < tail.size(); ++t) {
          if (tail[t] != 0) acc = F.add(acc, F.mul(Element{tail[t]}, G(lead + 1 + t, c)));
        }
        codeword[c] = acc;
      }
      std::vector<std::size_t> zeros;
      for (std::size_t c = 0; c < N; ++c) {
        if (codeword[c].index == 0) zeros.push_back(c);
      }
      if (zeros.size() >= k) {
        zeros.resize(k);
        return zeros;
      }
      std::size_t pos = 0;
      while (pos < tail.size() && ++tail[pos] == q) tail[pos++] = 0;
      if (pos == tail.size()) break;
    }
  }
  return std::nullopt;
}

bool grs_columns(const Field& F, const Matrix& G, std::size_t ncols) {
  const std::size_t k = G.rows();
  std::vector<bool> seen(F.q(), false);
  for (std::size_t j = 0; j < ncols; ++j) {
    const Element v = G(0, j);
    if (v.index == 0) return false;
    if (k == 1) continue;
    const Element a = F.div(G(1, j), v);
    if (seen[a.index]) return false;
    seen[a.index] = true;
    Element expect = G(1, j);
    for (std::size_t i = 2; i < k; ++i) {
      expect = F.mul(expect, a);
      if (G(i, j) != expect) return false;
    }
  }
  return true;
}

}  // namespace

bool has_grs_structure(const Field& F, const Matrix& G) {
  const std::size_t k = G.rows();
  const std::size_t N = G.cols();
  if (k == 0 || N < k) return false;
  if (grs_columns(F, G, N)) return true;
  // extended form: last column is e_{k-1}
  for (std::size_t i = 0; i < k; ++i) {
    if (G(i, N - 1) != (i + 1 == k ? F.one() : F.zero())) return false;
  }
  return grs_columns(F, G, N - 1);
}

MdsCheck check_mds(const Field& F, const Matrix& G, const MdsOptions& options) {
  MdsCheck out;
  const std::size_t k = G.rows();
  const std::size_t N = G.cols();
  if (k > N) throw InvalidArgument("generator matrix has more rows than columns");
  if (k == 0) {
    out.ok = true;
    return out;
  }
  const std::uint64_t minors = binomial(N, k);
  const std::uint64_t words = saturating_pow(F.q(), k);
  const bool minors_ok = minors <= options.max_minors;
  const bool words_ok = words <= options.max_codewords;

  if (minors_ok && (minors <= words || !words_ok)) {
    out.method = MdsMethod::minors;
    auto w = MinorSearch(F, G).run();
    out.ok = !w;
    if (w) out.witness = *w;
    return out;
  }
  if (words_ok) {
    out.method = MdsMethod::codewords;
    auto w = low_weight_codeword(F, G);
    out.ok = !w;
    if (w) out.witness = *w;
    return out;
  }
  if (options.allow_structure && has_grs_structure(F, G)) {
    out.method = MdsMethod::grs_structure;
    out.ok = true;
    // Spot-check a fixed pseudo-random sample of column subsets.
    std::mt19937_64 rng(0x5eedULL);
    std::vector<std::size_t> cols(N);
    for (int trial = 0; trial < 256; ++trial) {
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, N - 1);
        std::swap(cols[i], cols[pick(rng)]);
      }
      std::vector<std::size_t> subset(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(subset.begin(), subset.end());
      if (rank(F, select_columns(G, subset)) != k) {
        out.ok = false;
        out.witness = subset;
        break;
      }
    }
    return out;
  }
  throw CapExceeded("MDS property too large to certify: C(" + std::to_string(N) + "," + std::to_string(k) +
                    ") minors and q^k codewords both exceed their budgets");
}

bool verify_mds(const CodeArtifact& A) { return check_mds(A.field(), A.matrix).ok; }

VerificationReport verify(const CodeArtifact& A, const MdsOptions& options) {
  VerificationReport report;
  const Field& F = A.field();
  const std::size_t n = A.set.size();

  const auto direct = deltas(A.set);
  if (direct != deltas_derivative(A.set)) throw InternalError("Delta by product and by derivative disagree");

  if (A.kind == CodeKind::grs) {
    if (n % 2 == 0) {
      const auto c = grs_condition(A.set);
      report.condition_ok = c.uniform;
      report.condition_witness = c.witness;
    } else {
      report.reason = "GRS artifact with odd set size";
    }
  } else {
    if (n % 2 == 1) {
      const auto c = egrs_condition(A.set);
      report.condition_ok = c.ok;
      report.condition_witness = c.witness;
    } else {
      report.reason = "EGRS artifact with even set size";
    }
  }

  const std::size_t expected_cols = A.kind == CodeKind::grs ? n : n + 1;
  if (A.matrix.cols() != expected_cols) {
    report.reason = "matrix width does not match the evaluation set";
    return report;
  }
  const auto sd = check_self_dual(F, A.matrix);
  report.self_dual_ok = sd.ok;
  report.rank_ok = sd.rank_ok && A.k == A.matrix.rows() && A.matrix.rows() * 2 == A.matrix.cols();
  if (!sd.ok && report.reason.empty()) report.reason = sd.reason;

  const auto mds = check_mds(F, A.matrix, options);
  report.mds_ok = mds.ok;
  report.mds_method = mds.method;
  report.mds_witness = mds.witness;
  return report;
}

}  // namespace mdssd
