/**
 * @file grs.hpp
 * @brief Evaluation sets, the self-duality criteria for GRS/EGRS codes, weight
 * solving, generator matrices and exact verification.
 *
 * For an evaluation set S = {a_1, ..., a_n} the quantity
 *   Delta_S(a_i) = prod_{j != i} (a_i - a_j)
 * decides self-duality: a GRS code of length n (even) with k = n/2 admits
 * self-dual weights iff all eta(Delta_S(a)) agree, and the extended code of
 * length n + 1 (n odd) iff eta(-Delta_S(a)) = +1 everywhere.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdssd/galois.hpp"
#include "mdssd/matrix.hpp"

namespace mdssd {

enum class CodeKind { grs, egrs };

std::string to_string(CodeKind kind);
CodeKind code_kind_from_string(const std::string& s);

/// Ordered, duplicate-free subset of a field.
class EvaluationSet {
 public:
  EvaluationSet(FieldPtr field, std::vector<Element> points, std::string provenance = {});

  const FieldPtr& field() const { return field_; }
  const std::vector<Element>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::string& provenance() const { return provenance_; }

  bool contains(Element a) const;
  /// Position of a in the set; throws InvalidArgument if absent.
  std::size_t position(Element a) const;

 private:
  FieldPtr field_;
  std::vector<Element> points_;
  std::string provenance_;
};

/// Column multipliers v_1, ..., v_n; every entry is nonzero.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Element> entries);

  const std::vector<Element>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Element> entries_;
};

struct CodeArtifact {
  CodeKind kind;
  EvaluationSet set;
  WeightVector weights;
  std::size_t k;
  Matrix matrix;  // k x N, rows are the images of 1, x, ..., x^{k-1}

  const Field& field() const { return *set.field(); }
  std::size_t length() const { return matrix.cols(); }
};

/// Delta_S(a) by the direct pairwise product. Throws if a is not in S.
Element delta(const EvaluationSet& S, Element a);
/// Delta_S(a) as f_S'(a), f_S the vanishing polynomial of S.
Element delta_derivative(const EvaluationSet& S, Element a);
/// Direct products for every point, in set order.
std::vector<Element> deltas(const EvaluationSet& S);
/// Derivative route for every point, in set order.
std::vector<Element> deltas_derivative(const EvaluationSet& S);

/// Two points whose characters disagree (grs) or a single point with
/// eta(-Delta) = -1 (egrs, `b` absent).
struct ConditionWitness {
  Element a;
  int sign_a = 0;
  std::optional<Element> b;
  int sign_b = 0;

  std::string describe(const Field& F) const;
};

struct GrsCondition {
  bool uniform = false;
  int sign = 0;  // common value of eta(Delta_S(a)) when uniform
  std::optional<ConditionWitness> witness;
};

struct EgrsCondition {
  bool ok = false;
  std::optional<ConditionWitness> witness;
};

/// Requires |S| even and >= 2.
GrsCondition grs_condition(const EvaluationSet& S);
/// Requires |S| odd.
EgrsCondition egrs_condition(const EvaluationSet& S);

/// grs: v_i = sqrt(lambda / Delta(a_i)) with lambda in {1, theta};
/// egrs: v_i = sqrt(-1 / Delta(a_i)). Throws ConditionUnsatisfied when the
/// corresponding criterion fails.
WeightVector solve_weights(CodeKind kind, const EvaluationSet& S);

/// Rows are the codewords of 1, x, ..., x^{k-1}; egrs appends the x^{k-1}
/// coefficient as a final column.
CodeArtifact generator_matrix(CodeKind kind, const EvaluationSet& S, const WeightVector& v);

struct SelfDualCheck {
  bool orthogonal = false;  // G G^T = 0
  std::size_t rank = 0;
  bool rank_ok = false;  // rank = N/2
  bool ok = false;
  std::string reason;
};

SelfDualCheck check_self_dual(const Field& F, const Matrix& G);
bool verify_self_dual(const CodeArtifact& A);

enum class MdsMethod { minors, codewords, grs_structure };
std::string to_string(MdsMethod m);

struct MdsOptions {
  std::uint64_t max_minors = 1'000'000;
  std::uint64_t max_codewords = 10'000'000;
  /// Accept a generator matrix recognised as (extended) GRS with distinct
  /// points and nonzero column multipliers when exhaustive methods are over budget.
  bool allow_structure = true;
};

struct MdsCheck {
  bool ok = false;
  MdsMethod method = MdsMethod::minors;
  std::vector<std::size_t> witness;  // k dependent columns when !ok
};

/// Every k x k column submatrix of G is invertible. Throws CapExceeded when no
/// method is within budget.
MdsCheck check_mds(const Field& F, const Matrix& G, const MdsOptions& options = {});
bool verify_mds(const CodeArtifact& A);

/// True when G is literally the generator matrix of a GRS code (or of an EGRS
/// code, with the extra column e_{k-1}) on distinct points with nonzero weights.
bool has_grs_structure(const Field& F, const Matrix& G);

/// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct VerificationReport {
  bool condition_ok = false;
  std::optional<ConditionWitness> condition_witness;
  bool self_dual_ok = false;
  bool rank_ok = false;
  bool mds_ok = false;
  MdsMethod mds_method = MdsMethod::minors;
  std::vector<std::size_t> mds_witness;
  std::string reason;

  bool all_ok() const { return condition_ok && self_dual_ok && rank_ok && mds_ok; }
};

/// Recomputes the criterion on the artifact's set and checks its matrix.
VerificationReport verify(const CodeArtifact& A, const MdsOptions& options = {});

}  // namespace mdssd
