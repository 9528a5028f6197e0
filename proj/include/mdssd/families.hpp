/**
 * @file families.hpp
 * @brief Evaluation-set recipes that produce candidate lengths of MDS self-dual
 * codes, together with the length-parity nonexistence gate.
 *
 * Every recipe returns a Claim: the set it built plus the length it asserts.
 * A claim is a candidate only; its status stays `unverified` until the
 * self-duality criterion (check_condition) or the full pipeline has run.
 *
 * Wherever a recipe leaves a choice open, the smallest-index option is taken:
 * smallest gamma outside a subfield, first-k subsets, greedy bases, the
 * lexicographically first admissible coset-index tuple.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mdssd/galois.hpp"
#include "mdssd/grs.hpp"

namespace mdssd {

enum class SigmaKind { g, eg };
enum class Family {
  subfield,
  affine_union,
  cyclotomic,
  cyclotomic_scaled,
  trace_kernel,
  trace_lift,
  norm_fiber,
  explicit_set,
};
enum class ClaimStatus { unverified, passed, failed };
enum class CyclotomicCase { I1, I2A, I2B, II };

std::string to_string(SigmaKind k);
std::string to_string(Family f);
std::string to_string(ClaimStatus s);
std::string to_string(CyclotomicCase c);
SigmaKind sigma_kind_from_string(const std::string& s);
Family family_from_string(const std::string& s);
ClaimStatus claim_status_from_string(const std::string& s);
CyclotomicCase cyclotomic_case_from_string(const std::string& s);

struct SubfieldParams {
  std::uint32_t r;
  std::uint32_t n;
  SigmaKind kind;
};

struct AffineParams {
  std::uint32_t p, m, l, k;
  std::uint32_t d;        // gcd(l, m)
  std::uint32_t l_prime;  // l / d
  std::uint32_t subfield_order;
  std::vector<Element> basis;  // of V over GF(p^d)
  Element gamma;
  std::vector<Element> b;  // coset multipliers in GF(p^d)
};

struct CyclotomicParams {
  std::uint32_t r, e, f, t;
  CyclotomicCase which;
  std::vector<std::uint32_t> indices;
  Element alpha;  // theta^e
  Element beta;   // theta^{r-1}
  std::uint64_t index_sum;
  std::uint32_t R;  // (r+1)/gcd(r+1, f)
  bool include_zero;
};

struct ScaledCyclotomicParams {
  std::uint32_t r, e, f, s, t;
  Element beta;  // theta^{(r+1)/s}
  std::uint32_t D;
  bool include_zero;
};

struct TraceKernelParams {
  std::uint32_t r, l, d;
  std::vector<Element> M;
  std::vector<Element> V;
};

struct TraceLiftParams {
  std::uint32_t base_q;
  std::uint32_t base_n;
  SigmaKind base_kind;
  Family base_family;
  std::vector<Element> base_set;  // indices in GF(base_q)
  std::uint32_t l;
  std::uint32_t Q;
  Element theta;  // Tr(theta) = 1
  Element embedding_root;
};

struct NormFiberParams {
  std::uint32_t r, s, l;
  std::uint32_t fiber_size;  // (q-1)/(r-1)
  std::vector<Element> M;    // norm values, as elements of GF(q)
  std::vector<Element> representatives;
  bool include_zero;
  std::vector<Element> base_set;  // odd s: base set in GF(r), before translation
  Element translation;            // odd s: shift applied inside GF(r)
};

struct ExplicitParams {
  std::string source;
};

using FamilyParams = std::variant<SubfieldParams, AffineParams, CyclotomicParams, ScaledCyclotomicParams,
                                  TraceKernelParams, TraceLiftParams, NormFiberParams, ExplicitParams>;

struct Claim {
  std::uint32_t q;
  std::uint32_t n;
  SigmaKind sigma_kind;
  Family family;
  FamilyParams params;
  EvaluationSet set;
  ClaimStatus status = ClaimStatus::unverified;
  std::optional<std::string> failure_witness;

  CodeKind code_kind() const { return sigma_kind == SigmaKind::g ? CodeKind::grs : CodeKind::egrs; }
  const FieldPtr& field() const { return set.field(); }
};

enum class GateResult { blocked, open };

/// Blocked iff q = 3 mod 4 and n = 2 mod 4: no self-dual code of that length exists.
GateResult nonexistence_gate(std::uint64_t q, std::uint64_t n);
/// Throws BlockedByNonexistence for blocked (q, n).
void require_open(std::uint64_t q, std::uint64_t n);

/// Runs the self-duality criterion on the claim's set and records passed/failed.
void check_condition(Claim& claim);

/// Sets inside the subfield GF(r) of GF(r^2): n points (g) or n - 1 points (eg).
Claim subfield_set(const FieldPtr& F, std::uint32_t n, SigmaKind kind);

/// Union of k cosets b_i gamma + V of a GF(p^d)-subspace V of GF(r), |V| = p^l.
Claim affine_union(const FieldPtr& F, std::uint32_t l, std::uint32_t k);

/// Union of t cosets beta^{i} C of C = <theta^e>, beta = theta^{r-1}.
Claim cyclotomic_union(const FieldPtr& F, std::uint32_t f, std::uint32_t t, CyclotomicCase which);

/// Union of beta^lambda C, lambda = 1..t, beta = theta^{(r+1)/s}. Returns the eg
/// claim (0 appended) and, when e is even, the g claim.
std::vector<Claim> cyclotomic_union_scaled(const FieldPtr& F, std::uint32_t f, std::uint32_t s, std::uint32_t t);

/// M union ker(x + x^r), M the first l elements of GF(r)*. d = 0 defers to subfield_set.
Claim trace_kernel_union(const FieldPtr& F, std::uint32_t l, std::uint32_t d);

/// Lifts a passed claim over GF(q) to GF(q^l) through the fibres of the trace.
Claim trace_lift(const Claim& base, const FieldPtr& target, std::uint32_t l);

/// Union of norm fibres b_i B over M in GF(r)*, q = r^s. Even s: returns the g
/// claim and the eg claim with 0 appended. Odd s: needs a passed base claim over GF(r).
std::vector<Claim> norm_fiber_union(const FieldPtr& F, std::uint32_t s, std::uint32_t l,
                                    const std::optional<Claim>& base = std::nullopt);

/// Claim for a user-supplied set: g with n = |S| when |S| is even, eg with n = |S| + 1 otherwise.
Claim explicit_claim(const FieldPtr& F, std::vector<Element> points, std::string source);

/// All family claims with n <= n_max, one per (n, sigma_kind, family), sorted.
std::vector<Claim> enumerate_claims(const FieldPtr& F, std::uint32_t n_max);

}  // namespace mdssd
