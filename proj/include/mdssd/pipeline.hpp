/**
 * @file pipeline.hpp
 * @brief Claim to verified code: gate, criterion, weights, generator matrix,
 * self-duality and MDS checks.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdssd/families.hpp"
#include "mdssd/grs.hpp"

namespace mdssd {

struct Certified {
  Claim claim;
  std::optional<CodeArtifact> artifact;      // present when the criterion held
  std::optional<VerificationReport> report;  // idem; always all_ok()
};

/// Runs the whole pipeline on a claim. A failed criterion is returned as data
/// (claim.status == failed, no artifact). Throws BlockedByNonexistence for a
/// blocked length and InternalError if a code built from a passing set does
/// not verify.
Certified certify(Claim claim, const MdsOptions& options = {});

/// Weights, matrix and verification for a set already known to pass.
std::pair<CodeArtifact, VerificationReport> build_code(CodeKind kind, const EvaluationSet& S,
                                                       const MdsOptions& options = {});

struct Table {
  std::uint32_t q = 0;
  std::uint32_t n_max = 0;
  std::vector<std::uint32_t> blocked;  // even lengths refused by the gate
  std::vector<Certified> entries;      // enumerate_claims order
};

/// Enumerates every family claim up to n_max and certifies the passing ones,
/// `jobs` at a time. The result does not depend on `jobs`.
Table build_table(const FieldPtr& F, std::uint32_t n_max, unsigned jobs = 1, const MdsOptions& options = {});

}  // namespace mdssd
