#include "mdssd/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "mdssd/errors.hpp"

namespace mdssd {

std::pair<CodeArtifact, VerificationReport> build_code(CodeKind kind, const EvaluationSet& S,
                                                       const MdsOptions& options) {
  const WeightVector v = solve_weights(kind, S);
  CodeArtifact A = generator_matrix(kind, S, v);
  VerificationReport report = verify(A, options);
  if (!report.all_ok()) {
    throw InternalError("code built from a passing set failed verification: " +
                        (report.reason.empty() ? std::string("MDS check failed") : report.reason));
  }
  return {std::move(A), std::move(report)};
}

Certified certify(Claim claim, const MdsOptions& options) {
  require_open(claim.q, claim.n);
  check_condition(claim);
  Certified out{std::move(claim), std::nullopt, std::nullopt};
  if (out.claim.status != ClaimStatus::passed) return out;
  auto [A, report] = build_code(out.claim.code_kind(), out.claim.set, options);
  out.artifact = std::move(A);
  out.report = std::move(report);
  return out;
}

Table build_table(const FieldPtr& F, std::uint32_t n_max, unsigned jobs, const MdsOptions& options) {
  Table table;
  table.q = F->q();
  table.n_max = n_max;
  for (std::uint32_t n = 2; n <= n_max; n += 2) {
    if (nonexistence_gate(F->q(), n) == GateResult::blocked) table.blocked.push_back(n);
  }
  std::vector<Claim> claims = enumerate_claims(F, n_max);
  table.entries.reserve(claims.size());
  for (Claim& c : claims) table.entries.push_back(Certified{std::move(c), std::nullopt, std::nullopt});

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(table.entries.size());
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= table.entries.size()) return;
      Certified& e = table.entries[i];
      if (e.claim.status != ClaimStatus::passed) continue;
      try {
        auto [A, report] = build_code(e.claim.code_kind(), e.claim.set, options);
        e.artifact = std::move(A);
        e.report = std::move(report);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(table.entries.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return table;
}

}  // namespace mdssd
