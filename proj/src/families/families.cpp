#include "mdssd/families.hpp"

#include <algorithm>
#include <numeric>

#include "families_internal.hpp"
#include "mdssd/errors.hpp"

namespace mdssd {

std::string to_string(SigmaKind k) { return k == SigmaKind::g ? "g" : "eg"; }

std::string to_string(Family f) {
  switch (f) {
    case Family::subfield:
      return "subfield";
    case Family::affine_union:
      return "affine_union";
    case Family::cyclotomic:
      return "cyclotomic";
    case Family::cyclotomic_scaled:
      return "cyclotomic_scaled";
    case Family::trace_kernel:
      return "trace_kernel";
    case Family::trace_lift:
      return "trace_lift";
    case Family::norm_fiber:
      return "norm_fiber";
    case Family::explicit_set:
      return "explicit";
  }
  return "?";
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::unverified:
      return "unverified";
    case ClaimStatus::passed:
      return "passed";
    case ClaimStatus::failed:
      return "failed";
  }
  return "?";
}

std::string to_string(CyclotomicCase c) {
  switch (c) {
    case CyclotomicCase::I1:
      return "I1";
    case CyclotomicCase::I2A:
      return "I2A";
    case CyclotomicCase::I2B:
      return "I2B";
    case CyclotomicCase::II:
      return "II";
  }
  return "?";
}

SigmaKind sigma_kind_from_string(const std::string& s) {
  if (s == "g") return SigmaKind::g;
  if (s == "eg") return SigmaKind::eg;
  throw InvalidArgument("unknown sigma kind '" + s + "'");
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::subfield, Family::affine_union, Family::cyclotomic, Family::cyclotomic_scaled,
                   Family::trace_kernel, Family::trace_lift, Family::norm_fiber, Family::explicit_set}) {
    if (to_string(f) == s) return f;
  }
  throw InvalidArgument("unknown family '" + s + "'");
}

ClaimStatus claim_status_from_string(const std::string& s) {
  for (ClaimStatus c : {ClaimStatus::unverified, ClaimStatus::passed, ClaimStatus::failed}) {
    if (to_string(c) == s) return c;
  }
  throw InvalidArgument("unknown claim status '" + s + "'");
}

CyclotomicCase cyclotomic_case_from_string(const std::string& s) {
  for (CyclotomicCase c : {CyclotomicCase::I1, CyclotomicCase::I2A, CyclotomicCase::I2B, CyclotomicCase::II}) {
    if (to_string(c) == s) return c;
  }
  throw InvalidArgument("unknown cyclotomic case '" + s + "'");
}

GateResult nonexistence_gate(std::uint64_t q, std::uint64_t n) {
  return (q % 4 == 3 && n % 4 == 2) ? GateResult::blocked : GateResult::open;
}

void require_open(std::uint64_t q, std::uint64_t n) {
  if (nonexistence_gate(q, n) == GateResult::blocked) {
    throw BlockedByNonexistence("blocked by nonexistence theorem: no self-dual code of length " +
                                std::to_string(n) + " over GF(" + std::to_string(q) + ")");
  }
}

void check_condition(Claim& claim) {
  const Field& F = *claim.field();
  if (claim.sigma_kind == SigmaKind::g) {
    const auto c = grs_condition(claim.set);
    claim.status = c.uniform ? ClaimStatus::passed : ClaimStatus::failed;
    if (c.witness) claim.failure_witness = c.witness->describe(F);
  } else {
    const auto c = egrs_condition(claim.set);
    claim.status = c.ok ? ClaimStatus::passed : ClaimStatus::failed;
    if (c.witness) claim.failure_witness = c.witness->describe(F);
  }
  if (claim.status == ClaimStatus::passed) claim.failure_witness.reset();
}

namespace detail {

std::uint64_t ipow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::uint32_t square_root_order(const Field& F) {
  if (F.m() % 2 != 0) {
    throw InvalidArgument("GF(" + std::to_string(F.q()) + ") is not a quadratic extension GF(r^2)");
  }
  return static_cast<std::uint32_t>(ipow(F.p(), F.m() / 2));
}

Claim make_claim(const FieldPtr& F, std::uint32_t n, SigmaKind kind, Family family, FamilyParams params,
                 std::vector<Element> points) {
  const std::size_t expected = kind == SigmaKind::g ? n : n - 1;
  if (n % 2 != 0 || points.size() != expected) {
    throw InternalError("claim length " + std::to_string(n) + " does not match set size " +
                        std::to_string(points.size()));
  }
  std::string provenance = to_string(family) + ":" + to_string(kind) + ":" + std::to_string(n);
  return Claim{F->q(), n, kind, family, std::move(params), EvaluationSet(F, std::move(points), provenance)};
}

}  // namespace detail

using detail::make_claim;
using detail::square_root_order;

Claim subfield_set(const FieldPtr& F, std::uint32_t n, SigmaKind kind) {
  require_open(F->q(), n);
  const std::uint32_t r = square_root_order(*F);
  if (n % 2 != 0) throw InvalidArgument("subfield: n must be even");
  std::size_t size = 0;
  if (kind == SigmaKind::g) {
    if (n < 2 || n > r - 1) throw InvalidArgument("subfield: g needs 2 <= n <= r - 1");
    size = n;
  } else {
    if (n < 4 || n > r + 1) throw InvalidArgument("subfield: eg needs 4 <= n <= r + 1");
    size = n - 1;
  }
  const Subfield sub(F, F->m() / 2);
  std::vector<Element> pts(sub.elements().begin(), sub.elements().begin() + static_cast<std::ptrdiff_t>(size));
  return make_claim(F, n, kind, Family::subfield, SubfieldParams{r, n, kind}, std::move(pts));
}

Claim affine_union(const FieldPtr& F, std::uint32_t l, std::uint32_t k) {
  const std::uint32_t r = square_root_order(*F);
  const std::uint32_t p = F->p();
  const std::uint32_t m = F->m() / 2;
  if (l < 1 || l > m) throw InvalidArgument("affine_union: needs 1 <= l <= m");
  const std::uint32_t d = std::gcd(l, m);
  const auto small = static_cast<std::uint32_t>(detail::ipow(p, d));
  if (k < 1 || k > small) throw InvalidArgument("affine_union: needs 1 <= k <= p^gcd(l,m)");
  const auto vsize = static_cast<std::uint32_t>(detail::ipow(p, l));
  const std::uint32_t n = (k % 2 == 0) ? k * vsize : k * vsize + 1;
  require_open(F->q(), n);

  const Subfield gf_r(F, m);
  const Subfield gf_s(F, d);
  const std::uint32_t l_prime = l / d;

  // Greedy GF(p^d)-basis of GF(r), smallest indices first; V spans the first l' vectors.
  std::vector<bool> in_span(F->q(), false);
  std::vector<Element> span{F->zero()};
  in_span[0] = true;
  std::vector<Element> basis;
  for (Element x : gf_r.elements()) {
    if (basis.size() == l_prime) break;
    if (in_span[x.index]) continue;
    basis.push_back(x);
    std::vector<Element> grown;
    grown.reserve(span.size() * gf_s.order());
    for (Element c : gf_s.elements()) {
      const Element cx = F->mul(c, x);
      for (Element s : span) grown.push_back(F->add(s, cx));
    }
    span = std::move(grown);
    for (Element s : span) in_span[s.index] = true;
  }
  std::sort(span.begin(), span.end());
  if (span.size() != vsize) throw InternalError("affine_union: subspace has the wrong size");

  Element gamma;
  bool found = false;
  for (std::uint32_t i = 0; i < F->q() && !found; ++i) {
    if (!gf_r.contains(Element{i})) {
      gamma = Element{i};
      found = true;
    }
  }
  if (!found) throw InternalError("affine_union: no element outside GF(r)");

  std::vector<Element> b(gf_s.elements().begin(), gf_s.elements().begin() + k);
  std::vector<Element> pts;
  pts.reserve(static_cast<std::size_t>(k) * vsize);
  for (Element bi : b) {
    const Element shift = F->mul(bi, gamma);
    for (Element c : span) pts.push_back(F->add(shift, c));
  }
  AffineParams params{p, m, l, k, d, l_prime, small, basis, gamma, b};
  const SigmaKind kind = (k % 2 == 0) ? SigmaKind::g : SigmaKind::eg;
  (void)r;
  return make_claim(F, n, kind, Family::affine_union, std::move(params), std::move(pts));
}

Claim trace_kernel_union(const FieldPtr& F, std::uint32_t l, std::uint32_t d) {
  const std::uint32_t r = square_root_order(*F);
  if (d > 1) throw InvalidArgument("trace_kernel: d must be 0 or 1");
  if (l > r - 1) throw InvalidArgument("trace_kernel: needs 0 <= l <= r - 1");
  const bool g = (l + d) % 2 == 0;
  const std::uint32_t n = l + d * r + (g ? 0 : 1);
  require_open(F->q(), n);
  if (d == 0) return subfield_set(F, n, g ? SigmaKind::g : SigmaKind::eg);

  const Subfield gf_r(F, F->m() / 2);
  std::vector<Element> M(gf_r.elements().begin() + 1, gf_r.elements().begin() + 1 + l);
  std::vector<Element> V;
  for (std::uint32_t i = 0; i < F->q(); ++i) {
    if (gf_r.trace(Element{i}).index == 0) V.push_back(Element{i});
  }
  std::vector<Element> pts = M;
  pts.insert(pts.end(), V.begin(), V.end());
  TraceKernelParams params{r, l, d, M, V};
  return make_claim(F, n, g ? SigmaKind::g : SigmaKind::eg, Family::trace_kernel, std::move(params),
                    std::move(pts));
}

Claim explicit_claim(const FieldPtr& F, std::vector<Element> points, std::string source) {
  const bool g = points.size() % 2 == 0;
  const auto n = static_cast<std::uint32_t>(g ? points.size() : points.size() + 1);
  require_open(F->q(), n);
  return make_claim(F, n, g ? SigmaKind::g : SigmaKind::eg, Family::explicit_set, ExplicitParams{std::move(source)},
                    std::move(points));
}

}  // namespace mdssd
