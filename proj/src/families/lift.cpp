#include <algorithm>

#include "families_internal.hpp"
#include "mdssd/errors.hpp"

namespace mdssd {

Claim trace_lift(const Claim& base, const FieldPtr& target, std::uint32_t l) {
  const FieldPtr& small = base.field();
  if (base.status != ClaimStatus::passed) throw InvalidArgument("trace_lift: base claim has not passed its condition");
  if (l < 2) throw InvalidArgument("trace_lift: extension degree l must be at least 2");
  if (target->p() != small->p() || target->m() != small->m() * l) {
    throw InvalidArgument("trace_lift: target field is not GF(q^l)");
  }
  const std::uint32_t q = small->q();
  const std::size_t size = base.set.size();
  if (base.sigma_kind == SigmaKind::g && (size % 2 != 0 || size > q - 1)) {
    throw InvalidArgument("trace_lift: g base needs an even set of size at most q - 1");
  }
  if (base.sigma_kind == SigmaKind::eg && (size % 2 != 1 || size > q)) {
    throw InvalidArgument("trace_lift: eg base needs an odd set of size at most q");
  }
  const std::uint32_t Q = target->q();
  const std::uint32_t fibre = Q / q;
  const auto lifted = static_cast<std::uint32_t>(size * fibre);
  const std::uint32_t n = base.sigma_kind == SigmaKind::g ? lifted : lifted + 1;
  require_open(Q, n);

  const Embedding emb(small, target);
  const Subfield sub(target, small->m());
  std::vector<Element> V;
  V.reserve(fibre);
  Element theta;
  bool have_theta = false;
  for (std::uint32_t i = 0; i < Q; ++i) {
    const Element tr = sub.trace(Element{i});
    if (tr.index == 0) V.push_back(Element{i});
    if (!have_theta && tr == target->one()) {
      theta = Element{i};
      have_theta = true;
    }
  }
  if (!have_theta || V.size() != fibre) throw InternalError("trace_lift: trace map is not surjective");

  std::vector<Element> pts;
  pts.reserve(lifted);
  for (Element a : base.set.points()) {
    const Element shift = target->mul(emb(a), theta);
    for (Element c : V) pts.push_back(target->add(shift, c));
  }
  TraceLiftParams params{q, base.n, base.sigma_kind, base.family, base.set.points(), l, Q, theta, emb.root()};
  return detail::make_claim(target, n, base.sigma_kind, Family::trace_lift, std::move(params), std::move(pts));
}

namespace {

// Smallest-index b with b^{fibre} = a, a in GF(r)*.
Element norm_preimage(const Field& F, Element a, std::uint32_t r, std::uint32_t fibre) {
  const std::uint32_t la = F.log(a);
  if (la % fibre != 0) throw InternalError("norm_fiber: norm value outside GF(r)*");
  const std::uint32_t k0 = la / fibre;
  Element best;
  bool found = false;
  for (std::uint64_t k = k0; k < F.q() - 1; k += r - 1) {
    const Element b = F.exp(static_cast<std::int64_t>(k));
    if (!found || b < best) {
      best = b;
      found = true;
    }
  }
  if (!found) throw InternalError("norm_fiber: no norm preimage");
  return best;
}

}  // namespace

std::vector<Claim> norm_fiber_union(const FieldPtr& F, std::uint32_t s, std::uint32_t l,
                                    const std::optional<Claim>& base) {
  if (s < 2 || F->m() % s != 0) throw InvalidArgument("norm_fiber: s must be at least 2 and divide m");
  const std::uint32_t sub_degree = F->m() / s;
  const auto r = static_cast<std::uint32_t>(detail::ipow(F->p(), sub_degree));
  const std::uint32_t fibre = (F->q() - 1) / (r - 1);
  const Subfield gf_r(F, sub_degree);

  std::vector<Element> B;
  B.reserve(fibre);
  for (std::uint32_t k = 0; k < fibre; ++k) B.push_back(F->exp(std::int64_t{k} * (r - 1)));
  std::sort(B.begin(), B.end());

  auto fibres = [&](const std::vector<Element>& reps) {
    std::vector<Element> pts;
    pts.reserve(reps.size() * fibre);
    for (Element b : reps) {
      for (Element c : B) pts.push_back(F->mul(b, c));
    }
    return pts;
  };

  std::vector<Claim> out;
  if (s % 2 == 0) {
    if (l < 1 || l > (r - 1) / 2) throw InvalidArgument("norm_fiber: even s needs 1 <= l <= (r-1)/2");
    const std::uint32_t n = l * fibre;
    require_open(F->q(), n);
    require_open(F->q(), n + 2);
    std::vector<Element> M;
    for (Element a : gf_r.elements()) {
      if (M.size() == l) break;
      if (a.index != 0 && F->pow(a, (r - 1) / 2) == F->one()) M.push_back(a);
    }
    std::vector<Element> reps;
    for (Element a : M) {
      const Element root = *F->sqrt(a);
      const Element bp = norm_preimage(*F, root, r, fibre);
      reps.push_back(F->mul(bp, bp));
    }
    std::vector<Element> pts = fibres(reps);
    NormFiberParams params{r, s, l, fibre, M, reps, false, {}, Element{0}};
    out.push_back(detail::make_claim(F, n, SigmaKind::g, Family::norm_fiber, params, pts));
    pts.push_back(F->zero());
    params.include_zero = true;
    out.push_back(detail::make_claim(F, n + 2, SigmaKind::eg, Family::norm_fiber, std::move(params), std::move(pts)));
    return out;
  }

  if (l < 1 || l > r - 1) throw InvalidArgument("norm_fiber: odd s needs 1 <= l <= r - 1");
  const bool g = l % 2 == 0;
  const std::uint32_t n = g ? l * fibre : l * fibre + 1;
  require_open(F->q(), n);
  if (!base) throw InvalidArgument("norm_fiber: odd s needs a base claim over GF(r)");
  const FieldPtr& small = base->field();
  if (small->p() != F->p() || small->m() != sub_degree) throw InvalidArgument("norm_fiber: base claim is not over GF(r)");
  if (base->status != ClaimStatus::passed) throw InvalidArgument("norm_fiber: base claim has not passed its condition");
  if (base->set.size() != l || base->sigma_kind != (g ? SigmaKind::g : SigmaKind::eg)) {
    throw InvalidArgument("norm_fiber: base claim does not match l");
  }

  // Translate the base set off zero; Delta is translation invariant.
  Element shift{0};
  for (std::uint32_t c = 0; c < r; ++c) {
    const Element ce{c};
    const bool hits_zero = std::any_of(base->set.points().begin(), base->set.points().end(),
                                       [&](Element a) { return small->add(a, ce).index == 0; });
    if (!hits_zero) {
      shift = ce;
      break;
    }
  }
  const Embedding emb(small, F);
  std::vector<Element> M;
  std::vector<Element> reps;
  for (Element a : base->set.points()) {
    const Element img = emb(small->add(a, shift));
    M.push_back(img);
    reps.push_back(norm_preimage(*F, img, r, fibre));
  }
  NormFiberParams params{r, s, l, fibre, M, reps, false, base->set.points(), shift};
  out.push_back(detail::make_claim(F, n, g ? SigmaKind::g : SigmaKind::eg, Family::norm_fiber, std::move(params),
                                   fibres(reps)));
  return out;
}

}  // namespace mdssd
