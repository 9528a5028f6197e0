#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "families_internal.hpp"
#include "mdssd/errors.hpp"

namespace mdssd {

namespace {

using Key = std::tuple<std::uint32_t, SigmaKind, Family>;

class Collector {
 public:
  explicit Collector(std::uint32_t n_max) : n_max_(n_max) {}

  // Keeps the first passing claim per (n, kind, family), else the first one seen.
  void offer(Claim c) {
    if (c.n > n_max_) return;
    if (nonexistence_gate(c.q, c.n) == GateResult::blocked) return;
    if (c.status == ClaimStatus::unverified) check_condition(c);
    const Key key{c.n, c.sigma_kind, c.family};
    auto it = best_.find(key);
    if (it == best_.end()) {
      best_.emplace(key, std::move(c));
    } else if (it->second.status != ClaimStatus::passed && c.status == ClaimStatus::passed) {
      it->second = std::move(c);
    }
  }

  template <class Fn>
  void attempt(Fn&& fn) {
    try {
      fn();
    } catch (const InvalidArgument&) {
    } catch (const BlockedByNonexistence&) {
    }
  }

  bool has_passed(std::uint32_t n, SigmaKind kind, Family family) const {
    auto it = best_.find(Key{n, kind, family});
    return it != best_.end() && it->second.status == ClaimStatus::passed;
  }

  std::vector<Claim> take() {
    std::vector<Claim> out;
    out.reserve(best_.size());
    for (auto& [key, claim] : best_) out.push_back(std::move(claim));
    return out;
  }

  std::uint32_t n_max() const { return n_max_; }

 private:
  std::uint32_t n_max_;
  std::map<Key, Claim> best_;
};

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Passed base claims over a smaller field: prefix sets {first j elements} plus the field's own families.
std::vector<Claim> base_claims(const FieldPtr& small, std::uint32_t max_size) {
  std::vector<Claim> out;
  const std::uint32_t cap = std::min(max_size, small->q());
  for (std::uint32_t j = 1; j <= cap; ++j) {
    std::vector<Element> pts;
    for (std::uint32_t i = 0; i < j; ++i) pts.push_back(Element{i});
    try {
      Claim c = explicit_claim(small, std::move(pts), "prefix");
      check_condition(c);
      if (c.status == ClaimStatus::passed) out.push_back(std::move(c));
    } catch (const InvalidArgument&) {
    } catch (const BlockedByNonexistence&) {
    }
  }
  for (Claim& c : enumerate_claims(small, std::min(max_size + 1, small->q() + 1))) {
    if (c.status == ClaimStatus::passed) out.push_back(std::move(c));
  }
  return out;
}

void add_square_families(const FieldPtr& F, Collector& col) {
  const std::uint32_t r = detail::square_root_order(*F);
  const std::uint32_t n_max = col.n_max();
  const std::uint32_t q1 = F->q() - 1;

  for (std::uint32_t n = 2; n <= std::min(r - 1, n_max); n += 2) {
    col.attempt([&] { col.offer(subfield_set(F, n, SigmaKind::g)); });
  }
  for (std::uint32_t n = 4; n <= std::min(r + 1, n_max); n += 2) {
    col.attempt([&] { col.offer(subfield_set(F, n, SigmaKind::eg)); });
  }

  const std::uint32_t half_m = F->m() / 2;
  for (std::uint32_t l = 1; l <= half_m; ++l) {
    const std::uint64_t vsize = detail::ipow(F->p(), l);
    if (vsize > n_max) break;
    const std::uint64_t kmax = detail::ipow(F->p(), std::gcd(l, half_m));
    for (std::uint32_t k = 1; k <= kmax && k * vsize <= n_max; ++k) {
      col.attempt([&] { col.offer(affine_union(F, l, k)); });
    }
  }

  for (std::uint32_t f : divisors(q1)) {
    if (f > n_max) break;
    for (std::uint32_t t = 1; t * f <= n_max && t <= q1 / f; ++t) {
      for (CyclotomicCase c : {CyclotomicCase::I1, CyclotomicCase::I2A, CyclotomicCase::I2B, CyclotomicCase::II}) {
        col.attempt([&] { col.offer(cyclotomic_union(F, f, t, c)); });
      }
      for (std::uint32_t s = 2; s <= f; s += 2) {
        if (f % s != 0 || (r + 1) % (2 * s) != 0) continue;
        col.attempt([&] {
          for (Claim& c : cyclotomic_union_scaled(F, f, s, t)) col.offer(std::move(c));
        });
      }
    }
  }

  for (std::uint32_t l = 0; l <= r - 1 && l + r <= n_max; ++l) {
    col.attempt([&] { col.offer(trace_kernel_union(F, l, 1)); });
  }
}

void add_norm_fibres(const FieldPtr& F, Collector& col) {
  const std::uint32_t n_max = col.n_max();
  for (std::uint32_t s : divisors(F->m())) {
    if (s < 2) continue;
    const auto r = static_cast<std::uint32_t>(detail::ipow(F->p(), F->m() / s));
    const std::uint32_t fibre = (F->q() - 1) / (r - 1);
    if (fibre > n_max) continue;
    if (s % 2 == 0) {
      for (std::uint32_t l = 1; l <= (r - 1) / 2 && l * fibre <= n_max; ++l) {
        col.attempt([&] {
          for (Claim& c : norm_fiber_union(F, s, l)) col.offer(std::move(c));
        });
      }
      continue;
    }
    const std::uint32_t lmax = std::min(r - 1, n_max / fibre);
    if (lmax == 0) continue;
    const FieldPtr small = Field::make(F->p(), F->m() / s);
    for (const Claim& b : base_claims(small, lmax)) {
      const auto l = static_cast<std::uint32_t>(b.set.size());
      if (l < 1 || l > lmax) continue;
      const SigmaKind kind = l % 2 == 0 ? SigmaKind::g : SigmaKind::eg;
      const std::uint32_t n = kind == SigmaKind::g ? l * fibre : l * fibre + 1;
      if (b.sigma_kind != kind || col.has_passed(n, kind, Family::norm_fiber)) continue;
      col.attempt([&] {
        for (Claim& c : norm_fiber_union(F, s, l, b)) col.offer(std::move(c));
      });
    }
  }
}

void add_trace_lifts(const FieldPtr& F, Collector& col) {
  const std::uint32_t n_max = col.n_max();
  for (std::uint32_t dm : divisors(F->m())) {
    const std::uint32_t l = F->m() / dm;
    if (l < 2) continue;
    const FieldPtr small = Field::make(F->p(), dm);
    const std::uint32_t fibre = F->q() / small->q();
    if (fibre > n_max) continue;
    for (const Claim& b : base_claims(small, n_max / fibre)) {
      const auto size = static_cast<std::uint32_t>(b.set.size());
      const std::uint32_t n = b.sigma_kind == SigmaKind::g ? size * fibre : size * fibre + 1;
      if (n > n_max || col.has_passed(n, b.sigma_kind, Family::trace_lift)) continue;
      col.attempt([&] { col.offer(trace_lift(b, F, l)); });
    }
  }
}

}  // namespace

std::vector<Claim> enumerate_claims(const FieldPtr& F, std::uint32_t n_max) {
  Collector col(n_max);
  if (F->m() % 2 == 0) add_square_families(F, col);
  add_norm_fibres(F, col);
  add_trace_lifts(F, col);
  return col.take();
}

}  // namespace mdssd
