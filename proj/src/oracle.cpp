#include "mdssd/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "mdssd/errors.hpp"

namespace mdssd {

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::sigma_g:
      return "g";
    case SearchMode::sigma_eg:
      return "eg";
    case SearchMode::selfdual_any:
      return "selfdual-any";
  }
  return "?";
}

SearchMode search_mode_from_string(const std::string& s) {
  if (s == "g" || s == "sigma_g") return SearchMode::sigma_g;
  if (s == "eg" || s == "sigma_eg") return SearchMode::sigma_eg;
  if (s == "selfdual-any" || s == "selfdual_any") return SearchMode::selfdual_any;
  throw InvalidArgument("unknown search mode '" + s + "'");
}

namespace {

std::uint64_t saturating_pow(std::uint64_t b, std::uint64_t e) {
  constexpr std::uint64_t kSat = std::uint64_t{1} << 62;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > kSat / b) return kSat;
    r *= b;
  }
  return r;
}

// Depth-first walk over subsets in lexicographic order, tracking the parity of
// log Delta for every chosen point.
class SubsetSearch {
 public:
  SubsetSearch(const Field& F, SearchMode mode, std::vector<std::uint32_t> pool, std::size_t size)
      : F_(F), mode_(mode), pool_(std::move(pool)), size_(size), neg_parity_(F.is_square(F.minus_one()) ? 0 : 1) {}

  void push(Element x) {
    std::uint8_t px = 0;
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      const std::uint8_t d = F_.is_square(F_.sub(x, chosen_[i])) ? 0 : 1;
      px ^= d;
      parity_[i] ^= d ^ neg_parity_;
    }
    chosen_.push_back(x);
    parity_.push_back(px);
  }

  void pop() {
    const Element x = chosen_.back();
    chosen_.pop_back();
    parity_.pop_back();
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      const std::uint8_t d = F_.is_square(F_.sub(x, chosen_[i])) ? 0 : 1;
      parity_[i] ^= d ^ neg_parity_;
    }
  }

  bool satisfied() const {
    if (mode_ == SearchMode::sigma_g) {
      return std::all_of(parity_.begin(), parity_.end(), [&](std::uint8_t v) { return v == parity_.front(); });
    }
    return std::all_of(parity_.begin(), parity_.end(), [&](std::uint8_t v) { return (v ^ neg_parity_) == 0; });
  }

  // Continues from pool position `from`; returns true at the first satisfying set.
  bool run(std::size_t from, const std::atomic<bool>* stop) {
    if (chosen_.size() == size_) {
      ++examined_;
      return satisfied();
    }
    const std::size_t need = size_ - chosen_.size();
    for (std::size_t i = from; i + need <= pool_.size(); ++i) {
      if (stop != nullptr && stop->load(std::memory_order_relaxed)) return false;
      push(Element{pool_[i]});
      if (run(i + 1, stop)) return true;
      pop();
    }
    return false;
  }

  const std::vector<Element>& chosen() const { return chosen_; }
  std::uint64_t examined() const { return examined_; }
  const std::vector<std::uint32_t>& pool() const { return pool_; }

 private:
  const Field& F_;
  SearchMode mode_;
  std::vector<std::uint32_t> pool_;
  std::size_t size_;
  std::uint8_t neg_parity_;
  std::vector<Element> chosen_;
  std::vector<std::uint8_t> parity_;
  std::uint64_t examined_ = 0;
};

struct Branch {
  bool found = false;
  std::vector<Element> witness;
  std::uint64_t examined = 0;
};

}  // namespace

SearchResult brute_sigma(const FieldPtr& F, std::uint32_t n, SearchMode mode, bool canonical, std::uint64_t cap,
                         unsigned jobs) {
  if (mode == SearchMode::selfdual_any) throw InvalidArgument("brute_sigma: mode must be g or eg");
  if (n < 2 || n % 2 != 0) throw InvalidArgument("brute_sigma: n must be even and at least 2");
  const std::uint32_t size = mode == SearchMode::sigma_g ? n : n - 1;
  if (size > F->q()) throw InvalidArgument("brute_sigma: set size exceeds q");

  SearchResult out;
  out.q = F->q();
  out.n = n;
  out.mode = mode;

  std::vector<Element> fixed;
  std::vector<std::uint32_t> pool;
  const bool use_fixed = canonical && size >= 2;
  if (use_fixed) fixed = {F->zero(), F->one()};
  for (std::uint32_t i = use_fixed ? 2 : 0; i < F->q(); ++i) pool.push_back(i);
  const std::size_t free = size - fixed.size();
  const std::uint64_t total = binomial(pool.size(), free);
  if (total > cap) {
    throw CapExceeded("brute_sigma: " + std::to_string(total) + " subsets exceed the cap of " + std::to_string(cap));
  }

  auto fresh = [&] {
    SubsetSearch s(*F, mode, pool, size);
    for (Element x : fixed) s.push(x);
    return s;
  };

  if (free == 0) {
    SubsetSearch s = fresh();
    out.found = s.run(0, nullptr);
    out.subsets_examined = s.examined();
    if (out.found) out.witness_set = s.chosen();
    return out;
  }

  // One branch per choice of the first free element, merged in lexicographic order.
  const std::size_t branches = pool.size() - free + 1;
  std::vector<Branch> results(branches);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= branches || b > best.load()) return;
      SubsetSearch s = fresh();
      s.push(Element{pool[b]});
      Branch& r = results[b];
      r.found = s.run(b + 1, nullptr);
      r.examined = s.examined();
      if (r.found) {
        r.witness = s.chosen();
        std::size_t cur = best.load();
        while (b < cur && !best.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(branches)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool_threads;
    for (unsigned t = 0; t < threads; ++t) pool_threads.emplace_back(worker);
    for (auto& th : pool_threads) th.join();
  }

  std::uint64_t examined = 0;
  for (std::size_t b = 0; b < branches; ++b) {
    if (results[b].found) {
      out.found = true;
      out.witness_set = results[b].witness;
      out.subsets_examined = examined + results[b].examined;
      return out;
    }
    examined += binomial(pool.size() - b - 1, free - 1);
  }
  out.subsets_examined = examined;
  return out;
}

SearchResult brute_selfdual_exists(const FieldPtr& F, std::uint32_t n, std::uint64_t cap) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("brute_selfdual_exists: n must be even and at least 2");
  const std::uint32_t k = n / 2;
  const std::uint64_t space = saturating_pow(F->q(), std::uint64_t{k} * k);
  if (space > cap) {
    throw CapExceeded("brute_selfdual_exists: q^(k^2) = " + std::to_string(space) + " exceeds the cap of " +
                      std::to_string(cap));
  }
  const Field& f = *F;
  SearchResult out;
  out.q = F->q();
  out.n = n;
  out.mode = SearchMode::selfdual_any;

  // Rows u of P with u.u = -1, in lexicographic order (first coordinate most significant).
  const std::uint64_t count = saturating_pow(F->q(), k);
  std::vector<std::vector<Element>> rows;
  std::vector<Element> v(k);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = k; i-- > 0;) {
      v[i] = Element{static_cast<std::uint32_t>(c % F->q())};
      c /= F->q();
    }
    Element dot = f.zero();
    for (Element x : v) dot = f.add(dot, f.mul(x, x));
    ++out.subsets_examined;
    if (dot == f.minus_one()) rows.push_back(v);
  }

  auto orthogonal = [&](const std::vector<Element>& a, const std::vector<Element>& b) {
    Element dot = f.zero();
    for (std::uint32_t i = 0; i < k; ++i) dot = f.add(dot, f.mul(a[i], b[i]));
    return dot.index == 0;
  };

  std::vector<std::size_t> pick;
  auto dfs = [&](auto&& self) -> bool {
    if (pick.size() == k) return true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ++out.subsets_examined;
      bool ok = true;
      for (std::size_t j : pick) {
        if (!orthogonal(rows[i], rows[j])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pick.push_back(i);
      if (self(self)) return true;
      pick.pop_back();
    }
    return false;
  };
  out.found = dfs(dfs);
  if (out.found) {
    Matrix G(k, n);
    for (std::uint32_t i = 0; i < k; ++i) {
      G(i, i) = f.one();
      for (std::uint32_t j = 0; j < k; ++j) G(i, k + j) = rows[pick[i]][j];
    }
    out.witness_matrix = std::move(G);
  }
  return out;
}

bool lagrange_identity_check(const EvaluationSet& S) {
  const Field& F = *S.field();
  const std::vector<Element> d = deltas(S);
  const std::size_t n = S.size();
  std::vector<Element> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = F.inv(d[i]);
  std::vector<Element> power(n, F.one());
  for (std::size_t s = 0; s < n; ++s) {
    Element sum = F.zero();
    for (std::size_t i = 0; i < n; ++i) sum = F.add(sum, F.mul(inv[i], power[i]));
    const Element expected = s + 1 == n ? F.one() : F.zero();
    if (sum != expected) return false;
    for (std::size_t i = 0; i < n; ++i) power[i] = F.mul(power[i], S.points()[i]);
  }
  return true;
}

std::uint32_t brute_min_distance(const Field& F, const Matrix& G, std::uint64_t cap) {
  const std::size_t k = G.rows();
  const std::size_t N = G.cols();
  if (k == 0) throw InvalidArgument("brute_min_distance: empty generator matrix");
  const std::uint64_t space = saturating_pow(F.q(), k);
  if (space > cap) {
    throw CapExceeded("brute_min_distance: q^k = " + std::to_string(space) + " exceeds the cap of " +
                      std::to_string(cap));
  }
  // Scalar multiples share a weight, so only messages whose leading nonzero entry is 1 are visited.
  std::uint32_t best = static_cast<std::uint32_t>(N) + 1;
  std::vector<Element> msg(k);
  std::vector<Element> word(N);
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t tail = k - lead - 1;
    const std::uint64_t count = saturating_pow(F.q(), tail);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::fill(msg.begin(), msg.end(), F.zero());
      msg[lead] = F.one();
      std::uint64_t c = code;
      for (std::size_t i = k; i-- > lead + 1;) {
        msg[i] = Element{static_cast<std::uint32_t>(c % F.q())};
        c /= F.q();
      }
      std::uint32_t weight = 0;
      for (std::size_t j = 0; j < N; ++j) {
        Element x = F.zero();
        for (std::size_t i = lead; i < k; ++i) x = F.add(x, F.mul(msg[i], G(i, j)));
        if (x.index != 0) ++weight;
      }
      best = std::min(best, weight);
    }
  }
  return best;
}

}  // namespace mdssd
