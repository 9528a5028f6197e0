// Schoolbook GF(p^m) arithmetic on coefficient vectors, used as an oracle
// against the table-driven Field. Shares nothing with the library except the
// index encoding sum c_i p^i.
#pragma once

#include <cstdint>
#include <vector>

namespace naive {

using Poly = std::vector<std::int64_t>;  // ascending coefficients mod p

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
inline Poly rem(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
    trim(a);
  }
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod(c[i + j] + a[i] * b[j], p);
  trim(c);
  return c;
}

// True when monic f has no monic factor of degree 1..deg/2 (trial division).
inline bool irreducible(const Poly& f, std::int64_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::int64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct Field {
  std::int64_t p;
  std::size_t m;
  Poly modulus;  // monic, ascending
  std::uint32_t q;

  Field(std::int64_t p_, std::vector<std::uint32_t> modulus_) : p(p_), m(modulus_.size() - 1) {
    for (auto c : modulus_) modulus.push_back(c);
    q = 1;
    for (std::size_t i = 0; i < m; ++i) q *= static_cast<std::uint32_t>(p);
  }

  Poly poly(std::uint32_t idx) const {
    Poly a;
    for (std::size_t i = 0; i < m; ++i) {
      a.push_back(idx % p);
      idx /= static_cast<std::uint32_t>(p);
    }
    trim(a);
    return a;
  }
  std::uint32_t index(const Poly& a) const {
    std::uint32_t idx = 0;
    std::uint32_t scale = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (i < a.size()) idx += static_cast<std::uint32_t>(mod(a[i], p)) * scale;
      scale *= static_cast<std::uint32_t>(p);
    }
    return idx;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Poly x = poly(a), y = poly(b);
    x.resize(m, 0);
    y.resize(m, 0);
    for (std::size_t i = 0; i < m; ++i) x[i] = mod(x[i] + y[i], p);
    return index(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    Poly x = poly(a);
    for (auto& c : x) c = mod(-c, p);
    return index(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return index(rem(naive::mul(poly(a), poly(b), p), modulus, p));
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const { return pow(a, q - 2); }
  // Euler's criterion.
  int eta(std::uint32_t a) const { return pow(a, (q - 1) / 2) == 1 ? 1 : -1; }
  std::uint32_t order(std::uint32_t a) const {
    std::uint32_t x = a, k = 1;
    while (x != 1) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }
};

using Rows = std::vector<std::vector<std::uint32_t>>;

// Rank by schoolbook elimination.
inline std::size_t rank(const Field& F, Rows A) {
  std::size_t r = 0;
  const std::size_t cols = A.empty() ? 0 : A[0].size();
  for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
    std::size_t piv = r;
    while (piv < A.size() && A[piv][c] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[piv], A[r]);
    const std::uint32_t inv = F.inv(A[r][c]);
    for (auto& x : A[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      const std::uint32_t f = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
    }
    ++r;
  }
  return r;
}

inline std::uint32_t dot(const Field& F, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

// Every k-subset of columns has full rank (k = number of rows).
inline bool mds(const Field& F, const Rows& G) {
  const std::size_t k = G.size(), n = G[0].size();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Rows sub(k, std::vector<std::uint32_t>(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub[r][c] = G[r][idx[c]];
    if (rank(F, sub) < k) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace naive
