#include <numeric>
#include <set>

#include "families_internal.hpp"
#include "mdssd/errors.hpp"

namespace mdssd {

namespace {

// Smallest subset {i_1 < ... < i_t} of {0, ..., R-1} in lexicographic order whose sum has the given parity.
std::vector<std::uint32_t> first_with_parity(std::uint32_t t, std::uint32_t R, std::uint32_t parity) {
  std::vector<std::uint32_t> idx(t);
  std::iota(idx.begin(), idx.end(), 0u);
  const std::uint64_t sum = std::accumulate(idx.begin(), idx.end(), std::uint64_t{0});
  if (sum % 2 == parity) return idx;
  // The next subset in lexicographic order bumps the last index by one, flipping the parity.
  if (t < R) {
    idx.back() += 1;
    return idx;
  }
  return {};
}

std::vector<Element> coset_union(const Field& F, Element beta, Element alpha, std::uint32_t f,
                                 const std::vector<std::uint32_t>& exponents) {
  std::vector<Element> pts;
  pts.reserve(exponents.size() * f);
  for (std::uint32_t i : exponents) {
    const Element lead = F.pow(beta, i);
    Element x = lead;
    for (std::uint32_t j = 0; j < f; ++j) {
      pts.push_back(x);
      x = F.mul(x, alpha);
    }
  }
  return pts;
}

}  // namespace

Claim cyclotomic_union(const FieldPtr& F, std::uint32_t f, std::uint32_t t, CyclotomicCase which) {
  const std::uint32_t r = detail::square_root_order(*F);
  const std::uint32_t q1 = F->q() - 1;
  if (f == 0 || q1 % f != 0) throw InvalidArgument("cyclotomic: f must divide q - 1");
  if (t < 1) throw InvalidArgument("cyclotomic: t must be at least 1");
  const std::uint32_t e = q1 / f;
  const std::uint32_t R = (r + 1) / std::gcd(r + 1, f);
  const std::uint64_t tf = std::uint64_t{t} * f;
  const std::uint32_t half = static_cast<std::uint32_t>((std::uint64_t{t - 1} * (r + 1) / 2) % 2);

  std::vector<std::uint32_t> indices;
  SigmaKind kind = SigmaKind::g;
  bool include_zero = false;
  std::uint64_t n = 0;
  switch (which) {
    case CyclotomicCase::I1:
      if (tf % 2 != 0 || e % 2 != 0 || t > R) throw InvalidArgument("cyclotomic I1: needs tf even, e even, t <= R");
      indices.resize(t);
      std::iota(indices.begin(), indices.end(), 0u);
      n = tf;
      break;
    case CyclotomicCase::I2A:
      if (tf % 2 != 0 || f % 2 != 0 || t > R || (std::uint64_t{t - 1} * (r + 1)) % 4 != 0) {
        throw InvalidArgument("cyclotomic I2A: needs tf even, f even, 4 | (t-1)(r+1), t <= R");
      }
      indices.resize(t);
      std::iota(indices.begin(), indices.end(), 0u);
      kind = SigmaKind::eg;
      include_zero = true;
      n = tf + 2;
      break;
    case CyclotomicCase::I2B:
      if (tf % 2 != 0 || f % 2 == 0 || t > R) throw InvalidArgument("cyclotomic I2B: needs tf even, f odd, t <= R");
      indices = first_with_parity(t, R, half);
      if (indices.empty()) throw InvalidArgument("cyclotomic I2B: no admissible index tuple");
      kind = SigmaKind::eg;
      include_zero = true;
      n = tf + 2;
      break;
    case CyclotomicCase::II:
      if (tf % 2 == 0 || 2 * t > R) throw InvalidArgument("cyclotomic II: needs tf odd, t <= R/2");
      for (std::uint32_t mu = 1; mu <= t; ++mu) indices.push_back(2 * mu - 1);
      kind = SigmaKind::eg;
      n = tf + 1;
      break;
  }
  require_open(F->q(), n);

  std::set<std::uint32_t> residues;
  for (std::uint32_t i : indices) residues.insert(i % R);
  if (residues.size() != indices.size()) throw InvalidArgument("cyclotomic: indices not distinct modulo R");

  const Element alpha = F->exp(e);
  const Element beta = F->exp(r - 1);
  std::vector<Element> pts = coset_union(*F, beta, alpha, f, indices);
  if (include_zero) pts.push_back(F->zero());
  const std::uint64_t I = std::accumulate(indices.begin(), indices.end(), std::uint64_t{0});
  CyclotomicParams params{r, e, f, t, which, indices, alpha, beta, I, R, include_zero};
  return detail::make_claim(F, static_cast<std::uint32_t>(n), kind, Family::cyclotomic, std::move(params),
                            std::move(pts));
}

std::vector<Claim> cyclotomic_union_scaled(const FieldPtr& F, std::uint32_t f, std::uint32_t s, std::uint32_t t) {
  const std::uint32_t r = detail::square_root_order(*F);
  const std::uint32_t q1 = F->q() - 1;
  if (f == 0 || q1 % f != 0) throw InvalidArgument("cyclotomic_scaled: f must divide q - 1");
  if (s == 0 || s % 2 != 0 || f % s != 0) throw InvalidArgument("cyclotomic_scaled: needs 2 | s | f");
  if ((r + 1) % (2 * s) != 0) throw InvalidArgument("cyclotomic_scaled: needs 2s | r + 1");
  const std::uint64_t sr = std::uint64_t{s} * (r - 1);
  const auto D = static_cast<std::uint32_t>(sr / std::gcd(sr, std::uint64_t{f}));
  if (t < 1 || t > D) throw InvalidArgument("cyclotomic_scaled: needs 1 <= t <= D");
  const std::uint32_t e = q1 / f;
  const std::uint32_t tf = t * f;

  const Element alpha = F->exp(e);
  const Element beta = F->exp((r + 1) / s);
  std::vector<std::uint32_t> exps(t);
  std::iota(exps.begin(), exps.end(), 1u);
  const std::vector<Element> base = coset_union(*F, beta, alpha, f, exps);

  std::vector<Claim> out;
  require_open(F->q(), tf + 2);
  std::vector<Element> with_zero = base;
  with_zero.push_back(F->zero());
  out.push_back(detail::make_claim(F, tf + 2, SigmaKind::eg, Family::cyclotomic_scaled,
                                   ScaledCyclotomicParams{r, e, f, s, t, beta, D, true}, std::move(with_zero)));
  if (e % 2 == 0) {
    require_open(F->q(), tf);
    out.push_back(detail::make_claim(F, tf, SigmaKind::g, Family::cyclotomic_scaled,
                                     ScaledCyclotomicParams{r, e, f, s, t, beta, D, false}, base));
  }
  return out;
}

}  // namespace mdssd
