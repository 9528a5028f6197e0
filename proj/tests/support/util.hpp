// Small helpers shared by the test binaries.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mdssd/galois.hpp"
#include "mdssd/grs.hpp"
#include "mdssd/matrix.hpp"
#include "support/naive_field.hpp"

namespace testutil {

inline naive::Field naive_of(const mdssd::Field& F) { return naive::Field(F.p(), F.modulus()); }

inline std::vector<mdssd::Element> elems(std::initializer_list<std::uint32_t> ids) {
  std::vector<mdssd::Element> out;
  for (auto i : ids) out.emplace_back(i);
  return out;
}

inline std::vector<std::uint32_t> indices(const std::vector<mdssd::Element>& v) {
  std::vector<std::uint32_t> out;
  for (auto e : v) out.push_back(e.index);
  return out;
}

inline naive::Rows rows(const mdssd::Matrix& G) {
  naive::Rows out(G.rows(), std::vector<std::uint32_t>(G.cols()));
  for (std::size_t r = 0; r < G.rows(); ++r)
    for (std::size_t c = 0; c < G.cols(); ++c) out[r][c] = G(r, c).index;
  return out;
}

inline mdssd::Matrix matrix(const naive::Rows& R) {
  mdssd::Matrix G(R.size(), R.empty() ? 0 : R[0].size());
  for (std::size_t r = 0; r < G.rows(); ++r)
    for (std::size_t c = 0; c < G.cols(); ++c) G(r, c) = mdssd::Element{R[r][c]};
  return G;
}

// Uniform random subset of the given size, in random order.
inline std::vector<mdssd::Element> random_subset(const mdssd::Field& F, std::size_t size, std::mt19937& rng) {
  std::vector<mdssd::Element> all = F.elements();
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  return all;
}

// Direct pairwise product, in schoolbook arithmetic.
inline std::uint32_t naive_delta(const naive::Field& N, const std::vector<mdssd::Element>& S, mdssd::Element a) {
  std::uint32_t prod = 1;
  for (auto b : S)
    if (b != a) prod = N.mul(prod, N.sub(a.index, b.index));
  return prod;
}

}  // namespace testutil
