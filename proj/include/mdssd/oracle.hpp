/**
 * @file oracle.hpp
 * @brief Brute-force ground truth: exhaustive searches for self-dual evaluation
 * sets and self-dual codes, the Lagrange identity behind the weight rule, and
 * exact minimum distance.
 *
 * All searches refuse to run past their caps (CapExceeded) instead of
 * truncating, and report the lexicographically first witness.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdssd/galois.hpp"
#include "mdssd/grs.hpp"
#include "mdssd/matrix.hpp"

namespace mdssd {

enum class SearchMode { sigma_g, sigma_eg, selfdual_any };

std::string to_string(SearchMode m);
/// Accepts "g", "eg", "selfdual-any" (and the enum spellings).
SearchMode search_mode_from_string(const std::string& s);

struct SearchResult {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  SearchMode mode = SearchMode::sigma_g;
  bool found = false;
  std::vector<Element> witness_set;     // sigma modes
  std::optional<Matrix> witness_matrix;  // selfdual_any: [I_k | P]
  std::uint64_t subsets_examined = 0;
};

inline constexpr std::uint64_t kDefaultSubsetCap = 100'000'000;

/// Is there S with |S| = n (g) or n - 1 (eg) meeting the self-duality criterion?
/// With `canonical`, only sets containing {0, 1} are searched (affine reduction).
/// `subsets_examined` counts sets in lexicographic order up to and including the
/// witness, so it does not depend on `jobs`.
SearchResult brute_sigma(const FieldPtr& F, std::uint32_t n, SearchMode mode, bool canonical = true,
                         std::uint64_t cap = kDefaultSubsetCap, unsigned jobs = 1);

/// Searches systematic generators [I_k | P] with P P^T = -I_k, k = n/2. Cap on q^{k^2}.
SearchResult brute_selfdual_exists(const FieldPtr& F, std::uint32_t n, std::uint64_t cap = kDefaultSubsetCap);

/// Sum_i Delta(a_i)^{-1} a_i^s is 0 for s <= n-2 and 1 for s = n-1.
bool lagrange_identity_check(const EvaluationSet& S);

/// Exact minimum Hamming distance of the row space of G. Cap on q^k.
std::uint32_t brute_min_distance(const Field& F, const Matrix& G, std::uint64_t cap = 10'000'000);

}  // namespace mdssd
