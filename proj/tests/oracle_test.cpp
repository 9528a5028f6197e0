#include <doctest.h>

#include <random>

#include "mdssd/errors.hpp"
#include "mdssd/families.hpp"
#include "mdssd/oracle.hpp"
#include "mdssd/pipeline.hpp"
#include "support/util.hpp"

using namespace mdssd;
using testutil::elems;
using testutil::indices;
using testutil::naive_of;

namespace {

// Does any subset of the given size pass the criterion? Plain bitmask enumeration with schoolbook arithmetic.
bool naive_sigma(const Field& F, std::size_t size, bool grs) {
  const naive::Field N = naive_of(F);
  const std::uint32_t q = F.q();
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
    std::vector<Element> S;
    for (std::uint32_t i = 0; i < q; ++i)
      if (mask & (1u << i)) S.emplace_back(i);
    bool ok = true;
    const int first = N.eta(testutil::naive_delta(N, S, S[0]));
    for (Element a : S) {
      const std::uint32_t d = testutil::naive_delta(N, S, a);
      ok = ok && (grs ? N.eta(d) == first : N.eta(N.neg(d)) == 1);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("oracle: sigma search") {
  TEST_CASE("examples") {
    auto F9 = Field::of_order(9);
    const auto a = brute_sigma(F9, 2, SearchMode::sigma_g);
    CHECK(a.found);
    CHECK(indices(a.witness_set) == std::vector<std::uint32_t>{0, 1});
    const auto b = brute_sigma(F9, 4, SearchMode::sigma_eg);
    CHECK(b.found);
    CHECK(indices(b.witness_set) == std::vector<std::uint32_t>{0, 1, 2});
    const auto c = brute_sigma(Field::of_order(3), 2, SearchMode::sigma_g);
    CHECK_FALSE(c.found);
    CHECK(c.witness_set.empty());
  }

  TEST_CASE("4 in Sigma(g, 9) is decided by search and the witness passes the criterion") {
    auto F = Field::of_order(9);
    const auto r = brute_sigma(F, 4, SearchMode::sigma_g);
    CHECK(r.found == naive_sigma(*F, 4, true));
    if (r.found) {
      const EvaluationSet S(F, r.witness_set);
      CHECK(grs_condition(S).uniform);
      CHECK(build_code(CodeKind::grs, S).second.all_ok());
    }
  }

  TEST_CASE("search agrees with bitmask enumeration for q <= 13") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
      auto F = Field::of_order(q);
      for (std::uint32_t n = 2; n <= q + 1; n += 2) {
        CAPTURE(q);
        CAPTURE(n);
        const bool g_truth = n <= q && naive_sigma(*F, n, true);
        const bool eg_truth = naive_sigma(*F, n - 1, false);
        if (n <= q) {
          const auto canon = brute_sigma(F, n, SearchMode::sigma_g, true);
          const auto full = brute_sigma(F, n, SearchMode::sigma_g, false);
          CHECK(canon.found == g_truth);
          CHECK(full.found == g_truth);
        }
        const auto canon = brute_sigma(F, n, SearchMode::sigma_eg, true);
        const auto full = brute_sigma(F, n, SearchMode::sigma_eg, false);
        CHECK(canon.found == eg_truth);
        CHECK(full.found == eg_truth);
        if (full.found) CHECK(full.witness_set <= canon.witness_set);
      }
    }
  }

  TEST_CASE("result does not depend on the number of jobs") {
    for (auto [q, n, mode] : {std::tuple{25u, 6u, SearchMode::sigma_g}, std::tuple{27u, 8u, SearchMode::sigma_eg},
                              std::tuple{19u, 6u, SearchMode::sigma_eg}, std::tuple{11u, 6u, SearchMode::sigma_g}}) {
      auto F = Field::of_order(q);
      const auto one = brute_sigma(F, n, mode, true, kDefaultSubsetCap, 1);
      for (unsigned jobs : {2u, 3u, 5u}) {
        const auto many = brute_sigma(F, n, mode, true, kDefaultSubsetCap, jobs);
        CHECK(many.found == one.found);
        CHECK(many.witness_set == one.witness_set);
        CHECK(many.subsets_examined == one.subsets_examined);
      }
    }
  }

  TEST_CASE("caps and preconditions") {
    auto F = Field::of_order(81);
    CHECK_THROWS_AS(brute_sigma(F, 20, SearchMode::sigma_g, true, 1000), CapExceeded);
    CHECK_THROWS_AS(brute_sigma(F, 3, SearchMode::sigma_g), InvalidArgument);
    CHECK_THROWS_AS(brute_selfdual_exists(Field::of_order(9), 8), CapExceeded);
    CHECK_THROWS_AS(brute_min_distance(*F, testutil::matrix(naive::Rows(5, std::vector<std::uint32_t>(6, 1))), 1000),
                    CapExceeded);
  }
}

TEST_SUITE("oracle: self-dual existence") {
  TEST_CASE("examples") {
    CHECK_FALSE(brute_selfdual_exists(Field::of_order(3), 2).found);
    const auto r = brute_selfdual_exists(Field::of_order(9), 2);
    CHECK(r.found);
    REQUIRE(r.witness_matrix.has_value());
    CHECK(check_self_dual(*Field::of_order(9), *r.witness_matrix).ok);
    CHECK_FALSE(brute_selfdual_exists(Field::of_order(3), 6).found);
  }

  TEST_CASE("nothing exists where the gate blocks, within the cap") {
    const std::pair<std::uint32_t, std::uint32_t> blocked[] = {{3, 2}, {3, 6}, {7, 2}, {11, 2}, {19, 2},
                                                               {23, 2}, {27, 2}, {31, 2}, {43, 2}};
    for (auto [q, n] : blocked) {
      CAPTURE(q);
      REQUIRE(nonexistence_gate(q, n) == GateResult::blocked);
      CHECK_FALSE(brute_selfdual_exists(Field::of_order(q), n).found);
    }
  }

  TEST_CASE("witnesses are self-dual where codes exist") {
    const std::pair<std::uint32_t, std::uint32_t> open[] = {{3, 4}, {5, 2}, {9, 4}, {13, 2}, {7, 4}, {5, 4}};
    for (auto [q, n] : open) {
      CAPTURE(q);
      auto F = Field::of_order(q);
      const auto r = brute_selfdual_exists(F, n);
      CHECK(r.found);
      if (r.witness_matrix) CHECK(check_self_dual(*F, *r.witness_matrix).ok);
    }
  }
}

TEST_SUITE("oracle: Lagrange identity") {
  TEST_CASE("examples") {
    auto F = Field::of_order(9);
    CHECK(lagrange_identity_check(EvaluationSet(F, elems({0, 1, 2}))));
    CHECK(lagrange_identity_check(EvaluationSet(F, elems({0, 1}))));
    CHECK(lagrange_identity_check(EvaluationSet(F, elems({7}))));
  }

  TEST_CASE("holds on 500 random sets per field") {
    std::mt19937 rng(21);
    for (std::uint32_t q : {9u, 25u, 49u, 81u}) {
      auto F = Field::of_order(q);
      for (int trial = 0; trial < 500; ++trial) {
        const auto pts = testutil::random_subset(*F, 1 + rng() % std::min<std::uint32_t>(q, 30), rng);
        REQUIRE(lagrange_identity_check(EvaluationSet(F, pts)));
      }
    }
  }
}

TEST_SUITE("oracle: minimum distance") {
  TEST_CASE("examples") {
    auto F = Field::of_order(9);
    CHECK(brute_min_distance(*F, testutil::matrix({{1, 1, 1, 0}, {0, 1, 2, 1}})) == 3);
    CHECK(brute_min_distance(*F, testutil::matrix({{3, 1}})) == 2);
    CHECK(brute_min_distance(*F, testutil::matrix({{1, 0}, {0, 1}})) == 1);
  }

  TEST_CASE("verified family codes meet the Singleton bound") {
    std::size_t checked = 0;
    for (std::uint32_t q : {9u, 25u, 27u, 49u, 81u}) {
      auto F = Field::of_order(q);
      for (const Claim& c : enumerate_claims(F, std::min<std::uint32_t>(q + 1, 14))) {
        if (c.status != ClaimStatus::passed) continue;
        const Certified out = certify(c);
        REQUIRE(out.artifact.has_value());
        const CodeArtifact& A = *out.artifact;
        double words = 1;
        for (std::size_t i = 0; i < A.k; ++i) words *= q;
        if (words > 2e6) continue;
        CAPTURE(q);
        CAPTURE(c.n);
        CHECK(brute_min_distance(*F, A.matrix) == A.length() - A.k + 1);
        ++checked;
      }
    }
    CHECK(checked > 20);
  }
}

TEST_SUITE("oracle: containment") {
  TEST_CASE("every passed claim for q in {9, 25}, n <= 8 has a search witness") {
    for (std::uint32_t q : {9u, 25u}) {
      auto F = Field::of_order(q);
      for (const Claim& c : enumerate_claims(F, 8)) {
        CAPTURE(q);
        CAPTURE(c.n);
        const SearchMode mode = c.sigma_kind == SigmaKind::g ? SearchMode::sigma_g : SearchMode::sigma_eg;
        const auto r = brute_sigma(F, c.n, mode);
        if (c.status == ClaimStatus::passed) CHECK(r.found);
        if (r.found) {
          const EvaluationSet S(F, r.witness_set);
          CHECK(build_code(c.code_kind(), S).second.all_ok());
        }
      }
    }
  }
}
