// Acceptance run: one PASS/FAIL line per criterion, with the measured runtime
// against its limit. Exits nonzero if any criterion fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "mdssd/catalog.hpp"
#include "mdssd/cli.hpp"
#include "mdssd/errors.hpp"
#include "mdssd/families.hpp"
#include "mdssd/oracle.hpp"
#include "mdssd/pipeline.hpp"
#include "mdssd/polynomial.hpp"
#include "mdssd/serialize.hpp"
#include "support/cyclotomic_oracle.hpp"
#include "support/util.hpp"

using namespace mdssd;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = no runtime limit
  std::function<Outcome()> body;
};

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("mdssd_accept_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  if (out) *out = o.str() + e.str();
  return code;
}

// Schoolbook check of a built code: G G^T = 0, rank N/2, and every k-minor nonzero when cheap enough.
bool naive_self_dual(const CodeArtifact& A) {
  const naive::Field N = testutil::naive_of(A.field());
  const naive::Rows G = testutil::rows(A.matrix);
  for (const auto& a : G)
    for (const auto& b : G)
      if (naive::dot(N, a, b) != 0) return false;
  return naive::rank(N, G) == A.k && 2 * A.k == A.length();
}

Outcome criterion1() {
  std::size_t built = 0, failures = 0;
  for (std::uint32_t r : {3u, 5u, 7u, 9u, 11u, 13u}) {
    auto F = Field::of_order(r * r);
    auto run = [&](std::uint32_t n, SigmaKind kind) {
      const Certified c = certify(subfield_set(F, n, kind));
      ++built;
      if (!c.report || !c.report->all_ok() || !naive_self_dual(*c.artifact)) ++failures;
    };
    for (std::uint32_t n = 2; n <= r - 1; n += 2) run(n, SigmaKind::g);
    for (std::uint32_t n = 4; n <= r + 1; n += 2) run(n, SigmaKind::eg);
  }
  return {failures == 0, std::to_string(built) + " codes over q in {9,25,49,81,121,169}, " +
                             std::to_string(failures) + " failures"};
}

Outcome criterion2() {
  const fs::path dir = scratch("golden");
  const int code = cli({"construct", "--q", "9", "--family", "subfield", "--n", "4", "--out", (dir / "g.json").string()});
  if (code != 0) return {false, "construct exited " + std::to_string(code)};
  const Json j = Json::parse(slurp(dir / "g.json"));
  // f = 1 gives (1,1,1 | 0); f = x gives (0,1,2 | 1) with weights all 1
  const bool matrix = j["matrix"] == Json::parse("[[1,1,1,0],[0,1,2,1]]");
  const bool weights = j["weights"] == Json::parse("[1,1,1]");
  const bool field = j["field"]["modulus"] == Json::parse("[1,0,1]") && j["field"]["generator"] == 4;
  const CodeArtifact A = artifact_from_json(j);
  const std::uint32_t d = brute_min_distance(A.field(), A.matrix);
  const bool ok = matrix && weights && field && d == 3 && cli({"verify", (dir / "g.json").string()}) == 0;
  return {ok, std::string("matrix ") + (matrix ? "exact" : "MISMATCH") + ", weights " + (weights ? "(1,1,1)" : "MISMATCH") +
                  ", field " + (field ? "T^2+1 / T+1" : "MISMATCH") + ", d = " + std::to_string(d)};
}

Outcome criterion3() {
  std::mt19937 rng(31);
  std::size_t instances = 0, violations = 0;
  for (std::uint32_t q : {9u, 25u, 49u, 81u}) {
    auto F = Field::of_order(q);
    const naive::Field N = testutil::naive_of(*F);
    std::vector<std::uint32_t> divisors;
    for (std::uint32_t f = 2; f < q - 1; ++f)
      if ((q - 1) % f == 0) divisors.push_back(f);
    for (int trial = 0; trial < 500; ++trial) {
      // (1) derivative route
      {
        const auto pts = testutil::random_subset(*F, 1 + rng() % std::min<std::uint32_t>(q, 24), rng);
        const EvaluationSet S(F, pts);
        const auto d1 = deltas(S), d2 = deltas_derivative(S);
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (d1[i] != d2[i] || d1[i].index != testutil::naive_delta(N, pts, pts[i])) ++violations;
        ++instances;
      }
      // (2) split
      {
        const std::size_t size = 2 + rng() % std::min<std::uint32_t>(q - 1, 20);
        const auto pts = testutil::random_subset(*F, size, rng);
        const std::size_t cut = 1 + rng() % (size - 1);
        const std::vector<Element> s1(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(cut));
        const std::vector<Element> s2(pts.begin() + static_cast<std::ptrdiff_t>(cut), pts.end());
        const EvaluationSet S(F, pts), S1(F, s1), S2(F, s2);
        const Polynomial f1 = expand_from_roots(*F, s1), f2 = expand_from_roots(*F, s2);
        for (Element b : s1)
          if (delta(S, b) != F->mul(delta(S1, b), eval(*F, f2, b))) ++violations;
        for (Element b : s2)
          if (delta(S, b) != F->mul(delta(S2, b), eval(*F, f1, b))) ++violations;
        ++instances;
      }
      // (3) composition with g = x^f on full fibres
      {
        const std::uint32_t f = divisors[rng() % divisors.size()];
        const std::uint32_t e = (q - 1) / f;
        std::vector<std::uint32_t> exps(e);
        std::iota(exps.begin(), exps.end(), 0u);
        std::shuffle(exps.begin(), exps.end(), rng);
        std::vector<Element> M, S;
        for (std::size_t i = 0; i < 1 + rng() % std::min<std::uint32_t>(e, 6); ++i)
          M.push_back(F->exp(std::int64_t{exps[i]} * f));
        for (Element b : F->elements())
          if (b.index != 0 && std::find(M.begin(), M.end(), F->pow(b, f)) != M.end()) S.push_back(b);
        const EvaluationSet SS(F, S), MM(F, M);
        for (Element b : S) {
          const Element gprime = F->mul(F->from_int(f), F->pow(b, f - 1));
          if (delta(SS, b) != F->mul(delta(MM, F->pow(b, f)), gprime)) ++violations;
        }
        ++instances;
      }
    }
  }
  return {violations == 0, std::to_string(instances) + " instances (500 per part per field), " +
                               std::to_string(violations) + " violations"};
}

Outcome criterion4() {
  cyclo::Tally t;
  for (std::uint32_t r : {5u, 7u, 9u}) cyclo::run(r, 30, t, true);
  std::string detail = std::to_string(t.instances) + " instances, " + std::to_string(t.points) + " points, " +
                       std::to_string(t.violations) + " formula violations, " + std::to_string(t.verified) + "/" +
                       std::to_string(t.passed) + " passed claims verified";
  for (const auto& n : t.notes) detail += "; " + n;
  return {t.instances > 0 && t.violations == 0 && t.verified == t.passed, detail};
}

Outcome criterion5() {
  auto F9 = Field::of_order(9);
  auto F81 = Field::of_order(81);
  std::string detail;
  bool ok = true;
  for (auto [n, kind, expect] : {std::tuple{2u, SigmaKind::g, 18u}, std::tuple{4u, SigmaKind::eg, 28u}}) {
    Claim base = subfield_set(F9, n, kind);
    check_condition(base);
    const Certified c = certify(trace_lift(base, F81, 2));
    const bool good = c.claim.n == expect && c.report && c.report->all_ok() && naive_self_dual(*c.artifact);
    ok = ok && good;
    detail += (detail.empty() ? "" : ", ") + std::to_string(c.claim.n) + " " + (good ? "verified" : "FAILED") +
              (c.report ? " (MDS via " + to_string(c.report->mds_method) + ")" : "");
  }
  return {ok, detail};
}

Outcome criterion6() {
  auto F = Field::of_order(25);
  std::vector<std::uint32_t> lengths;
  bool ok = true;
  for (std::uint32_t l : {1u, 2u}) {
    for (const Claim& c : norm_fiber_union(F, 2, l)) {
      const Certified out = certify(c);
      ok = ok && out.report && out.report->all_ok() && naive_self_dual(*out.artifact);
      lengths.push_back(c.n);
    }
  }
  std::sort(lengths.begin(), lengths.end());
  ok = ok && lengths == std::vector<std::uint32_t>{6, 8, 12, 14};
  std::string detail = "lengths";
  for (auto n : lengths) detail += " " + std::to_string(n);
  return {ok, detail + " over GF(25)"};
}

Outcome criterion7() {
  bool ok = true;
  std::string detail;
  for (auto [q, n] : {std::pair{3u, 2u}, std::pair{3u, 6u}, std::pair{7u, 2u}, std::pair{11u, 2u}}) {
    const auto r = brute_selfdual_exists(Field::of_order(q), n);
    ok = ok && !r.found;
    detail += "(" + std::to_string(q) + "," + std::to_string(n) + ") " + (r.found ? "FOUND" : "none") + "; ";
  }
  auto F9 = Field::of_order(9);
  const auto a = brute_selfdual_exists(F9, 2);
  const bool a_ok = a.found && a.witness_matrix && check_self_dual(*F9, *a.witness_matrix).ok;
  ok = ok && a_ok;
  const auto b = brute_selfdual_exists(F9, 4);
  detail += std::string("(9,2) ") + (a_ok ? "found" : "MISSING") + "; (9,4) recorded: " + (b.found ? "found" : "none");
  return {ok, detail};
}

Outcome criterion8() {
  std::string out;
  const int fail_code = cli({"construct", "--q", "9", "--family", "trace_kernel", "--l", "1", "--d", "1"}, &out);
  const bool witness = out.find("+1") != std::string::npos && out.find("-1") != std::string::npos;
  const fs::path dir = scratch("discrepancy");
  const std::string path = (dir / "tk.json").string();
  const int pass_code = cli({"construct", "--q", "9", "--family", "trace_kernel", "--l", "2", "--d", "1", "--out", path});
  bool artifact_ok = false;
  if (pass_code == 0) {
    const CodeArtifact A = artifact_from_json(Json::parse(slurp(path)));
    artifact_ok = A.kind == CodeKind::egrs && A.length() == 6 && verify(A).all_ok() && naive_self_dual(A) &&
                  brute_min_distance(A.field(), A.matrix) == 4;
  }
  const bool ok = fail_code == kExitConditionFailed && witness && artifact_ok;
  return {ok, "l=1: exit " + std::to_string(fail_code) + (witness ? " with opposite-sign witness" : " NO WITNESS") +
                  "; l=2: exit " + std::to_string(pass_code) +
                  (artifact_ok ? ", verified [6,3,4] EGRS code" : ", artifact NOT verified")};
}

Outcome criterion9() {
  std::size_t passed = 0, witnessed = 0, contradictions = 0;
  for (std::uint32_t q : {9u, 25u}) {
    auto F = Field::of_order(q);
    for (const Claim& c : enumerate_claims(F, 8)) {
      if (c.status != ClaimStatus::passed) continue;
      ++passed;
      const SearchMode mode = c.sigma_kind == SigmaKind::g ? SearchMode::sigma_g : SearchMode::sigma_eg;
      const auto r = brute_sigma(F, c.n, mode);
      if (r.found && build_code(c.code_kind(), EvaluationSet(F, r.witness_set)).second.all_ok()) {
        ++witnessed;
      } else {
        ++contradictions;
      }
    }
  }
  return {passed > 0 && contradictions == 0, std::to_string(witnessed) + "/" + std::to_string(passed) +
                                                 " passed claims have a search witness, " +
                                                 std::to_string(contradictions) + " contradictions"};
}

std::vector<std::string> digests(const fs::path& catalog) {
  std::vector<std::string> out;
  std::ifstream in(catalog);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const Json j = Json::parse(line);
    out.push_back(std::to_string(j["n"].get<int>()) + "/" + j["sigma_kind"].get<std::string>() + "/" +
                  j["family"].get<std::string>() + "/" + j["params_digest"].get<std::string>());
  }
  return out;
}

Outcome criterion10() {
  const fs::path dir = scratch("determinism");
  auto run = [&](const std::string& tag) {
    return cli({"table", "--q", "25", "--max-n", "12", "--out", (dir / tag).string(), "--catalog",
                (dir / (tag + ".jsonl")).string()});
  };
  const int c1 = run("one"), c2 = run("two");
  std::size_t files = 0, identical = 0;
  for (const auto& e : fs::directory_iterator(dir / "one")) {
    ++files;
    const fs::path other = dir / "two" / e.path().filename();
    if (fs::exists(other) && slurp(e.path()) == slurp(other)) ++identical;
  }
  std::size_t files2 = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir / "two")) ++files2;
  const auto d1 = digests(dir / "one.jsonl"), d2 = digests(dir / "two.jsonl");
  const std::size_t before = d1.size();
  run("one");
  const std::size_t after = digests(dir / "one.jsonl").size();
  const bool ok = c1 == 0 && c2 == 0 && files > 0 && identical == files && files2 == files && d1 == d2 &&
                  before == after;
  return {ok, std::to_string(identical) + "/" + std::to_string(files) + " artifacts byte-identical, " +
                  std::to_string(d1.size()) + " catalog digests " + (d1 == d2 ? "identical" : "DIFFER") +
                  ", rerun appended " + std::to_string(after - before)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "subfield family, q in {9..169}", 30, criterion1},
      {2, "golden artifact over GF(9)", 0, criterion2},
      {3, "Delta derivative/split/composition rules", 10, criterion3},
      {4, "cyclotomic character formulas, r in {5,7,9}, tf <= 30", 60, criterion4},
      {5, "trace lifting GF(9) -> GF(81)", 10, criterion5},
      {6, "norm fibres over GF(25)", 5, criterion6},
      {7, "nonexistence by enumeration", 60, criterion7},
      {8, "trace-kernel discrepancy detection", 0, criterion8},
      {9, "oracle containment, q in {9,25}, n <= 8", 120, criterion9},
      {10, "table determinism, q = 25, n <= 12", 0, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs << " s";
    if (c.limit_s > 0) time << " / limit " << static_cast<int>(c.limit_s) << " s";
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " -- " << o.detail
              << " (" << time.str() << (in_time ? "" : ", OVER LIMIT") << ")\n";
  }
  fs::remove_all(fs::temp_directory_path() / ("mdssd_accept_" + std::to_string(::getpid())));
  std::cout << (failures == 0 ? "acceptance: all 10 criteria passed" : "acceptance: " + std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
