#include "mdssd/serialize.hpp"

#include <cstdio>

#include "mdssd/errors.hpp"

namespace mdssd {

namespace {

Json indices(const std::vector<Element>& v) {
  Json out = Json::array();
  for (Element e : v) out.push_back(e.index);
  return out;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedArtifact(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint32_t as_u32(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw MalformedArtifact(std::string("'") + what + "' must be a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffull) throw MalformedArtifact(std::string("'") + what + "' out of range");
  return static_cast<std::uint32_t>(v);
}

std::vector<Element> element_list(const Json& j, const Field& F, const char* what) {
  if (!j.is_array()) throw MalformedArtifact(std::string("'") + what + "' must be an array");
  std::vector<Element> out;
  out.reserve(j.size());
  for (const Json& x : j) {
    const Element e{as_u32(x, what)};
    if (!F.contains(e)) throw MalformedArtifact(std::string("'") + what + "' has an element outside the field");
    out.push_back(e);
  }
  return out;
}

}  // namespace

Json to_json(const Field& F) {
  return Json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}, {"generator", F.generator().index}};
}

FieldPtr field_from_json(const Json& j) {
  const std::uint32_t p = as_u32(member(j, "p"), "p");
  const std::uint32_t m = as_u32(member(j, "m"), "m");
  std::vector<std::uint32_t> modulus;
  for (const Json& c : member(j, "modulus")) modulus.push_back(as_u32(c, "modulus"));
  const std::uint32_t generator = as_u32(member(j, "generator"), "generator");
  FieldPtr F;
  try {
    F = Field::make(p, m, modulus);
  } catch (const InvalidArgument& e) {
    throw MalformedArtifact(std::string("field reconstruction failed: ") + e.what());
  }
  if (F->generator().index != generator) {
    throw MalformedArtifact("field reconstruction mismatch: stored generator " + std::to_string(generator) +
                            ", recomputed " + std::to_string(F->generator().index));
  }
  return F;
}

Json params_to_json(const FamilyParams& params) {
  return std::visit(
      Overloaded{
          [](const SubfieldParams& p) { return Json{{"r", p.r}, {"n", p.n}, {"kind", to_string(p.kind)}}; },
          [](const AffineParams& p) {
            return Json{{"p", p.p},         {"m", p.m},
                        {"l", p.l},         {"k", p.k},
                        {"d", p.d},         {"l_prime", p.l_prime},
                        {"subfield_order", p.subfield_order},
                        {"basis", indices(p.basis)},
                        {"gamma", p.gamma.index},
                        {"b", indices(p.b)}};
          },
          [](const CyclotomicParams& p) {
            return Json{{"r", p.r},           {"e", p.e},
                        {"f", p.f},           {"t", p.t},
                        {"case", to_string(p.which)},
                        {"indices", p.indices},
                        {"alpha", p.alpha.index},
                        {"beta", p.beta.index},
                        {"I", p.index_sum},   {"R", p.R},
                        {"include_zero", p.include_zero}};
          },
          [](const ScaledCyclotomicParams& p) {
            return Json{{"r", p.r}, {"e", p.e}, {"f", p.f}, {"s", p.s}, {"t", p.t}, {"beta", p.beta.index},
                        {"D", p.D}, {"include_zero", p.include_zero}};
          },
          [](const TraceKernelParams& p) {
            return Json{{"r", p.r}, {"l", p.l}, {"d", p.d}, {"M", indices(p.M)}, {"V", indices(p.V)}};
          },
          [](const TraceLiftParams& p) {
            return Json{{"base_q", p.base_q},
                        {"base_n", p.base_n},
                        {"base_kind", to_string(p.base_kind)},
                        {"base_family", to_string(p.base_family)},
                        {"base_set", indices(p.base_set)},
                        {"l", p.l},
                        {"Q", p.Q},
                        {"theta", p.theta.index},
                        {"embedding_root", p.embedding_root.index}};
          },
          [](const NormFiberParams& p) {
            Json j{{"r", p.r},
                   {"s", p.s},
                   {"l", p.l},
                   {"fiber_size", p.fiber_size},
                   {"M", indices(p.M)},
                   {"representatives", indices(p.representatives)},
                   {"include_zero", p.include_zero}};
            if (p.s % 2 == 1) {
              j["base_set"] = indices(p.base_set);
              j["translation"] = p.translation.index;
            }
            return j;
          },
          [](const ExplicitParams& p) { return Json{{"source", p.source}}; },
      },
      params);
}

Json to_json(const Claim& c) {
  Json j{{"q", c.q},
         {"n", c.n},
         {"sigma_kind", to_string(c.sigma_kind)},
         {"family", to_string(c.family)},
         {"params", params_to_json(c.params)},
         {"set", indices(c.set.points())},
         {"status", to_string(c.status)}};
  if (c.failure_witness) j["failure_witness"] = *c.failure_witness;
  return j;
}

Json to_json(const VerificationReport& r, const Field& F) {
  Json j{{"condition", r.condition_ok},
         {"self_dual", r.self_dual_ok},
         {"rank", r.rank_ok},
         {"mds", r.mds_ok},
         {"mds_method", to_string(r.mds_method)}};
  if (r.condition_witness) j["condition_witness"] = r.condition_witness->describe(F);
  if (!r.mds_witness.empty()) j["mds_witness"] = r.mds_witness;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const CodeArtifact& A, const VerificationReport& report, const Claim* claim) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < A.matrix.rows(); ++i) {
    Json row = Json::array();
    for (Element e : A.matrix.row(i)) row.push_back(e.index);
    rows.push_back(std::move(row));
  }
  Json j{{"field", to_json(A.field())},
         {"kind", to_string(A.kind)},
         {"n", A.length()},
         {"k", A.k},
         {"evaluation_set", indices(A.set.points())},
         {"weights", indices(A.weights.entries())},
         {"matrix", std::move(rows)},
         {"verification", to_json(report, A.field())}};
  if (claim != nullptr) j["claim"] = to_json(*claim);
  return j;
}

Json to_json(const SearchResult& r) {
  Json j{{"q", r.q},
         {"n", r.n},
         {"mode", to_string(r.mode)},
         {"found", r.found},
         {"subsets_examined", r.subsets_examined}};
  if (r.found && r.mode != SearchMode::selfdual_any) j["witness"] = indices(r.witness_set);
  if (r.witness_matrix) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.witness_matrix->rows(); ++i) {
      Json row = Json::array();
      for (Element e : r.witness_matrix->row(i)) row.push_back(e.index);
      rows.push_back(std::move(row));
    }
    j["witness_matrix"] = std::move(rows);
  }
  return j;
}

CodeArtifact artifact_from_json(const Json& j) {
  const FieldPtr F = field_from_json(member(j, "field"));
  const Json& kind_j = member(j, "kind");
  if (!kind_j.is_string()) throw MalformedArtifact("'kind' must be a string");
  CodeKind kind;
  try {
    kind = code_kind_from_string(kind_j.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw MalformedArtifact(e.what());
  }
  std::vector<Element> pts = element_list(member(j, "evaluation_set"), *F, "evaluation_set");
  std::vector<Element> w = element_list(member(j, "weights"), *F, "weights");
  const std::size_t k = as_u32(member(j, "k"), "k");
  const std::size_t n = as_u32(member(j, "n"), "n");
  if (w.size() != pts.size()) throw MalformedArtifact("weights and evaluation_set differ in length");

  const Json& rows = member(j, "matrix");
  if (!rows.is_array() || rows.size() != k) throw MalformedArtifact("matrix must have k rows");
  Matrix G(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<Element> row = element_list(rows[i], *F, "matrix");
    if (row.size() != n) throw MalformedArtifact("matrix rows must have n entries");
    for (std::size_t c = 0; c < n; ++c) G(i, c) = row[c];
  }
  try {
    EvaluationSet S(F, std::move(pts), "artifact");
    WeightVector v(std::move(w));
    return CodeArtifact{kind, std::move(S), std::move(v), k, std::move(G)};
  } catch (const InvalidArgument& e) {
    throw MalformedArtifact(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string digest(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mdssd
