#include "mdssd/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mdssd/catalog.hpp"
#include "mdssd/errors.hpp"
#include "mdssd/families.hpp"
#include "mdssd/oracle.hpp"
#include "mdssd/pipeline.hpp"
#include "mdssd/serialize.hpp"

namespace mdssd {

namespace {

struct Globals {
  std::uint64_t q = 0;
  std::string out;
  std::string catalog;
  std::uint64_t max_subsets = kDefaultSubsetCap;
  unsigned jobs = 1;
};

struct ConstructOptions {
  std::string family;
  std::optional<std::uint32_t> n, l, k, d, f, t, s;
  std::string kind;
  std::string which;
  std::vector<std::uint32_t> base_set;
  std::vector<std::uint32_t> set;
};

struct SearchOptions {
  std::uint32_t n = 0;
  std::string mode;
  bool no_canonical = false;
};

FieldPtr field_for(const Globals& g) {
  if (g.q == 0) throw InvalidArgument("--q is required");
  return Field::of_order(g.q);
}

std::uint32_t need(const std::optional<std::uint32_t>& v, const char* flag, const std::string& family) {
  if (!v) throw InvalidArgument(family + " needs " + flag);
  return *v;
}

std::vector<Element> as_elements(const std::vector<std::uint32_t>& v) {
  std::vector<Element> out;
  out.reserve(v.size());
  for (std::uint32_t i : v) out.push_back(Element{i});
  return out;
}

std::string poly(const std::vector<std::uint32_t>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (c[i] != 1 || i == 0) os << c[i];
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
  }
  return first ? "0" : os.str();
}

std::string element_list(const Field& F, const std::vector<Element>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << F.to_string(v[i]);
  os << "}";
  return os.str();
}

std::string index_list(const std::vector<Element>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].index;
  os << "]";
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InvalidArgument("cannot write " + path.string());
  f << text;
}

std::string yes_no(bool b) { return b ? "ok" : "FAILED"; }

void print_report(std::ostream& out, const VerificationReport& r) {
  out << "verification: condition=" << yes_no(r.condition_ok) << " self_dual=" << yes_no(r.self_dual_ok)
      << " rank=" << yes_no(r.rank_ok) << " mds=" << yes_no(r.mds_ok) << " (" << to_string(r.mds_method) << ")\n";
}

CatalogRecord record_for(const Claim& c, const std::string& status, const std::string& artifact) {
  CatalogRecord r;
  r.q = c.q;
  r.n = c.n;
  r.sigma_kind = to_string(c.sigma_kind);
  r.family = to_string(c.family);
  Json key{{"params", params_to_json(c.params)}, {"set", Json::array()}};
  for (Element e : c.set.points()) key["set"].push_back(e.index);
  r.params_digest = digest(key);
  r.status = status;
  r.artifact_path = artifact;
  return r;
}

// ---------------------------------------------------------------- field-info

int cmd_field_info(const Globals& g, std::ostream& out) {
  const FieldPtr F = field_for(g);
  out << "GF(" << F->q() << ") = GF(" << F->p() << "^" << F->m() << ")\n";
  out << "modulus: " << poly(F->modulus()) << "  coefficients (ascending): " << Json(F->modulus()).dump()
      << "\n";
  out << "generator: " << F->to_string(F->generator()) << " (index " << F->generator().index << ")\n";
  out << "-1 is a " << (F->is_square(F->minus_one()) ? "square" : "non-square") << "\n";
  out << "subfields:";
  for (std::uint32_t s = 1; s <= F->m(); ++s) {
    if (F->m() % s == 0) out << " GF(" << Subfield(F, s).order() << ")";
  }
  out << "\n";
  return kExitVerified;
}

// ---------------------------------------------------------------- construct

Claim pick(std::vector<Claim> claims, SigmaKind kind, const std::string& family) {
  for (Claim& c : claims) {
    if (c.sigma_kind == kind) return std::move(c);
  }
  throw InvalidArgument(family + " yields no " + to_string(kind) + " claim for these parameters");
}

Claim build_claim(const FieldPtr& F, const ConstructOptions& o, std::ostream& out) {
  const Family family = family_from_string(o.family);
  const std::string& name = o.family;
  switch (family) {
    case Family::subfield: {
      const std::uint32_t n = need(o.n, "--n", name);
      SigmaKind kind;
      if (!o.kind.empty()) {
        kind = sigma_kind_from_string(o.kind);
      } else {
        const std::uint32_t r = F->m() % 2 == 0 ? Subfield(F, F->m() / 2).order() : 0;
        kind = (r != 0 && n + 1 <= r) ? SigmaKind::g : SigmaKind::eg;
      }
      return subfield_set(F, n, kind);
    }
    case Family::affine_union:
      return affine_union(F, need(o.l, "--l", name), need(o.k, "--k", name));
    case Family::cyclotomic: {
      if (o.which.empty()) throw InvalidArgument("cyclotomic needs --case");
      return cyclotomic_union(F, need(o.f, "--f", name), need(o.t, "--t", name),
                              cyclotomic_case_from_string(o.which));
    }
    case Family::cyclotomic_scaled: {
      auto claims = cyclotomic_union_scaled(F, need(o.f, "--f", name), need(o.s, "--s", name), need(o.t, "--t", name));
      return pick(std::move(claims), o.kind.empty() ? SigmaKind::eg : sigma_kind_from_string(o.kind), name);
    }
    case Family::trace_kernel:
      return trace_kernel_union(F, need(o.l, "--l", name), need(o.d, "--d", name));
    case Family::trace_lift: {
      const std::uint32_t l = need(o.l, "--l", name);
      if (l == 0 || F->m() % l != 0) throw InvalidArgument("trace_lift: --l must divide the extension degree");
      if (o.base_set.empty()) throw InvalidArgument("trace_lift needs --base-set");
      const FieldPtr base_field = Field::make(F->p(), F->m() / l);
      Claim base = explicit_claim(base_field, as_elements(o.base_set), "base");
      check_condition(base);
      if (base.status != ClaimStatus::passed) {
        out << "base set over GF(" << base_field->q() << ") fails the criterion\n";
        throw ConditionUnsatisfied("base criterion fails: " + base.failure_witness.value_or(""));
      }
      return trace_lift(base, F, l);
    }
    case Family::norm_fiber: {
      const std::uint32_t s = need(o.s, "--s", name);
      if (s % 2 == 0) {
        auto claims = norm_fiber_union(F, s, need(o.l, "--l", name));
        return pick(std::move(claims), o.kind.empty() ? SigmaKind::g : sigma_kind_from_string(o.kind), name);
      }
      if (s == 0 || F->m() % s != 0) throw InvalidArgument("norm_fiber: --s must divide the extension degree");
      if (o.base_set.empty()) throw InvalidArgument("norm_fiber with odd s needs --base-set");
      const auto l = static_cast<std::uint32_t>(o.base_set.size());
      if (o.l && *o.l != l) throw InvalidArgument("norm_fiber: --l must equal the size of --base-set");
      // Check the gate before the base so blocked lengths report as blocked.
      const std::uint32_t r = Subfield(F, F->m() / s).order();
      const std::uint32_t fibre = (F->q() - 1) / (r - 1);
      require_open(F->q(), l % 2 == 0 ? l * fibre : l * fibre + 1);
      const FieldPtr base_field = Field::make(F->p(), F->m() / s);
      Claim base = explicit_claim(base_field, as_elements(o.base_set), "base");
      check_condition(base);
      if (base.status != ClaimStatus::passed) {
        out << "base set over GF(" << base_field->q() << ") fails the criterion\n";
        throw ConditionUnsatisfied("base criterion fails: " + base.failure_witness.value_or(""));
      }
      return norm_fiber_union(F, s, l, base).front();
    }
    case Family::explicit_set:
      if (o.set.empty()) throw InvalidArgument("explicit needs --set");
      return explicit_claim(F, as_elements(o.set), "cli");
  }
  throw InvalidArgument("unknown family");
}

int cmd_construct(const Globals& g, const ConstructOptions& o, std::ostream& out, std::ostream& err) {
  const FieldPtr F = field_for(g);
  std::optional<Catalog> catalog;
  if (!g.catalog.empty()) catalog.emplace(g.catalog);
  Claim claim = [&] {
    try {
      return build_claim(F, o, out);
    } catch (const BlockedByNonexistence&) {
      if (catalog) {
        CatalogRecord r;
        r.q = F->q();
        r.n = o.n.value_or(0);
        r.sigma_kind = "any";
        r.family = "nonexistence_gate";
        r.params_digest = digest(Json{{"q", F->q()}, {"family", o.family}});
        r.status = "blocked";
        catalog->append(r);
      }
      throw;
    }
  }();
  out << "claim: n=" << claim.n << " in Sigma(" << to_string(claim.sigma_kind) << "," << claim.q << ") via "
      << to_string(claim.family) << ", |S|=" << claim.set.size() << "\n";

  Certified c = certify(std::move(claim), MdsOptions{});
  if (c.claim.status != ClaimStatus::passed) {
    out << "condition: FAILED\n";
    out << "witness: " << c.claim.failure_witness.value_or("") << "\n";
    err << "condition failed: " << c.claim.failure_witness.value_or("") << "\n";
    if (catalog) catalog->append(record_for(c.claim, "failed", ""));
    return kExitConditionFailed;
  }
  out << "condition: passed\n";
  print_report(out, *c.report);
  const Json j = to_json(*c.artifact, *c.report, &c.claim);
  if (!g.out.empty()) {
    write_file(g.out, dump(j));
    out << "artifact: " << g.out << "\n";
  }
  if (catalog) catalog->append(record_for(c.claim, "passed", g.out));
  out << "status: verified MDS self-dual [" << c.artifact->length() << ", " << c.artifact->k << "] code over GF("
      << F->q() << ")\n";
  return kExitVerified;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw MalformedArtifact("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedArtifact(std::string("not valid JSON: ") + e.what());
  }
  const CodeArtifact A = artifact_from_json(j);
  const VerificationReport r = verify(A);

  bool consistent = false;
  try {
    consistent = generator_matrix(A.kind, A.set, A.weights).matrix == A.matrix;
  } catch (const InvalidArgument&) {
    consistent = false;
  }
  out << "artifact: " << path << "\n";
  out << "code: " << to_string(A.kind) << " [" << A.length() << ", " << A.k << "] over GF(" << A.field().q()
      << ")\n";
  print_report(out, r);
  if (r.condition_witness) out << "condition witness: " << r.condition_witness->describe(A.field()) << "\n";
  if (!r.mds_witness.empty()) {
    out << "dependent columns:";
    for (std::size_t c : r.mds_witness) out << " " << c;
    out << "\n";
  }
  if (!r.reason.empty()) out << "reason: " << r.reason << "\n";
  out << "matrix matches set and weights: " << (consistent ? "yes" : "NO") << "\n";

  if (j.contains("verification") && j["verification"].is_object()) {
    const Json& v = j["verification"];
    const std::pair<const char*, bool> checks[] = {
        {"condition", r.condition_ok}, {"self_dual", r.self_dual_ok}, {"rank", r.rank_ok}, {"mds", r.mds_ok}};
    for (const auto& [key, value] : checks) {
      if (v.contains(key) && v[key].is_boolean() && v[key].get<bool>() != value) {
        out << "discrepancy: stored " << key << "=" << (v[key].get<bool>() ? "true" : "false") << ", recomputed "
            << (value ? "true" : "false") << "\n";
      }
    }
  }
  const bool ok = r.all_ok() && consistent;
  out << "status: " << (ok ? "verified" : "NOT verified") << "\n";
  return ok ? kExitVerified : kExitConditionFailed;
}

// ---------------------------------------------------------------- table

std::string artifact_name(const Claim& c) {
  return "q" + std::to_string(c.q) + "_n" + std::to_string(c.n) + "_" + to_string(c.sigma_kind) + "_" +
         to_string(c.family) + ".json";
}

int cmd_table(const Globals& g, std::uint32_t n_max, std::ostream& out) {
  const FieldPtr F = field_for(g);
  // Lengths above q + 1 have no (extended) GRS candidates but are still shown, so gate rows stay visible.
  if (n_max < 2 || n_max > kMaxFieldOrder + 1) throw InvalidArgument("--max-n must lie in [2, 2^20 + 1]");
  const Table table = build_table(F, n_max, g.jobs);

  std::optional<Catalog> catalog;
  if (!g.catalog.empty()) catalog.emplace(g.catalog);

  std::vector<Family> columns;
  for (const Certified& e : table.entries) {
    if (std::find(columns.begin(), columns.end(), e.claim.family) == columns.end()) columns.push_back(e.claim.family);
  }
  std::sort(columns.begin(), columns.end());

  std::size_t passed = 0, failed = 0;
  for (const Certified& e : table.entries) {
    const bool ok = e.report.has_value();
    ok ? ++passed : ++failed;
    std::string path;
    if (ok && !g.out.empty()) {
      path = (std::filesystem::path(g.out) / artifact_name(e.claim)).string();
      write_file(path, dump(to_json(*e.artifact, *e.report, &e.claim)));
    }
    if (catalog) catalog->append(record_for(e.claim, ok ? "passed" : "failed", path));
  }
  for (std::uint32_t n : table.blocked) {
    if (!catalog) break;
    CatalogRecord r;
    r.q = F->q();
    r.n = n;
    r.sigma_kind = "any";
    r.family = "nonexistence_gate";
    r.params_digest = digest(Json{{"q", F->q()}, {"n", n}});
    r.status = "blocked";
    catalog->append(r);
  }

  const std::size_t width = 18;
  auto cell = [&](std::string s) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
  };
  out << "MDS self-dual lengths over GF(" << F->q() << "), n <= " << n_max << "\n";
  out << cell("n");
  for (Family f : columns) out << cell(to_string(f));
  out << "\n";
  for (std::uint32_t n = 2; n <= n_max; n += 2) {
    std::string row = cell(std::to_string(n));
    if (std::find(table.blocked.begin(), table.blocked.end(), n) != table.blocked.end()) {
      out << row << "blocked (no self-dual code exists)\n";
      continue;
    }
    for (Family f : columns) {
      std::string text;
      for (const Certified& e : table.entries) {
        if (e.claim.n != n || e.claim.family != f) continue;
        if (!text.empty()) text += " ";
        text += to_string(e.claim.sigma_kind) + (e.report ? ":pass" : ":FAIL");
      }
      row += cell(text.empty() ? "-" : text);
    }
    if (columns.empty()) row += "-";
    out << row << "\n";
  }
  out << "summary: passed=" << passed << " failed=" << failed << " blocked=" << table.blocked.size() << "\n";
  return kExitVerified;
}

// ---------------------------------------------------------------- search

int cmd_search(const Globals& g, const SearchOptions& o, std::ostream& out) {
  const FieldPtr F = field_for(g);
  const SearchMode mode = search_mode_from_string(o.mode);
  SearchResult r = mode == SearchMode::selfdual_any
                       ? brute_selfdual_exists(F, o.n, g.max_subsets)
                       : brute_sigma(F, o.n, mode, !o.no_canonical, g.max_subsets, g.jobs);
  out << "search GF(" << F->q() << ") n=" << o.n << " mode=" << to_string(mode) << ": "
      << (r.found ? "found" : "not found") << " (candidates examined: " << r.subsets_examined << ")\n";
  if (!r.found) return kExitVerified;

  if (mode == SearchMode::selfdual_any) {
    out << "witness generator [I | P]:\n";
    for (std::size_t i = 0; i < r.witness_matrix->rows(); ++i) {
      out << "  " << index_list(std::vector<Element>(r.witness_matrix->row(i).begin(), r.witness_matrix->row(i).end()))
          << "\n";
    }
    if (!g.out.empty()) write_file(g.out, dump(to_json(r)));
    return kExitVerified;
  }

  out << "witness: " << index_list(r.witness_set) << " = " << element_list(*F, r.witness_set) << "\n";
  const EvaluationSet S(F, r.witness_set, "search");
  auto [A, report] = build_code(mode == SearchMode::sigma_g ? CodeKind::grs : CodeKind::egrs, S);
  print_report(out, report);
  if (!g.out.empty()) {
    Json j = to_json(A, report);
    j["search"] = to_json(r);
    write_file(g.out, dump(j));
    out << "artifact: " << g.out << "\n";
  }
  return kExitVerified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify MDS self-dual codes from (extended) generalized Reed-Solomon codes", "mdssd"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--q", g.q, "Field order q = p^m, p odd");
  app.add_option("--out", g.out, "Output file (construct, search) or directory (table)");
  app.add_option("--catalog", g.catalog, "JSON-lines catalog to append outcomes to");
  app.add_option("--max-subsets", g.max_subsets, "Cap on the exhaustive search space");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* field_info = app.add_subcommand("field-info", "Show the canonical field conventions for q");
  field_info->fallthrough();

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "Build and verify a code from one family");
  construct->fallthrough();
  construct->add_option("--family", co.family, "subfield, affine_union, cyclotomic, cyclotomic_scaled, trace_kernel, "
                                                "trace_lift, norm_fiber or explicit")
      ->required();
  construct->add_option("--n", co.n, "Length (subfield)");
  construct->add_option("--kind", co.kind, "g or eg where a family yields both");
  construct->add_option("--l", co.l);
  construct->add_option("--k", co.k);
  construct->add_option("--d", co.d);
  construct->add_option("--f", co.f);
  construct->add_option("--t", co.t);
  construct->add_option("--s", co.s);
  construct->add_option("--case", co.which, "I1, I2A, I2B or II (cyclotomic)");
  construct->add_option("--base-set", co.base_set, "Base evaluation set as indices (trace_lift, norm_fiber)")
      ->delimiter(',');
  construct->add_option("--set", co.set, "Evaluation set as indices (explicit)")->delimiter(',');

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Recheck an artifact file from scratch");
  verify_cmd->fallthrough();
  verify_cmd->add_option("path", verify_path, "Artifact JSON")->required();

  std::uint32_t max_n = 0;
  auto* table = app.add_subcommand("table", "Enumerate and verify every family up to a length");
  table->fallthrough();
  table->add_option("--max-n", max_n)->required();

  SearchOptions so;
  auto* search = app.add_subcommand("search", "Exhaustive search for self-dual sets or codes");
  search->fallthrough();
  search->add_option("--n", so.n)->required();
  search->add_option("--mode", so.mode, "g, eg or selfdual-any")->required();
  search->add_flag("--no-canonical", so.no_canonical, "Search all subsets, not only those containing 0 and 1");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitVerified : kExitUsage;
  }

  try {
    if (*field_info) return cmd_field_info(g, out);
    if (*construct) return cmd_construct(g, co, out, err);
    if (*verify_cmd) return cmd_verify(verify_path, out);
    if (*table) return cmd_table(g, max_n, out);
    if (*search) return cmd_search(g, so, out);
  } catch (const BlockedByNonexistence& e) {
    out << e.what() << "\n";
    err << e.what() << "\n";
    return kExitBlocked;
  } catch (const ConditionUnsatisfied& e) {
    err << e.what() << "\n";
    return kExitConditionFailed;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const MalformedArtifact& e) {
    err << "malformed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mdssd
