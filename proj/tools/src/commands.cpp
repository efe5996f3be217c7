#include "tzhu_cli/commands.hpp"

#include <tzhu/errors.hpp>
#include <tzhu/invariants.hpp>
#include <tzhu/lie.hpp>
#include <tzhu/models.hpp>
#include <tzhu/modules.hpp>
#include <tzhu/zhu.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

namespace tzhu::cli {

namespace {

Json base_document(const RunConfig& cfg) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = {{"name", "tzhu"}, {"version", TZHU_VERSION}};
  doc["command"] = cfg.command;
  Json c;
  c["model"] = cfg.model;
  c["twist"] = cfg.twist;
  c["c"] = cfg.c;
  c["cutoff"] = cfg.cutoff;
  c["margin"] = cfg.margin;
  c["depth"] = cfg.depth;
  c["lowest_weight"] = cfg.lowest_weight ? Json(*cfg.lowest_weight) : Json(nullptr);
  doc["config"] = c;
  return doc;
}

void finish(Json& doc, const CheckLog& log, double seconds) {
  doc["checks"] = log.records();
  doc["summary"] = {{"status", log.failed() == 0 ? "pass" : "fail"},
                    {"checks_passed", log.passed()},
                    {"checks_failed", log.failed()},
                    {"checks_skipped", log.skipped()}};
  doc["timing"] = {{"seconds", seconds}};
}

bool fault_injected() {
  const char* f = std::getenv("TZHU_FAULT");
  return f != nullptr && std::string(f) == "bracket-sign";
}

ModelId model_id(const std::string& name, const std::string& twist, const std::string& c) {
  const auto& names = model_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw ConfigError("unknown model: " + name);
  ModelId id;
  id.name = name;
  id.twist = parse_twist(twist);
  id.c = parse_rational(c);
  return id;
}

// Largest model weight the CLI will build; beyond it runs are refused as cutoff-exceeded.
constexpr int kMaxModelCutoff = 40;

int model_cutoff(int N, int K) {
  const int c = zhu_model_cutoff(N, K);
  if (c > kMaxModelCutoff)
    throw CutoffExceeded("model cutoff N + 2K + 1 = " + std::to_string(c) + " exceeds the supported maximum " +
                         std::to_string(kMaxModelCutoff));
  return c;
}

std::vector<std::string> degree_labels(const InducedModule& M) {
  std::vector<std::string> out;
  for (int n = 0; n <= M.depth_index(); ++n) out.push_back(to_string(M.degree_value(n)));
  return out;
}

// --- sections ---

void voa_section(const VoaSpec& spec, CheckLog& log, const std::string& scope) {
  log.add(check_vertex_commutator(spec), scope);
  log.add(check_derivative(spec), scope);
  log.add(check_creation(spec), scope);
  log.add(check_g_grading(spec), scope);
  log.add(check_phi_involution(spec), scope);
  if (spec.name() != "heisenberg") {
    log.add(check_gram_symmetry(spec), scope);
    log.add(check_radical_null(spec), scope);
    log.add(check_quotient_well_defined(spec), scope);
  }
}

Json semisimplicity_json(const SemisimplicityReport& s) {
  Json j;
  j["decided"] = s.decided;
  j["note"] = s.note;
  j["radical_dim"] = s.decided ? Json(s.radical_dim) : Json(nullptr);
  j["omega_minimal_polynomial"] = rationals_json(s.omega_minimal_polynomial);
  j["omega_spectrum"] = rationals_json(s.omega_spectrum);
  j["irreducible_residual"] = rationals_json(s.irreducible_residual);
  return j;
}

Json zhu_section(const ZhuAlgebra& alg, CheckLog& log, const std::string& scope, SemisimplicityReport* ss_out) {
  const VoaSpec& spec = alg.spec();
  Json r;
  r["order"] = spec.order();
  r["cutoff"] = alg.cutoff();
  r["margin"] = alg.margin();
  r["model_cutoff"] = spec.cutoff();
  r["family_size"] = alg.family().size();
  r["dim"] = alg.dim();
  Json basis = Json::array();
  for (auto k : alg.basis()) basis.push_back(spec.format_key(k));
  r["basis"] = basis;
  r["dim_previous_margin"] = alg.dim_previous_margin();
  r["dim_lower_cutoff"] = alg.dim_lower_cutoff();
  r["stabilized"] = alg.stabilized();
  r["identity_class"] = rationals_json(alg.identity_class());
  r["omega_class"] = alg.omega_class() ? rationals_json(*alg.omega_class()) : Json(nullptr);
  r["table_complete"] = alg.table_complete();
  if (alg.dim() <= 12) {
    Json table = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        const auto& p = alg.product(i, j);
        row.push_back(p ? rationals_json(*p) : Json(nullptr));
      }
      table.push_back(std::move(row));
    }
    r["multiplication_table"] = table;
  }
  SemisimplicityReport ss = semisimplicity_report(alg);
  r["semisimplicity"] = semisimplicity_json(ss);
  if (ss_out) *ss_out = ss;

  log.add(check_identity_laws(alg), scope);
  log.add(check_centrality(alg), scope);
  log.add(check_associativity(alg), scope);
  log.add(check_ideal(alg), scope);
  CheckReport phi = check_phi(alg, alg);
  phi.note = "g^-1 = g for automorphisms of order at most 2" + (phi.note.empty() ? "" : "; " + phi.note);
  if (spec.order() <= 2)
    log.add(phi, scope);
  else
    log.skip("zhu-phi", scope, "g^-1 quotient not built for order > 2");
  if (spec.order() > 1) log.add(check_odd_vanishing(alg), scope);
  log.add(check_star_residue_identities(alg), scope);
  log.add(check_margin_monotonicity(alg), scope);
  return r;
}

void lie_section(const VoaSpec& spec, const ZhuAlgebra& alg, CheckLog& log, const std::string& scope) {
  LieAlgebra::Options opts;
  opts.corrupt_bracket = fault_injected();
  LieAlgebra lie(spec, opts);
  auto sample = sample_terms(lie, 3, make_rational(5, 2));
  log.add(check_antisymmetry(lie, sample), scope);
  log.add(check_jacobi(lie, sample), scope);
  log.add(check_bracket_grading(lie, sample), scope);
  log.add(check_lie_centrality(lie, sample), scope);
  log.add(check_degree_zero_bracket(lie, 3), scope);
  log.add(check_epimorphism(lie, alg), scope);
}

ZhuModule choose_lowest(const ZhuAlgebra& alg, const std::optional<std::string>& h,
                        const SemisimplicityReport& ss) {
  if (h) return character_module(alg, parse_rational(*h));
  if (!ss.decided || ss.omega_spectrum.empty())
    throw ConfigError("no --lowest-weight given and the [omega] spectrum is undecided at this cutoff");
  return character_module(alg, ss.omega_spectrum.front());
}

// Returns true when some stage could not run for lack of depth.
bool module_section(const ZhuAlgebra& alg, const ZhuModule& U, const Rational& depth, CheckLog& log,
                    const std::string& scope, Json& r) {
  const VoaSpec& spec = alg.spec();
  bool short_depth = false;
  log.add(check_zhu_module(U, alg), scope);
  Json u;
  u["label"] = U.label;
  u["dim"] = U.dim;
  u["lowest_weight"] = U.lowest_weight ? rational_json(*U.lowest_weight) : Json(nullptr);
  Json action = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    action.push_back({{"class", spec.format_key(alg.basis()[i])}, {"matrix", matrix_json(U.action[i])}});
  u["action"] = action;
  r["lowest_module"] = u;

  InducedModule verma = verma_build(alg, U, depth);
  r["depth"] = to_string(verma.depth());
  r["degrees"] = degree_labels(verma);
  Json stages;
  stages["verma"] = verma.dims();

  RelationSet W;
  InducedModule mbar = verma;
  if (verma.depth_index() >= 1) {
    W = relations_W(verma);
    mbar = mbar_build(verma, W);
    r["relations"] = {{"coefficients", W.coefficients}, {"nonzero", W.vectors.size()}};
  } else {
    short_depth = true;
    r["relations"] = nullptr;
  }
  stages["mbar"] = mbar.dims();
  InducedModule L = radical_and_simple(mbar);
  stages["simple"] = L.dims();
  r["stages"] = stages;
  Json pairing = Json::array();
  for (const auto& p : L.pairing_ranks())
    pairing.push_back({{"degree", to_string(L.degree_value(p.degree))},
                       {"words", p.words},
                       {"word_bound", p.word_bound},
                       {"rank", p.rank},
                       {"rank_extended", p.rank_extended},
                       {"full_column_rank", p.full_column_rank}});
  r["pairing"] = pairing;

  try {
    OmegaResult om = omega_functor(L);
    log.add(om.report, scope);
    r["omega"] = {{"dims", om.dims}, {"conditions", om.conditions}};
  } catch (const InsufficientDepth& e) {
    short_depth = true;
    log.skip("omega-round-trip", scope, std::string("insufficient depth: ") + e.what());
    r["omega"] = nullptr;
  }
  log.add(check_simplicity(L), scope);
  if (verma.depth_index() >= 1)
    log.add(check_universality(L, W), scope);
  else
    log.skip("universality", scope, "relations need depth at least 1/" + std::to_string(spec.order()));
  log.add(check_module_commutator(L, 3), scope);
  AssociativityResult assoc = check_twisted_associativity(L, 2);
  log.add(assoc.report, scope);
  r["associativity"] = {{"z0_exponent_window", {assoc.a_min, assoc.a_max}}, {"k", assoc.k_used}};
  CheckReport l0 = check_l0_spectrum(L);
  log.add(l0, scope);
  if (U.lowest_weight) {
    Json eig = Json::array();
    for (int n = 0; n <= L.depth_index(); ++n) eig.push_back(rational_json(L.degree_value(n) + *U.lowest_weight));
    r["l0_eigenvalues"] = eig;
  }
  log.add(check_pbw_soundness(L, 2), scope);
  Contragredient dual(L);
  r["contragredient_dims"] = dual.dims();
  log.add(check_contragredient_grading(L), scope);
  log.add(check_contragredient_commutator(L, 2), scope);
  log.add(check_double_dual(L, make_rational(3, 2), 2), scope);
  return short_depth;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RunResult run_zhu(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  if (cfg.margin < 1) throw ConfigError("zhu needs --margin >= 1");
  if (cfg.cutoff < 0) throw ConfigError("--cutoff must be nonnegative");
  ModelId id = model_id(cfg.model, cfg.twist, cfg.c);
  VoaSpec spec = build_model(id, model_cutoff(cfg.cutoff, cfg.margin));
  ZhuAlgebra alg(spec, cfg.cutoff, cfg.margin);
  CheckLog log;
  RunResult res;
  res.document = base_document(cfg);
  res.document["results"] = zhu_section(alg, log, "", nullptr);
  finish(res.document, log, seconds_since(t0));
  res.exit_code = log.failed() ? kCheckFailed : kOk;
  return res;
}

RunResult run_module(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  if (cfg.margin < 1) throw ConfigError("module needs --margin >= 1");
  ModelId id = model_id(cfg.model, cfg.twist, cfg.c);
  const Rational depth = parse_rational(cfg.depth);
  VoaSpec spec = build_model(id, model_cutoff(cfg.cutoff, cfg.margin));
  ZhuAlgebra alg(spec, cfg.cutoff, cfg.margin);
  SemisimplicityReport ss = semisimplicity_report(alg);
  ZhuModule U = choose_lowest(alg, cfg.lowest_weight, ss);
  CheckLog log;
  RunResult res;
  res.document = base_document(cfg);
  Json r;
  r["zhu_dim"] = alg.dim();
  r["model_cutoff"] = spec.cutoff();
  const bool short_depth = module_section(alg, U, depth, log, "", r);
  res.document["results"] = r;
  finish(res.document, log, seconds_since(t0));
  res.exit_code = log.failed() ? kCheckFailed : short_depth ? kInsufficientDepth : kOk;
  return res;
}

RunResult run_verify(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> models;
  {
    std::stringstream ss(cfg.model);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) models.push_back(item);
  }
  if (models.empty()) throw ConfigError("verify needs at least one model");
  for (const auto& m : models) model_id(m, "identity", cfg.c);
  if (cfg.twist_set) parse_twist(cfg.twist);

  CheckLog log;
  Json sections = Json::array();
  for (const auto& name : models) {
    std::vector<std::string> twists;
    if (cfg.twist_set)
      twists = {cfg.twist};
    else if (name == "heisenberg")
      twists = {"identity", "charge-conjugation"};
    else
      twists = {"identity"};
    for (const auto& tw : twists) {
      ModelId id = model_id(name, tw, cfg.c);
      const std::string scope = name + "/" + tw;
      // built-in sizes, overridable by explicit flags
      int N = 6, K = 3;
      if (name == "heisenberg" && tw == "charge-conjugation") K = 4;
      if (name == "virasoro-simple") N = 8;
      if (name == "virasoro-universal") K = 2;
      if (cfg.cutoff_set) N = cfg.cutoff;
      if (cfg.margin_set) K = cfg.margin;
      VoaSpec spec = build_model(id, model_cutoff(N, K));
      Json sec;
      sec["model"] = name;
      sec["twist"] = tw;
      voa_section(spec, log, scope + ": voa");
      ZhuAlgebra alg(spec, N, K);
      SemisimplicityReport ss;
      sec["zhu"] = zhu_section(alg, log, scope + ": zhu", &ss);
      if (name == "heisenberg" && tw == "identity") {
        // negative control: A(V) = C[x] must not look finite-dimensional
        CheckReport ctl{"zhu-negative-control"};
        Json dims = Json::array();
        std::size_t prev = 0;
        for (int n : {4, 6, 8}) {
          VoaSpec s = build_model(id, model_cutoff(n, K));
          ZhuAlgebra a(s, n, K);
          dims.push_back(a.dim());
          ctl.expect(!a.stabilized(), "stabilized reported at N = " + std::to_string(n));
          if (n > 4) ctl.expect(a.dim() > prev, "dimension did not grow at N = " + std::to_string(n));
          prev = a.dim();
        }
        log.add(ctl, scope + ": zhu");
        sec["negative_control_dims"] = dims;
      }
      lie_section(spec, alg, log, scope + ": lie");
      Json mods = Json::array();
      if (alg.stabilized() && ss.decided) {
        std::vector<Rational> hs;
        if (cfg.lowest_weight)
          hs = {parse_rational(*cfg.lowest_weight)};
        else
          hs = ss.omega_spectrum;
        Rational depth = cfg.depth_set ? parse_rational(cfg.depth)
                                       : (spec.order() == 2 ? make_rational(5, 2) : Rational(2));
        for (const auto& h : hs) {
          ZhuModule U = character_module(alg, h);
          Json r;
          module_section(alg, U, depth, log, scope + ": module h=" + to_string(h), r);
          mods.push_back(r);
        }
      } else {
        log.skip("omega-round-trip", scope + ": module", "A_g(V) not finite or not semisimple at this cutoff");
      }
      sec["modules"] = mods;
      sections.push_back(sec);
    }
  }
  RunResult res;
  res.document = base_document(cfg);
  res.document["results"] = {{"models", sections}, {"fault_injection", fault_injected() ? "bracket-sign" : "none"}};
  finish(res.document, log, seconds_since(t0));
  res.exit_code = log.failed() ? kCheckFailed : kOk;
  return res;
}

RunResult run(const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  auto error = [&](int code, const std::string& kind, const std::string& msg) {
    RunResult r;
    r.exit_code = code;
    r.document = base_document(cfg);
    r.document["error"] = {{"kind", kind}, {"message", msg}};
    r.document["summary"] = {{"status", "error"}};
    r.document["timing"] = {{"seconds", seconds_since(t0)}};
    return r;
  };
  try {
    if (cfg.command == "zhu") return run_zhu(cfg);
    if (cfg.command == "module") return run_module(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    return error(kConfigError, "config", "unknown command: " + cfg.command);
  } catch (const CutoffExceeded& e) {
    return error(kCutoffExceeded, "cutoff-exceeded", e.what());
  } catch (const InsufficientDepth& e) {
    return error(kInsufficientDepth, "insufficient-depth", e.what());
  } catch (const std::invalid_argument& e) {
    return error(kConfigError, "config", e.what());
  }
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace tzhu::cli
