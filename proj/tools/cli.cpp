#include "cli.hpp"

#include "tanvar/bbw.hpp"
#include "tanvar/catalog.hpp"
#include "tanvar/errors.hpp"
#include "tanvar/grammar.hpp"
#include "tanvar/oracle.hpp"
#include "tanvar/parallel.hpp"
#include "tanvar/spherical.hpp"
#include "tanvar/tangential.hpp"
#include "tanvar/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <limits>
#include <ostream>

namespace tanvar::cli {

using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  bool dualize = false;
  std::size_t threads = 1;
  std::uint64_t seed = 20240601;
  std::size_t trials = 20;
  unsigned max_degree = 8;
  unsigned degree = 0;
  unsigned m = 3;
  long bound = 13;
  std::string method = "table";
  std::string filter;
  std::string fixtures = default_fixture_path();
  std::vector<std::string> weights;
  std::string target;
};

json integer_json(const BigInt& value)
{
  if (value <= std::numeric_limits<std::int64_t>::max() && value >= std::numeric_limits<std::int64_t>::min())
    return value.convert_to<std::int64_t>();
  return value.str();
}

json weight_json(const RootDatum& datum, const Weight& w)
{
  json out = json::array();
  for (std::size_t c = 0; c < datum.components().size(); ++c) {
    json part = json::array();
    const auto offset = datum.component_offset(c);
    for (int i = 0; i < datum.components()[c].rank; ++i) part.push_back(w[offset + i]);
    out.push_back(std::move(part));
  }
  return out;
}

class Renderer {
 public:
  Renderer(const RootDatum& datum, bool dualize) : m_datum(datum), m_dualize(dualize) {}

  /// A highest weight, switched to the other convention under --dualize.
  json highest(const Weight& w) const { return weight_json(m_datum, m_dualize ? dual_weight(m_datum, w) : w); }
  json plain(const Weight& w) const { return weight_json(m_datum, w); }

  json entries(const Decomposition& parts) const
  {
    json out = json::array();
    for (const auto& p : parts)
      out.push_back({{"weight", highest(p.weight)},
                     {"multiplicity", integer_json(p.multiplicity)},
                     {"dimension", weyl_dim(m_datum, p.weight).str()}});
    return out;
  }

  const char* convention() const { return m_dualize ? "V" : "V*"; }

 private:
  const RootDatum& m_datum;
  bool m_dualize;
};

Weight single_weight(const Options& opts, const RootDatum& datum)
{
  if (opts.weights.size() != 1) throw DomainError("exactly one --weight is required");
  const Weight w = parse_weight(opts.weights[0]);
  datum.check_weight(w);
  return w;
}

Weight dominant_weight(const Options& opts, const RootDatum& datum)
{
  const Weight w = single_weight(opts, datum);
  if (!w.is_dominant()) throw DomainError("weight " + w.to_string() + " is not dominant");
  return w;
}

GroupSpec group_of(const std::string& text)
{
  auto spec = parse_spec(text);
  if (spec.multiplicity != 1) throw DomainError("'" + text + "': an embedding multiplicity is not meaningful here");
  return spec;
}

json cmd_roots(const Options& opts)
{
  const RootDatum datum(group_of(opts.target).types);
  json cartan = json::array();
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < datum.rank(); ++j) row.push_back(datum.cartan(i, j));
    cartan.push_back(std::move(row));
  }
  json roots = json::array();
  for (const auto& root : datum.positive_roots())
    roots.push_back({{"simple", root.simple}, {"weight", weight_json(datum, root.omega)}, {"height", root.height}});
  return {{"group", datum.to_string()},
          {"rank", datum.rank()},
          {"cartan", cartan},
          {"positive_roots", roots},
          {"count", datum.positive_roots().size()},
          {"dimension", 2 * datum.positive_roots().size() + datum.rank()},
          {"rho", weight_json(datum, datum.rho())}};
}

json cmd_weight(const Options& opts, const std::string& mode)
{
  const RootDatum datum(group_of(opts.target).types);
  if (mode == "dom") {
    const Weight w = single_weight(opts, datum);
    const auto [dominant, length] = make_dominant(datum, w);
    return {{"input", weight_json(datum, w)}, {"dominant", weight_json(datum, dominant)}, {"length", length}};
  }
  if (mode == "dot") {
    const Weight w = single_weight(opts, datum);
    const auto result = make_dominant_dot(datum, w);
    json out = {{"input", weight_json(datum, w)}, {"singular", result.singular}};
    out["length"] = result.singular ? json() : json(result.length);
    out["dominant"] = result.singular ? json() : weight_json(datum, result.dominant);
    return out;
  }
  const Weight w = dominant_weight(opts, datum);
  return {{"input", weight_json(datum, w)}, {"dual", weight_json(datum, dual_weight(datum, w))}};
}

json cmd_bbw(const Options& opts)
{
  const auto spec = parse_parabolic_spec(opts.target);
  if (spec.multiplicity != 1) throw DomainError("bbw takes a group and a parabolic, not an embedding");
  const RootDatum datum(spec.types);
  const Renderer render(datum, opts.dualize);
  const Weight mu = single_weight(opts, datum);
  const auto result = cohomology(datum, *spec.marking, mu);
  if (result.vanishing) return {{"status", "vanishing"}, {"degree", nullptr}, {"weight", nullptr}};
  return {{"status", "module"},
          {"degree", result.degree},
          {"weight", render.highest(result.weight)},
          {"dimension", weyl_dim(datum, result.weight).str()},
          {"convention", render.convention()}};
}

json cmd_tau(const Options& opts, const std::string& mode)
{
  if (mode == "resolution") {
    const auto top = segre_resolution_top(opts.m);
    return {{"m", opts.m},
            {"closed_form", {top.closed_form.first, top.closed_form.second}},
            {"via_cohomology", {top.via_cohomology.first, top.via_cohomology.second}},
            {"cohomological_degree", top.cohomological_degree},
            {"bundle_rank", top.bundle_rank},
            {"determinant_degree", top.determinant_degree}};
  }
  if (mode == "nondegenerate") {
    const auto spec = parse_parabolic_spec(opts.target);
    return {{"spec", spec.to_string()}, {"strongly_nondegenerate", is_strongly_nondegenerate(spec)}};
  }
  const auto spec = parse_embedding(opts.target);
  const Renderer render(spec.datum(), opts.dualize);
  json out = {{"spec", spec.to_string()}, {"rank", spec.rank()}};
  if (mode == "coords" || mode == "ideal") {
    const auto part = mode == "coords" ? coord_ring_component(spec, opts.degree)
                                       : ideal_component_via_oracle(spec, opts.degree);
    out["degree"] = opts.degree;
    out["entries"] = render.entries(part.entries);
    out["convention"] = render.convention();
  } else if (mode == "covariants") {
    json generators = json::array();
    for (const auto& g : covariant_generators(spec, opts.max_degree))
      generators.push_back({{"degree", g.degree}, {"weight", render.highest(g.weight)}});
    out["max_degree"] = opts.max_degree;
    out["generators"] = generators;
    out["convention"] = render.convention();
  } else if (mode == "bound") {
    const auto bound = ideal_degree_bound(spec);
    out["closed_form"] = bound.closed_form;
    out["via_covariants"] = bound.via_covariants;
    out["scanned_degree"] = bound.scanned_degree;
  } else if (mode == "hilbert") {
    const BigInt dimension = hilbert_dimension(spec, opts.degree);
    const BigInt ambient = ambient_dimension(spec, opts.degree);
    out["degree"] = opts.degree;
    out["dimension"] = dimension.str();
    out["ambient"] = ambient.str();
    out["gap"] = BigInt(ambient - dimension).str();
  }
  return out;
}

json cmd_spherical(const Options& opts)
{
  const auto spec = parse_parabolic_spec(opts.target);
  if (spec.multiplicity != 1) throw DomainError("sphericality does not depend on the embedding; drop the @N suffix");
  const RootDatum datum(spec.types);
  SphericityVerdict verdict;
  if (opts.method == "table")
    verdict = classify(datum, *spec.marking);
  else
    verdict = redlem_rank_test(datum, *spec.marking, opts.trials, opts.seed, opts.bound);
  json out = {{"spec", spec.to_string()},
              {"method", opts.method},
              {"verdict", to_string(verdict.verdict)},
              {"evidence", verdict.evidence},
              {"warnings", verdict.warnings}};
  if (verdict.used_rank_test) {
    const auto& s = verdict.statistics;
    out["statistics"] = {{"trials", s.trials},
                         {"full_rank_trials", s.full_rank_trials},
                         {"best_rank", s.best_rank},
                         {"target_rank", s.target_rank},
                         {"source_dimension", s.source_dimension},
                         {"seed", s.seed},
                         {"coefficient_bound", s.coefficient_bound}};
  }
  return out;
}

json cmd_oracle(const Options& opts, const std::string& mode)
{
  const RootDatum datum(group_of(opts.target).types);
  const Renderer render(datum, opts.dualize);
  if (mode == "tensor") {
    if (opts.weights.size() != 2) throw DomainError("oracle tensor needs two --weight options");
    const Weight a = parse_weight(opts.weights[0]);
    const Weight b = parse_weight(opts.weights[1]);
    for (const auto* w : {&a, &b}) {
      datum.check_weight(*w);
      if (!w->is_dominant()) throw DomainError("weight " + w->to_string() + " is not dominant");
    }
    return {{"group", datum.to_string()}, {"entries", render.entries(tensor_decompose(datum, a, b))}};
  }
  const Weight lambda = dominant_weight(opts, datum);
  json out = {{"group", datum.to_string()}, {"weight", render.highest(lambda)}};
  if (mode == "dim") {
    out["dimension"] = weyl_dim(datum, lambda).str();
  } else if (mode == "char") {
    const auto chi = freudenthal(datum, lambda);
    std::vector<std::pair<Weight, BigInt>> sorted(chi.begin(), chi.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    json character = json::array();
    for (const auto& [w, m] : sorted)
      character.push_back({{"weight", render.plain(opts.dualize ? -w : w)}, {"multiplicity", integer_json(m)}});
    out["character"] = character;
    out["dimension"] = mass(chi).str();
  } else {
    out["degree"] = opts.degree;
    out["entries"] = render.entries(sym_power_decompose(datum, lambda, opts.degree));
  }
  return out;
}

json cmd_verify_zid(int& code)
{
  json entries = json::array();
  std::size_t failed = 0;
  for (const auto& [type, node] : catalog_battery()) {
    const std::string name = type.to_string() + "/P" + std::to_string(node + 1);
    try {
      const auto datum = Catalog::builtin().lookup(type, node);
      entries.push_back({{"entry", name}, {"rank", datum.r}, {"status", "pass"}});
    } catch (const ConsistencyError& e) {
      ++failed;
      entries.push_back({{"entry", name}, {"status", "fail"}, {"reason", e.what()}});
    }
  }
  if (failed > 0) code = kExitConsistency;
  return {{"checked", entries.size()}, {"failed", failed}, {"entries", entries}};
}

json cmd_verify_fixtures(const Options& opts, int& code)
{
  json records = json::array();
  std::size_t failed = 0;
  std::size_t warned = 0;
  for (const auto& outcome : run_fixtures(opts.fixtures, opts.filter)) {
    std::string result = "pass";
    if (!outcome.passed) {
      if (outcome.status == "conjecture") {
        result = "warn";
        ++warned;
      } else {
        result = "fail";
        ++failed;
      }
    }
    records.push_back(
        {{"name", outcome.name}, {"status", outcome.status}, {"result", result}, {"details", outcome.details}});
  }
  if (failed > 0) code = kExitConsistency;
  return {{"filter", opts.filter}, {"records", records}, {"failed", failed}, {"warned", warned}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options opts;
  CLI::App app{"Tangential varieties of homogeneous varieties: coordinate rings, cohomology, sphericality.",
               "tanvar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Emit canonical JSON");
  app.add_flag("--dualize", opts.dualize, "Report highest weights of the dual modules");
  app.add_option("--threads", opts.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "Random seed for the rank test");
  app.add_option("--trials", opts.trials, "Number of rank-test trials")->check(CLI::PositiveNumber);
  app.add_option("--bound", opts.bound, "Coefficient bound for the rank test")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", opts.max_degree, "Largest degree scanned for covariants")->check(CLI::PositiveNumber);
  app.add_option("-d,--degree", opts.degree, "Degree");
  app.add_option("-m", opts.m, "Number of P^1 factors");
  app.add_option("-w,--weight", opts.weights, "Weight as comma-separated integers")->allow_extra_args(false);
  app.add_option("--method", opts.method, "table or montecarlo")->check(CLI::IsMember({"table", "montecarlo"}));
  app.add_option("--filter", opts.filter, "Fixture name or group prefix");
  app.add_option("--fixtures", opts.fixtures, "Fixture file");

  const auto with_target = [&](CLI::App* sub, const char* what) {
    sub->add_option("target", opts.target, what)->required();
    return sub;
  };

  auto* roots = with_target(app.add_subcommand("roots", "Root system data"), "Group, e.g. E6 or A1xB2");

  auto* weight = app.add_subcommand("weight", "Weyl group actions on weights");
  weight->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> weight_modes;
  for (const char* mode : {"dom", "dot", "dual"})
    weight_modes.emplace_back(mode, with_target(weight->add_subcommand(mode), "Group"));

  auto* bbw = with_target(app.add_subcommand("bbw", "Cohomology of an irreducible homogeneous bundle"),
                          "Group with parabolic, e.g. C3/P3");

  auto* tau = app.add_subcommand("tau", "Tangential variety computations");
  tau->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> tau_modes;
  for (const char* mode : {"coords", "covariants", "bound", "hilbert", "ideal", "nondegenerate"})
    tau_modes.emplace_back(mode, with_target(tau->add_subcommand(mode), "Embedding, e.g. C3/P3 or A3/P2@2"));
  tau_modes.emplace_back("resolution", tau->add_subcommand("resolution", "Last term of the Segre resolution"));

  auto* spherical = with_target(app.add_subcommand("spherical", "Sphericality of the tangential variety"),
                                "Group with parabolic");

  auto* oracle = app.add_subcommand("oracle", "Character oracle");
  oracle->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> oracle_modes;
  for (const char* mode : {"dim", "char", "tensor", "sym"})
    oracle_modes.emplace_back(mode, with_target(oracle->add_subcommand(mode), "Group"));

  auto* verify = app.add_subcommand("verify", "Self checks");
  verify->require_subcommand(1);
  auto* zid = verify->add_subcommand("zid", "Validate every catalog entry");
  auto* fixtures = verify->add_subcommand("fixtures", "Run the fixture battery");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  int code = kExitOk;
  try {
    set_thread_count(opts.threads);
    json result;
    if (*roots) {
      result = cmd_roots(opts);
    } else if (*weight) {
      for (const auto& [mode, sub] : weight_modes)
        if (*sub) result = cmd_weight(opts, mode);
    } else if (*bbw) {
      result = cmd_bbw(opts);
    } else if (*tau) {
      for (const auto& [mode, sub] : tau_modes)
        if (*sub) result = cmd_tau(opts, mode);
    } else if (*spherical) {
      result = cmd_spherical(opts);
    } else if (*oracle) {
      for (const auto& [mode, sub] : oracle_modes)
        if (*sub) result = cmd_oracle(opts, mode);
    } else if (*zid) {
      result = cmd_verify_zid(code);
    } else if (*fixtures) {
      result = cmd_verify_fixtures(opts, code);
    }
    if (opts.json)
      out << canonical_json(result);
    else
      render_text(result, out);
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    code = kExitConsistency;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = kExitDomain;
  }
  set_thread_count(1);
  return code;
}

} // namespace tanvar::cli
