#include "matchinfo/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matchinfo/embedding.hpp"
#include "matchinfo/experiments.hpp"
#include "matchinfo/information.hpp"
#include "matchinfo/io.hpp"

namespace matchinfo {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kSampleTag = 0x73616d706cULL;

struct Globals {
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format = "csv";
  bool bits = false;
};

// ------------------------------------------------------------------ config

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw MissingFileError(path, "cannot open for reading");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw FileError(path, "not a JSON object");
  return j;
}

template <class T>
void take(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

template <class T>
void take(const std::optional<T>& flag, T& out) {
  if (flag) out = *flag;
}

template <class T>
void take(const std::vector<T>& flag, std::vector<T>& out) {
  if (!flag.empty()) out = flag;
}

std::vector<double> flatten(const json& lambda) {
  std::vector<double> flat;
  for (const auto& row : lambda) {
    if (row.is_array()) {
      for (const auto& v : row) flat.push_back(v.get<double>());
    } else {
      flat.push_back(row.get<double>());
    }
  }
  return flat;
}

SbmParams make_params(const std::vector<int>& sizes, const std::vector<double>& lambda) {
  const auto k = static_cast<Eigen::Index>(sizes.size());
  if (k == 0) throw std::invalid_argument("sizes must be nonempty");
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("block sizes must be positive");
  }
  if (static_cast<Eigen::Index>(lambda.size()) != k * k) {
    throw std::invalid_argument("lambda needs K*K = " + std::to_string(k * k) + " entries, got " +
                                std::to_string(lambda.size()));
  }
  SbmParams p;
  p.partition = BlockPartition(sizes);
  p.lambda.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) p.lambda(i, j) = lambda[i * k + j];
  }
  p.validate();
  return p;
}

json params_to_json(const SbmParams& p) {
  json lambda = json::array();
  for (Eigen::Index i = 0; i < p.lambda.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < p.lambda.cols(); ++j) row.push_back(p.lambda(i, j));
    lambda.push_back(row);
  }
  return {{"sizes", p.partition.sizes()}, {"lambda", lambda}};
}

// sizes/lambda from the config file, then from flags.
struct ParamFlags {
  std::vector<int> sizes;
  std::vector<double> lambda;
};

void add_param_flags(CLI::App* app, ParamFlags& f) {
  app->add_option("--sizes", f.sizes, "Block sizes, comma separated")->delimiter(',');
  app->add_option("--lambda", f.lambda, "Block probabilities, K*K row-major")->delimiter(',');
}

void apply_params(const json& j, const ParamFlags& f, SbmParams& p) {
  std::vector<int> sizes = p.partition.sizes();
  std::vector<double> lambda(p.lambda.data(), p.lambda.data() + p.lambda.size());
  const bool touched = j.contains("sizes") || j.contains("lambda") || !f.sizes.empty() ||
                       !f.lambda.empty();
  if (!touched) return;
  take(j, "sizes", sizes);
  if (j.contains("lambda")) lambda = flatten(j.at("lambda"));
  take(f.sizes, sizes);
  take(f.lambda, lambda);
  p = make_params(sizes, lambda);
}

std::string init_name(const MatchInit& init) {
  return init.kind == MatchInit::Kind::kIdentity ? "identity" : "barycenter";
}

MatchInit parse_init(const std::string& name) {
  if (name == "identity") return MatchInit::identity();
  if (name == "barycenter") return MatchInit::barycenter();
  throw std::invalid_argument("unknown init '" + name + "' (identity|barycenter)");
}

struct MatchFlags {
  std::optional<std::string> init;
  std::optional<int> max_iters;
  std::optional<double> tol;
};

void add_match_flags(CLI::App* app, MatchFlags& f) {
  app->add_option("--init", f.init, "Matcher start: barycenter or identity");
  app->add_option("--max-iters", f.max_iters, "Frank-Wolfe iteration cap");
  app->add_option("--tol", f.tol, "Relative objective tolerance");
}

void apply_match(const json& j, const MatchFlags& f, MatchOptions& m) {
  std::string init = init_name(m.init);
  take(j, "match_init", init);
  take(j, "match_max_iters", m.max_iters);
  take(j, "match_tol", m.tol);
  take(f.init, init);
  take(f.max_iters, m.max_iters);
  take(f.tol, m.tol);
  m.init = parse_init(init);
}

json match_to_json(const MatchOptions& m) {
  return {{"match_init", init_name(m.init)},
          {"match_max_iters", m.max_iters},
          {"match_tol", m.tol}};
}

void apply_gmm(const json& j, std::optional<int> restarts, GmmOptions& g) {
  take(j, "gmm_restarts", g.restarts);
  take(j, "gmm_max_iters", g.max_iters);
  take(j, "gmm_tol", g.tol);
  take(restarts, g.restarts);
}

void merge(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

// ------------------------------------------------------------------ output

std::string fmt(double x) { return format_real(x); }

std::string sidecar_path(const std::string& out) { return out + ".meta.json"; }

void write_sidecar(const std::string& out, const std::string& experiment, const Globals& g,
                   const json& config, const json& extra = json::object()) {
  json meta;
  meta["experiment"] = experiment;
  meta["master_seed"] = g.seed;
  meta["threads"] = g.threads;
  meta["format"] = g.format;
  meta["rng_stream_version"] = RngStream::kStreamVersion;
  meta["config"] = config;
  for (auto it = extra.begin(); it != extra.end(); ++it) meta[it.key()] = it.value();
  const std::string path = sidecar_path(out);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FileError(path, "cannot open for writing");
  f << meta.dump(2) << '\n';
  f.flush();
  if (!f) throw FileError(path, "write failed");
}

void finish_experiment(std::ostream& out, const std::string& path, const Table& t,
                       const Globals& g) {
  write_table(path, t, g.format);
  out << "wrote " << path << " (" << t.rows.size() << " rows)\n";
}

// ------------------------------------------------------------------ sample

struct SampleArgs {
  std::optional<std::string> model;
  std::string config;
  ParamFlags params;
  std::optional<int> n;
  std::optional<double> p;
  std::optional<double> rho;
  std::optional<std::string> shuffle;
  std::string out_a, out_b, out_perm;
};

int cmd_sample(const SampleArgs& a, const Globals& g, std::ostream& out) {
  const json j = load_config(a.config);
  std::string model = "rho-sbm";
  take(j, "model", model);
  take(a.model, model);
  double rho = 0.0;
  take(j, "rho", rho);
  take(a.rho, rho);
  std::string shuffle = "none";
  take(j, "shuffle", shuffle);
  take(a.shuffle, shuffle);

  SbmParams params = three_block_params();
  if (model == "rho-er") {
    int n = 100;
    double p = 0.5;
    take(j, "n", n);
    take(j, "p", p);
    take(a.n, n);
    take(a.p, p);
    if (n < 1) throw std::invalid_argument("n must be positive");
    params = make_params({n}, {p});
  } else if (model == "rho-sbm") {
    apply_params(j, a.params, params);
  } else {
    throw std::invalid_argument("unknown model '" + model + "' (rho-sbm|rho-er)");
  }
  const CorrelationSpec corr{rho};
  corr.validate();

  const RngStream root(g.seed, kSampleTag);
  RngStream rng = root.substream(0);
  auto [g1, g2] = sample_rho_sbm(params, corr, rng);
  RngStream srng = root.substream(1);
  const std::size_t n = params.num_vertices();
  Permutation sigma = Permutation::identity(n);
  if (shuffle == "uniform") {
    sigma = sample_uniform_permutation(n, srng);
  } else if (shuffle == "block") {
    sigma = sample_block_permutation(params.partition, srng);
  } else if (shuffle != "none") {
    throw std::invalid_argument("unknown shuffle '" + shuffle + "' (none|uniform|block)");
  }
  g2 = apply_permutation(g2, sigma);
  write_edge_list(a.out_a, g1);
  write_edge_list(a.out_b, g2);
  if (!a.out_perm.empty()) write_permutation(a.out_perm, sigma);
  out << "n=" << n << " edges_a=" << g1.edge_count() << " edges_b=" << g2.edge_count() << '\n';
  return 0;
}

// ------------------------------------------------------------------- match

struct MatchArgs {
  std::string a, b, seeds, out_perm, report;
  MatchFlags match;
};

int cmd_match(const MatchArgs& m, std::ostream& out) {
  const Graph a = read_edge_list(m.a);
  const Graph b = read_edge_list(m.b);
  if (a.size() != b.size()) {
    throw std::invalid_argument("vertex counts differ: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  const SeedSet seeds = m.seeds.empty() ? SeedSet{} : read_seeds(m.seeds);
  MatchOptions options;
  apply_match(json::object(), m.match, options);
  const MatchResult r = sgm_match(a, b, seeds, options);
  if (!m.out_perm.empty()) write_permutation(m.out_perm, r.permutation);

  json report;
  report["n"] = a.size();
  report["seeds"] = seeds.size();
  report["objective"] = r.objective;
  report["trace_value"] = r.trace_value;
  report["iterations"] = r.iterations;
  report["converged"] = r.converged;
  report["disagreements_before"] = edge_disagreements(a, b);
  report["disagreements_after"] = r.objective / 2;
  const std::string text = report.dump(2) + "\n";
  if (!m.report.empty()) {
    std::ofstream f(m.report, std::ios::binary);
    if (!f) throw FileError(m.report, "cannot open for writing");
    f << text;
    f.flush();
    if (!f) throw FileError(m.report, "write failed");
  }
  out << text;
  return 0;
}

// ---------------------------------------------------------------------- mi

struct MiArgs {
  std::string config;
  ParamFlags params;
  std::optional<double> rho;
};

std::string six(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

int cmd_mi(const MiArgs& m, const Globals& g, std::ostream& out) {
  const json j = load_config(m.config);
  SbmParams params = three_block_params();
  apply_params(j, m.params, params);
  double rho = 0.0;
  take(j, "rho", rho);
  take(m.rho, rho);
  CorrelationSpec{rho}.validate();

  const double scale = g.bits ? 1.0 / std::numbers::ln2 : 1.0;
  const double mi = rho_sbm_mi(params, rho) * scale;
  const double h = sbm_entropy(params) * scale;
  const std::optional<double> ratio =
      rho > 0.0 ? std::optional<double>(mi_small_rho_ratio(params, rho)) : std::nullopt;
  const char* unit = g.bits ? "bits" : "nats";
  if (g.format == "json") {
    json r;
    r["mutual_information"] = mi;
    r["entropy"] = h;
    r["small_rho_ratio"] = ratio ? json(*ratio) : json(nullptr);
    r["unit"] = unit;
    out << r.dump(2) << '\n';
  } else {
    out << "mutual_information " << six(mi) << ' ' << unit << '\n';
    out << "entropy " << six(h) << ' ' << unit << '\n';
    out << "small_rho_ratio " << (ratio ? six(*ratio) : std::string("undefined")) << '\n';
  }
  return 0;
}

// --------------------------------------------------------------- experiments

struct ExpCommon {
  std::string config;
  std::string out;
  std::optional<int> mc;
  MatchFlags match;
};

void add_common(CLI::App* app, ExpCommon& c) {
  app->add_option("--config", c.config, "JSON config; flags override its fields");
  app->add_option("-o,--out", c.out, "Output table path")->required();
  app->add_option("--mc", c.mc, "Monte Carlo replicates");
  add_match_flags(app, c.match);
}

struct PhaseArgs {
  ExpCommon common;
  ParamFlags params;
  std::vector<double> rho_grid;
  bool no_sweep = false;
};

int cmd_phase(const PhaseArgs& a, const Globals& g, std::ostream& out) {
  const json j = load_config(a.common.config);
  PhaseTransitionConfig c;
  c.master_seed = g.seed;
  c.threads = g.threads;
  apply_params(j, a.params, c.params);
  take(j, "rho_grid", c.rho_grid);
  take(j, "mc_reps", c.mc_reps);
  take(j, "transposition_sweep", c.transposition_sweep);
  take(a.rho_grid, c.rho_grid);
  take(a.common.mc, c.mc_reps);
  if (a.no_sweep) c.transposition_sweep = false;
  apply_match(j, a.common.match, c.match);

  const PhaseTransitionResult r = phase_transition_experiment(c);
  Table t;
  for (const char* col : {"experiment", "rho", "variant", "mean", "se", "mc_reps", "master_seed"}) {
    const std::string name = col;
    t.add_column(name, name != "experiment" && name != "variant");
  }
  for (const auto& row : r.rows) {
    t.rows.push_back({"phase-transition", fmt(row.rho), row.variant, fmt(row.mean), fmt(row.se),
                      std::to_string(c.mc_reps), std::to_string(c.master_seed)});
  }
  json cfg = params_to_json(c.params);
  cfg["rho_grid"] = c.rho_grid;
  cfg["mc_reps"] = c.mc_reps;
  cfg["transposition_sweep"] = c.transposition_sweep;
  merge(cfg, match_to_json(c.match));
  finish_experiment(out, a.common.out, t, g);
  write_sidecar(a.common.out, "phase-transition", g, cfg);
  return 0;
}

struct PowerErArgs {
  ExpCommon common;
  std::optional<double> p, q, rho, alpha, p_null;
  std::optional<int> n, n_null;
  std::vector<int> s_grid, x_grid;
};

int cmd_power_er(const PowerErArgs& a, const Globals& g, std::ostream& out) {
  const json j = load_config(a.common.config);
  PowerErConfig c;
  c.master_seed = g.seed;
  c.threads = g.threads;
  take(j, "p", c.p);
  take(j, "q", c.q);
  take(j, "n", c.n);
  take(j, "rho", c.rho);
  take(j, "s_grid", c.s_grid);
  take(j, "x_grid", c.x_grid);
  take(j, "alpha", c.alpha);
  take(j, "mc_reps", c.mc_reps);
  take(j, "n_null", c.n_null);
  take(j, "p_null", c.p_null);
  take(a.p, c.p);
  take(a.q, c.q);
  take(a.n, c.n);
  take(a.rho, c.rho);
  take(a.s_grid, c.s_grid);
  take(a.x_grid, c.x_grid);
  take(a.alpha, c.alpha);
  take(a.common.mc, c.mc_reps);
  take(a.n_null, c.n_null);
  take(a.p_null, c.p_null);
  apply_match(j, a.common.match, c.match);

  const PowerErResult r = power_er_experiment(c);
  Table t;
  for (const char* col :
       {"experiment", "s", "x", "variant", "power", "std_err", "mc_reps", "master_seed"}) {
    const std::string name = col;
    t.add_column(name, name != "experiment" && name != "variant");
  }
  for (const auto& row : r.rows) {
    t.rows.push_back({"power-er", std::to_string(row.s), std::to_string(row.x), row.variant,
                      fmt(row.estimate.power), fmt(row.estimate.std_err),
                      std::to_string(c.mc_reps), std::to_string(c.master_seed)});
  }
  json cfg{{"p", c.p},           {"q", c.q},         {"n", c.n},
           {"rho", c.rho},       {"s_grid", c.s_grid}, {"x_grid", c.x_grid},
           {"alpha", c.alpha},   {"mc_reps", c.mc_reps}, {"n_null", c.n_null},
           {"p_null", c.p_null}};
  merge(cfg, match_to_json(c.match));
  finish_experiment(out, a.common.out, t, g);
  write_sidecar(a.common.out, "power-er", g, cfg,
                {{"paired_critical_value", r.paired_critical_value},
                 {"unpaired_critical_value", r.unpaired_critical_value}});
  return 0;
}

struct PowerOmniArgs {
  ExpCommon common;
  std::optional<int> n, d, anomalies, n_null;
  std::optional<double> mix, alpha;
  std::vector<int> x_grid;
  bool redraw_latents = false;
  std::optional<std::string> invariant_null;
};

int cmd_power_omni(const PowerOmniArgs& a, const Globals& g, std::ostream& out) {
  const json j = load_config(a.common.config);
  PowerOmniConfig c;
  c.master_seed = g.seed;
  c.threads = g.threads;
  std::string inv = "independent";
  take(j, "n", c.n);
  take(j, "d", c.d);
  take(j, "anomalies", c.anomalies);
  take(j, "mix", c.mix);
  take(j, "x_grid", c.x_grid);
  take(j, "alpha", c.alpha);
  take(j, "mc_reps", c.mc_reps);
  take(j, "n_null", c.n_null);
  take(j, "redraw_latents", c.redraw_latents);
  take(j, "invariant_null", inv);
  take(a.n, c.n);
  take(a.d, c.d);
  take(a.anomalies, c.anomalies);
  take(a.mix, c.mix);
  take(a.x_grid, c.x_grid);
  take(a.alpha, c.alpha);
  take(a.common.mc, c.mc_reps);
  take(a.n_null, c.n_null);
  take(a.invariant_null, inv);
  if (a.redraw_latents) c.redraw_latents = true;
  if (inv == "model") {
    c.invariant_null = InvariantNull::kModel;
  } else if (inv == "independent") {
    c.invariant_null = InvariantNull::kIndependent;
  } else {
    throw std::invalid_argument("unknown invariant null '" + inv + "' (model|independent)");
  }
  apply_match(j, a.common.match, c.match);

  const PowerOmniResult r = power_omni_experiment(c);
  Table t;
  for (const char* col : {"experiment", "x", "variant", "power", "std_err", "critical_value",
                          "mc_reps", "master_seed"}) {
    const std::string name = col;
    t.add_column(name, name != "experiment" && name != "variant");
  }
  for (const auto& row : r.rows) {
    t.rows.push_back({"power-omni", std::to_string(row.x), row.variant, fmt(row.estimate.power),
                      fmt(row.estimate.std_err), fmt(row.critical_value),
                      std::to_string(c.mc_reps), std::to_string(c.master_seed)});
  }
  json cfg{{"n", c.n},
           {"d", c.d},
           {"anomalies", c.anomalies},
           {"mix", c.mix},
           {"x_grid", c.x_grid},
           {"alpha", c.alpha},
           {"mc_reps", c.mc_reps},
           {"n_null", c.n_null},
           {"redraw_latents", c.redraw_latents},
           {"invariant_null", inv}};
  merge(cfg, match_to_json(c.match));
  finish_experiment(out, a.common.out, t, g);
  write_sidecar(a.common.out, "power-omni", g, cfg);
  return 0;
}

Table cluster_table(const std::string& experiment, const std::vector<ClusterRow>& rows,
                    int mc_reps, std::uint64_t seed, std::optional<int> d) {
  Table t;
  std::vector<std::string> cols{"experiment", "rho", "s", "variant", "mean_ari", "se"};
  if (d) cols.push_back("d");
  cols.push_back("mc_reps");
  cols.push_back("master_seed");
  for (const auto& name : cols) t.add_column(name, name != "experiment" && name != "variant");
  for (const auto& row : rows) {
    std::vector<std::string> cells{experiment,   fmt(row.rho), std::to_string(row.s),
                                   row.variant, fmt(row.mean_ari), fmt(row.se)};
    if (d) cells.push_back(std::to_string(*d));
    cells.push_back(std::to_string(mc_reps));
    cells.push_back(std::to_string(seed));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

struct ClusterArgs {
  ExpCommon common;
  ParamFlags params;
  std::optional<double> rho;
  std::vector<double> rho_grid;
  std::vector<int> seeds_grid;
  std::optional<int> d, k, restarts;
};

int cmd_cluster(const ClusterArgs& a, const Globals& g, std::ostream& out) {
  const json j = load_config(a.common.config);
  ClusterConfig c;
  c.master_seed = g.seed;
  c.threads = g.threads;
  apply_params(j, a.params, c.params);
  take(j, "rho_grid", c.rho_grid);
  take(j, "seeds_grid", c.seeds_grid);
  take(j, "d", c.d);
  take(j, "k", c.k);
  take(j, "mc_reps", c.mc_reps);
  take(a.rho_grid, c.rho_grid);
  if (a.rho) c.rho_grid = {*a.rho};
  take(a.seeds_grid, c.seeds_grid);
  take(a.d, c.d);
  take(a.k, c.k);
  take(a.common.mc, c.mc_reps);
  apply_gmm(j, a.restarts, c.gmm);
  apply_match(j, a.common.match, c.match);

  const ClusterResult r = cluster_experiment(c);
  const Table t = cluster_table("cluster", r.rows, c.mc_reps, c.master_seed, std::nullopt);
  json cfg = params_to_json(c.params);
  cfg["rho_grid"] = c.rho_grid;
  cfg["seeds_grid"] = c.seeds_grid;
  cfg["d"] = c.d;
  cfg["k"] = c.k;
  cfg["mc_reps"] = c.mc_reps;
  cfg["gmm_restarts"] = c.gmm.restarts;
  cfg["gmm_max_iters"] = c.gmm.max_iters;
  cfg["gmm_tol"] = c.gmm.tol;
  merge(cfg, match_to_json(c.match));
  finish_experiment(out, a.common.out, t, g);
  write_sidecar(a.common.out, "cluster", g, cfg);
  return 0;
}

struct RealArgs {
  ExpCommon common;
  std::string a, b, labels;
  std::vector<int> seeds_grid;
  std::optional<int> d, k, restarts;
  bool scree = false;
};

int cmd_cluster_real(const RealArgs& a, const Globals& g, std::ostream& out) {
  const json j = load_config(a.common.config);
  const Graph ga = read_edge_list(a.a);
  const Graph gb = read_edge_list(a.b);
  const std::vector<int> labels = read_labels(a.labels);
  RealClusterConfig c;
  c.master_seed = g.seed;
  c.threads = g.threads;
  take(j, "seeds_grid", c.seeds_grid);
  take(j, "d", c.d);
  take(j, "k", c.k);
  take(j, "mc_reps", c.mc_reps);
  take(a.seeds_grid, c.seeds_grid);
  take(a.d, c.d);
  take(a.k, c.k);
  take(a.common.mc, c.mc_reps);
  if (a.scree) c.d = 0;
  if (c.d == 0 && !a.scree && !j.contains("d")) {
    throw std::invalid_argument("give --d or --scree");
  }
  apply_gmm(j, a.restarts, c.gmm);
  apply_match(j, a.common.match, c.match);

  const RealClusterResult r = cluster_real_experiment(ga, gb, labels, c);
  const Table t = cluster_table("cluster-real", r.rows, c.mc_reps, c.master_seed, r.d);
  json cfg{{"a", a.a},
           {"b", a.b},
           {"labels", a.labels},
           {"seeds_grid", c.seeds_grid},
           {"d", c.d},
           {"k", c.k},
           {"mc_reps", c.mc_reps},
           {"gmm_restarts", c.gmm.restarts},
           {"gmm_max_iters", c.gmm.max_iters},
           {"gmm_tol", c.gmm.tol}};
  merge(cfg, match_to_json(c.match));
  finish_experiment(out, a.common.out, t, g);
  write_sidecar(a.common.out, "cluster-real", g, cfg,
                {{"chosen_d", r.d}, {"d_source", c.d == 0 ? "scree" : "fixed"}});
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlated graph pairs: sampling, matching, information and experiments"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for replicates")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--bits", g.bits, "Report information in bits");

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Write a sampled correlated pair as edge lists");
  s->add_option("--model", sample.model, "rho-sbm or rho-er");
  s->add_option("--config", sample.config, "JSON config");
  add_param_flags(s, sample.params);
  s->add_option("--n", sample.n, "Vertices (rho-er)");
  s->add_option("--p", sample.p, "Edge probability (rho-er)");
  s->add_option("--rho", sample.rho, "Edge correlation");
  s->add_option("--shuffle", sample.shuffle, "none, uniform or block");
  s->add_option("--out-a", sample.out_a, "First graph")->required();
  s->add_option("--out-b", sample.out_b, "Second graph")->required();
  s->add_option("--out-perm", sample.out_perm, "Shuffle applied to the second graph");

  MatchArgs match;
  auto* m = app.add_subcommand("match", "Match two edge lists");
  m->add_option("--a", match.a, "First graph")->required();
  m->add_option("--b", match.b, "Second graph")->required();
  m->add_option("--seeds", match.seeds, "Seed file, lines 'u v'");
  m->add_option("--out-perm", match.out_perm, "Permutation output");
  m->add_option("--report", match.report, "JSON report output");
  add_match_flags(m, match.match);

  MiArgs mi;
  auto* i = app.add_subcommand("mi", "Mutual information of a correlated SBM pair");
  i->add_option("--config", mi.config, "JSON config");
  add_param_flags(i, mi.params);
  i->add_option("--rho", mi.rho, "Edge correlation");

  auto* exp = app.add_subcommand("exp", "Run an experiment and write its table");
  exp->require_subcommand(1);

  PhaseArgs phase;
  auto* e1 = exp->add_subcommand("phase-transition", "Matchability across correlations");
  add_common(e1, phase.common);
  add_param_flags(e1, phase.params);
  e1->add_option("--rho-grid", phase.rho_grid, "Correlations")->delimiter(',');
  e1->add_flag("--no-sweep", phase.no_sweep, "Skip the transposition sweep");

  PowerErArgs power_er;
  auto* e2 = exp->add_subcommand("power-er", "Power of paired tests under shuffling");
  add_common(e2, power_er.common);
  e2->add_option("--p", power_er.p, "Edge probability, first graph");
  e2->add_option("--q", power_er.q, "Edge probability, second graph");
  e2->add_option("--n", power_er.n, "Vertices");
  e2->add_option("--rho", power_er.rho, "Edge correlation");
  e2->add_option("--s-grid", power_er.s_grid, "Seed counts")->delimiter(',');
  e2->add_option("--x-grid", power_er.x_grid, "Shuffle caps")->delimiter(',');
  e2->add_option("--alpha", power_er.alpha, "Test level");
  e2->add_option("--n-null", power_er.n_null, "Null draws for calibration");
  e2->add_option("--p-null", power_er.p_null, "Edge probability of the null pair");

  PowerOmniArgs power_omni;
  auto* e3 = exp->add_subcommand("power-omni", "Omnibus anomaly test under shuffling");
  add_common(e3, power_omni.common);
  e3->add_option("--n", power_omni.n, "Vertices");
  e3->add_option("--d", power_omni.d, "Embedding dimension");
  e3->add_option("--anomalies", power_omni.anomalies, "Perturbed rows");
  e3->add_option("--mix", power_omni.mix, "Perturbation weight");
  e3->add_option("--x-grid", power_omni.x_grid, "Shuffled counts")->delimiter(',');
  e3->add_option("--alpha", power_omni.alpha, "Test level");
  e3->add_option("--n-null", power_omni.n_null, "Null draws for calibration");
  e3->add_flag("--redraw-latents", power_omni.redraw_latents, "New latent positions per draw");
  e3->add_option("--invariant-null", power_omni.invariant_null, "independent (default) or model");

  ClusterArgs cluster;
  auto* e4 = exp->add_subcommand("cluster", "Joint versus single-graph clustering");
  add_common(e4, cluster.common);
  add_param_flags(e4, cluster.params);
  e4->add_option("--rho", cluster.rho, "Single correlation");
  e4->add_option("--rho-grid", cluster.rho_grid, "Correlations")->delimiter(',');
  e4->add_option("--seeds-grid", cluster.seeds_grid, "Seed counts")->delimiter(',');
  e4->add_option("--d", cluster.d, "Embedding dimension");
  e4->add_option("--k", cluster.k, "Mixture components");
  e4->add_option("--restarts", cluster.restarts, "GMM restarts");

  RealArgs real;
  auto* r = app.add_subcommand("cluster-real", "Clustering pipeline on two edge lists");
  add_common(r, real.common);
  r->add_option("--a", real.a, "First graph")->required();
  r->add_option("--b", real.b, "Second graph")->required();
  r->add_option("--labels", real.labels, "Vertex labels")->required();
  r->add_option("--seeds-grid", real.seeds_grid, "Seed counts")->delimiter(',');
  r->add_option("--d", real.d, "Embedding dimension");
  r->add_flag("--scree", real.scree, "Pick d by the scree elbow");
  r->add_option("--k", real.k, "Mixture components");
  r->add_option("--restarts", real.restarts, "GMM restarts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*s) return cmd_sample(sample, g, out);
    if (*m) return cmd_match(match, out);
    if (*i) return cmd_mi(mi, g, out);
    if (*e1) return cmd_phase(phase, g, out);
    if (*e2) return cmd_power_er(power_er, g, out);
    if (*e3) return cmd_power_omni(power_omni, g, out);
    if (*e4) return cmd_cluster(cluster, g, out);
    if (*r) return cmd_cluster_real(real, g, out);
  } catch (const MissingFileError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace matchinfo
