#include "symwalk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "symwalk/characters.hpp"
#include "symwalk/cycle_type.hpp"
#include "symwalk/degrees.hpp"
#include "symwalk/mixing.hpp"
#include "symwalk/notation.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/simulate.hpp"
#include "symwalk/slicing.hpp"
#include "symwalk/sweep.hpp"
#include "symwalk/table.hpp"
#include "symwalk/zeta.hpp"

namespace symwalk {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Guards {
  int characters = kDefaultCharacterMaxN;
  int exact_tv = kDefaultExactTvMaxN;
  int listing = kZetaEnumerationLimit;
  int diagram = 100'000;
  long long samples = 1'000'000'000;

  static Guards from_environment() {
    Guards g;
    if (const char* raw = std::getenv("SYMWALK_MAX_N")) {
      int value = 0;
      const std::string_view text(raw);
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
        g.characters = std::max(g.characters, value);
        g.exact_tv = std::max(g.exact_tv, value);
        g.listing = std::max(g.listing, value);
        g.diagram = std::max(g.diagram, value);
      }
    }
    return g;
  }
};

void require_at_most(const char* what, long long value, long long limit) {
  if (value > limit)
    throw ResourceGuard(std::string(what) + " = " + std::to_string(value) + " exceeds the limit " +
                        std::to_string(limit) + " (raise with SYMWALK_MAX_N)");
}

struct Options {
  std::string lambda, mu, class_text, faces, config;
  std::string subset = "starstar";
  std::string slicing = "abdelta";
  std::optional<int> n;
  int t = 1;
  int k = 0;
  int m = 2;
  std::optional<double> s;
  std::optional<double> alpha;
  long long samples = 100'000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "csv";
  std::string out;
};

struct Invocation {
  Table table{{}};
  Json inputs = Json::object();
};

Cell integer(long long v) { return Cell(std::int64_t{v}); }
Cell real(double v) { return Cell(v); }
Cell text(std::string s) { return Cell(std::move(s)); }
Cell optional_real(const std::optional<double>& v) { return v ? Cell(*v) : Cell(); }
std::string coset_name(int parity) { return parity == 1 ? "even" : "odd"; }

Partition lambda_flag(const std::string& flag, const std::string& value, const Guards& guards) {
  if (value.empty()) throw UsageError(flag + " is required");
  try {
    Partition lambda = Partition::parse(value);
    require_at_most("partition size", lambda.size(), guards.diagram);
    return lambda;
  } catch (const ResourceGuard&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

CycleType class_flag(const Options& o) {
  if (o.class_text.empty()) throw UsageError("--class is required");
  try {
    return CycleType::parse(o.class_text, o.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--class: ") + e.what());
  }
}

int n_flag(const Options& o) {
  if (!o.n) throw UsageError("--n is required");
  return *o.n;
}

SliceSpec slicing_flag(const std::string& name) {
  if (name == "abdelta") return SliceSpec::ab_delta();
  if (name == "first-row") return SliceSpec::first_row();
  if (name == "first-hook") return SliceSpec::first_hook();
  throw UsageError("--slicing: expected abdelta, first-row or first-hook, got '" + name + "'");
}

ZetaSubset subset_flag(const std::string& name) {
  if (name == "starstar") return ZetaSubset::StarStar;
  if (name == "lambda") return ZetaSubset::LambdaK;
  if (name == "lambda-sym") return ZetaSubset::LambdaSymK;
  throw UsageError("--subset: expected starstar, lambda or lambda-sym, got '" + name + "'");
}

void check_samples(const Options& o, const Guards& guards) {
  if (o.samples < 1) throw UsageError("--samples must be positive");
  require_at_most("samples", o.samples, guards.samples);
}

// Command bodies -----------------------------------------------------------

Invocation cmd_partitions(const Options& o, const Guards& guards) {
  const int n = n_flag(o);
  if (n < 1) throw UsageError("--n must be positive");
  require_at_most("n", n, guards.listing);
  Invocation r;
  r.inputs["n"] = n;
  r.table = Table({"index", "lambda", "length", "durfee", "dimension"});
  long long index = 0;
  for (const auto& lambda : enumerate_partitions(n))
    r.table.add_row({integer(index++), text(lambda.to_string()), integer(lambda.length()),
                     integer(lambda.anatomy().durfee), dimension(lambda)});
  return r;
}

Invocation cmd_dim(const Options& o, const Guards& guards) {
  const Partition lambda = lambda_flag("--lambda", o.lambda, guards);
  Invocation r;
  r.inputs["lambda"] = lambda.to_string();
  r.table = Table({"lambda", "n", "dimension", "hook_product", "log_dimension"});
  const BigCount d = dimension(lambda);
  r.table.add_row({text(lambda.to_string()), integer(lambda.size()), d, hook_product(lambda), real(log_abs(d))});
  return r;
}

Invocation cmd_vdeg(const Options& o, const Guards& guards) {
  const Partition lambda = lambda_flag("--lambda", o.lambda, guards);
  const DegreeReport rep = degree_report(lambda);
  Invocation r;
  r.inputs["lambda"] = lambda.to_string();
  r.table = Table({"lambda", "n", "virtual_degree", "dimension", "augmented_dimension", "exponent_gap"});
  r.table.add_row({text(lambda.to_string()), integer(lambda.size()), rep.virtual_degree, rep.dimension,
                   rep.augmented_dimension, optional_real(rep.exponent_gap)});
  return r;
}

Invocation cmd_augdim(const Options& o, const Guards& guards) {
  const Partition lambda = lambda_flag("--lambda", o.lambda, guards);
  const auto& a = lambda.anatomy();
  const BigCount d_plus = augmented_dimension(lambda);
  const BigCount hook_part = augmented_dimension(lambda.external_hook());
  const BigCount center_part = lambda.center().empty() ? BigCount(1) : augmented_dimension(lambda.center());
  const BigCount choose = binomial(static_cast<unsigned long>(lambda.size()), static_cast<unsigned long>(a.external_hook));
  const CenterBound center = center_bound_report(lambda);
  Invocation r;
  r.inputs["lambda"] = lambda.to_string();
  r.table = Table({"lambda", "n", "augmented_dimension", "external_hook", "center", "hook_part", "center_part",
                   "binomial_n_s", "product_identity", "center_ratio", "center_ratio_real", "center_lower_log",
                   "center_lower_ok", "center_upper_ok"});
  r.table.add_row({text(lambda.to_string()), integer(lambda.size()), d_plus, integer(a.external_hook),
                   integer(a.center), hook_part, center_part, choose, Cell(d_plus == choose * hook_part * center_part),
                   center.ratio, real(center.ratio.get_d()), real(center.lower_log), Cell(center.lower_ok),
                   Cell(center.upper_ok)});
  return r;
}

Invocation cmd_slice(const Options& o, const Guards& guards) {
  const Partition lambda = lambda_flag("--lambda", o.lambda, guards);
  const Partition mu = o.mu.empty() ? lambda : lambda_flag("--mu", o.mu, guards);
  if (!lambda.contains(mu)) throw UsageError("--mu must fit inside --lambda");
  const SliceSpec spec = slicing_flag(o.slicing);
  const auto boxes = mu.boxes();
  const SliceRatio ratio = slice_ratio(lambda, mu, spec);
  Invocation r;
  r.inputs["lambda"] = lambda.to_string();
  r.inputs["mu"] = mu.to_string();
  r.inputs["slicing"] = o.slicing;
  r.table = Table({"lambda", "mu", "slicing", "hook_product", "sliced_hook_product", "ratio", "log_ratio",
                   "p_dimension"});
  r.table.add_row({text(lambda.to_string()), text(mu.to_string()), text(o.slicing), hook_product(lambda, boxes),
                   sliced_hook_product(lambda, spec, boxes), ratio.exact ? Cell(*ratio.exact) : Cell(),
                   real(ratio.log.log()), p_dimension(lambda, spec)});
  return r;
}

Invocation cmd_char(const Options& o, const Guards& guards) {
  const CycleType rho = class_flag(o);
  require_at_most("n", rho.n(), guards.characters);
  std::vector<Partition> partitions;
  std::vector<BigCount> values;
  if (!o.lambda.empty()) {
    const Partition lambda = lambda_flag("--lambda", o.lambda, guards);
    if (lambda.size() != rho.n()) throw UsageError("--lambda and --class have different sizes");
    partitions = {lambda};
    values = {character(lambda, rho)};
  } else {
    auto column = character_column(rho, guards.characters, o.threads);
    partitions = std::move(column.partitions);
    values = std::move(column.values);
  }
  Invocation r;
  r.inputs["class"] = rho.to_string();
  if (!o.lambda.empty()) r.inputs["lambda"] = partitions.front().to_string();
  r.table = Table({"lambda", "class", "character", "dimension", "chi", "bound_log", "bound_ok"});
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const BigCount d = dimension(partitions[i]);
    Rational chi(values[i], d);
    chi.canonicalize();
    Cell bound_log, bound_ok;
    if (rho.n() >= 2) {
      const auto check = verify_character_bound(partitions[i], rho, values[i]);
      bound_log = real(check.rhs.log());
      bound_ok = Cell(check.ok);
    }
    r.table.add_row({text(partitions[i].to_string()), text(rho.to_string()), values[i], d, chi, bound_log, bound_ok});
  }
  return r;
}

Invocation cmd_egrowth(const Options& o, const Guards& guards) {
  const CycleType sigma = class_flag(o);
  require_at_most("n", sigma.n(), guards.diagram);
  if (sigma.n() < 2) throw UsageError("--class: orbit growth needs n >= 2");
  const OrbitGrowth g = orbit_growth(sigma);
  std::string e_terms;
  for (std::size_t i = 0; i < g.e.size(); ++i) {
    if (g.e[i] == 0.0) continue;
    if (!e_terms.empty()) e_terms += ';';
    e_terms += std::to_string(i + 1) + ':' + format_real(g.e[i]);
  }
  std::optional<double> ibis_bound;
  if (g.i_bis && sigma.count(1) > 0) ibis_bound = e_bound_ibis(sigma);
  Invocation r;
  r.inputs["class"] = sigma.to_string();
  r.table = Table({"class", "n", "cycles", "sign", "i_min", "i_bis", "f", "E", "B", "e", "bound_cycles",
                   "bound_imin", "bound_ibis", "class_size"});
  r.table.add_row({text(sigma.to_string()), integer(sigma.n()), integer(sigma.cycles()), integer(sigma.sign()),
                   integer(g.i_min), g.i_bis ? integer(*g.i_bis) : Cell(), integer(g.f_cap), real(g.E), real(g.B),
                   text(e_terms), real(e_bound_cycles(sigma)), real(e_bound_imin(sigma)), optional_real(ibis_bound),
                   class_size(sigma)});
  return r;
}

Invocation cmd_zeta(const Options& o, const Guards& guards) {
  const int n = n_flag(o);
  if (n < 2) throw UsageError("--n must be at least 2");
  require_at_most("n", n, guards.diagram);
  if (o.k < 0) throw UsageError("--k must be nonnegative");
  if (o.s && o.alpha) throw UsageError("give only one of --s and --alpha");
  const double s = o.alpha ? *o.alpha / std::log(static_cast<double>(n)) : o.s.value_or(1.0);
  if (s < 0) throw UsageError("--s must be nonnegative");
  const ZetaSubset subset = subset_flag(o.subset);
  const ZetaResult z = zeta({n, subset, o.k, s});
  Invocation r;
  r.inputs["n"] = n;
  r.inputs["subset"] = o.subset;
  r.inputs["k"] = o.k;
  if (o.alpha)
    r.inputs["alpha"] = *o.alpha;
  else
    r.inputs["s"] = s;
  r.table = Table({"n", "subset", "k", "s", "alpha", "zeta", "log_zeta", "terms", "method", "truncated",
                   "reference"});
  r.table.add_row({integer(n), text(o.subset), integer(o.k), real(s), optional_real(o.alpha), real(z.value),
                   real(z.log_value), integer(z.terms), text(z.enumerated ? "enumeration" : "depth"),
                   Cell(z.truncated), o.alpha ? real(std::exp(-(o.k / 12.0) * *o.alpha)) : Cell()});
  return r;
}

Invocation cmd_ds_bound(const Options& o, const Guards& guards) {
  const CycleType sigma = class_flag(o);
  if (o.t < 1) throw UsageError("--t must be at least 1");
  require_at_most("n", sigma.n(), guards.characters);
  const double bound = ds_upper_bound(ClassFamily::power(sigma, o.t), guards.characters, o.threads);
  Invocation r;
  r.inputs["class"] = sigma.to_string();
  r.inputs["t"] = o.t;
  r.table = Table({"class", "n", "t", "coset", "ds_bound"});
  r.table.add_row({text(sigma.to_string()), integer(sigma.n()), integer(o.t), text(coset_name(coset_target(sigma, o.t))),
                   real(bound)});
  return r;
}

Invocation cmd_exact_tv(const Options& o, const Guards& guards) {
  const CycleType sigma = class_flag(o);
  if (o.t < 0) throw UsageError("--t must be nonnegative");
  require_at_most("n", sigma.n(), guards.exact_tv);
  const Rational tv = exact_tv(sigma, o.t, guards.exact_tv);
  Cell bound;
  if (o.t >= 1 && sigma.n() <= guards.characters)
    bound = real(ds_upper_bound(ClassFamily::power(sigma, o.t), guards.characters, o.threads));
  Invocation r;
  r.inputs["class"] = sigma.to_string();
  r.inputs["t"] = o.t;
  r.table = Table({"class", "n", "t", "coset", "exact_tv", "exact_tv_real", "ds_bound"});
  r.table.add_row({text(sigma.to_string()), integer(sigma.n()), integer(o.t), text(coset_name(coset_target(sigma, o.t))),
                   tv, real(tv.get_d()), bound});
  return r;
}

Invocation cmd_cutoff(const Options& o, const Guards& guards) {
  const CycleType sigma = class_flag(o);
  require_at_most("n", sigma.n(), guards.diagram);
  if (sigma.is_identity()) throw UsageError("--class: the cutoff time is undefined for the identity");
  Invocation r;
  r.inputs["class"] = sigma.to_string();
  r.table = Table({"class", "n", "f", "cutoff"});
  r.table.add_row({text(sigma.to_string()), integer(sigma.n()), integer(std::max(sigma.count(1), 1)),
                   real(cutoff_time(sigma))});
  return r;
}

SamplingOptions sampling(const Options& o) { return {o.samples, o.seed, o.threads}; }

Invocation cmd_walk(const Options& o, const Guards& guards) {
  const CycleType sigma = class_flag(o);
  require_at_most("n", sigma.n(), guards.diagram);
  if (o.t < 1) throw UsageError("--t must be at least 1");
  check_samples(o, guards);
  const Histogram hist = walk_fixed_points(sigma, o.t, sampling(o));
  Invocation r;
  r.inputs["class"] = sigma.to_string();
  r.inputs["t"] = o.t;
  r.inputs["samples"] = o.samples;
  r.inputs["seed"] = o.seed;
  r.table = Table({"class", "t", "fixed_points", "count", "probability"});
  for (int v = 0; v <= hist.max_value(); ++v)
    if (hist.count(v) > 0)
      r.table.add_row({text(sigma.to_string()), integer(o.t), integer(v), integer(hist.count(v)),
                       real(hist.probability(v))});
  return r;
}

Invocation cmd_split(const Options& o, const Guards& guards) {
  const CycleType sigma = class_flag(o);
  require_at_most("n", sigma.n(), guards.diagram);
  if (sigma.n() < 2) throw UsageError("--class: needs n >= 2");
  if (o.m < 2 || o.m % 2 != 0) throw UsageError("--m must be even and at least 2");
  check_samples(o, guards);
  const SplittingResult s = splitting_statistic(sigma, o.m, sampling(o));
  Invocation r;
  r.inputs["class"] = sigma.to_string();
  r.inputs["m"] = o.m;
  r.inputs["samples"] = o.samples;
  r.inputs["seed"] = o.seed;
  r.table = Table({"class", "n", "m", "walk_tail", "coset_tail", "statistic", "standard_error", "alpha",
                   "excess_floor", "poisson_ceiling"});
  r.table.add_row({text(sigma.to_string()), integer(sigma.n()), integer(o.m), real(s.walk_tail), real(s.coset_tail),
                   real(s.statistic), real(s.standard_error), real(s.alpha), real(s.excess_floor),
                   real(s.poisson_ceiling)});
  return r;
}

Invocation cmd_maps(const Options& o, const Guards& guards) {
  if (o.faces.empty()) throw UsageError("--faces is required");
  GlueSpec spec;
  try {
    spec = GlueSpec::parse(o.faces);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--faces: ") + e.what());
  }
  require_at_most("polygon sides", spec.points(), guards.diagram);
  check_samples(o, guards);
  const VertexComparison cmp = vertex_count_comparison(spec, sampling(o));
  Invocation r;
  r.inputs["faces"] = spec.face_type().to_string();
  r.inputs["samples"] = o.samples;
  r.inputs["seed"] = o.seed;
  r.table = Table({"faces", "points", "coset", "vertices", "count", "empirical", "baseline", "tv_estimate",
                   "euler_failures", "disconnected", "outside_regime"});
  const int top = std::max<int>(cmp.vertices.max_value(), static_cast<int>(cmp.baseline.size()) - 1);
  for (int v = 1; v <= top; ++v) {
    const double base = v < static_cast<int>(cmp.baseline.size()) ? cmp.baseline[static_cast<std::size_t>(v)] : 0.0;
    if (cmp.vertices.count(v) == 0 && base == 0.0) continue;
    r.table.add_row({text(spec.face_type().to_string()), integer(spec.points()), text(coset_name(cmp.coset)),
                     integer(v), integer(cmp.vertices.count(v)), real(cmp.vertices.probability(v)), real(base),
                     real(cmp.tv_estimate), integer(cmp.euler_failures), integer(cmp.disconnected),
                     Cell(cmp.outside_regime)});
  }
  return r;
}

// Parsing ------------------------------------------------------------------

using Command = std::function<Invocation(const Options&, const Guards&)>;

struct Parsed {
  std::string name;
  Options options;
};

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--out", o.out, "Write the table here instead of stdout");
  sub.add_option("--threads", o.threads, "Worker cap")->check(CLI::Range(1, 1024));
}

void build_app(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  auto* partitions = app.add_subcommand("partitions", "List the partitions of n with their dimensions");
  partitions->add_option("--n", o.n, "Size");

  for (const char* name : {"dim", "vdeg", "augdim"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "dim"    ? "Dimension by the hook-length formula"
                                         : std::string(name) == "vdeg" ? "Virtual degree and exponent gap"
                                                                       : "Augmented dimension and center ratio");
    sub->add_option("--lambda", o.lambda, "Partition, e.g. 14,4,3,2,2,1 or 2^5");
  }

  auto* slice = app.add_subcommand("slice", "Sliced hook products and their ratio");
  slice->add_option("--lambda", o.lambda, "Partition");
  slice->add_option("--mu", o.mu, "Subdiagram (default: lambda)");
  slice->add_option("--slicing", o.slicing, "abdelta, first-row or first-hook");

  auto* chr = app.add_subcommand("char", "Character values (one lambda or the whole column)");
  chr->add_option("--class", o.class_text, "Cycle type, e.g. 2^5 or 3,3,2,1,1");
  chr->add_option("--lambda", o.lambda, "Partition (default: every partition of n)");
  chr->add_option("--n", o.n, "Expected size");

  auto* egrowth = app.add_subcommand("egrowth", "Orbit growth exponents and their bounds");
  egrowth->add_option("--class", o.class_text, "Cycle type");
  egrowth->add_option("--n", o.n, "Expected size");

  auto* zeta = app.add_subcommand("zeta", "Witten zeta sum");
  zeta->add_option("--n", o.n, "Size");
  zeta->add_option("--subset", o.subset, "starstar, lambda or lambda-sym");
  zeta->add_option("--k", o.k, "Depth parameter of the lambda subsets");
  zeta->add_option("--s", o.s, "Exponent");
  zeta->add_option("--alpha", o.alpha, "Use s = alpha / ln n");

  for (const char* name : {"ds-bound", "exact-tv"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "ds-bound" ? "L2 upper bound on the distance after t steps"
                                                                         : "Exact total variation after t steps");
    sub->add_option("--class", o.class_text, "Cycle type");
    sub->add_option("--n", o.n, "Expected size");
    sub->add_option("--t", o.t, "Steps");
  }

  auto* cutoff = app.add_subcommand("cutoff", "Cutoff time ln n / ln(n/f)");
  cutoff->add_option("--class", o.class_text, "Cycle type");
  cutoff->add_option("--n", o.n, "Expected size");

  auto* walk = app.add_subcommand("walk", "Fixed points after t random steps");
  walk->add_option("--class", o.class_text, "Cycle type");
  walk->add_option("--n", o.n, "Expected size");
  walk->add_option("--t", o.t, "Steps");

  auto* split = app.add_subcommand("split", "Excess probability of at least m fixed points after two steps");
  split->add_option("--class", o.class_text, "Cycle type");
  split->add_option("--n", o.n, "Expected size");
  split->add_option("--m", o.m, "Fixed-point threshold (even)");

  auto* maps = app.add_subcommand("maps", "Vertex counts of random polygon gluings");
  maps->add_option("--faces", o.faces, "Polygons by side count, e.g. 3^20");

  for (auto* sub : {walk, split, maps}) {
    sub->add_option("--samples", o.samples, "Monte Carlo samples");
    sub->add_option("--seed", o.seed, "Seed");
  }

  auto* sweep = app.add_subcommand("sweep", "Run a subcommand over a grid from a config file");
  sweep->add_option("--config", o.config, "Config path")->required();
  sweep->add_option("--seed", o.seed, "Seed passed to sampling subcommands");

  for (auto* sub : app.get_subcommands({})) add_common(*sub, o);
}

Parsed parse(const std::vector<std::string>& args, std::ostream& help_out, bool& help_shown) {
  Parsed p;
  CLI::App app("Exact and Monte Carlo tools for conjugacy-class random walks on symmetric groups", "symwalk");
  build_app(app, p.options);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    help_shown = true;
    return p;
  } catch (const CLI::CallForAllHelp&) {
    help_out << app.help("", CLI::AppFormatMode::All);
    help_shown = true;
    return p;
  }
  for (auto* sub : app.get_subcommands()) p.name = sub->get_name();
  return p;
}

const std::map<std::string, Command>& commands();

Cell axis_cell(const std::string& value) {
  std::int64_t i = 0;
  if (auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), i);
      ec == std::errc() && ptr == value.data() + value.size())
    return integer(i);
  double d = 0;
  if (auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      ec == std::errc() && ptr == value.data() + value.size())
    return real(d);
  return text(value);
}

Invocation cmd_sweep(const Options& o, const Guards& guards) {
  std::ifstream in(o.config);
  if (!in) throw UsageError("--config: cannot read '" + o.config + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  SweepPlan plan;
  try {
    plan = parse_sweep_config(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--config: ") + e.what());
  }
  if (!commands().count(plan.subcommand)) throw UsageError("--config: unknown subcommand '" + plan.subcommand + "'");

  Invocation r;
  r.inputs["config"] = o.config;
  r.inputs["subcommand"] = plan.subcommand;
  Json axes = Json::object();
  for (const auto& axis : plan.axes) axes[axis.key] = axis.values;
  r.inputs["axes"] = axes;

  std::optional<Table> combined;
  std::vector<std::size_t> kept_axes;
  for (const auto& combo : plan.expand()) {
    std::vector<std::string> args{plan.subcommand};
    bool seeded = false;
    for (const auto& [key, value] : combo) {
      args.push_back("--" + key);
      args.push_back(value);
      seeded |= key == "seed";
    }
    if (!seeded && (plan.subcommand == "walk" || plan.subcommand == "split" || plan.subcommand == "maps")) {
      args.push_back("--seed");
      args.push_back(std::to_string(o.seed));
    }
    args.push_back("--threads");
    args.push_back(std::to_string(o.threads));
    bool help = false;
    std::ostringstream ignored;
    Parsed inner;
    try {
      inner = parse(args, ignored, help);
    } catch (const CLI::ParseError& e) {
      throw UsageError(std::string("--config: ") + e.what());
    }
    const Invocation one = commands().at(inner.name)(inner.options, guards);
    if (!combined) {
      std::vector<std::string> columns;
      for (std::size_t a = 0; a < combo.size(); ++a) {
        const auto& cols = one.table.columns();
        if (std::find(cols.begin(), cols.end(), combo[a].first) != cols.end()) continue;
        kept_axes.push_back(a);
        columns.push_back(combo[a].first);
      }
      columns.insert(columns.end(), one.table.columns().begin(), one.table.columns().end());
      combined.emplace(std::move(columns));
    }
    for (const auto& row : one.table.rows()) {
      std::vector<Cell> full;
      for (std::size_t a : kept_axes) full.push_back(axis_cell(combo[a].second));
      full.insert(full.end(), row.begin(), row.end());
      combined->add_row(std::move(full));
    }
  }
  r.table = combined ? std::move(*combined) : Table({});
  return r;
}

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"partitions", cmd_partitions}, {"dim", cmd_dim},         {"vdeg", cmd_vdeg},       {"augdim", cmd_augdim},
      {"slice", cmd_slice},           {"char", cmd_char},       {"egrowth", cmd_egrowth}, {"zeta", cmd_zeta},
      {"ds-bound", cmd_ds_bound},     {"exact-tv", cmd_exact_tv}, {"cutoff", cmd_cutoff}, {"walk", cmd_walk},
      {"split", cmd_split},           {"maps", cmd_maps},       {"sweep", cmd_sweep},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    bool help = false;
    const Parsed parsed = parse(args, out, help);
    if (help) return 0;
    const Options& o = parsed.options;
    Invocation result = commands().at(parsed.name)(o, Guards::from_environment());
    Json inputs = Json::object();
    inputs["subcommand"] = parsed.name;
    for (auto& [key, value] : result.inputs.items()) inputs[key] = value;

    std::ofstream file;
    if (!o.out.empty()) {
      file.open(o.out, std::ios::binary);
      if (!file) throw UsageError("--out: cannot open '" + o.out + "'");
    }
    std::ostream& sink = o.out.empty() ? out : file;
    if (o.format == "json")
      write_json(sink, result.table, inputs);
    else
      write_csv(sink, result.table);
    sink.flush();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceGuard& e) {
    err << "refused: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace symwalk
