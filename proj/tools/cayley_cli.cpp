// cayley: command-line front end for the girth, word and amoeba tools.
//
// Exit codes: 0 success, 2 configuration error, 3 resource limit,
// 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley/bounds.hpp"
#include "cayley/experiments.hpp"
#include "cayley/genetics.hpp"
#include "cayley/girth.hpp"
#include "cayley/groups.hpp"
#include "cayley/laws.hpp"
#include "cayley/projective.hpp"

using nlohmann::json;
using namespace cayley;

namespace {

constexpr int kConfigError = 2;
constexpr int kResourceError = 3;
constexpr int kInternalError = 4;

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
  std::string format = "json";
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void emit(Globals const& g, std::string const& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + g.out);
  file << text;
}

// Flat objects become "key,value" rows; nested values are written as JSON.
std::string flat_csv(json const& j) {
  std::ostringstream os;
  os << "key,value\n";
  for (auto const& [k, v] : j.items()) {
    os << k << ',';
    if (v.is_string()) {
      os << v.get<std::string>();
    } else if (v.is_number_float()) {
      os << fmt(v.get<double>());
    } else if (v.is_structured()) {
      std::string s = v.dump();
      os << '"';
      for (char c : s) os << (c == '"' ? std::string("\"\"") : std::string(1, c));
      os << '"';
    } else {
      os << v.dump();
    }
    os << '\n';
  }
  return os.str();
}

std::string flat_text(json const& j) {
  std::ostringstream os;
  std::size_t width = 0;
  for (auto const& [k, v] : j.items()) width = std::max(width, k.size());
  for (auto const& [k, v] : j.items()) {
    os << k << std::string(width - k.size() + 2, ' ');
    if (v.is_string()) {
      os << v.get<std::string>();
    } else if (v.is_number_float()) {
      os << fmt(v.get<double>());
    } else {
      os << v.dump();
    }
    os << '\n';
  }
  return os.str();
}

void emit_json(Globals const& g, json const& j) {
  if (g.format == "json") {
    emit(g, j.dump(2) + "\n");
  } else if (g.format == "csv") {
    emit(g, flat_csv(j));
  } else {
    emit(g, flat_text(j));
  }
}

// Girth table: even girths below 12 pooled, even columns 12..30, >30 and
// odd girths counted separately.
std::string histogram_table(GirthHistogram const& h) {
  std::vector<std::string> head{"<12"};
  std::vector<std::size_t> row{0};
  for (std::size_t g = 12; g <= 30; g += 2) {
    head.push_back(std::to_string(g));
    row.push_back(h.count(g));
  }
  head.emplace_back(">" + std::to_string(h.max_girth));
  row.push_back(h.at_least_count);
  head.emplace_back("odd");
  row.push_back(h.odd_count);
  for (auto const& [g, c] : h.counts) {
    if (g < 12 && g % 2 == 0) row[0] += c;
  }
  std::size_t other = 0;
  for (auto const& [g, c] : h.counts) {
    if (g % 2 == 0 && g > 30) other += c;
  }
  std::ostringstream os;
  os << h.group << "(" << h.parameter << "), k=" << h.k << ", " << h.trials
     << " trials, seed " << h.seed << "\n";
  auto cell = [&](std::string const& s) {
    os << std::string(s.size() < 6 ? 6 - s.size() : 1, ' ') << s;
  };
  os << "girth";
  for (auto const& s : head) cell(s);
  os << "\ncount";
  for (auto c : row) cell(std::to_string(c));
  os << '\n';
  if (other > 0) os << "even girths above 30 not shown: " << other << '\n';
  double sum = 0;
  std::size_t n = 0;
  for (auto const& r : h.records) {
    if (r.normalized) {
      sum += *r.normalized;
      ++n;
    }
  }
  if (n > 0) os << "mean normalized girth " << fmt(sum / static_cast<double>(n)) << '\n';
  return os.str();
}

struct GroupOpts {
  std::string family = "pgl2";
  std::uint64_t parameter = 101;
  void add(CLI::App* app) {
    app->add_option("--group", family, "sym | sl2 | pgl2 | wn")->capture_default_str();
    app->add_option("--p,--n,--param", parameter,
                    "prime, degree or tree height")->capture_default_str();
  }
  GroupContext context() const {
    return GroupContext::make(parse_family(family), parameter);
  }
};

unsigned thread_count(Globals const& g) {
  if (g.threads > 0) return g.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Girth of random Cayley graphs, word maps and amoebas"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "master seed (decimal u64)");
  app.add_option("--threads", globals.threads, "worker threads (0 = all cores)");
  app.add_option("--out", globals.out, "write output here instead of stdout");
  app.add_option("--format", globals.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // girth
  auto* girth_cmd = app.add_subcommand("girth", "girth of one random Cayley graph");
  GroupOpts girth_group;
  girth_group.add(girth_cmd);
  std::size_t girth_k = 2;
  std::size_t girth_max = 30;
  std::size_t girth_mem = 600'000'000;
  girth_cmd->add_option("--k", girth_k, "number of generators");
  girth_cmd->add_option("--max-girth", girth_max, "cutoff L");
  girth_cmd->add_option("--memory-limit", girth_mem, "bytes");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "girth histogram over many trials");
  GroupOpts exp_group;
  exp_group.add(exp_cmd);
  ExperimentConfig exp_cfg;
  exp_cmd->add_option("--k", exp_cfg.k, "number of generators");
  exp_cmd->add_option("--trials", exp_cfg.trials, "number of trials");
  exp_cmd->add_option("--max-girth", exp_cfg.max_girth, "cutoff L");
  exp_cmd->add_option("--memory-limit", exp_cfg.memory_limit, "bytes per trial");
  exp_cmd->add_flag("--progress", exp_cfg.progress, "log every 1000 trials");

  // wordprob
  auto* wp_cmd = app.add_subcommand("wordprob", "Monte Carlo P(w = 1)");
  GroupOpts wp_group;
  wp_group.add(wp_cmd);
  std::string wp_word = "a";
  std::size_t wp_trials = 10000;
  wp_cmd->add_option("--word", wp_word, "word over a-z / A-Z")->required();
  wp_cmd->add_option("--trials", wp_trials, "samples");

  // amoeba
  auto* am_cmd = app.add_subcommand("amoeba", "generations until a free amoeba");
  std::string am_word = "AbcaaC";
  std::string am_mode = "population";
  std::size_t am_max_gen = 30;
  std::size_t am_runs = 1000;
  std::size_t am_cap = kDefaultPopulationCap;
  am_cmd->add_option("--word", am_word, "starting DNA")->required();
  am_cmd->add_option("--mode", am_mode, "population | greedy")
      ->check(CLI::IsMember({"population", "greedy"}));
  am_cmd->add_option("--max-gen", am_max_gen, "generations");
  am_cmd->add_option("--runs", am_runs, "independent runs");
  am_cmd->add_option("--cap", am_cap, "population cap");

  // bounds
  auto* bd_cmd = app.add_subcommand("bounds", "analytic bounds for one setting");
  GroupOpts bd_group;
  bd_group.add(bd_cmd);
  std::size_t bd_length = 4;
  std::size_t bd_degree = 4;
  bd_cmd->add_option("--length", bd_length, "word length l");
  bd_cmd->add_option("--degree", bd_degree, "graph degree d = 2k");

  // law
  auto* law_cmd = app.add_subcommand("law", "shortest law of a small group");
  GroupOpts law_group;
  law_group.add(law_cmd);
  std::size_t law_k = 2;
  std::size_t law_max = 12;
  std::uint64_t law_cap = 2'000'000'000ULL;
  law_cmd->add_option("--k", law_k, "number of variables");
  law_cmd->add_option("--max-length", law_max, "search cutoff");
  law_cmd->add_option("--node-cap", law_cap, "search node budget");

  // zeros
  auto* z_cmd = app.add_subcommand("zeros", "projective zeros of random forms");
  std::uint32_t z_p = 5;
  std::size_t z_m = 3;
  unsigned z_degree = 3;
  std::size_t z_count = 200;
  z_cmd->add_option("--p", z_p, "prime <= 13");
  z_cmd->add_option("--m", z_m, "variables, 2..4");
  z_cmd->add_option("--degree", z_degree, "total degree");
  z_cmd->add_option("--count", z_count, "random forms");

  // order-stats
  auto* os_cmd = app.add_subcommand("order-stats", "orders of random elements of W_n(2)");
  std::size_t os_n = 10;
  std::size_t os_trials = 10000;
  os_cmd->add_option("--n", os_n, "tree height");
  os_cmd->add_option("--trials", os_trials, "samples");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (girth_cmd->parsed()) {
      auto const ctx = girth_group.context();
      json j = ctx.visit([&](auto const& group) {
        Rng rng(derive_seed(globals.seed, 0));
        std::vector<typename std::decay_t<decltype(group)>::Element> gens;
        for (std::size_t i = 0; i < girth_k; ++i) gens.push_back(group.sample(rng));
        GirthLimits limits{girth_max, girth_mem};
        auto const r = girth(group, gens, limits);
        if (!witness_is_valid(group, gens, r)) {
          throw std::logic_error("invalid girth witness");
        }
        json out;
        out["group"] = family_name(group.family());
        out["param"] = group.parameter();
        out["k"] = girth_k;
        out["seed"] = globals.seed;
        out["max_girth"] = girth_max;
        json g = json::array();
        for (auto const& x : gens) g.push_back(group.format(x));
        out["generators"] = g;
        out["kind"] = r.exact() ? "exact" : "at_least";
        out["girth"] = r.length;
        out["witness"] = format_word(r.witness);
        out["stored"] = r.stored;
        out["depth"] = r.depth;
        return out;
      });
      emit_json(globals, j);
    } else if (exp_cmd->parsed()) {
      exp_cfg.family = parse_family(exp_group.family);
      exp_cfg.parameter = exp_group.parameter;
      exp_cfg.seed = globals.seed;
      exp_cfg.threads = thread_count(globals);
      auto const h = run_girth_experiment(exp_cfg);
      if (globals.format == "json") {
        emit(globals, to_json(h).dump(2) + "\n");
      } else if (globals.format == "csv") {
        emit(globals, to_csv(h));
      } else {
        emit(globals, histogram_table(h));
      }
    } else if (wp_cmd->parsed()) {
      auto const ctx = wp_group.context();
      auto const w = parse_word(wp_word);
      Rng rng(derive_seed(globals.seed, 0));
      auto const est = ctx.visit([&](auto const& group) {
        return estimate_word_prob(group, w, wp_trials, rng);
      });
      json j;
      j["group"] = ctx.name();
      j["word"] = format_word(w);
      j["trials"] = wp_trials;
      j["hits"] = est.successes;
      j["estimate"] = round_significant(est.estimate);
      j["ci99_lower"] = round_significant(est.lower);
      j["ci99_upper"] = round_significant(est.upper);
      if (ctx.family() == Family::kPGL2 && !w.empty()) {
        j["bound_l_over_p"] = round_significant(pgl_word_prob_bound(ctx.parameter(), w.size()));
      }
      emit_json(globals, j);
    } else if (am_cmd->parsed()) {
      auto const w = parse_word(am_word);
      std::map<std::size_t, std::size_t> first_free;
      std::size_t not_free = 0;
      std::size_t capped = 0;
      for (std::size_t run = 0; run < am_runs; ++run) {
        Rng rng(derive_seed(globals.seed, run));
        if (am_mode == "population") {
          auto const out = population_first_free(w, am_max_gen, rng, am_cap);
          if (out.status == PopulationOutcome::Status::kFree) {
            ++first_free[out.generation];
          } else if (out.status == PopulationOutcome::Status::kCapExceeded) {
            ++capped;
          } else {
            ++not_free;
          }
        } else {
          auto const steps = greedy_lineage(w, am_max_gen, rng);
          bool found = false;
          for (std::size_t g = 0; g < steps.size() && !found; ++g) {
            if (steps[g].complexity <= 0) {
              ++first_free[g];
              found = true;
            }
          }
          if (!found) ++not_free;
        }
      }
      json j;
      j["word"] = format_word(w);
      j["mode"] = am_mode;
      j["runs"] = am_runs;
      j["max_gen"] = am_max_gen;
      j["seed"] = globals.seed;
      j["complexity"] = complexity(w);
      json hist = json::object();
      for (auto const& [g, c] : first_free) hist[std::to_string(g)] = c;
      j["first_free"] = hist;
      j["not_free"] = not_free;
      j["cap_exceeded"] = capped;
      // Entry g - 1 bounds the chance of no free amoeba by generation g.
      json p1 = json::array();
      for (std::size_t g = 1; g <= am_max_gen; ++g) {
        p1.push_back(round_significant(p1_bound(g, std::max<std::size_t>(1, w.size()))));
      }
      j["p1_bound"] = p1;
      emit_json(globals, j);
    } else if (bd_cmd->parsed()) {
      auto const ctx = bd_group.context();
      json j;
      j["group"] = ctx.name();
      j["length"] = bd_length;
      j["degree"] = bd_degree;
      j["log2_size"] = round_significant(ctx.size().log2);
      double const vertices = std::exp2(ctx.size().log2);
      j["moore_bound"] = moore_bound(
          bd_degree, vertices >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max()
                                        : static_cast<std::uint64_t>(vertices));
      switch (ctx.family()) {
        case Family::kPGL2:
        case Family::kSL2: {
          auto const p = static_cast<double>(ctx.parameter());
          j["word_prob_bound"] = round_significant(pgl_word_prob_bound(ctx.parameter(), bd_length));
          j["union_threshold_closed_form"] =
              union_bound_threshold(bd_degree, UnionBoundKind::kPglClosedForm, p);
          j["union_threshold"] = union_bound_threshold(bd_degree, UnionBoundKind::kPglUnion, p);
          break;
        }
        case Family::kSym: {
          auto const n = static_cast<std::size_t>(ctx.parameter());
          if (2 * bd_length < n) {
            j["word_prob_bound"] = round_significant(sn_word_prob_bound(n, bd_length));
          }
          j["power_word_prob"] =
              round_significant(exact_power_word_prob_sn(n, bd_length).convert_to<double>());
          j["power_word_lower_bound"] = round_significant(sn_power_word_lower_bound(n, bd_length));
          j["union_threshold"] = union_bound_threshold(
              bd_degree, UnionBoundKind::kSymUnion, static_cast<double>(n));
          break;
        }
        case Family::kW2: {
          auto const n = static_cast<std::size_t>(ctx.parameter());
          j["p1_bound"] = round_significant(p1_bound(n, bd_length));
          j["word_prob_bound"] = round_significant(wn_word_prob_bound(n, bd_length, bd_degree / 2));
          break;
        }
      }
      emit_json(globals, j);
    } else if (law_cmd->parsed()) {
      auto const ctx = law_group.context();
      auto const r = ctx.visit([&](auto const& group) {
        return shortest_law(group, law_k, law_max, law_cap);
      });
      json j;
      j["group"] = ctx.name();
      j["k"] = law_k;
      j["max_length"] = law_max;
      j["found"] = r.found;
      j["length"] = r.length;
      j["word"] = format_word(r.word);
      j["nodes"] = r.nodes;
      emit_json(globals, j);
    } else if (z_cmd->parsed()) {
      Rng rng(derive_seed(globals.seed, 0));
      std::uint64_t max_zeros = 0;
      std::size_t within = 0;
      ProjectiveZeroCount last;
      for (std::size_t i = 0; i < z_count; ++i) {
        last = count_projective_zeros(random_homogeneous_poly(z_m, z_p, z_degree, rng));
        max_zeros = std::max(max_zeros, last.zeros);
        within += last.within_bound;
      }
      json j;
      j["p"] = z_p;
      j["m"] = z_m;
      j["degree"] = z_degree;
      j["forms"] = z_count;
      std::uint64_t points = 0;
      for (std::size_t i = 0, pw = 1; i < z_m; ++i, pw *= z_p) points += pw;
      j["points"] = points;
      j["bound"] = projective_zero_bound(z_degree, z_m, z_p);
      j["max_zeros"] = max_zeros;
      j["within_bound"] = within;
      if (z_degree <= z_p) {
        std::vector<std::uint32_t> roots(z_degree);
        for (unsigned i = 0; i < z_degree; ++i) roots[i] = i;
        j["split_product_zeros"] =
            count_projective_zeros(split_product_poly(roots, z_m, z_p)).zeros;
      }
      emit_json(globals, j);
    } else if (os_cmd->parsed()) {
      Rng rng(derive_seed(globals.seed, 0));
      auto const s = wn_order_experiment(os_n, os_trials, rng);
      json j;
      j["n"] = os_n;
      j["trials"] = os_trials;
      json hist = json::object();
      for (auto const& [lg, c] : s.histogram) hist[std::to_string(lg)] = c;
      j["log2_order_histogram"] = hist;
      j["alpha_hat"] = round_significant(s.mean_ratio);
      j["alpha_sd"] = round_significant(s.stddev_ratio);
      emit_json(globals, j);
    }
  } catch (ResourceLimitError const& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (SearchLimitError const& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (std::invalid_argument const& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (std::domain_error const& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return 0;
}
