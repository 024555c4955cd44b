#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cayley/bounds.hpp"
#include "cayley/experiments.hpp"
#include "cayley/laws.hpp"
#include "cayley/projective.hpp"
#include "support.hpp"

using namespace cayley;
using boost::multiprecision::cpp_int;

namespace {

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// G^T acting coordinatewise: generator i is the diagonal element whose t-th
// coordinate is tuple t's i-th entry, so its girth is the shortest law.
template <class Base>
class DiagonalGroup {
 public:
  using Element = std::vector<typename Base::Element>;
  using Key = std::string;

  DiagonalGroup(Base base, std::size_t width) : base_(std::move(base)), width_(width) {}

  Element identity() const { return Element(width_, base_.identity()); }
  void multiply_into(Element const& x, Element const& y, Element& out) const {
    out.resize(width_);
    for (std::size_t i = 0; i < width_; ++i) base_.multiply_into(x[i], y[i], out[i]);
  }
  Element invert(Element const& x) const {
    Element out(width_);
    for (std::size_t i = 0; i < width_; ++i) out[i] = base_.invert(x[i]);
    return out;
  }
  Key packed_key(Element const& x) const {
    std::string out;
    for (auto const& e : x) out += base_.canonical_key(e);
    return out;
  }

 private:
  Base base_;
  std::size_t width_;
};

template <class Base>
GirthResult law_via_girth(Base const& base, std::size_t k, std::size_t max_len) {
  auto const tuples = detail::all_tuples(base, k);
  DiagonalGroup<Base> const diag(base, tuples.size());
  std::vector<typename DiagonalGroup<Base>::Element> gens(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (auto const& t : tuples) gens[i].push_back(t[i]);
  }
  GirthLimits limits;
  limits.max_girth = max_len;
  limits.memory_limit = 1'000'000'000;
  return girth(diag, gens, limits);
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0U);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{v});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.family = Family::kPGL2;
  cfg.parameter = 31;
  cfg.trials = 60;
  cfg.seed = 12345;
  return cfg;
}

}  // namespace

TEST_CASE("power word probability in S_n") {
  CHECK(exact_power_word_prob_sn(4, 2) == BigRational(10, 24));
  CHECK(power_solution_count_sn(4, 2) == 10);
  for (std::size_t n = 1; n <= 12; ++n) {
    cpp_int fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(exact_power_word_prob_sn(n, 1) == BigRational(1, fact));
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    auto const perms = all_permutations(n);
    for (std::size_t l = 1; l <= 8; ++l) {
      std::size_t hits = 0;
      for (auto const& p : perms) hits += l % permutation_order(p) == 0;
      CHECK(exact_power_word_prob_sn(n, l) == BigRational(hits, perms.size()));
    }
  }
  CHECK_THROWS(exact_power_word_prob_sn(0, 2));
  // Exact arithmetic well past 64 bits.
  CHECK(power_solution_count_sn(60, 2) > cpp_int(1) << 64);
}

TEST_CASE("S_n word bounds") {
  CHECK(sn_word_prob_bound(20, 2) == doctest::Approx(3.2e-4).epsilon(1e-12));
  CHECK_THROWS_AS(sn_word_prob_bound(8, 4), std::domain_error);
  for (std::size_t n = 2; n <= 30; ++n) {
    for (std::size_t l = 1; l <= 8; ++l) {
      double const exact = exact_power_word_prob_sn(n, l).convert_to<double>();
      if (2 * l < n) CHECK(exact <= sn_word_prob_bound(n, l));
      if (n % l == 0) CHECK(exact >= sn_power_word_lower_bound(n, l));
      if (2 * (l + 1) < n) CHECK(sn_word_prob_bound(n, l + 1) >= sn_word_prob_bound(n, l));
    }
  }
  // The lower bound comes from n/l disjoint l-cycles and needs l | n.
  CHECK(exact_power_word_prob_sn(8, 5).convert_to<double>() <
        sn_power_word_lower_bound(8, 5));
  CHECK(exact_power_word_prob_sn(2, 3).convert_to<double>() <
        sn_power_word_lower_bound(2, 3));
}

TEST_CASE("PGL2 word bound") {
  CHECK(pgl_word_prob_bound(1009, 10) == doctest::Approx(0.00991080277));
  CHECK_THROWS_AS(pgl_word_prob_bound(1009, 0), std::domain_error);

  ProjectiveLinear2 const g(101);
  Rng rng(1);
  std::size_t const trials = 40000;
  double const p = 101.0;
  int tested = 0;
  while (tested < 50) {
    auto const w = random_reduced_word(2, 1 + rng.below(8), rng);
    auto const est = estimate_word_prob(g, w, trials, rng);
    double const bound = pgl_word_prob_bound(101, w.size()) + 5.0 / (p * p);
    double const sigma = std::sqrt(bound * (1 - bound) / static_cast<double>(trials));
    CHECK(est.estimate <= bound + 3 * sigma);
    ++tested;
  }
}

TEST_CASE("union bound thresholds") {
  CHECK(union_bound_threshold(4, UnionBoundKind::kPglClosedForm, 1009) == 2);
  CHECK(union_bound_threshold(4, UnionBoundKind::kPglUnion, 1009) == 4);
  CHECK(union_bound_threshold(4, UnionBoundKind::kSymUnion, 30) == 3);
  CHECK(reduced_words_up_to(4, 3) == 4 + 12 + 36);
  CHECK_THROWS_AS(union_bound_threshold(2, UnionBoundKind::kPglUnion, 1009),
                  std::invalid_argument);
  std::size_t prev = 0;
  for (double p : {101.0, 1009.0, 10007.0, 100003.0, 1e9}) {
    auto const l = union_bound_threshold(4, UnionBoundKind::kPglUnion, p);
    CHECK(l >= prev);
    CHECK(union_bound_threshold(4, UnionBoundKind::kPglClosedForm, p) <= l + 1);
    prev = l;
  }
}

TEST_CASE("union bound against the harness") {
  // The fraction of trials with girth <= l is at most the union sum.
  auto cfg = small_config();
  cfg.parameter = 101;
  cfg.trials = 400;
  auto const h = run_girth_experiment(cfg);
  auto const l = union_bound_threshold(4, UnionBoundKind::kPglUnion, 101);
  CHECK(l == 2);
  std::size_t short_girth = 0;
  for (auto const& [g, c] : h.counts) {
    if (g <= l) short_girth += c;
  }
  double union_sum = 0;
  for (std::size_t j = 1; j <= l; ++j) {
    union_sum += static_cast<double>(reduced_word_count(2, j)) * pgl_word_prob_bound(101, j);
  }
  double const frac = static_cast<double>(short_girth) / static_cast<double>(cfg.trials);
  CHECK(frac <= union_sum + 3 * std::sqrt(union_sum * (1 - union_sum) / cfg.trials));
}

TEST_CASE("shortest laws") {
  SpecialLinear2 const sl2(2);
  auto const one = shortest_law(sl2, 1, 8);
  CHECK(one.found);
  CHECK(one.length == 6);
  CHECK(format_word(one.word) == "aaaaaa");

  auto const two = shortest_law(sl2, 2, 8);
  REQUIRE(two.found);
  CHECK(two.length >= 2);
  auto const via_girth2 = law_via_girth(sl2, 2, 8);
  REQUIRE(via_girth2.exact());
  CHECK(via_girth2.length == two.length);

  SpecialLinear2 const sl3(3);
  auto const three = shortest_law(sl3, 2, 14);
  REQUIRE(three.found);
  CHECK(three.length >= 3);
  auto const via_girth3 = law_via_girth(sl3, 2, 14);
  REQUIRE(via_girth3.exact());
  CHECK(via_girth3.length == three.length);
  MESSAGE("shortest law lengths: SL2(2) k=2 -> ", two.length, " (",
          format_word(two.word), "), SL2(3) k=2 -> ", three.length, " (",
          format_word(three.word), ")");

  // Every tuple satisfies the returned law.
  for (auto const& t : detail::all_tuples(sl3, 2)) {
    CHECK(evaluate(sl3, three.word, t) == sl3.identity());
  }
  auto const none = shortest_law(sl3, 2, 3);
  CHECK_FALSE(none.found);
  CHECK(none.length == 4);
  CHECK_THROWS_AS(shortest_law(sl3, 2, 14, 1000), SearchLimitError);
}

TEST_CASE("ping-pong polynomial form") {
  auto const m = ping_pong_product({{1, 1}});
  CHECK(trim(m[0]) == Poly{1});
  CHECK(trim(m[1]) == Poly{0, 1});
  CHECK(trim(m[2]) == Poly{0, 1});
  CHECK(trim(m[3]) == Poly{1, 0, 1});
  auto const m23 = ping_pong_product({{2, 3}});
  CHECK(trim(m23[3]) == Poly{1, 0, 6});
  CHECK(verify_ping_pong_form({{1, 1}}));
  CHECK(verify_ping_pong_form({{2, 3}}));
  CHECK_THROWS_AS(verify_ping_pong_form({{0, 3}}), std::invalid_argument);

  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::pair<long, long>> e;
    std::size_t const r = 1 + rng.below(6);
    auto draw = [&] {
      long const v = 1 + static_cast<long>(rng.below(9));
      return rng.bit() ? v : -v;
    };
    for (std::size_t j = 0; j < r; ++j) e.emplace_back(draw(), draw());
    CHECK(verify_ping_pong_form(e));
    CHECK(poly_degree(ping_pong_product(e)[3]) == static_cast<long>(2 * r));
  }
}

TEST_CASE("projective zeros") {
  HomogeneousPoly const xy(3, 3, {Monomial{1, {1, 1, 0}}});
  auto const c = count_projective_zeros(xy);
  CHECK(c.points == 13);
  CHECK(c.zeros == 7);
  CHECK(c.bound == 7);
  CHECK(c.within_bound);

  for (std::uint32_t p : {3U, 5U, 7U}) {
    for (unsigned d = 1; d <= p; ++d) {
      HomogeneousPoly const power(3, p, {Monomial{1, {d, 0, 0}}});
      CHECK(count_projective_zeros(power).zeros == p + 1);
    }
  }

  std::vector<std::uint32_t> const roots{0, 1, 2};
  auto const split = count_projective_zeros(split_product_poly(roots, 3, 5));
  CHECK(split.zeros == 16);
  CHECK(split.bound == 16);

  CHECK_THROWS_AS(HomogeneousPoly(3, 5, {Monomial{1, {1, 0, 0}}, Monomial{1, {1, 1, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(HomogeneousPoly(3, 5, {Monomial{1, {0, 0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(HomogeneousPoly(3, 5, {Monomial{5, {1, 0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(HomogeneousPoly(3, 4, {Monomial{1, {1, 0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(count_projective_zeros(HomogeneousPoly(3, 17, {Monomial{1, {1, 0, 0}}})),
                  std::invalid_argument);

  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    std::uint32_t const p = std::array<std::uint32_t, 3>{3, 5, 7}[rng.below(3)];
    auto const d = static_cast<unsigned>(1 + rng.below(p));
    auto const count = count_projective_zeros(random_homogeneous_poly(3, p, d, rng));
    CHECK(count.within_bound);
  }
}

TEST_CASE("girth experiment bookkeeping") {
  auto const cfg = small_config();
  auto const h = run_girth_experiment(cfg);
  std::size_t total = h.at_least_count;
  std::size_t odd = 0;
  for (auto const& [g, c] : h.counts) {
    total += c;
    if (g % 2 == 1) odd += c;
  }
  CHECK(total == cfg.trials);
  CHECK(odd == h.odd_count);
  CHECK(h.records.size() == cfg.trials);

  ProjectiveLinear2 const g(31);
  double const log_size = g.size().log2 / std::log2(3.0);
  auto const moore = moore_bound(4, 31ULL * 30 * 32);
  for (auto const& r : h.records) {
    CHECK(r.seed == derive_seed(cfg.seed, r.trial));
    REQUIRE(r.girth);
    REQUIRE(r.normalized);
    CHECK(*r.normalized > 0.0);
    CHECK(*r.normalized <= static_cast<double>(moore) / log_size + 1e-12);
    CHECK(parse_word(r.witness, 2).size() == *r.girth);
    // Re-running a single trial reproduces the record.
    Rng rng(r.seed);
    std::vector<ProjMat2> gens{g.sample(rng), g.sample(rng)};
    auto const again = girth(g, gens);
    CHECK(again.length == *r.girth);
    CHECK(format_word(again.witness) == r.witness);
  }
}

TEST_CASE("girth experiment serialisation") {
  auto cfg = small_config();
  cfg.family = Family::kSym;
  cfg.parameter = 9;
  cfg.max_girth = 6;
  auto const h = run_girth_experiment(cfg);
  CHECK(h.at_least_count > 0);
  auto const j = to_json(h);
  CHECK(j.at("group") == "sym");
  CHECK(j.at("param") == 9);
  CHECK(to_json(histogram_from_json(j)).dump() == j.dump());
  CHECK(to_json(histogram_from_json(nlohmann::json::parse(j.dump()))).dump() == j.dump());
  for (auto const& rec : j.at("records")) {
    if (rec.at("girth").is_null()) CHECK(rec.at("normalized").is_null());
  }

  auto const csv = to_csv(h);
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(cfg.trials + 1));
  CHECK(csv.rfind("trial,seed,girth,witness,normalized\n", 0) == 0);
}

TEST_CASE("girth experiment determinism") {
  auto cfg = small_config();
  cfg.trials = 40;
  cfg.threads = 1;
  auto const one = to_json(run_girth_experiment(cfg)).dump();
  cfg.threads = 4;
  CHECK(to_json(run_girth_experiment(cfg)).dump() == one);
  cfg.seed += 1;
  CHECK(to_json(run_girth_experiment(cfg)).dump() != one);

  cfg.trials = 1;
  auto const a = run_girth_experiment(cfg);
  auto const b = run_girth_experiment(cfg);
  CHECK(a.records.front().witness == b.records.front().witness);
}

TEST_CASE("girth experiment errors") {
  auto cfg = small_config();
  cfg.trials = 0;
  CHECK_THROWS_AS(run_girth_experiment(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.parameter = 32;
  CHECK_THROWS_AS(run_girth_experiment(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.parameter = 1009;
  cfg.trials = 3;
  cfg.memory_limit = 4096;
  CHECK_THROWS_AS(run_girth_experiment(cfg), ResourceLimitError);
}

TEST_CASE("word probability estimates") {
  Rng rng(4);
  ProjectiveLinear2 const pgl5(5);
  auto const single = estimate_word_prob(pgl5, parse_word("a"), 120000, rng);
  CHECK(single.lower <= 1.0 / 120);
  CHECK(single.upper >= 1.0 / 120);

  for (std::size_t n : {5U, 10U, 30U}) {
    SymmetricGroup const s(n);
    for (std::size_t l = 1; l <= 6; ++l) {
      auto const est = estimate_word_prob(s, power_word(1, 0, l), 20000, rng);
      double const exact = exact_power_word_prob_sn(n, l).convert_to<double>();
      double const sigma = std::sqrt(exact * (1 - exact) / 20000.0);
      CHECK(std::abs(est.estimate - exact) <= 3 * sigma + 1e-9);
    }
  }

  BinaryTreeGroup const w1(1);
  auto const comm = estimate_word_prob(w1, parse_word("abAB"), 1000, rng);
  CHECK(comm.estimate == 1.0);
  CHECK(comm.upper == doctest::Approx(1.0));
  SymmetricGroup const s5(5);
  CHECK(estimate_word_prob(s5, parse_word("aaAA"), 100, rng).estimate == 1.0);
  CHECK_THROWS_AS(estimate_word_prob(s5, parse_word("a"), 0, rng), std::invalid_argument);

  auto const w = wilson_interval(0, 100);
  CHECK(w.lower == 0.0);
  CHECK(w.upper > 0.0);
  auto const half = wilson_interval(50, 100);
  CHECK(half.lower < 0.5);
  CHECK(half.upper > 0.5);
  CHECK(half.upper - 0.5 == doctest::Approx(0.5 - half.lower));
}

TEST_CASE("wreath order statistics") {
  Rng rng(5);
  auto const one = wn_order_experiment(1, 1000, rng);
  for (unsigned lg : one.log2_orders) CHECK(lg <= 1);
  CHECK(one.histogram.size() == 2);

  auto const ten = wn_order_experiment(10, 10000, rng);
  double const se = ten.stddev_ratio / std::sqrt(10000.0);
  CHECK(ten.mean_ratio + 3 * se < 1.0);
  MESSAGE("alpha-hat at n=10: ", ten.mean_ratio);

  BinaryTreeGroup const g(8);
  for (int i = 0; i < 500; ++i) {
    auto const ord = g.order(g.sample(rng));
    CHECK((ord & (ord - 1)) == 0);
    CHECK(ord <= 256);
  }
  CHECK_THROWS_AS(wn_order_experiment(25, 10, rng), std::invalid_argument);
}
