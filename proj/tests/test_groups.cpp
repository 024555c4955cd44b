#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "cayley/groups.hpp"
#include "support.hpp"

using namespace cayley;

namespace {

Permutation perm(std::vector<std::uint32_t> v) { return Permutation{std::move(v)}; }

// Order by repeated multiplication; independent of any closed form.
template <class Group>
std::uint64_t naive_order(Group const& g, typename Group::Element const& x) {
  auto acc = x;
  std::uint64_t m = 1;
  while (!(acc == g.identity())) {
    acc = g.multiply(acc, x);
    ++m;
  }
  return m;
}

template <class Group>
void check_axioms(Group const& g, std::uint64_t seed) {
  Rng rng(seed);
  auto const e = g.identity();
  for (int i = 0; i < 1000; ++i) {
    auto const x = g.sample(rng);
    auto const y = g.sample(rng);
    auto const z = g.sample(rng);
    REQUIRE(g.contains(x));
    CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
    CHECK(g.multiply(x, e) == x);
    CHECK(g.multiply(e, x) == x);
    CHECK(g.multiply(x, g.invert(x)) == e);
    CHECK(g.multiply(g.invert(x), x) == e);
  }
}

template <class Group>
void check_keys_exhaustive(Group const& g) {
  auto const elems = g.elements();
  REQUIRE(g.size().exact);
  CHECK(BigInt(elems.size()) == *g.size().exact);
  std::set<std::string> keys;
  std::set<typename Group::Key> packed;
  for (auto const& x : elems) {
    keys.insert(g.canonical_key(x));
    packed.insert(g.packed_key(x));
  }
  CHECK(keys.size() == elems.size());
  CHECK(packed.size() == elems.size());
}

template <class Group>
void check_uniform(Group const& g, std::size_t per_element, std::uint64_t seed) {
  auto const elems = g.elements();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[g.canonical_key(elems[i])] = i;
  }
  std::vector<std::size_t> counts(elems.size(), 0);
  Rng rng(seed);
  for (std::size_t t = 0; t < per_element * elems.size(); ++t) {
    ++counts.at(index.at(g.canonical_key(g.sample(rng))));
  }
  double const sigma = testing::binomial_sigma(
      static_cast<double>(per_element * elems.size()),
      1.0 / static_cast<double>(elems.size()));
  for (auto c : counts) {
    CHECK(std::abs(static_cast<double>(c) - static_cast<double>(per_element)) <
          4.0 * sigma);
  }
  CHECK(testing::chi_square_uniform_pvalue(counts) > 0.001);
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  SymmetricGroup const s3(3);
  CHECK(s3.multiply(perm({1, 2, 0}), perm({1, 0, 2})) == perm({0, 2, 1}));
  CHECK(s3.invert(perm({1, 2, 0})) == perm({2, 0, 1}));
  CHECK(SymmetricGroup(4).identity() == perm({0, 1, 2, 3}));
  CHECK(SymmetricGroup(5).order(perm({1, 0, 3, 4, 2})) == 6);
  CHECK(*SymmetricGroup(4).size().exact == 24);
  CHECK_THROWS_AS(s3.multiply(perm({0, 1}), perm({1, 2, 0})),
                  std::invalid_argument);
  CHECK_FALSE(s3.contains(perm({0, 0, 1})));
}

TEST_CASE("matrix arithmetic") {
  SpecialLinear2 const sl5(5);
  CHECK(sl5.multiply(sl5.make(1, 1, 0, 1), sl5.make(1, 0, 1, 1)) ==
        sl5.make(2, 1, 1, 1));
  CHECK(sl5.invert(sl5.make(1, 1, 0, 1)) == sl5.make(1, 4, 0, 1));
  CHECK(sl5.canonical_key(sl5.make(1, 1, 0, 1)) !=
        sl5.canonical_key(sl5.make(1, 0, 1, 1)));
  CHECK_THROWS_AS(sl5.make(1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sl5.multiply(sl5.identity(), SpecialLinear2(7).identity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpecialLinear2(9), std::invalid_argument);

  ProjectiveLinear2 const pgl5(5);
  auto const x = pgl5.make(2, 4, 1, 3);
  auto const y = pgl5.make(1, 2, 3, 4);
  CHECK(pgl5.canonical_key(x) == pgl5.canonical_key(y));
  CHECK(pgl5.packed_key(x) == pgl5.packed_key(y));
  CHECK(pgl5.multiply(pgl5.invert(x), x) == pgl5.make(1, 0, 0, 1));
  CHECK(ProjectiveLinear2(7).identity() == ProjectiveLinear2(7).make(1, 0, 0, 1));
  CHECK(*pgl5.size().exact == 120);
  CHECK(*SpecialLinear2(5).size().exact == 120);
  CHECK_THROWS_AS(pgl5.make(1, 2, 2, 4), std::invalid_argument);
}

TEST_CASE("projective keys ignore scaling") {
  for (std::uint32_t p : {5U, 7U, 101U, 1009U, 65537U, 100003U}) {
    ProjectiveLinear2 const g(p);
    Rng rng(p);
    for (int i = 0; i < 200; ++i) {
      auto const x = g.sample(rng);
      auto const lambda = static_cast<std::uint32_t>(1 + rng.below(p - 1));
      auto const& f = g.field();
      auto const y = g.make(f.mul(x.a, lambda), f.mul(x.b, lambda),
                            f.mul(x.c, lambda), f.mul(x.d, lambda));
      CHECK(y == x);
      CHECK(g.canonical_key(y) == g.canonical_key(x));
      CHECK(g.make(x.a, x.b, x.c, x.d) == x);
    }
  }
}

TEST_CASE("large-modulus keys are exact") {
  SpecialLinear2 const g(100003);
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto const x = g.sample(rng);
    auto const y = g.sample(rng);
    CHECK((g.canonical_key(x) == g.canonical_key(y)) == (x == y));
    CHECK((g.packed_key(x) == g.packed_key(y)) == (x == y));
    CHECK(g.canonical_key(x).size() == 17);
  }
  CHECK(SpecialLinear2(101).canonical_key(SpecialLinear2(101).identity()).size() == 8);
}

TEST_CASE("tree automorphisms") {
  BinaryTreeGroup const w1(1);
  TreeAut a(1);
  a.set_active(1, true);
  CHECK(w1.to_permutation(a) == perm({1, 0}));
  CHECK(w1.order(a) == 2);

  BinaryTreeGroup const w2(2);
  TreeAut r(2);
  r.set_active(1, true);
  CHECK(w2.to_permutation(r) == perm({2, 3, 0, 1}));

  BinaryTreeGroup const w3(3);
  CHECK(w3.format(w3.identity()) == "0000000");
  CHECK(w3.size().log2 == doctest::Approx(7.0));
  CHECK(*w3.size().exact == 128);
  CHECK_THROWS_AS(w3.multiply(w3.identity(), w2.identity()),
                  std::invalid_argument);
}

TEST_CASE("tree sections compose by the original bit") {
  Rng rng(11);
  for (unsigned n = 2; n <= 6; ++n) {
    BinaryTreeGroup const g(n);
    BinaryTreeGroup const sub(n - 1);
    for (int i = 0; i < 200; ++i) {
      auto const x = g.sample(rng);
      auto const y = g.sample(rng);
      auto const xy = g.multiply(x, y);
      bool const flip = x.root_active();
      CHECK(xy.root_active() == (x.root_active() != y.root_active()));
      for (unsigned b = 0; b < 2; ++b) {
        CHECK(xy.section(b) ==
              sub.multiply(x.section(b), y.section(b ^ (flip ? 1U : 0U))));
      }
      CHECK(TreeAut::from_sections(x.section(0), x.section(1),
                                   x.root_active()) == x);
    }
  }
}

TEST_CASE("tree embedding into Sym(2^n)") {
  Rng rng(5);
  for (unsigned n = 1; n <= 6; ++n) {
    BinaryTreeGroup const g(n);
    SymmetricGroup const sym(std::size_t{1} << n);
    for (int i = 0; i < 1000 / 6 + 1; ++i) {
      auto const x = g.sample(rng);
      auto const y = g.sample(rng);
      CHECK(g.to_permutation(g.multiply(x, y)) ==
            sym.multiply(g.to_permutation(x), g.to_permutation(y)));
      CHECK(g.order(x) == permutation_order(g.to_permutation(x)));
    }
  }
  BinaryTreeGroup const w4(4);
  for (int i = 0; i < 500; ++i) {
    auto const x = w4.sample(rng);
    CHECK(w4.order(x) == naive_order(w4, x));
    CHECK(w4.order(x) == permutation_order(w4.to_permutation(x)));
  }
  // Injective: distinct portraits give distinct permutations.
  std::set<std::vector<std::uint32_t>> images;
  for (auto const& x : w4.elements()) images.insert(w4.to_permutation(x).images);
  CHECK(images.size() == 1U << 15);
}

TEST_CASE("group axioms") {
  check_axioms(SymmetricGroup(7), 1);
  check_axioms(SpecialLinear2(7), 2);
  check_axioms(SpecialLinear2(100003), 3);
  check_axioms(ProjectiveLinear2(11), 4);
  check_axioms(ProjectiveLinear2(1009), 5);
  check_axioms(BinaryTreeGroup(5), 6);
  check_axioms(BinaryTreeGroup(9), 7);
}

TEST_CASE("orders agree with repeated multiplication") {
  Rng rng(8);
  SymmetricGroup const s6(6);
  SpecialLinear2 const sl(13);
  ProjectiveLinear2 const pgl(13);
  for (int i = 0; i < 300; ++i) {
    auto const x = s6.sample(rng);
    CHECK(s6.order(x) == naive_order(s6, x));
    auto const m = sl.sample(rng);
    CHECK(sl.order(m) == naive_order(sl, m));
    auto const q = pgl.sample(rng);
    CHECK(pgl.order(q) == naive_order(pgl, q));
  }
}

TEST_CASE("canonical keys are sound on small groups") {
  check_keys_exhaustive(SymmetricGroup(4));
  check_keys_exhaustive(SymmetricGroup(5));
  check_keys_exhaustive(SpecialLinear2(3));
  check_keys_exhaustive(SpecialLinear2(5));
  check_keys_exhaustive(ProjectiveLinear2(3));
  check_keys_exhaustive(ProjectiveLinear2(5));
  check_keys_exhaustive(BinaryTreeGroup(3));

  SymmetricGroup const s4(4);
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    auto const x = s4.sample(rng);
    auto const y = s4.sample(rng);
    CHECK((s4.canonical_key(x) == s4.canonical_key(y)) == (x.images == y.images));
  }
}

TEST_CASE("group sizes") {
  CHECK(*ProjectiveLinear2(3).size().exact == 24);
  CHECK(*SpecialLinear2(3).size().exact == 24);
  CHECK(*SymmetricGroup(20).size().exact == BigInt("2432902008176640000"));
  CHECK(SymmetricGroup(30).size().log2 == doctest::Approx(107.709067342).epsilon(1e-9));
  CHECK(ProjectiveLinear2(1009).size().log2 ==
        doctest::Approx(std::log2(1009.0 * 1008.0 * 1010.0)));
  CHECK(BinaryTreeGroup(20).size().log2 == doctest::Approx(1048575.0));
  CHECK_FALSE(BinaryTreeGroup(20).size().exact);
}

TEST_CASE("samplers are uniform") {
  check_uniform(SpecialLinear2(3), 1000, 21);
  check_uniform(ProjectiveLinear2(3), 1000, 22);
  check_uniform(SymmetricGroup(4), 1000, 23);
  check_uniform(SymmetricGroup(5), 200, 24);
  check_uniform(ProjectiveLinear2(5), 200, 25);
  check_uniform(BinaryTreeGroup(3), 200, 26);

  BinaryTreeGroup const w1(1);
  Rng rng(27);
  std::size_t active = 0;
  for (int i = 0; i < 10000; ++i) active += w1.sample(rng).root_active();
  CHECK(std::abs(static_cast<double>(active) - 5000.0) < 3 * 50.0);
}

TEST_CASE("group context") {
  auto const ctx = GroupContext::make(Family::kPGL2, 1009);
  CHECK(ctx.family() == Family::kPGL2);
  CHECK(ctx.parameter() == 1009);
  CHECK(ctx.dimension() == 3U);
  CHECK_FALSE(GroupContext::make(Family::kSym, 5).dimension());
  CHECK(parse_family("w2") == Family::kW2);
  CHECK(parse_family("sl2") == Family::kSL2);
  CHECK_THROWS_AS(parse_family("gl3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupContext::make(Family::kPGL2, 1000), std::invalid_argument);
  CHECK_THROWS_AS(GroupContext::make(Family::kW2, 0), std::invalid_argument);
}
