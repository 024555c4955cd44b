// Element types and group contexts for the four families studied here:
// symmetric groups Sym(n), SL_2(F_p), PGL_2(F_p) and the iterated wreath
// product W_n(2) acting on the rooted binary tree of height n.
//
// Conventions shared by the whole library:
//   * permutations act on the right, so (x y)(i) = y(x(i)) and a word is
//     evaluated as a left-to-right product;
//   * tree automorphisms are stored as portraits: one activity bit per
//     internal node, heap-indexed (root = 1, children of v are 2v, 2v + 1).
//     The section at child b describes the action on the subtree below the
//     ORIGINAL child b, which gives (x y)_b = x_b y_{b ^ root(x)}.

#ifndef CAYLEY_GROUPS_HPP_
#define CAYLEY_GROUPS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley/rng.hpp"

namespace cayley {

using BigInt = boost::multiprecision::cpp_int;

struct Permutation {
  std::vector<std::uint32_t> images;

  friend bool operator==(Permutation const&, Permutation const&) = default;
};

struct Mat2 {
  std::uint32_t p = 0;
  std::uint32_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(Mat2 const&, Mat2 const&) = default;
};

// Kept in canonical form: the first nonzero entry in row-major order is 1.
struct ProjMat2 {
  std::uint32_t p = 0;
  std::uint32_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(ProjMat2 const&, ProjMat2 const&) = default;
};

class TreeAut {
 public:
  TreeAut() = default;
  /// Identity automorphism of the tree of the given height.
  explicit TreeAut(unsigned height);

  unsigned height() const noexcept { return height_; }
  std::size_t node_count() const noexcept {
    return (std::size_t{1} << height_) - 1;
  }

  /// Activity bit of the internal node with heap index `node` (1-based).
  bool active(std::size_t node) const noexcept {
    std::size_t const i = node - 1;
    return ((bits_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void set_active(std::size_t node, bool value) noexcept {
    std::size_t const i = node - 1;
    std::uint64_t const mask = std::uint64_t{1} << (i & 63);
    if (value) {
      bits_[i >> 6] |= mask;
    } else {
      bits_[i >> 6] &= ~mask;
    }
  }
  bool root_active() const noexcept { return height_ > 0 && active(1); }

  /// Restriction to the subtree below child `branch` (0 or 1).
  TreeAut section(unsigned branch) const;
  static TreeAut from_sections(TreeAut const& left, TreeAut const& right,
                               bool root_active);

  std::vector<std::uint64_t> const& words() const noexcept { return bits_; }

  friend bool operator==(TreeAut const&, TreeAut const&) = default;

 private:
  unsigned height_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// |G| as log2 and, when it has at most 4096 bits, exactly.
struct GroupSize {
  double log2 = 0.0;
  std::optional<BigInt> exact;
};

enum class Family { kSym, kSL2, kPGL2, kW2 };

std::string family_name(Family family);
Family parse_family(std::string const& name);

/// Residue arithmetic modulo a prime p < 2^21, with a shared inverse table.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1U << 21;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{x} * y % p_);
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
    std::uint32_t const s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
    return x >= y ? x - y : x + p_ - y;
  }
  std::uint32_t neg(std::uint32_t x) const noexcept {
    return x == 0 ? 0 : p_ - x;
  }
  /// Inverse of a nonzero residue.
  std::uint32_t inv(std::uint32_t x) const noexcept { return (*inverses_)[x]; }

 private:
  std::uint32_t p_;
  std::shared_ptr<std::vector<std::uint32_t> const> inverses_;
};

bool is_prime(std::uint64_t n);

class SymmetricGroup {
 public:
  using Element = Permutation;
  using Key = std::string;

  explicit SymmetricGroup(std::size_t degree);

  Family family() const noexcept { return Family::kSym; }
  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t parameter() const noexcept { return degree_; }

  bool contains(Element const& x) const;
  Element identity() const;
  Element multiply(Element const& x, Element const& y) const;
  void multiply_into(Element const& x, Element const& y, Element& out) const;
  Element invert(Element const& x) const;
  std::string canonical_key(Element const& x) const;
  Key packed_key(Element const& x) const { return canonical_key(x); }
  Element sample(Rng& rng) const;
  std::uint64_t order(Element const& x) const;
  GroupSize size() const;
  std::vector<Element> elements() const;
  std::string format(Element const& x) const;

 private:
  void check(Element const& x) const;

  std::size_t degree_;
};

class SpecialLinear2 {
 public:
  using Element = Mat2;
  using Key = std::uint64_t;

  explicit SpecialLinear2(std::uint32_t p);

  Family family() const noexcept { return Family::kSL2; }
  std::uint32_t prime() const noexcept { return field_.modulus(); }
  std::uint64_t parameter() const noexcept { return prime(); }
  PrimeField const& field() const noexcept { return field_; }

  bool contains(Element const& x) const;
  Element make(std::uint32_t a, std::uint32_t b, std::uint32_t c,
               std::uint32_t d) const;
  Element identity() const;
  Element multiply(Element const& x, Element const& y) const;
  void multiply_into(Element const& x, Element const& y, Element& out) const;
  Element invert(Element const& x) const;
  std::string canonical_key(Element const& x) const;
  /// Injective 64-bit key: (a, b, c) when a != 0, else (b, d).
  Key packed_key(Element const& x) const noexcept;
  Element sample(Rng& rng) const;
  std::uint64_t order(Element const& x) const;
  GroupSize size() const;
  std::vector<Element> elements() const;
  std::string format(Element const& x) const;

 private:
  void check(Element const& x) const;

  PrimeField field_;
};

class ProjectiveLinear2 {
 public:
  using Element = ProjMat2;
  using Key = std::uint64_t;

  explicit ProjectiveLinear2(std::uint32_t p);

  Family family() const noexcept { return Family::kPGL2; }
  std::uint32_t prime() const noexcept { return field_.modulus(); }
  std::uint64_t parameter() const noexcept { return prime(); }
  PrimeField const& field() const noexcept { return field_; }

  bool contains(Element const& x) const;
  /// Class of an invertible matrix; throws if the determinant vanishes.
  Element make(std::uint32_t a, std::uint32_t b, std::uint32_t c,
               std::uint32_t d) const;
  Element identity() const;
  Element multiply(Element const& x, Element const& y) const;
  void multiply_into(Element const& x, Element const& y, Element& out) const;
  Element invert(Element const& x) const;
  std::string canonical_key(Element const& x) const;
  /// Injective 64-bit key built from the three free canonical entries.
  Key packed_key(Element const& x) const noexcept;
  Element sample(Rng& rng) const;
  std::uint64_t order(Element const& x) const;
  GroupSize size() const;
  std::vector<Element> elements() const;
  std::string format(Element const& x) const;

 private:
  void check(Element const& x) const;
  void canonicalize(Element& x) const noexcept;

  PrimeField field_;
};

class BinaryTreeGroup {
 public:
  using Element = TreeAut;
  using Key = std::string;

  static constexpr unsigned kMaxHeight = 26;

  explicit BinaryTreeGroup(unsigned height);

  Family family() const noexcept { return Family::kW2; }
  unsigned height() const noexcept { return height_; }
  std::uint64_t parameter() const noexcept { return height_; }

  bool contains(Element const& x) const;
  Element identity() const;
  Element multiply(Element const& x, Element const& y) const;
  void multiply_into(Element const& x, Element const& y, Element& out) const;
  Element invert(Element const& x) const;
  std::string canonical_key(Element const& x) const;
  Key packed_key(Element const& x) const { return canonical_key(x); }
  Element sample(Rng& rng) const;
  /// Orders are powers of two; computed through sections.
  std::uint64_t order(Element const& x) const;
  GroupSize size() const;
  std::vector<Element> elements() const;
  std::string format(Element const& x) const;

  /// Action on the 2^n leaves; leaf u_1...u_n is the integer with u_1 as
  /// its most significant bit.
  Permutation to_permutation(Element const& x) const;

 private:
  void check(Element const& x) const;

  unsigned height_;
};

std::uint64_t permutation_order(Permutation const& x);

/// Runtime-selected group: family tag, parameter and, for SL_2 and PGL_2,
/// the dimension of the ambient algebraic group.
class GroupContext {
 public:
  using Variant = std::variant<SymmetricGroup, SpecialLinear2,
                               ProjectiveLinear2, BinaryTreeGroup>;

  explicit GroupContext(Variant group) : group_(std::move(group)) {}
  static GroupContext make(Family family, std::uint64_t parameter);

  Family family() const;
  std::uint64_t parameter() const;
  std::optional<unsigned> dimension() const;
  GroupSize size() const;
  std::string name() const;

  template <class Visitor>
  decltype(auto) visit(Visitor&& visitor) const {
    return std::visit(std::forward<Visitor>(visitor), group_);
  }

  Variant const& variant() const noexcept { return group_; }

 private:
  Variant group_;
};

}  // namespace cayley

#endif  // CAYLEY_GROUPS_HPP_
