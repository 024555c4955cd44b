#include "cayley/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cayley {

namespace {

constexpr std::size_t kMaxExactBits = 4096;

void append_u32_le(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void append_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

// Shared byte layout for 2x2 matrix keys. Entries below 2^16 pack into a
// single 64-bit word; larger moduli use a tag byte and four 32-bit fields.
std::string matrix_key(std::uint32_t p, std::uint32_t a, std::uint32_t b,
                       std::uint32_t c, std::uint32_t d) {
  std::string out;
  if (p < (1U << 16)) {
    out.reserve(8);
    append_u64_le(out, (std::uint64_t{a} << 48) | (std::uint64_t{b} << 32) |
                           (std::uint64_t{c} << 16) | std::uint64_t{d});
  } else {
    out.reserve(17);
    out.push_back('\x10');
    append_u32_le(out, a);
    append_u32_le(out, b);
    append_u32_le(out, c);
    append_u32_le(out, d);
  }
  return out;
}

std::string matrix_format(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                          std::uint32_t d) {
  std::ostringstream os;
  os << "[[" << a << ',' << b << "],[" << c << ',' << d << "]]";
  return os.str();
}

GroupSize exact_size(BigInt const& value) {
  GroupSize size;
  size.log2 = static_cast<double>(boost::multiprecision::msb(value));
  // Refine with the leading 53 bits.
  std::size_t const bits = boost::multiprecision::msb(value) + 1;
  if (bits > 53) {
    BigInt const top = value >> (bits - 53);
    size.log2 = std::log2(top.convert_to<double>()) +
                static_cast<double>(bits - 53);
  } else {
    size.log2 = std::log2(value.convert_to<double>());
  }
  size.exact = value;
  return size;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t const g = std::gcd(a, b);
  std::uint64_t const q = a / g;
  if (q != 0 && b > ~std::uint64_t{0} / q) {
    throw std::overflow_error("element order exceeds 64 bits");
  }
  return q * b;
}

// Multiplies portraits level by level, tracking where x sends the nodes of
// the current level. `image` holds, for node 2^t + j, the offset of its
// image within level t.
void tree_multiply(TreeAut const& x, TreeAut const& y, TreeAut& out) {
  unsigned const n = x.height();
  thread_local std::vector<std::uint32_t> image;
  thread_local std::vector<std::uint32_t> next;
  image.assign(1, 0);
  for (unsigned t = 0; t < n; ++t) {
    std::size_t const base = std::size_t{1} << t;
    next.resize(base * 2);
    for (std::size_t j = 0; j < base; ++j) {
      bool const ex = x.active(base + j);
      bool const ey = y.active(base + image[j]);
      out.set_active(base + j, ex != ey);
      std::uint32_t const img = image[j] << 1;
      next[2 * j] = img | static_cast<std::uint32_t>(ex);
      next[2 * j + 1] = img | static_cast<std::uint32_t>(!ex);
    }
    image.swap(next);
  }
}

std::uint64_t tree_order(TreeAut const& x) {
  if (x.height() == 0) {
    return 1;
  }
  TreeAut const left = x.section(0);
  TreeAut const right = x.section(1);
  if (!x.root_active()) {
    return std::max(tree_order(left), tree_order(right));
  }
  TreeAut product(left.height());
  tree_multiply(left, right, product);
  return 2 * tree_order(product);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      return false;
    }
  }
  return true;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kSym:
      return "sym";
    case Family::kSL2:
      return "sl2";
    case Family::kPGL2:
      return "pgl2";
    case Family::kW2:
      return "wn";
  }
  return "?";
}

Family parse_family(std::string const& name) {
  if (name == "sym") return Family::kSym;
  if (name == "sl2") return Family::kSL2;
  if (name == "pgl2") return Family::kPGL2;
  if (name == "wn" || name == "w2") return Family::kW2;
  throw std::invalid_argument("unknown group family: " + name);
}

////////////////////////////////////////////////////////////////////////////
// TreeAut
////////////////////////////////////////////////////////////////////////////

TreeAut::TreeAut(unsigned height)
    : height_(height), bits_(((std::size_t{1} << height) + 63) / 64, 0) {}

TreeAut TreeAut::section(unsigned branch) const {
  if (height_ == 0) {
    throw std::invalid_argument("height-0 automorphism has no sections");
  }
  TreeAut out(height_ - 1);
  for (unsigned t = 0; t + 1 < height_; ++t) {
    std::size_t const width = std::size_t{1} << t;
    std::size_t const src = 2 * width + branch * width;
    for (std::size_t j = 0; j < width; ++j) {
      out.set_active(width + j, active(src + j));
    }
  }
  return out;
}

TreeAut TreeAut::from_sections(TreeAut const& left, TreeAut const& right,
                               bool root) {
  if (left.height() != right.height()) {
    throw std::invalid_argument("sections must have equal height");
  }
  TreeAut out(left.height() + 1);
  out.set_active(1, root);
  for (unsigned t = 0; t < left.height(); ++t) {
    std::size_t const width = std::size_t{1} << t;
    for (std::size_t j = 0; j < width; ++j) {
      out.set_active(2 * width + j, left.active(width + j));
      out.set_active(3 * width + j, right.active(width + j));
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// PrimeField
////////////////////////////////////////////////////////////////////////////

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw std::invalid_argument("modulus must be below 2^21");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not prime");
  }
  auto table = std::make_shared<std::vector<std::uint32_t>>(p, 0);
  auto& inv = *table;
  if (p > 1) {
    inv[1] = 1;
  }
  for (std::uint32_t i = 2; i < p; ++i) {
    inv[i] = static_cast<std::uint32_t>(
        (p - static_cast<std::uint64_t>(p / i) * inv[p % i] % p) % p);
  }
  inverses_ = std::move(table);
}

////////////////////////////////////////////////////////////////////////////
// SymmetricGroup
////////////////////////////////////////////////////////////////////////////

SymmetricGroup::SymmetricGroup(std::size_t degree) : degree_(degree) {
  if (degree == 0) {
    throw std::invalid_argument("symmetric group degree must be >= 1");
  }
}

bool SymmetricGroup::contains(Element const& x) const {
  if (x.images.size() != degree_) {
    return false;
  }
  std::vector<bool> seen(degree_, false);
  for (std::uint32_t v : x.images) {
    if (v >= degree_ || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

void SymmetricGroup::check(Element const& x) const {
  if (x.images.size() != degree_) {
    throw std::invalid_argument("permutation degree mismatch");
  }
}

SymmetricGroup::Element SymmetricGroup::identity() const {
  Element e;
  e.images.resize(degree_);
  std::iota(e.images.begin(), e.images.end(), 0U);
  return e;
}

SymmetricGroup::Element SymmetricGroup::multiply(Element const& x,
                                                 Element const& y) const {
  Element out;
  multiply_into(x, y, out);
  return out;
}

void SymmetricGroup::multiply_into(Element const& x, Element const& y,
                                   Element& out) const {
  check(x);
  check(y);
  out.images.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) {
    out.images[i] = y.images[x.images[i]];
  }
}

SymmetricGroup::Element SymmetricGroup::invert(Element const& x) const {
  check(x);
  Element out;
  out.images.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) {
    out.images[x.images[i]] = static_cast<std::uint32_t>(i);
  }
  return out;
}

std::string SymmetricGroup::canonical_key(Element const& x) const {
  std::string out;
  if (degree_ <= 256) {
    out.reserve(degree_);
    for (std::uint32_t v : x.images) {
      out.push_back(static_cast<char>(v));
    }
  } else {
    out.reserve(4 * degree_);
    for (std::uint32_t v : x.images) {
      append_u32_le(out, v);
    }
  }
  return out;
}

SymmetricGroup::Element SymmetricGroup::sample(Rng& rng) const {
  Element x = identity();
  for (std::size_t i = degree_ - 1; i > 0; --i) {
    std::size_t const j = rng.below(i + 1);
    std::swap(x.images[i], x.images[j]);
  }
  return x;
}

std::uint64_t permutation_order(Permutation const& x) {
  std::size_t const n = x.images.size();
  std::vector<bool> seen(n, false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) {
      continue;
    }
    std::uint64_t length = 0;
    for (std::size_t j = i; !seen[j]; j = x.images[j]) {
      seen[j] = true;
      ++length;
    }
    order = lcm_checked(order, length);
  }
  return order;
}

std::uint64_t SymmetricGroup::order(Element const& x) const {
  check(x);
  return permutation_order(x);
}

GroupSize SymmetricGroup::size() const {
  BigInt f = 1;
  for (std::size_t i = 2; i <= degree_; ++i) {
    f *= i;
  }
  return exact_size(f);
}

std::vector<SymmetricGroup::Element> SymmetricGroup::elements() const {
  if (degree_ > 9) {
    throw std::invalid_argument("element enumeration limited to degree <= 9");
  }
  std::vector<Element> out;
  Element x = identity();
  do {
    out.push_back(x);
  } while (std::next_permutation(x.images.begin(), x.images.end()));
  return out;
}

std::string SymmetricGroup::format(Element const& x) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < x.images.size(); ++i) {
    os << (i ? "," : "") << x.images[i];
  }
  os << ']';
  return os.str();
}

////////////////////////////////////////////////////////////////////////////
// SpecialLinear2
////////////////////////////////////////////////////////////////////////////

SpecialLinear2::SpecialLinear2(std::uint32_t p) : field_(p) {}

bool SpecialLinear2::contains(Element const& x) const {
  std::uint32_t const p = prime();
  if (x.p != p || x.a >= p || x.b >= p || x.c >= p || x.d >= p) {
    return false;
  }
  return field_.sub(field_.mul(x.a, x.d), field_.mul(x.b, x.c)) == 1 % p;
}

void SpecialLinear2::check(Element const& x) const {
  if (x.p != prime()) {
    throw std::invalid_argument("matrix modulus mismatch");
  }
}

SpecialLinear2::Element SpecialLinear2::make(std::uint32_t a, std::uint32_t b,
                                             std::uint32_t c,
                                             std::uint32_t d) const {
  std::uint32_t const p = prime();
  Element x{p, a % p, b % p, c % p, d % p};
  if (!contains(x)) {
    throw std::invalid_argument("matrix does not have determinant 1");
  }
  return x;
}

SpecialLinear2::Element SpecialLinear2::identity() const {
  return Element{prime(), 1, 0, 0, 1};
}

SpecialLinear2::Element SpecialLinear2::multiply(Element const& x,
                                                 Element const& y) const {
  Element out;
  multiply_into(x, y, out);
  return out;
}

void SpecialLinear2::multiply_into(Element const& x, Element const& y,
                                   Element& out) const {
  check(x);
  check(y);
  std::uint64_t const p = prime();
  out.p = x.p;
  std::uint64_t const a = (std::uint64_t{x.a} * y.a + std::uint64_t{x.b} * y.c) % p;
  std::uint64_t const b = (std::uint64_t{x.a} * y.b + std::uint64_t{x.b} * y.d) % p;
  std::uint64_t const c = (std::uint64_t{x.c} * y.a + std::uint64_t{x.d} * y.c) % p;
  std::uint64_t const d = (std::uint64_t{x.c} * y.b + std::uint64_t{x.d} * y.d) % p;
  out.a = static_cast<std::uint32_t>(a);
  out.b = static_cast<std::uint32_t>(b);
  out.c = static_cast<std::uint32_t>(c);
  out.d = static_cast<std::uint32_t>(d);
}

SpecialLinear2::Element SpecialLinear2::invert(Element const& x) const {
  check(x);
  return Element{x.p, x.d, field_.neg(x.b), field_.neg(x.c), x.a};
}

std::string SpecialLinear2::canonical_key(Element const& x) const {
  return matrix_key(x.p, x.a, x.b, x.c, x.d);
}

SpecialLinear2::Key SpecialLinear2::packed_key(Element const& x) const noexcept {
  // Determinant 1 fixes d from (a, b, c) when a != 0, and c = -1/b when
  // a == 0; the a-field is nonzero exactly in the first case.
  if (x.a != 0) {
    return (std::uint64_t{x.a} << 42) | (std::uint64_t{x.b} << 21) | x.c;
  }
  return (std::uint64_t{x.b} << 21) | x.d;
}

SpecialLinear2::Element SpecialLinear2::sample(Rng& rng) const {
  std::uint32_t const p = prime();
  std::uint32_t a, b;
  do {
    a = static_cast<std::uint32_t>(rng.below(p));
    b = static_cast<std::uint32_t>(rng.below(p));
  } while (a == 0 && b == 0);
  // The solutions of ad - bc = 1 form a line with p points.
  std::uint32_t const t = static_cast<std::uint32_t>(rng.below(p));
  if (a != 0) {
    std::uint32_t const c = t;
    std::uint32_t const d = field_.mul(field_.add(1 % p, field_.mul(b, c)),
                                       field_.inv(a));
    return Element{p, a, b, c, d};
  }
  std::uint32_t const c = field_.neg(field_.inv(b));
  return Element{p, a, b, c, t};
}

std::uint64_t SpecialLinear2::order(Element const& x) const {
  check(x);
  std::uint64_t const cutoff =
      std::uint64_t{prime()} * (std::uint64_t{prime()} * prime() - 1);
  Element const e = identity();
  Element y = x;
  for (std::uint64_t m = 1; m <= cutoff; ++m) {
    if (y == e) {
      return m;
    }
    y = multiply(y, x);
  }
  throw std::logic_error("SL2 element order exceeded |G|");
}

GroupSize SpecialLinear2::size() const {
  BigInt const p = prime();
  return exact_size(p * (p * p - 1));
}

std::vector<SpecialLinear2::Element> SpecialLinear2::elements() const {
  std::uint32_t const p = prime();
  if (p > 101) {
    throw std::invalid_argument("element enumeration limited to p <= 101");
  }
  std::vector<Element> out;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          Element const x{p, a, b, c, d};
          if (contains(x)) {
            out.push_back(x);
          }
        }
  return out;
}

std::string SpecialLinear2::format(Element const& x) const {
  return matrix_format(x.a, x.b, x.c, x.d);
}

////////////////////////////////////////////////////////////////////////////
// ProjectiveLinear2
////////////////////////////////////////////////////////////////////////////

ProjectiveLinear2::ProjectiveLinear2(std::uint32_t p) : field_(p) {}

bool ProjectiveLinear2::contains(Element const& x) const {
  std::uint32_t const p = prime();
  if (x.p != p || x.a >= p || x.b >= p || x.c >= p || x.d >= p) {
    return false;
  }
  if (field_.mul(x.a, x.d) == field_.mul(x.b, x.c)) {
    return false;
  }
  std::uint32_t const lead = x.a != 0 ? x.a : x.b != 0 ? x.b : x.c;
  return lead == 1;
}

void ProjectiveLinear2::check(Element const& x) const {
  if (x.p != prime()) {
    throw std::invalid_argument("matrix modulus mismatch");
  }
}

void ProjectiveLinear2::canonicalize(Element& x) const noexcept {
  std::uint32_t const lead = x.a != 0   ? x.a
                             : x.b != 0 ? x.b
                             : x.c != 0 ? x.c
                                        : x.d;
  if (lead == 1) {
    return;
  }
  std::uint32_t const s = field_.inv(lead);
  x.a = field_.mul(x.a, s);
  x.b = field_.mul(x.b, s);
  x.c = field_.mul(x.c, s);
  x.d = field_.mul(x.d, s);
}

ProjectiveLinear2::Element ProjectiveLinear2::make(std::uint32_t a,
                                                   std::uint32_t b,
                                                   std::uint32_t c,
                                                   std::uint32_t d) const {
  std::uint32_t const p = prime();
  Element x{p, a % p, b % p, c % p, d % p};
  if (field_.mul(x.a, x.d) == field_.mul(x.b, x.c)) {
    throw std::invalid_argument("matrix is singular");
  }
  canonicalize(x);
  return x;
}

ProjectiveLinear2::Element ProjectiveLinear2::identity() const {
  return Element{prime(), 1, 0, 0, 1};
}

ProjectiveLinear2::Element ProjectiveLinear2::multiply(Element const& x,
                                                       Element const& y) const {
  Element out;
  multiply_into(x, y, out);
  return out;
}

void ProjectiveLinear2::multiply_into(Element const& x, Element const& y,
                                      Element& out) const {
  check(x);
  check(y);
  std::uint64_t const p = prime();
  out.p = x.p;
  std::uint64_t const a = (std::uint64_t{x.a} * y.a + std::uint64_t{x.b} * y.c) % p;
  std::uint64_t const b = (std::uint64_t{x.a} * y.b + std::uint64_t{x.b} * y.d) % p;
  std::uint64_t const c = (std::uint64_t{x.c} * y.a + std::uint64_t{x.d} * y.c) % p;
  std::uint64_t const d = (std::uint64_t{x.c} * y.b + std::uint64_t{x.d} * y.d) % p;
  out.a = static_cast<std::uint32_t>(a);
  out.b = static_cast<std::uint32_t>(b);
  out.c = static_cast<std::uint32_t>(c);
  out.d = static_cast<std::uint32_t>(d);
  canonicalize(out);
}

ProjectiveLinear2::Element ProjectiveLinear2::invert(Element const& x) const {
  check(x);
  // The adjugate is a scalar multiple of the inverse.
  Element out{x.p, x.d, field_.neg(x.b), field_.neg(x.c), x.a};
  canonicalize(out);
  return out;
}

std::string ProjectiveLinear2::canonical_key(Element const& x) const {
  return matrix_key(x.p, x.a, x.b, x.c, x.d);
}

ProjectiveLinear2::Key ProjectiveLinear2::packed_key(
    Element const& x) const noexcept {
  // Canonical form has a == 1, or a == 0 and b == 1 (b == 0 too would make
  // the matrix singular).
  if (x.a != 0) {
    return (std::uint64_t{1} << 63) | (std::uint64_t{x.b} << 42) |
           (std::uint64_t{x.c} << 21) | x.d;
  }
  return (std::uint64_t{x.c} << 21) | x.d;
}

ProjectiveLinear2::Element ProjectiveLinear2::sample(Rng& rng) const {
  std::uint32_t const p = prime();
  Element x{p, 0, 0, 0, 0};
  // Every fibre of GL_2 -> PGL_2 has p - 1 elements, so a uniform invertible
  // matrix projects to a uniform class.
  do {
    x.a = static_cast<std::uint32_t>(rng.below(p));
    x.b = static_cast<std::uint32_t>(rng.below(p));
    x.c = static_cast<std::uint32_t>(rng.below(p));
    x.d = static_cast<std::uint32_t>(rng.below(p));
  } while (field_.mul(x.a, x.d) == field_.mul(x.b, x.c));
  canonicalize(x);
  return x;
}

std::uint64_t ProjectiveLinear2::order(Element const& x) const {
  check(x);
  std::uint64_t const cutoff =
      std::uint64_t{prime()} * (std::uint64_t{prime()} * prime() - 1);
  Element const e = identity();
  Element y = x;
  for (std::uint64_t m = 1; m <= cutoff; ++m) {
    if (y == e) {
      return m;
    }
    y = multiply(y, x);
  }
  throw std::logic_error("PGL2 element order exceeded |G|");
}

GroupSize ProjectiveLinear2::size() const {
  BigInt const p = prime();
  return exact_size(p * (p - 1) * (p + 1));
}

std::vector<ProjectiveLinear2::Element> ProjectiveLinear2::elements() const {
  std::uint32_t const p = prime();
  if (p > 101) {
    throw std::invalid_argument("element enumeration limited to p <= 101");
  }
  std::vector<Element> out;
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          Element const x{p, a, b, c, d};
          if (contains(x)) {
            out.push_back(x);
          }
        }
  return out;
}

std::string ProjectiveLinear2::format(Element const& x) const {
  return matrix_format(x.a, x.b, x.c, x.d);
}

////////////////////////////////////////////////////////////////////////////
// BinaryTreeGroup
////////////////////////////////////////////////////////////////////////////

BinaryTreeGroup::BinaryTreeGroup(unsigned height) : height_(height) {
  if (height == 0 || height > kMaxHeight) {
    throw std::invalid_argument("tree height must be in [1, 26]");
  }
}

bool BinaryTreeGroup::contains(Element const& x) const {
  return x.height() == height_ &&
         x.words().size() == ((std::size_t{1} << height_) + 63) / 64;
}

void BinaryTreeGroup::check(Element const& x) const {
  if (x.height() != height_) {
    throw std::invalid_argument("tree height mismatch");
  }
}

BinaryTreeGroup::Element BinaryTreeGroup::identity() const {
  return TreeAut(height_);
}

BinaryTreeGroup::Element BinaryTreeGroup::multiply(Element const& x,
                                                   Element const& y) const {
  Element out(height_);
  multiply_into(x, y, out);
  return out;
}

void BinaryTreeGroup::multiply_into(Element const& x, Element const& y,
                                    Element& out) const {
  check(x);
  check(y);
  if (out.height() != height_) {
    out = TreeAut(height_);
  }
  if (&out == &x || &out == &y) {
    TreeAut tmp(height_);
    tree_multiply(x, y, tmp);
    out = std::move(tmp);
    return;
  }
  tree_multiply(x, y, out);
}

BinaryTreeGroup::Element BinaryTreeGroup::invert(Element const& x) const {
  check(x);
  // x x^{-1} = 1 forces the bit of x^{-1} at x(v) to equal the bit of x at v.
  Element out(height_);
  std::vector<std::uint32_t> image(1, 0);
  std::vector<std::uint32_t> next;
  for (unsigned t = 0; t < height_; ++t) {
    std::size_t const base = std::size_t{1} << t;
    next.resize(base * 2);
    for (std::size_t j = 0; j < base; ++j) {
      bool const ex = x.active(base + j);
      out.set_active(base + image[j], ex);
      std::uint32_t const img = image[j] << 1;
      next[2 * j] = img | static_cast<std::uint32_t>(ex);
      next[2 * j + 1] = img | static_cast<std::uint32_t>(!ex);
    }
    image.swap(next);
  }
  return out;
}

std::string BinaryTreeGroup::canonical_key(Element const& x) const {
  std::string out;
  std::size_t const bytes = (x.node_count() + 7) / 8;
  out.reserve(bytes);
  for (std::size_t i = 0; i < bytes; ++i) {
    out.push_back(
        static_cast<char>((x.words()[i / 8] >> (8 * (i % 8))) & 0xFF));
  }
  return out;
}

BinaryTreeGroup::Element BinaryTreeGroup::sample(Rng& rng) const {
  Element x(height_);
  for (std::size_t node = 1; node <= x.node_count(); ++node) {
    x.set_active(node, rng.bit());
  }
  return x;
}

std::uint64_t BinaryTreeGroup::order(Element const& x) const {
  check(x);
  return tree_order(x);
}

GroupSize BinaryTreeGroup::size() const {
  std::uint64_t const bits = (std::uint64_t{1} << height_) - 1;
  GroupSize size;
  size.log2 = static_cast<double>(bits);
  if (bits <= kMaxExactBits) {
    size.exact = BigInt(1) << bits;
  }
  return size;
}

std::vector<BinaryTreeGroup::Element> BinaryTreeGroup::elements() const {
  if (height_ > 4) {
    throw std::invalid_argument("element enumeration limited to height <= 4");
  }
  std::size_t const nodes = (std::size_t{1} << height_) - 1;
  std::vector<Element> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nodes); ++mask) {
    Element x(height_);
    for (std::size_t node = 1; node <= nodes; ++node) {
      x.set_active(node, ((mask >> (node - 1)) & 1U) != 0);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::string BinaryTreeGroup::format(Element const& x) const {
  std::string out;
  out.reserve(x.node_count());
  for (std::size_t node = 1; node <= x.node_count(); ++node) {
    out.push_back(x.active(node) ? '1' : '0');
  }
  return out;
}

Permutation BinaryTreeGroup::to_permutation(Element const& x) const {
  check(x);
  std::size_t const leaves = std::size_t{1} << height_;
  Permutation out;
  out.images.resize(leaves);
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    std::size_t node = 1;
    std::uint32_t image = 0;
    for (unsigned t = 0; t < height_; ++t) {
      unsigned const bit = (leaf >> (height_ - 1 - t)) & 1U;
      image = (image << 1) | (bit ^ static_cast<unsigned>(x.active(node)));
      node = 2 * node + bit;
    }
    out.images[leaf] = image;
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// GroupContext
////////////////////////////////////////////////////////////////////////////

GroupContext GroupContext::make(Family family, std::uint64_t parameter) {
  switch (family) {
    case Family::kSym:
      return GroupContext(SymmetricGroup(parameter));
    case Family::kSL2:
      if (parameter >= PrimeField::kMaxModulus) {
        throw std::invalid_argument("modulus must be below 2^21");
      }
      return GroupContext(SpecialLinear2(static_cast<std::uint32_t>(parameter)));
    case Family::kPGL2:
      if (parameter >= PrimeField::kMaxModulus) {
        throw std::invalid_argument("modulus must be below 2^21");
      }
      return GroupContext(
          ProjectiveLinear2(static_cast<std::uint32_t>(parameter)));
    case Family::kW2:
      if (parameter > BinaryTreeGroup::kMaxHeight) {
        throw std::invalid_argument("tree height must be in [1, 26]");
      }
      return GroupContext(BinaryTreeGroup(static_cast<unsigned>(parameter)));
  }
  throw std::invalid_argument("unknown family");
}

Family GroupContext::family() const {
  return visit([](auto const& g) { return g.family(); });
}

std::uint64_t GroupContext::parameter() const {
  return visit([](auto const& g) { return g.parameter(); });
}

std::optional<unsigned> GroupContext::dimension() const {
  switch (family()) {
    case Family::kSL2:
    case Family::kPGL2:
      return 3U;
    default:
      return std::nullopt;
  }
}

GroupSize GroupContext::size() const {
  return visit([](auto const& g) { return g.size(); });
}

std::string GroupContext::name() const {
  return family_name(family()) + "(" + std::to_string(parameter()) + ")";
}

}  // namespace cayley
