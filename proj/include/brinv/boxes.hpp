#pragma once

// Dyadic boxes of the unit s-cube and patterns (finite tilings by boxes).
//
// A box is an s-tuple of binary addresses, one per colour. Address bit 0
// selects the low half of the current interval and bit 1 the high half, so
// halving in colour i appends one bit to the i-th address. Two words of
// halvings that differ only by reordering halvings of distinct colours give
// the same tuple, which is exactly the commutation law of the algebra.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brinv/errors.hpp"

namespace brinv {

// Colours are numbered 1..s.
using Colour = int;

inline constexpr int kMaxColours      = 3;
inline constexpr int kDefaultDepthCap = 32;
inline constexpr int kHardDepthCap    = 63;

struct unchecked_t {
  explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

namespace detail {
  inline constexpr std::uint64_t low_mask(int n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

  inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
}  // namespace detail

////////////////////////////////////////////////////////////////////////
// Address
////////////////////////////////////////////////////////////////////////

class Address {
 public:
  constexpr Address() = default;
  constexpr Address(std::uint64_t bits, int len)
      : _bits(bits & detail::low_mask(len)),
        _len(static_cast<std::uint8_t>(len)) {}

  // "e" is the empty address, otherwise a nonempty string over {0,1}.
  static Address parse(std::string_view text) {
    if (text == "e") {
      return Address{};
    }
    if (text.empty()) {
      throw Error(ErrorKind::SyntaxError, "empty address field");
    }
    if (text.size() > static_cast<std::size_t>(kHardDepthCap)) {
      throw Error(ErrorKind::DepthCapExceeded,
                  "address longer than " + std::to_string(kHardDepthCap));
    }
    std::uint64_t bits = 0;
    for (char ch : text) {
      if (ch != '0' && ch != '1') {
        throw Error(ErrorKind::SyntaxError,
                    "bad address character '" + std::string(1, ch) + "'");
      }
      bits = (bits << 1) | static_cast<std::uint64_t>(ch - '0');
    }
    return Address(bits, static_cast<int>(text.size()));
  }

  std::string str() const {
    if (_len == 0) {
      return "e";
    }
    std::string out(_len, '0');
    for (int i = 0; i < _len; ++i) {
      out[i] = static_cast<char>('0' + bit(i));
    }
    return out;
  }

  constexpr int           length() const noexcept { return _len; }
  constexpr std::uint64_t bits() const noexcept { return _bits; }
  constexpr bool          empty() const noexcept { return _len == 0; }

  // i-th bit counted from the root.
  constexpr int bit(int i) const noexcept {
    return static_cast<int>((_bits >> (_len - 1 - i)) & 1U);
  }
  constexpr int last_bit() const noexcept {
    return static_cast<int>(_bits & 1U);
  }

  Address child(int b) const {
    check_room();
    return Address((_bits << 1) | static_cast<std::uint64_t>(b), _len + 1);
  }

  Address prepend(int b) const {
    check_room();
    return Address(_bits | (static_cast<std::uint64_t>(b) << _len), _len + 1);
  }

  constexpr Address parent() const noexcept {
    return Address(_bits >> 1, _len - 1);
  }

  constexpr Address drop_first() const noexcept {
    return Address(_bits, _len - 1);
  }

  constexpr Address sibling() const noexcept {
    return Address(_bits ^ 1U, _len);
  }

  Address concat(Address const& tail) const {
    if (_len + tail._len > kHardDepthCap) {
      throw Error(ErrorKind::DepthCapExceeded, "address concatenation");
    }
    return Address((_bits << tail._len) | tail._bits, _len + tail._len);
  }

  constexpr bool is_prefix_of(Address const& other) const noexcept {
    return _len <= other._len && (other._bits >> (other._len - _len)) == _bits;
  }

  constexpr std::optional<Address>
  strip_prefix(Address const& prefix) const noexcept {
    if (!prefix.is_prefix_of(*this)) {
      return std::nullopt;
    }
    return Address(_bits, _len - prefix._len);
  }

  constexpr std::optional<Address>
  strip_suffix(Address const& suffix) const noexcept {
    if (suffix._len > _len
        || (_bits & detail::low_mask(suffix._len)) != suffix._bits) {
      return std::nullopt;
    }
    return Address(_bits >> suffix._len, _len - suffix._len);
  }

  friend constexpr bool operator==(Address const&, Address const&) = default;

  friend constexpr std::strong_ordering operator<=>(Address const& a,
                                                    Address const& b) noexcept {
    if (auto c = a._len <=> b._len; c != 0) {
      return c;
    }
    return a._bits <=> b._bits;
  }

 private:
  void check_room() const {
    if (_len + 1 > kHardDepthCap) {
      throw Error(ErrorKind::DepthCapExceeded,
                  "address exceeds hard cap " + std::to_string(kHardDepthCap));
    }
  }

  std::uint64_t _bits = 0;
  std::uint8_t  _len  = 0;
};

////////////////////////////////////////////////////////////////////////
// Box
////////////////////////////////////////////////////////////////////////

class Box {
 public:
  Box() = default;

  // The whole unit s-cube.
  explicit Box(int s) : _s(static_cast<std::uint8_t>(s)) {
    if (s < 1 || s > kMaxColours) {
      throw Error(ErrorKind::InvariantViolation,
                  "colour count must be 1..3, got " + std::to_string(s));
    }
  }

  Box(std::initializer_list<Address> addrs) : Box(static_cast<int>(addrs.size())) {
    std::copy(addrs.begin(), addrs.end(), _addr.begin());
  }

  // Fields joined by ':', one per colour.
  static Box parse(std::string_view text) {
    Box       out;
    int       s     = 0;
    std::size_t start = 0;
    while (true) {
      auto pos = text.find(':', start);
      auto field
          = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
      if (s == kMaxColours) {
        throw Error(ErrorKind::SyntaxError, "too many fields in box");
      }
      out._addr[s++] = Address::parse(field);
      if (pos == std::string_view::npos) {
        break;
      }
      start = pos + 1;
    }
    out._s = static_cast<std::uint8_t>(s);
    return out;
  }

  std::string str() const {
    std::string out;
    for (int c = 0; c < _s; ++c) {
      if (c > 0) {
        out += ':';
      }
      out += _addr[c].str();
    }
    return out;
  }

  int colours() const noexcept { return _s; }

  Address const& addr(Colour c) const noexcept { return _addr[c - 1]; }

  Box with(Colour c, Address a) const {
    Box out        = *this;
    out._addr[c - 1] = a;
    return out;
  }

  int depth() const noexcept {
    int d = 0;
    for (int c = 0; c < _s; ++c) {
      d += _addr[c].length();
    }
    return d;
  }

  bool is_root() const noexcept { return depth() == 0; }

  bool contains(Box const& inner) const noexcept {
    for (int c = 0; c < _s; ++c) {
      if (!_addr[c].is_prefix_of(inner._addr[c])) {
        return false;
      }
    }
    return true;
  }

  bool overlaps(Box const& other) const noexcept {
    for (int c = 0; c < _s; ++c) {
      if (!_addr[c].is_prefix_of(other._addr[c])
          && !other._addr[c].is_prefix_of(_addr[c])) {
        return false;
      }
    }
    return true;
  }

  // Dyadic intervals are nested or disjoint, so the intersection keeps the
  // deeper address per colour.
  std::optional<Box> intersect(Box const& other) const noexcept {
    if (!overlaps(other)) {
      return std::nullopt;
    }
    Box out = *this;
    for (int c = 0; c < _s; ++c) {
      if (other._addr[c].length() > out._addr[c].length()) {
        out._addr[c] = other._addr[c];
      }
    }
    return out;
  }

  Box half(Colour c, int b) const { return with(c, addr(c).child(b)); }

  // Address of this box relative to an enclosing box.
  std::optional<Box> relative_to(Box const& outer) const noexcept {
    Box out = *this;
    for (int c = 0; c < _s; ++c) {
      auto r = _addr[c].strip_prefix(outer._addr[c]);
      if (!r) {
        return std::nullopt;
      }
      out._addr[c] = *r;
    }
    return out;
  }

  // The sub-box of *this with relative address rel.
  Box concat(Box const& rel) const {
    Box out = *this;
    for (int c = 0; c < _s; ++c) {
      out._addr[c] = _addr[c].concat(rel._addr[c]);
    }
    return out;
  }

  // Inverse of concat: the box B with B.concat(rel) == *this.
  std::optional<Box> strip_suffix(Box const& rel) const noexcept {
    Box out = *this;
    for (int c = 0; c < _s; ++c) {
      auto r = _addr[c].strip_suffix(rel._addr[c]);
      if (!r) {
        return std::nullopt;
      }
      out._addr[c] = *r;
    }
    return out;
  }

  int max_address_length() const noexcept {
    int m = 0;
    for (int c = 0; c < _s; ++c) {
      m = std::max(m, _addr[c].length());
    }
    return m;
  }

  friend bool operator==(Box const& a, Box const& b) noexcept {
    return a._s == b._s && a._addr == b._addr;
  }

  // Colour-major lexicographic order on (length, bits).
  friend std::strong_ordering operator<=>(Box const& a, Box const& b) noexcept {
    if (auto c = a._s <=> b._s; c != 0) {
      return c;
    }
    for (int i = 0; i < a._s; ++i) {
      if (auto c = a._addr[i] <=> b._addr[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t seed = _s;
    for (int c = 0; c < _s; ++c) {
      detail::hash_combine(seed, std::hash<std::uint64_t>{}(_addr[c].bits()));
      detail::hash_combine(seed, _addr[c].length());
    }
    return seed;
  }

 private:
  std::array<Address, kMaxColours> _addr{};
  std::uint8_t                     _s = 0;
};

// If lo and hi are the low and high c-halves of one box, returns c.
inline std::optional<Colour> sibling_colour(Box const& lo, Box const& hi) noexcept {
  std::optional<Colour> found;
  for (Colour c = 1; c <= lo.colours(); ++c) {
    if (lo.addr(c) == hi.addr(c)) {
      continue;
    }
    if (found) {
      return std::nullopt;
    }
    auto const& a = lo.addr(c);
    auto const& b = hi.addr(c);
    if (a.empty() || a.length() != b.length() || a.last_bit() != 0
        || b != a.sibling()) {
      return std::nullopt;
    }
    found = c;
  }
  return found;
}

inline Box parent_of(Box const& b, Colour c) {
  return b.with(c, b.addr(c).parent());
}

////////////////////////////////////////////////////////////////////////
// Tilings
////////////////////////////////////////////////////////////////////////

// True iff the boxes lie inside frame, are pairwise disjoint and their
// volumes add up to the volume of frame. Exact integer arithmetic.
inline bool tiles(std::span<Box const> boxes, Box const& frame) {
  if (boxes.empty()) {
    return false;
  }
  int const base = frame.depth();
  int       deepest = 0;
  for (auto const& b : boxes) {
    if (b.colours() != frame.colours() || !frame.contains(b)) {
      return false;
    }
    deepest = std::max(deepest, b.depth() - base);
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (boxes[i].overlaps(boxes[j])) {
        return false;
      }
    }
  }
  if (deepest <= 62) {
    std::uint64_t total = 0;
    for (auto const& b : boxes) {
      total += std::uint64_t{1} << (deepest - (b.depth() - base));
    }
    return total == (std::uint64_t{1} << deepest);
  }
  using boost::multiprecision::cpp_int;
  cpp_int total = 0;
  for (auto const& b : boxes) {
    total += cpp_int(1) << (deepest - (b.depth() - base));
  }
  return total == (cpp_int(1) << deepest);
}

namespace detail {
  // Free-cut recursion. Returns true iff boxes is exactly a tiling of frame
  // reachable from {frame} by halvings. When several colours admit a free
  // cut any of them may be taken: restricting a hierarchical tiling to one
  // side of a free cut stays hierarchical.
  inline bool hierarchical_rec(std::vector<Box>& boxes, Box const& frame) {
    if (boxes.size() == 1) {
      return boxes.front() == frame;
    }
    if (boxes.empty()) {
      return false;
    }
    for (Colour c = 1; c <= frame.colours(); ++c) {
      int const flen = frame.addr(c).length();
      bool      free = true;
      for (auto const& b : boxes) {
        if (b.addr(c).length() <= flen
            || !frame.addr(c).is_prefix_of(b.addr(c))) {
          free = false;
          break;
        }
      }
      if (!free) {
        continue;
      }
      std::vector<Box> lo, hi;
      for (auto const& b : boxes) {
        (b.addr(c).bit(flen) == 0 ? lo : hi).push_back(b);
      }
      return hierarchical_rec(lo, frame.half(c, 0))
             && hierarchical_rec(hi, frame.half(c, 1));
    }
    return false;
  }
}  // namespace detail

// Non-throwing: false for non-tilings as well.
inline bool is_hierarchical_tiling(std::span<Box const> boxes, Box const& frame) {
  std::vector<Box> copy(boxes.begin(), boxes.end());
  return detail::hierarchical_rec(copy, frame);
}

inline bool is_hierarchical(std::span<Box const> boxes, Box const& frame) {
  if (is_hierarchical_tiling(boxes, frame)) {
    return true;
  }
  if (!tiles(boxes, frame)) {
    throw Error(ErrorKind::NotATiling, "box set does not tile " + frame.str());
  }
  return false;
}

////////////////////////////////////////////////////////////////////////
// Pattern
////////////////////////////////////////////////////////////////////////

class Pattern {
 public:
  Pattern() = default;

  Pattern(int s, std::vector<Box> boxes) : _boxes(std::move(boxes)), _s(s) {
    if (s < 1 || s > kMaxColours) {
      throw Error(ErrorKind::InvariantViolation, "colour count must be 1..3");
    }
    for (auto const& b : _boxes) {
      if (b.colours() != s) {
        throw Error(ErrorKind::InvariantViolation,
                    "box " + b.str() + " has wrong colour count");
      }
    }
    std::sort(_boxes.begin(), _boxes.end());
    if (!tiles(_boxes, Box(s))) {
      throw Error(ErrorKind::NotATiling, "boxes do not tile the unit cube");
    }
  }

  // Caller guarantees a tiling; boxes are sorted here.
  Pattern(unchecked_t, int s, std::vector<Box> boxes)
      : _boxes(std::move(boxes)), _s(s) {
    std::sort(_boxes.begin(), _boxes.end());
  }

  static Pattern root(int s) { return Pattern(unchecked, s, {Box(s)}); }

  int         colours() const noexcept { return _s; }
  std::size_t size() const noexcept { return _boxes.size(); }

  std::span<Box const> boxes() const noexcept { return _boxes; }
  Box const&           operator[](std::size_t i) const { return _boxes[i]; }
  auto                 begin() const noexcept { return _boxes.begin(); }
  auto                 end() const noexcept { return _boxes.end(); }

  std::optional<std::size_t> index_of(Box const& b) const noexcept {
    auto it = std::lower_bound(_boxes.begin(), _boxes.end(), b);
    if (it == _boxes.end() || *it != b) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _boxes.begin());
  }

  bool contains(Box const& b) const noexcept { return index_of(b).has_value(); }

  friend bool operator==(Pattern const& a, Pattern const& b) noexcept {
    return a._s == b._s && a._boxes == b._boxes;
  }

  friend std::strong_ordering operator<=>(Pattern const& a,
                                          Pattern const& b) noexcept {
    if (auto c = a._s <=> b._s; c != 0) {
      return c;
    }
    if (auto c = a._boxes.size() <=> b._boxes.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a._boxes.begin(), a._boxes.end(), b._boxes.begin(), b._boxes.end());
  }

  std::size_t hash() const noexcept {
    std::size_t seed = _s;
    for (auto const& b : _boxes) {
      detail::hash_combine(seed, b.hash());
    }
    return seed;
  }

 private:
  std::vector<Box> _boxes;
  int              _s = 0;
};

}  // namespace brinv

template <>
struct std::hash<brinv::Box> {
  std::size_t operator()(brinv::Box const& b) const noexcept { return b.hash(); }
};

template <>
struct std::hash<brinv::Pattern> {
  std::size_t operator()(brinv::Pattern const& p) const noexcept {
    return p.hash();
  }
};

namespace brinv {

////////////////////////////////////////////////////////////////////////
// Pattern operations
////////////////////////////////////////////////////////////////////////

inline Pattern root_pattern(int s) {
  if (s < 1 || s > kMaxColours) {
    throw Error(ErrorKind::InvariantViolation, "colour count must be 1..3");
  }
  return Pattern::root(s);
}

inline Pattern
expand(Pattern const& p, Box const& b, Colour c, int depth_cap = kDefaultDepthCap) {
  if (!p.contains(b)) {
    throw Error(ErrorKind::BoxNotInPattern, b.str());
  }
  if (c < 1 || c > p.colours()) {
    throw Error(ErrorKind::InvariantViolation, "bad colour");
  }
  if (b.addr(c).length() + 1 > depth_cap) {
    throw Error(ErrorKind::DepthCapExceeded,
                "expanding " + b.str() + " beyond depth " + std::to_string(depth_cap));
  }
  std::vector<Box> out;
  out.reserve(p.size() + 1);
  for (auto const& x : p) {
    if (x != b) {
      out.push_back(x);
    }
  }
  out.push_back(b.half(c, 0));
  out.push_back(b.half(c, 1));
  return Pattern(unchecked, p.colours(), std::move(out));
}

// Sibling contraction: lo and hi must be the low and high c-halves of one box.
inline Pattern contract(Pattern const& p, Box const& lo, Box const& hi, Colour c) {
  if (!p.contains(lo)) {
    throw Error(ErrorKind::BoxNotInPattern, lo.str());
  }
  if (!p.contains(hi)) {
    throw Error(ErrorKind::BoxNotInPattern, hi.str());
  }
  if (sibling_colour(lo, hi) != std::optional<Colour>(c)) {
    throw Error(ErrorKind::NotSiblings,
                lo.str() + " and " + hi.str() + " in colour " + std::to_string(c));
  }
  std::vector<Box> out;
  out.reserve(p.size() - 1);
  for (auto const& x : p) {
    if (x != lo && x != hi) {
      out.push_back(x);
    }
  }
  out.push_back(parent_of(lo, c));
  return Pattern(unchecked, p.colours(), std::move(out));
}

// The expansion order A <= B: every B-box lies in an A-box and inside each
// A-box the B-boxes form a hierarchical tiling.
inline bool leq(Pattern const& a, Pattern const& b) {
  if (a.colours() != b.colours()) {
    return false;
  }
  std::vector<std::vector<Box>> groups(a.size());
  for (auto const& y : b) {
    bool placed = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].contains(y)) {
        groups[i].push_back(y);
        placed = true;
        break;
      }
    }
    if (!placed) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!detail::hierarchical_rec(groups[i], a[i])) {
      return false;
    }
  }
  return true;
}

inline bool is_hierarchical(Pattern const& p) {
  return is_hierarchical_tiling(p.boxes(), Box(p.colours()));
}

// Least upper bound by pairwise intersection, with the defining
// inequalities checked on the result.
inline Pattern lub(Pattern const& p, Pattern const& q) {
  if (p.colours() != q.colours()) {
    throw Error(ErrorKind::NoCommonLowerBound, "colour counts differ");
  }
  std::vector<Box> out;
  for (auto const& x : p) {
    for (auto const& y : q) {
      if (auto z = x.intersect(y)) {
        out.push_back(*z);
      }
    }
  }
  Pattern result(unchecked, p.colours(), std::move(out));
  if (!leq(p, result) || !leq(q, result)) {
    throw Error(ErrorKind::NoCommonLowerBound,
                "intersection pattern is not above both arguments");
  }
  return result;
}

// All expansion-reachable patterns with at most n boxes, ordered by size then
// box order. budget bounds the total number of patterns produced.
inline std::vector<Pattern>
enumerate_patterns(int s, std::size_t n, std::size_t budget = 2'000'000) {
  std::vector<Pattern> result;
  if (n == 0) {
    return result;
  }
  std::vector<Pattern> level{root_pattern(s)};
  result.push_back(level.front());
  for (std::size_t k = 2; k <= n; ++k) {
    std::unordered_set<Pattern> next;
    for (auto const& p : level) {
      for (auto const& b : p) {
        for (Colour c = 1; c <= s; ++c) {
          if (b.addr(c).length() + 1 > kDefaultDepthCap) {
            continue;
          }
          next.insert(expand(p, b, c));
          if (result.size() + next.size() > budget) {
            throw Error(ErrorKind::BudgetExceeded,
                        "pattern enumeration exceeds " + std::to_string(budget));
          }
        }
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    result.insert(result.end(), level.begin(), level.end());
  }
  return result;
}

inline Pattern make_pattern(int s, std::initializer_list<char const*> boxes) {
  std::vector<Box> v;
  for (auto const* text : boxes) {
    v.push_back(Box::parse(text));
  }
  return Pattern(s, std::move(v));
}

}  // namespace brinv
