#ifndef SETTOP_POINT_SET_HPP
#define SETTOP_POINT_SET_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace settop {

// Subsets of an ambient space with points 0..n-1, stored as bit masks.
// All spaces in this library are small (n <= 31), which keeps subset
// arithmetic at machine-word cost.
class PointSet {
public:
  static constexpr int kMaxPoints = 31;

  PointSet() = default;
  PointSet(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > kMaxPoints) throw std::invalid_argument("PointSet: point count out of range");
    if (n < kMaxPoints && (mask >> n) != 0)
      throw std::invalid_argument("PointSet: member index out of range");
  }

  static PointSet empty(int n) { return PointSet(n, 0); }
  static PointSet full(int n) { return PointSet(n, n == 0 ? 0u : ((1u << n) - 1u)); }
  static PointSet of(int n, std::initializer_list<int> points) {
    std::uint32_t m = 0;
    for (int p : points) {
      if (p < 0 || p >= n) throw std::invalid_argument("PointSet: member index out of range");
      m |= 1u << p;
    }
    return PointSet(n, m);
  }
  static PointSet from_indices(int n, const std::vector<int>& points) {
    std::uint32_t m = 0;
    for (int p : points) {
      if (p < 0 || p >= n) throw std::invalid_argument("PointSet: member index out of range");
      m |= 1u << p;
    }
    return PointSet(n, m);
  }

  int space_size() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool empty_set() const { return mask_ == 0; }
  int size() const { return __builtin_popcount(mask_); }
  bool contains(int p) const { return p >= 0 && p < n_ && (mask_ >> p) & 1u; }
  bool subset_of(const PointSet& o) const { return (mask_ & ~o.mask_) == 0; }
  bool meets(const PointSet& o) const { return (mask_ & o.mask_) != 0; }

  PointSet unite(const PointSet& o) const { return PointSet(n_, mask_ | o.mask_); }
  PointSet intersect(const PointSet& o) const { return PointSet(n_, mask_ & o.mask_); }
  PointSet complement() const { return PointSet(n_, full(n_).mask_ & ~mask_); }
  PointSet minus(const PointSet& o) const { return PointSet(n_, mask_ & ~o.mask_); }
  PointSet with(int p) const {
    if (p < 0 || p >= n_) throw std::invalid_argument("PointSet: member index out of range");
    return PointSet(n_, mask_ | (1u << p));
  }
  PointSet without(int p) const { return PointSet(n_, mask_ & ~(1u << p)); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int p = 0; p < n_; ++p)
      if (contains(p)) out.push_back(p);
    return out;
  }

  bool operator==(const PointSet& o) const { return n_ == o.n_ && mask_ == o.mask_; }
  bool operator!=(const PointSet& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int p : indices()) {
      if (!first) s += ",";
      s += std::to_string(p);
      first = false;
    }
    return s + "}";
  }

private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

// Lexicographic order on the ascending index sequences; used wherever
// point-set families are written out or indexed (golden files, hyperpoint
// tables).
bool lex_less(const PointSet& a, const PointSet& b);

// Finite stand-in for the additivity class K: a subfamily is K-small when
// its cardinality is below the bound, and everything is K-small when the
// bound is absent.
struct KBound {
  std::optional<std::uint32_t> bound;

  static KBound unbounded() { return KBound{std::nullopt}; }
  static KBound of(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("KBound: bound must be at least 1");
    return KBound{k};
  }
  bool is_unbounded() const { return !bound.has_value(); }
  bool small(std::size_t cardinality) const {
    return !bound || cardinality < *bound;
  }
};

// Growable bit vector for index sets over spaces wider than 31 points
// (families of closed sets treated as point universes of their own).
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  BitVec& operator|=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  bool subset_of(const BitVec& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace settop

#endif  // SETTOP_POINT_SET_HPP
