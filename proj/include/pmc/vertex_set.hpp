#ifndef PMC_VERTEX_SET_HPP
#define PMC_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmc {

/// Zero-based vertex index. Files and the CLI use 1-based labels.
using Vertex = std::size_t;

/// Dense set of vertex indices with a fixed capacity.
///
/// Storage is inline (no allocation), which keeps set algebra cheap in the
/// inner loops of the enumerators. Iteration is in ascending index order.
class VertexSet {
 public:
  static constexpr std::size_t kMaxVertices = 256;

 private:
  static constexpr std::size_t kBits = 64;
  static constexpr std::size_t kWords = kMaxVertices / kBits;
  using Word = std::uint64_t;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    Vertex operator*() const { return current_; }
    const_iterator& operator++() {
      current_ = set_->next_after(current_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return current_ == other.current_; }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* set, Vertex current) : set_(set), current_(current) {}
    const VertexSet* set_ = nullptr;
    Vertex current_ = kMaxVertices;
  };

  VertexSet() = default;

  explicit VertexSet(std::size_t capacity) : capacity_(capacity) {
    if (capacity > kMaxVertices) {
      throw std::length_error("VertexSet capacity " + std::to_string(capacity) +
                              " exceeds the supported maximum of " + std::to_string(kMaxVertices));
    }
  }

  VertexSet(std::size_t capacity, std::initializer_list<Vertex> members) : VertexSet(capacity) {
    for (Vertex v : members) insert(v);
  }

  /// The set {0, ..., capacity-1}.
  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * kBits;
      if (lo >= capacity) break;
      const std::size_t hi = capacity - lo;
      s.words_[w] = hi >= kBits ? ~Word{0} : ((Word{1} << hi) - 1);
    }
    return s;
  }

  /// The set {0, ..., count-1} with the given capacity.
  static VertexSet below(std::size_t capacity, std::size_t count) {
    VertexSet s = full(count);
    s.capacity_ = capacity;
    return s;
  }

  std::size_t capacity() const { return capacity_; }

  bool contains(Vertex v) const { return v < kMaxVertices && (words_[v / kBits] >> (v % kBits)) & 1U; }

  void insert(Vertex v) {
    check(v);
    words_[v / kBits] |= Word{1} << (v % kBits);
  }

  void erase(Vertex v) {
    if (v < kMaxVertices) words_[v / kBits] &= ~(Word{1} << (v % kBits));
  }

  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }

  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member; capacity-independent sentinel kMaxVertices when empty.
  Vertex first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * kBits + static_cast<Vertex>(std::countr_zero(words_[w]));
    return kMaxVertices;
  }

  /// Smallest member strictly greater than v, or kMaxVertices.
  Vertex next_after(Vertex v) const {
    Vertex start = v + 1;
    if (start >= kMaxVertices) return kMaxVertices;
    std::size_t w = start / kBits;
    Word word = words_[w] & (~Word{0} << (start % kBits));
    while (true) {
      if (word != 0) return w * kBits + static_cast<Vertex>(std::countr_zero(word));
      if (++w == kWords) return kMaxVertices;
      word = words_[w];
    }
  }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, kMaxVertices}; }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Equality ignores capacity; two sets are equal when their members are.
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.words_ == b.words_; }

  /// Lexicographic order of the ascending member sequences, so {1,2} < {1,2,3} < {1,3}.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    VertexSet diff(kMaxVertices);
    for (std::size_t w = 0; w < kWords; ++w) diff.words_[w] = a.words_[w] ^ b.words_[w];
    const Vertex x = diff.first();
    if (x == kMaxVertices) return std::strong_ordering::equal;
    // Both sequences share every member below x; the one holding x continues with x,
    // the other continues with something larger or stops.
    const VertexSet& holder = a.contains(x) ? a : b;
    const VertexSet& other = a.contains(x) ? b : a;
    const bool holder_first = other.next_after(x) != kMaxVertices;
    const bool a_first = (&holder == &a) == holder_first;
    return a_first ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Word w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  void check(Vertex v) const {
    if (v >= capacity_) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside set capacity " +
                              std::to_string(capacity_));
    }
  }

  std::array<Word, kWords> words_{};
  std::size_t capacity_ = kMaxVertices;
};

/// Space-separated 1-based labels, e.g. "1 2 3".
inline std::string to_label_string(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  return os << '{' << to_label_string(s) << '}';
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace pmc

template <>
struct std::hash<pmc::VertexSet> {
  std::size_t operator()(const pmc::VertexSet& s) const { return s.hash(); }
};

#endif  // PMC_VERTEX_SET_HPP
