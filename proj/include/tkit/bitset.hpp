#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace tkit {

/// Fixed-size bitset over 0-based positions. Sizes up to 64 live in a single
/// machine word; larger sizes spill into a heap-allocated word array.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size) {
    if (size_ > kWordBits) heap_.assign(word_count(), 0);
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t pos) const noexcept {
    return (word(pos / kWordBits) >> (pos % kWordBits)) & 1u;
  }
  void set(std::size_t pos) noexcept { word_ref(pos / kWordBits) |= Word{1} << (pos % kWordBits); }
  void reset(std::size_t pos) noexcept { word_ref(pos / kWordBits) &= ~(Word{1} << (pos % kWordBits)); }

  void set_all() noexcept {
    for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) = ~Word{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (std::size_t w = 0; w < word_count(); ++w) c += static_cast<std::size_t>(std::popcount(word(w)));
    return c;
  }

  bool none() const noexcept {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (word(w) != 0) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t w = 0; w < word_count(); ++w)
      if ((word(w) & other.word(w)) != 0) return true;
    return false;
  }

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t w = 0; w < word_count(); ++w)
      if ((word(w) & ~other.word(w)) != 0) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& other) noexcept {
    for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) &= other.word(w);
    return *this;
  }
  Bitset& operator|=(const Bitset& other) noexcept {
    for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) |= other.word(w);
    return *this;
  }
  /// Set difference.
  Bitset& operator-=(const Bitset& other) noexcept {
    for (std::size_t w = 0; w < word_count(); ++w) word_ref(w) &= ~other.word(w);
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a -= b; }

  Bitset operator~() const noexcept {
    Bitset r(*this);
    for (std::size_t w = 0; w < word_count(); ++w) r.word_ref(w) = ~word(w);
    r.trim();
    return r;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) noexcept {
    if (a.size_ != b.size_) return false;
    for (std::size_t w = 0; w < a.word_count(); ++w)
      if (a.word(w) != b.word(w)) return false;
    return true;
  }

  /// Calls `fn(pos)` for every set position in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < word_count(); ++w) {
      Word bits = word(w);
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  /// Lowest set position, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (word(w) != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word(w)));
    return size_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (std::size_t w = 0; w < word_count(); ++w)
      h ^= std::hash<Word>{}(word(w)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t word_count() const noexcept { return (size_ + kWordBits - 1) / kWordBits; }
  Word word(std::size_t w) const noexcept { return size_ <= kWordBits ? small_ : heap_[w]; }
  Word& word_ref(std::size_t w) noexcept { return size_ <= kWordBits ? small_ : heap_[w]; }

  void trim() noexcept {
    const std::size_t tail = size_ % kWordBits;
    if (size_ == 0) {
      small_ = 0;
    } else if (tail != 0) {
      word_ref(word_count() - 1) &= (Word{1} << tail) - 1;
    }
  }

  std::size_t size_ = 0;
  Word small_ = 0;
  std::vector<Word> heap_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace tkit
