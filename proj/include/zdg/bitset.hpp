#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zdg {

/// Fixed-width bitset sized at runtime. Neighborhood equality, intersection
/// tests and popcounts are word-wise; trailing bits past size() stay zero so
/// operator== can compare raw words.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const noexcept {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  Bitset operator&(const Bitset& other) const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & other.words_[k];
    return r;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  Bitset operator~() const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.clear_tail();
    return r;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t k = from >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return size_;
      w = words_[k];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = next(0); i < size_; i = next(i + 1)) fn(i);
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  void clear_tail() {
    if (std::size_t rem = size_ & 63; rem != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zdg
