#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace orpath {

namespace bits {

inline int word_count(int n) { return (n + 63) >> 6; }

inline bool test(std::span<const std::uint64_t> w, int i) {
  return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

inline void set(std::span<std::uint64_t> w, int i) {
  w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void reset(std::span<std::uint64_t> w, int i) {
  w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline int popcount(std::span<const std::uint64_t> w) {
  int c = 0;
  for (std::uint64_t x : w) c += std::popcount(x);
  return c;
}

// Visits set bits in ascending order. F returns void.
template <class F>
inline void for_each_set(std::span<const std::uint64_t> w, F f) {
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    std::uint64_t x = w[wi];
    while (x) {
      int b = std::countr_zero(x);
      f(static_cast<int>(wi * 64) + b);
      x &= x - 1;
    }
  }
}

// Visits bits of (a & b) ascending; F returns bool, false stops the scan.
template <class F>
inline bool for_each_common(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, F f) {
  for (std::size_t wi = 0; wi < a.size(); ++wi) {
    std::uint64_t x = a[wi] & b[wi];
    while (x) {
      int b0 = std::countr_zero(x);
      if (!f(static_cast<int>(wi * 64) + b0)) return false;
      x &= x - 1;
    }
  }
  return true;
}

// Smallest bit of (a & b & ~c), or -1.
inline int first_common_excluding(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                  std::span<const std::uint64_t> c) {
  for (std::size_t wi = 0; wi < a.size(); ++wi) {
    std::uint64_t x = a[wi] & b[wi] & ~c[wi];
    if (x) return static_cast<int>(wi * 64) + std::countr_zero(x);
  }
  return -1;
}

// Smallest bit of (a & ~c), or -1.
inline int first_excluding(std::span<const std::uint64_t> a, std::span<const std::uint64_t> c) {
  for (std::size_t wi = 0; wi < a.size(); ++wi) {
    std::uint64_t x = a[wi] & ~c[wi];
    if (x) return static_cast<int>(wi * 64) + std::countr_zero(x);
  }
  return -1;
}

}  // namespace bits

// Owning dynamic bitset sized for a fixed vertex count.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(bits::word_count(n), 0) {}

  int size() const { return n_; }
  bool test(int i) const { return bits::test(w_, i); }
  void set(int i) { bits::set(std::span<std::uint64_t>(w_), i); }
  void reset(int i) { bits::reset(std::span<std::uint64_t>(w_), i); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  int count() const { return bits::popcount(w_); }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }

  void set_all() {
    std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
    trim();
  }

  void assign_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] = a[i] & b[i];
  }

  void and_with(std::span<const std::uint64_t> a) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= a[i];
  }

  void and_not_with(std::span<const std::uint64_t> a) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~a[i];
  }

  void or_with(std::span<const std::uint64_t> a) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= a[i];
  }

  std::span<std::uint64_t> words() { return w_; }
  std::span<const std::uint64_t> words() const { return w_; }

  template <class F>
  void for_each_set(F f) const {
    bits::for_each_set(words(), f);
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace orpath
