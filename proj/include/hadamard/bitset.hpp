#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hadamard {

// Plain dynamic bitset tuned for the clique and decomposition searches.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return w_.size(); }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set_all() {
    for (auto& x : w_) x = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& x : w_) x = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !none(); }

  // first set bit at or after i, or size()
  std::size_t next(std::size_t i) const {
    if (i >= n_) return n_;
    std::size_t k = i >> 6;
    std::uint64_t x = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (x) return (k << 6) + std::countr_zero(x);
      if (++k >= w_.size()) return n_;
      x = w_[k];
    }
  }
  std::size_t first() const { return next(0); }

  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  std::size_t and_count(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::uint64_t* data() { return w_.data(); }
  const std::uint64_t* data() const { return w_.data(); }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace hadamard
