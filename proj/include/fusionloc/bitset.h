#ifndef FUSIONLOC_BITSET_H_
#define FUSIONLOC_BITSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fusionloc {

// Fixed-size dynamic bitset used for element sets of an enumerated group.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }
  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend bool operator<(const Bitset& a, const Bitset& b) {
    return a.words_ < b.words_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<uint32_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }
  std::vector<uint32_t> to_vector() const {
    std::vector<uint32_t> r;
    for_each([&](uint32_t i) { r.push_back(i); });
    return r;
  }
  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace fusionloc

#endif  // FUSIONLOC_BITSET_H_
