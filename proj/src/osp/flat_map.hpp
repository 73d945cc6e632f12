#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace osp::detail {

// Open-addressing hash map from packed u64 keys to int64 counts, sized for
// the spin-weight accumulation loops. Key 0 is reserved as the empty slot;
// packed coordinates are biased so 0 never occurs.
class FlatCounter {
 public:
  explicit FlatCounter(size_t expected = 1024) { rehash(round_up(expected * 2)); }

  void add(uint64_t key, long long delta) { slot(key) += delta; }
  long long get(uint64_t key) const {
    size_t m = mask_;
    size_t i = mix(key) & m;
    while (keys_[i] != 0) {
      if (keys_[i] == key) return vals_[i];
      i = (i + 1) & m;
    }
    return 0;
  }
  long long* find(uint64_t key) {
    size_t m = mask_;
    size_t i = mix(key) & m;
    while (keys_[i] != 0) {
      if (keys_[i] == key) return &vals_[i];
      i = (i + 1) & m;
    }
    return nullptr;
  }
  size_t size() const { return size_; }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i <= mask_; ++i)
      if (keys_[i] != 0) f(keys_[i], vals_[i]);
  }

 private:
  long long& slot(uint64_t key) {
    if (key == 0) throw std::logic_error("FlatCounter: zero key");
    if ((size_ + 1) * 10 >= (mask_ + 1) * 7) rehash((mask_ + 1) * 2);
    size_t m = mask_;
    size_t i = mix(key) & m;
    while (keys_[i] != 0 && keys_[i] != key) i = (i + 1) & m;
    if (keys_[i] == 0) {
      keys_[i] = key;
      vals_[i] = 0;
      ++size_;
    }
    return vals_[i];
  }

  static size_t round_up(size_t n) {
    size_t c = 64;
    while (c < n) c <<= 1;
    return c;
  }
  static uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }
  void rehash(size_t cap) {
    std::vector<uint64_t> ok(std::move(keys_));
    std::vector<long long> ov(std::move(vals_));
    keys_.assign(cap, 0);
    vals_.assign(cap, 0);
    mask_ = cap - 1;
    size_ = 0;
    for (size_t i = 0; i < ok.size(); ++i)
      if (ok[i] != 0) {
        size_t j = mix(ok[i]) & mask_;
        while (keys_[j] != 0) j = (j + 1) & mask_;
        keys_[j] = ok[i];
        vals_[j] = ov[i];
        ++size_;
      }
  }

  std::vector<uint64_t> keys_;
  std::vector<long long> vals_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

// Packs up to 8 small signed coordinates into a u64; coordinates must stay in
// [-120, 120] so the biased bytes are never 0.
inline uint64_t pack_coords(const int* v, int n) {
  uint64_t key = 0;
  for (int i = 0; i < n; ++i) {
    int x = v[i];
    if (x < -120 || x > 120) throw std::overflow_error("packed coordinate out of range");
    key |= (uint64_t)(uint8_t)(x + 128) << (8 * i);
  }
  for (int i = n; i < 8; ++i) key |= (uint64_t)128 << (8 * i);
  return key;
}

inline void unpack_coords(uint64_t key, int* v, int n) {
  for (int i = 0; i < n; ++i) v[i] = (int)((key >> (8 * i)) & 0xff) - 128;
}

}  // namespace osp::detail
