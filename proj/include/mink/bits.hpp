#ifndef MINK_BITS_HPP
#define MINK_BITS_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mink {

// Fixed-universe bitset for vertex-index sets. Face lattice construction
// lives on intersections and subset tests, so these are word operations.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  static IndexSet of(int universe, std::initializer_list<int> items) {
    IndexSet s(universe);
    for (int i : items) s.set(i);
    return s;
  }
  static IndexSet of(int universe, const std::vector<int>& items) {
    IndexSet s(universe);
    for (int i : items) s.set(i);
    return s;
  }

  int universe() const { return n_; }
  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  bool subset_of(const IndexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  IndexSet operator&(const IndexSet& o) const {
    IndexSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  bool operator==(const IndexSet& o) const { return w_ == o.w_; }
  bool operator<(const IndexSet& o) const { return w_ < o.w_; }

  std::vector<int> to_list() const {
    std::vector<int> r;
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = std::countr_zero(w);
        r.push_back(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
    return r;
  }

  size_t hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t w : w_) h = (h ^ w) * 0x2545f4914f6cdd1dull;
    return h;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct IndexSetHash {
  size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace mink

#endif
