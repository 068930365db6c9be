#pragma once

// Flat 64-bit-word bitset sized at construction. Covers exactly what the
// adjacency rows and subset scans need: AND / ANDNOT accumulation, popcount,
// first-set-bit queries and cyclic rotation for building circulant rows.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ecgraph {

class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), w_((nbits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return w_.size(); }
  const std::vector<Word>& words() const { return w_; }

  void set(std::size_t i) { w_[i / kWordBits] |= Word(1) << (i % kWordBits); }
  void reset(std::size_t i) { w_[i / kWordBits] &= ~(Word(1) << (i % kWordBits)); }
  bool test(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1; }

  void set_all() {
    for (Word& w : w_) w = ~Word(0);
    trim_tail();
  }
  void reset_all() {
    for (Word& w : w_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (Word w : w_)
      if (w) return true;
    return false;
  }

  void and_with(const Bitset& o) {
    for (std::size_t j = 0; j < w_.size(); ++j) w_[j] &= o.w_[j];
  }
  void andnot_with(const Bitset& o) {
    for (std::size_t j = 0; j < w_.size(); ++j) w_[j] &= ~o.w_[j];
  }

  // Index of the lowest set bit, or -1 when empty.
  std::ptrdiff_t find_first() const { return find_first_from(0); }

  // Index of the lowest set bit at position >= from, or -1.
  std::ptrdiff_t find_first_from(std::size_t from) const {
    if (from >= nbits_) return -1;
    std::size_t wi = from / kWordBits;
    Word w = w_[wi] & (~Word(0) << (from % kWordBits));
    while (true) {
      if (w) return static_cast<std::ptrdiff_t>(wi * kWordBits + std::countr_zero(w));
      if (++wi == w_.size()) return -1;
      w = w_[wi];
    }
  }

  // Cyclic rotation: bit i of the source lands at bit (i + k) mod size().
  Bitset rotated(std::size_t k) const {
    Bitset out(nbits_);
    if (nbits_ == 0) return out;
    k %= nbits_;
    const std::size_t nw = w_.size();
    // Shift everything up by k into a double-width scratch, then fold the
    // part at offsets >= nbits_ back onto the low end.
    std::vector<Word> scratch(2 * nw + 1, 0);
    const std::size_t wk = k / kWordBits, ok = k % kWordBits;
    for (std::size_t j = 0; j < nw; ++j) {
      Word v = w_[j];
      if (!v) continue;
      scratch[j + wk] |= ok ? (v << ok) : v;
      if (ok) scratch[j + wk + 1] |= v >> (kWordBits - ok);
    }
    const std::size_t wn = nbits_ / kWordBits, on = nbits_ % kWordBits;
    for (std::size_t j = 0; j < nw; ++j) {
      Word hi;
      const std::size_t base = wn + j;
      if (on) {
        Word lo_part = scratch[base] >> on;
        Word hi_part = base + 1 < scratch.size() ? scratch[base + 1] << (kWordBits - on) : 0;
        hi = lo_part | hi_part;
      } else {
        hi = scratch[base];
      }
      out.w_[j] = scratch[j] | hi;
    }
    out.trim_tail();
    return out;
  }

  bool operator==(const Bitset&) const = default;

 private:
  void trim_tail() {
    const std::size_t on = nbits_ % kWordBits;
    if (on && !w_.empty()) w_.back() &= ~Word(0) >> (kWordBits - on);
  }

  std::size_t nbits_ = 0;
  std::vector<Word> w_;
};

}  // namespace ecgraph
