#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "stabgem/kernels.hpp"

namespace stabgem {

/* Dense bit vector over uint64_t words.  Bits past size() are kept zero as a
 * class invariant so whole-word kernels never see tail garbage. */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t nwords() const { return w_.size(); }
  const kern::word* data() const { return w_.data(); }
  kern::word* data() { return w_.data(); }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < nbits_);
    w_[i >> 6] |= kern::word(1) << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < nbits_);
    w_[i >> 6] &= ~(kern::word(1) << (i & 63));
  }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
  void toggle(std::size_t i) {
    assert(i < nbits_);
    w_[i >> 6] ^= kern::word(1) << (i & 63);
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  void operator^=(const BitVec& o) {
    assert(o.nbits_ == nbits_);
    kern::active().xor_into(w_.data(), o.w_.data(), w_.size());
  }
  void operator&=(const BitVec& o) {
    assert(o.nbits_ == nbits_);
    for (std::size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
  }
  void operator|=(const BitVec& o) {
    assert(o.nbits_ == nbits_);
    for (std::size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
  }

  std::uint64_t count() const { return kern::active().popcount(w_.data(), w_.size()); }
  std::uint64_t and_count(const BitVec& o) const {
    assert(o.nbits_ == nbits_);
    return kern::active().and_popcount(w_.data(), o.w_.data(), w_.size());
  }
  std::uint64_t or_count(const BitVec& o) const {
    assert(o.nbits_ == nbits_);
    return kern::active().or_popcount(w_.data(), o.w_.data(), w_.size());
  }
  // parity of |this AND o|; the symplectic form reduces to two of these
  bool and_parity(const BitVec& o) const { return and_count(o) & 1; }

  bool none() const { return kern::active().is_zero(w_.data(), w_.size()); }
  bool any() const { return !none(); }
  bool intersects(const BitVec& o) const {
    assert(o.nbits_ == nbits_);
    return kern::active().and_any(w_.data(), o.w_.data(), w_.size());
  }
  bool is_subset_of(const BitVec& mask) const {
    assert(mask.nbits_ == nbits_);
    return !kern::active().andnot_any(w_.data(), mask.w_.data(), w_.size());
  }
  bool operator==(const BitVec& o) const {
    return nbits_ == o.nbits_ && kern::active().equal(w_.data(), o.w_.data(), w_.size());
  }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  // Index of first set bit, or size() when empty.
  std::size_t find_first() const {
    for (std::size_t i = 0; i < w_.size(); i++)
      if (w_[i]) return (i << 6) + (std::size_t)__builtin_ctzll(w_[i]);
    return nbits_;
  }

  std::vector<std::uint32_t> ones() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < w_.size(); i++) {
      kern::word w = w_[i];
      while (w) {
        out.push_back((std::uint32_t)((i << 6) + (std::size_t)__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  static BitVec from_and(const BitVec& a, const BitVec& b) {
    assert(a.nbits_ == b.nbits_);
    BitVec r(a.nbits_);
    for (std::size_t i = 0; i < r.w_.size(); i++) r.w_[i] = a.w_[i] & b.w_[i];
    return r;
  }
  static BitVec from_or(const BitVec& a, const BitVec& b) {
    assert(a.nbits_ == b.nbits_);
    BitVec r(a.nbits_);
    for (std::size_t i = 0; i < r.w_.size(); i++) r.w_[i] = a.w_[i] | b.w_[i];
    return r;
  }
  static BitVec from_andnot(const BitVec& a, const BitVec& b) {  // a & ~b
    assert(a.nbits_ == b.nbits_);
    BitVec r(a.nbits_);
    for (std::size_t i = 0; i < r.w_.size(); i++) r.w_[i] = a.w_[i] & ~b.w_[i];
    return r;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<kern::word> w_;
};

}  // namespace stabgem
