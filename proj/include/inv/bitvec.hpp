#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace inv {

// Bit vector over F_2 with a fixed length. Doubles as a subset mask of
// {0, ..., size()-1}. Unused tail bits of the last word stay zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), w_(words_for(len), 0) {}

  // "101" -> bit 0 = 1, bit 1 = 0, bit 2 = 1
  static BitVec from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        v.set(i);
      else if (bits[i] != '0')
        throw std::invalid_argument("BitVec::from_string: character not in {0,1}");
    }
    return v;
  }

  static BitVec of(std::size_t len, std::initializer_list<int> ones) {
    BitVec v(len);
    for (int i : ones) v.set(static_cast<std::size_t>(i));
    return v;
  }

  std::size_t size() const { return len_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool b = true) {
    if (i >= len_) throw std::out_of_range("BitVec::set: index out of range");
    if (b)
      w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  BitVec& operator^=(const BitVec& o) {
    check_len(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    check_len(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    check_len(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  bool intersects(const BitVec& o) const {
    check_len(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const BitVec&) const = default;

  // Integer-style comparison (bit i has weight 2^i).
  static bool value_less(const BitVec& a, const BitVec& b) {
    if (a.len_ != b.len_) throw std::invalid_argument("BitVec::value_less: length mismatch");
    for (std::size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

  std::uint64_t word(std::size_t i) const { return w_[i]; }
  std::size_t word_count() const { return w_.size(); }

 private:
  static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
  void check_len(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec: length mismatch");
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

// Scalar product over F_2 (parity of the intersection size).
inline int dot(const BitVec& u, const BitVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < u.word_count(); ++i) acc ^= u.word(i) & v.word(i);
  return std::popcount(acc) & 1;
}

// Self-dot 1 for every vector, pairwise dot 0.
inline bool is_orthonormal(std::span<const BitVec> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (dot(vs[i], vs[i]) != 1) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (dot(vs[i], vs[j]) != 0) return false;
  }
  return true;
}

}  // namespace inv
