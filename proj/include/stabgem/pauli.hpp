#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "stabgem/bitvec.hpp"

namespace stabgem {

/* Signed Pauli word on n qubits, stored as  i^k * X^x * Z^z  with x, z packed
 * bit vectors and k the phase exponent mod 4.  In this layout multiplication
 * is two XORs plus one AND-popcount parity:
 *
 *   (i^a X^x Z^z)(i^b X^u Z^v) = i^(a+b) (-1)^(z.u) X^(x^u) Z^(z^v)
 *
 * A site with x=z=1 prints as Y; the printed prefix absorbs the i per Y since
 * Y = i X Z. */
class Pauli {
 public:
  Pauli() = default;
  explicit Pauli(std::size_t n) : x_(n), z_(n), k_(0) {}

  static Pauli identity(std::size_t n) { return Pauli(n); }
  // Single-site letter c in {'I','X','Y','Z'} at qubit q, +1 sign.
  static Pauli single(std::size_t n, std::size_t q, char c);

  std::size_t n() const { return x_.size(); }
  const BitVec& xbits() const { return x_; }
  const BitVec& zbits() const { return z_; }
  BitVec& xbits() { return x_; }
  BitVec& zbits() { return z_; }
  std::uint8_t phase_exp() const { return k_; }
  void set_phase_exp(std::uint8_t k) { k_ = k & 3; }
  std::complex<double> phase() const {
    static const std::complex<double> tab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return tab[k_];
  }

  // Letter at qubit q as 0=I,1=X,2=Z,3=Y (x + 2z encoding).
  int letter_code(std::size_t q) const { return (x_.test(q) ? 1 : 0) + (z_.test(q) ? 2 : 0); }
  char letter(std::size_t q) const { return "IXZY"[letter_code(q)]; }
  // Sets the letter, keeping the convention that assigning Y contributes the
  // i from Y = iXZ to the stored exponent so the printed sign is unchanged.
  void set_letter(std::size_t q, char c);

  Pauli operator*(const Pauli& o) const;
  Pauli dagger() const;
  bool commutes(const Pauli& o) const {
    return !(x_.and_parity(o.z_) ^ z_.and_parity(o.x_));
  }
  bool anticommutes(const Pauli& o) const { return !commutes(o); }

  std::uint64_t weight() const { return x_.or_count(z_); }
  BitVec support_mask() const { return BitVec::from_or(x_, z_); }
  std::vector<std::uint32_t> support() const { return support_mask().ones(); }
  bool is_identity_word() const { return x_.none() && z_.none(); }
  bool is_identity() const { return is_identity_word() && k_ == 0; }

  // Hermitian iff the printed prefix is +1 or -1.
  bool is_hermitian() const { return ((k_ - (x_.and_count(z_) & 3)) & 1) == 0; }
  // Printed prefix exponent: operator = i^prefix_exp * (tensor of letters).
  int prefix_exp() const { return (int)((k_ - x_.and_count(z_)) & 3); }
  // For Hermitian words: +1 or -1.
  int sign() const;

  // Keeps letters on masked qubits, drops the rest; phase reset so the result
  // is the plain letter word with + prefix (restrictions are compared and
  // commuted as unsigned local content).
  Pauli restricted_to(const BitVec& mask) const;

  bool same_word(const Pauli& o) const { return x_ == o.x_ && z_ == o.z_; }
  bool operator==(const Pauli& o) const { return same_word(o) && k_ == o.k_; }
  bool operator!=(const Pauli& o) const { return !(*this == o); }

  // "+XIZY" style round-trip form; prefix in {+, -, +i, -i} (omitted + allowed
  // on parse).
  std::string str() const;
  static Pauli parse(const std::string& s);
  // Letters only plus an explicit ±1 sign; rejects non-Hermitian input.
  static Pauli from_letters(const std::string& letters, int sign);

 private:
  BitVec x_, z_;
  std::uint8_t k_ = 0;
};

}  // namespace stabgem
