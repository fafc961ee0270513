#include "stabgem/pauli.hpp"

#include "stabgem/errors.hpp"

namespace stabgem {

Pauli Pauli::single(std::size_t n, std::size_t q, char c) {
  Pauli p(n);
  p.set_letter(q, c);
  return p;
}

void Pauli::set_letter(std::size_t q, char c) {
  // Remove the old letter's Y contribution, then add the new one.
  if (x_.test(q) && z_.test(q)) k_ = (k_ + 3) & 3;
  switch (c) {
    case 'I': x_.reset(q); z_.reset(q); break;
    case 'X': x_.set(q); z_.reset(q); break;
    case 'Z': x_.reset(q); z_.set(q); break;
    case 'Y': x_.set(q); z_.set(q); k_ = (k_ + 1) & 3; break;
    default: throw InputError(std::string("invalid Pauli letter '") + c + "'");
  }
}

Pauli Pauli::operator*(const Pauli& o) const {
  if (o.n() != n()) throw InputError("Pauli size mismatch in multiply");
  Pauli r(n());
  // (-1)^(z . u) from moving Z^z across X^u.
  std::uint8_t swap2 = (std::uint8_t)((z_.and_count(o.x_) & 1) << 1);
  r.x_ = x_;
  r.x_ ^= o.x_;
  r.z_ = z_;
  r.z_ ^= o.z_;
  r.k_ = (std::uint8_t)((k_ + o.k_ + swap2) & 3);
  return r;
}

Pauli Pauli::dagger() const {
  // (i^k X^x Z^z)^† = (-i)^k Z^z X^x = i^(-k) (-1)^(x.z) X^x Z^z
  Pauli r = *this;
  std::uint8_t yflip = (std::uint8_t)((x_.and_count(z_) & 1) << 1);
  r.k_ = (std::uint8_t)(((4 - k_) + yflip) & 3);
  return r;
}

int Pauli::sign() const {
  int e = prefix_exp();
  if (e == 0) return +1;
  if (e == 2) return -1;
  throw InputError("sign() on non-Hermitian Pauli " + str());
}

Pauli Pauli::restricted_to(const BitVec& mask) const {
  Pauli r(n());
  r.x_ = BitVec::from_and(x_, mask);
  r.z_ = BitVec::from_and(z_, mask);
  // plain letter word: prefix +1 means stored exponent = (#Y mod 4)
  r.k_ = (std::uint8_t)(r.x_.and_count(r.z_) & 3);
  return r;
}

std::string Pauli::str() const {
  static const char* pre[4] = {"+", "+i", "-", "-i"};
  std::string s = pre[prefix_exp()];
  s.reserve(s.size() + n());
  for (std::size_t q = 0; q < n(); q++) s += letter(q);
  return s;
}

Pauli Pauli::parse(const std::string& s) {
  std::size_t i = 0;
  int pref = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    bool neg = s[i] == '-';
    i++;
    if (i < s.size() && s[i] == 'i') {
      pref = neg ? 3 : 1;
      i++;
    } else {
      pref = neg ? 2 : 0;
    }
  }
  if (i >= s.size()) throw InputError("empty Pauli string");
  Pauli p(s.size() - i);
  std::size_t q = 0;
  for (; i < s.size(); i++, q++) {
    char c = s[i];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw InputError(std::string("invalid Pauli letter '") + c + "' in \"" + s + "\"");
    p.set_letter(q, c);
  }
  p.k_ = (std::uint8_t)((p.k_ + pref) & 3);
  return p;
}

Pauli Pauli::from_letters(const std::string& letters, int sign) {
  if (sign != 1 && sign != -1) throw InputError("generator sign must be +1 or -1");
  Pauli p = parse(letters);
  if (p.prefix_exp() != 0) throw InputError("unexpected phase prefix in letters \"" + letters + "\"");
  if (sign == -1) p.k_ = (std::uint8_t)((p.k_ + 2) & 3);
  return p;
}

}  // namespace stabgem
