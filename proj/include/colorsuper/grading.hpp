#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "colorsuper/errors.hpp"

namespace colorsuper {

inline constexpr int kMaxGradingBits = 16;

/// Element of Z2^N, N <= 16. Component alpha_{i+1} lives in bit i.
/// Addition is componentwise mod 2, so every vector is its own inverse.
class GradeVec {
 public:
  GradeVec() = default;

  GradeVec(int n, std::uint16_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxGradingBits)
      throw DimensionError("grading length must be in [1,16], got " + std::to_string(n));
    bits_ &= mask();
  }

  static GradeVec zero(int n) { return GradeVec(n, 0); }

  /// Accepts "101" and "(1,0,1)".
  static GradeVec parse(const std::string& text) {
    std::string digits;
    digits.reserve(text.size());
    for (char c : text) {
      if (c == '0' || c == '1')
        digits.push_back(c);
      else if (c != '(' && c != ')' && c != ',' && c != ' ')
        throw SchemaError("not a grading vector: '" + text + "'");
    }
    if (digits.empty() || digits.size() > kMaxGradingBits)
      throw SchemaError("not a grading vector: '" + text + "'");
    std::uint16_t bits = 0;
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] == '1') bits |= std::uint16_t(1u << i);
    return GradeVec(int(digits.size()), bits);
  }

  int size() const { return n_; }
  std::uint16_t bits() const { return bits_; }
  int bit(int i) const { return (bits_ >> i) & 1; }

  GradeVec operator+(const GradeVec& o) const {
    check_same(o);
    return GradeVec(n_, std::uint16_t(bits_ ^ o.bits_));
  }

  bool operator==(const GradeVec& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const GradeVec& o) const { return !(*this == o); }
  bool operator<(const GradeVec& o) const {
    return n_ != o.n_ ? n_ < o.n_ : bits_ < o.bits_;
  }

  /// Tuple form "(1,0,1)".
  std::string to_string() const {
    std::string out = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) out += ',';
      out += char('0' + bit(i));
    }
    out += ')';
    return out;
  }

  /// Compact form "101" (used in JSON files).
  std::string to_bits() const {
    std::string out;
    for (int i = 0; i < n_; ++i) out += char('0' + bit(i));
    return out;
  }

  void check_same(const GradeVec& o) const {
    if (n_ != o.n_)
      throw DimensionError("grading length mismatch: " + std::to_string(n_) + " vs " +
                           std::to_string(o.n_));
  }

 private:
  std::uint16_t mask() const { return std::uint16_t((1u << n_) - 1u); }

  int n_ = 0;
  std::uint16_t bits_ = 0;
};

/// Inner product sum_i alpha_i beta_i, returned unreduced; its parity decides
/// commutator vs anticommutator.
inline int dot(const GradeVec& a, const GradeVec& b) {
  a.check_same(b);
  return std::popcount(std::uint32_t(a.bits() & b.bits()));
}

/// Number of non-zero entries.
inline int sigma(const GradeVec& a) { return std::popcount(std::uint32_t(a.bits())); }

/// sum_k det(alpha_k | beta_k) over the 2-component blocks; requires even N.
inline int symplectic(const GradeVec& a, const GradeVec& b) {
  a.check_same(b);
  if (a.size() % 2 != 0)
    throw PairingError("symplectic pairing needs even length, got " +
                       std::to_string(a.size()));
  int total = 0;
  for (int k = 0; k < a.size() / 2; ++k) {
    int a1 = a.bit(2 * k), a2 = a.bit(2 * k + 1);
    int b1 = b.bit(2 * k), b2 = b.bit(2 * k + 1);
    total += a1 * b2 - a2 * b1;
  }
  return total;
}

enum class Parity { Even, Odd };

/// Which bilinear pairing governs the bracket signs of an algebra.
/// A symplectic pairing carries the block count M when it was fixed up front;
/// half == 0 means "infer M from the vectors at use time".
class Pairing {
 public:
  enum class Kind { Dot, Symplectic };

  static Pairing dot_product() { return Pairing(Kind::Dot, 0); }
  static Pairing symplectic_sum() { return Pairing(Kind::Symplectic, 0); }
  static Pairing symplectic_sum(int m) {
    if (m < 1) throw PairingError("symplectic block count must be positive");
    return Pairing(Kind::Symplectic, m);
  }

  Kind kind() const { return kind_; }
  int half() const { return half_; }

  /// "dot" / "symplectic", the JSON spelling.
  std::string name() const { return kind_ == Kind::Dot ? "dot" : "symplectic"; }

  static Pairing from_name(const std::string& s) {
    if (s == "dot") return dot_product();
    if (s == "symplectic") return symplectic_sum();
    throw SchemaError("unknown pairing '" + s + "' (expected dot|symplectic)");
  }

  bool operator==(const Pairing& o) const { return kind_ == o.kind_; }

 private:
  Pairing(Kind k, int m) : kind_(k), half_(m) {}

  Kind kind_;
  int half_;
};

/// The unreduced pairing value; (-1)^value is the bracket sign.
inline int pairing_exponent(const Pairing& p, const GradeVec& a, const GradeVec& b) {
  if (p.kind() == Pairing::Kind::Dot) return dot(a, b);
  if (p.half() != 0 && a.size() != 2 * p.half())
    throw PairingError("pairing expects length " + std::to_string(2 * p.half()) +
                       ", got " + std::to_string(a.size()));
  return symplectic(a, b);
}

/// Even => the bracket is a commutator; Odd => an anticommutator.
inline Parity pairing_parity(const Pairing& p, const GradeVec& a, const GradeVec& b) {
  int e = pairing_exponent(p, a, b);
  return (e % 2 == 0) ? Parity::Even : Parity::Odd;
}

inline int pairing_sign(const Pairing& p, const GradeVec& a, const GradeVec& b) {
  return pairing_exponent(p, a, b) % 2 == 0 ? 1 : -1;
}

}  // namespace colorsuper
