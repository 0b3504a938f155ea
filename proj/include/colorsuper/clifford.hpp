#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "colorsuper/grading.hpp"
#include "colorsuper/report.hpp"

namespace colorsuper {

/// Metric signature of Cl(p,q): generators 1..p square to +1,
/// generators p+1..p+q square to -1.
struct Signature {
  int p = 0;
  int q = 0;

  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxGradingBits)
      throw DimensionError("signature (" + std::to_string(p) + "," + std::to_string(q) +
                           ") out of range");
  }

  int n() const { return p + q; }

  /// +1 or -1 for the square of generator index i (1-based).
  int eta(int i) const { return i <= p ? 1 : -1; }
};

/// Signed basis monomial of Cl(p,q): product of distinct generators in
/// ascending index order. Generator i occupies mask bit i-1, so the mask
/// bijects with a GradeVec of the same length.
struct Blade {
  std::uint16_t mask = 0;
  int sign = 1;

  bool operator==(const Blade& o) const { return mask == o.mask && sign == o.sign; }
};

/// gamma_alpha: the blade whose generators are the support of alpha.
inline Blade gamma_of_grade(const GradeVec& a) { return Blade{a.bits(), 1}; }

/// Exact inverse of gamma_of_grade (the sign is dropped).
inline GradeVec grade_of_blade(const Blade& b, int n) { return GradeVec(n, b.mask); }

/// gamma_a * gamma_b. The result mask is the XOR of the masks; the sign
/// collects one factor -1 per anticommutation needed to merge the two
/// ascending words and one eta_ii per repeated generator.
inline Blade blade_mul(const Blade& a, const Blade& b, const Signature& sig) {
  const std::uint16_t limit = std::uint16_t((1u << sig.n()) - 1u);
  if ((a.mask | b.mask) & ~limit)
    throw DimensionError("blade does not fit in Cl(" + std::to_string(sig.p) + "," +
                         std::to_string(sig.q) + ")");
  int swaps = 0;
  std::uint16_t rest = b.mask;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= std::uint16_t(rest - 1);
    swaps += std::popcount(std::uint32_t(a.mask >> (j + 1)));
  }
  std::uint16_t common = a.mask & b.mask;
  int neg = 0;
  if (sig.q > 0) {
    std::uint16_t negmask = std::uint16_t(((1u << sig.q) - 1u) << sig.p);
    neg = std::popcount(std::uint32_t(common & negmask));
  }
  int sign = a.sign * b.sign;
  if ((swaps + neg) % 2 != 0) sign = -sign;
  return Blade{std::uint16_t(a.mask ^ b.mask), sign};
}

/// The sign kappa(a,b) with gamma_a gamma_b = kappa * gamma_{a+b}.
inline int kappa(const GradeVec& a, const GradeVec& b, const Signature& sig) {
  return blade_mul(gamma_of_grade(a), gamma_of_grade(b), sig).sign;
}

/// "+g1g2", "-g3", "+1".
inline std::string blade_to_string(const Blade& b) {
  std::string out = b.sign >= 0 ? "+" : "-";
  if (b.mask == 0) return out + "1";
  for (int i = 0; i < kMaxGradingBits; ++i)
    if ((b.mask >> i) & 1) out += "g" + std::to_string(i + 1);
  return out;
}

/// Blade label without the sign, used as a basis label: "1", "g1", "g1g2".
inline std::string blade_label(std::uint16_t mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int i = 0; i < kMaxGradingBits; ++i)
    if ((mask >> i) & 1) out += "g" + std::to_string(i + 1);
  return out;
}

/// Sweeps every ordered blade pair of Cl(p,q) and verifies
///   gamma_a gamma_b = (-1)^{a.b + sigma(a)sigma(b)} gamma_b gamma_a.
inline Report check_sign_law(const Signature& sig) {
  Report report;
  report.check = "clifford-sign-law";
  const int n = sig.n();
  const std::uint32_t count = 1u << n;
  for (std::uint32_t ma = 0; ma < count; ++ma) {
    GradeVec a(n, std::uint16_t(ma));
    for (std::uint32_t mb = 0; mb < count; ++mb) {
      GradeVec b(n, std::uint16_t(mb));
      ++report.checked;
      int lhs = kappa(a, b, sig);
      int expected = kappa(b, a, sig);
      if ((dot(a, b) + sigma(a) * sigma(b)) % 2 != 0) expected = -expected;
      if (lhs != expected) {
        report.add(blade_label(std::uint16_t(ma)) + " * " + blade_label(std::uint16_t(mb)),
                   "sign " + std::to_string(expected), "sign " + std::to_string(lhs));
      }
    }
  }
  return report;
}

}  // namespace colorsuper
