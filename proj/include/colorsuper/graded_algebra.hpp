#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "colorsuper/clifford.hpp"
#include "colorsuper/grading.hpp"
#include "colorsuper/rational.hpp"
#include "colorsuper/report.hpp"

namespace colorsuper {

struct BasisElement {
  std::string label;
  GradeVec grade;
};

/// One summand of a structure-constant row: coeff * e_target.
struct Term {
  std::int32_t target;
  Scalar coeff;
};

/// Sparse element of a finite-dimensional graded algebra; zero coefficients
/// are never stored.
class Element {
 public:
  Element() = default;

  void add(int index, const Scalar& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(index);
    if (it == terms_.end()) {
      terms_.emplace(index, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  bool zero() const { return terms_.empty(); }
  const std::map<int, Scalar>& terms() const { return terms_; }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }

 private:
  std::map<int, Scalar> terms_;
};

/// Finite-dimensional Z2^N color (super)algebra: a graded basis plus the
/// structure-constant table of the bracket. Absent table entries are zero.
///
/// The table can be filled with closure checking (set_bracket) or raw
/// (force_bracket, used by file loading and fault-injection tests); the
/// auditors below re-check everything either way.
class ColorAlgebra {
 public:
  ColorAlgebra(std::string name, int grading_bits, Pairing pairing,
               std::vector<BasisElement> basis)
      : name_(std::move(name)),
        grading_bits_(grading_bits),
        pairing_(pairing),
        basis_(std::move(basis)) {
    if (grading_bits_ < 1 || grading_bits_ > kMaxGradingBits)
      throw DimensionError("grading_bits out of range: " + std::to_string(grading_bits_));
    if (pairing_.kind() == Pairing::Kind::Symplectic) {
      if (grading_bits_ % 2 != 0)
        throw PairingError("symplectic pairing needs even grading_bits, got " +
                           std::to_string(grading_bits_));
      if (pairing_.half() != 0 && grading_bits_ != 2 * pairing_.half())
        throw PairingError("pairing block count does not match grading_bits");
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].grade.size() != grading_bits_)
        throw DimensionError("basis element '" + basis_[i].label +
                             "' has grade of wrong length");
      auto [it, fresh] = index_.emplace(basis_[i].label, int(i));
      if (!fresh) throw SchemaError("duplicate basis label '" + basis_[i].label + "'");
    }
    table_.resize(basis_.size() * basis_.size());
  }

  const std::string& name() const { return name_; }
  int grading_bits() const { return grading_bits_; }
  const Pairing& pairing() const { return pairing_; }
  int dim() const { return int(basis_.size()); }
  const BasisElement& basis(int i) const { return basis_.at(std::size_t(i)); }
  const std::vector<BasisElement>& basis() const { return basis_; }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw UnknownNameError("no basis element '" + label + "' in algebra " + name_);
    return it->second;
  }

  bool has_label(const std::string& label) const { return index_.count(label) != 0; }

  /// Installs one bracket row, checking grading closure.
  void set_bracket(int i, int j, std::vector<Term> terms) {
    GradeVec expected = basis(i).grade + basis(j).grade;
    for (const Term& t : terms) {
      check_index(t.target);
      if (basis(t.target).grade != expected)
        throw SchemaError("bracket [[" + basis(i).label + ", " + basis(j).label +
                          "]] hits '" + basis(t.target).label + "' of grade " +
                          basis(t.target).grade.to_string() + ", expected " +
                          expected.to_string());
    }
    force_bracket(i, j, std::move(terms));
  }

  /// Installs one bracket row with no validation beyond index range.
  void force_bracket(int i, int j, std::vector<Term> terms) {
    check_index(i);
    check_index(j);
    for (const Term& t : terms) check_index(t.target);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.target < b.target; });
    std::vector<Term> merged;
    for (Term& t : terms) {
      if (!merged.empty() && merged.back().target == t.target)
        merged.back().coeff += t.coeff;
      else
        merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return is_zero(t.coeff); }),
                 merged.end());
    table_[std::size_t(i) * basis_.size() + std::size_t(j)] = std::move(merged);
  }

  const std::vector<Term>& row(int i, int j) const {
    check_index(i);
    check_index(j);
    return table_[std::size_t(i) * basis_.size() + std::size_t(j)];
  }

  int pairing_exponent_of(int i, int j) const {
    return pairing_exponent(pairing_, basis(i).grade, basis(j).grade);
  }

  Element bracket_basis(int i, int j) const {
    Element out;
    for (const Term& t : row(i, j)) out.add(t.target, t.coeff);
    return out;
  }

  /// Bilinear extension of the table to sparse elements.
  Element bracket(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, ci] : x.terms()) {
      if (i < 0 || i >= dim())
        throw ElementError("element index " + std::to_string(i) + " out of range");
      for (const auto& [j, cj] : y.terms()) {
        if (j < 0 || j >= dim())
          throw ElementError("element index " + std::to_string(j) + " out of range");
        for (const Term& t : row(i, j)) out.add(t.target, ci * cj * t.coeff);
      }
    }
    return out;
  }

  std::string element_to_string(const Element& e) const {
    if (e.zero()) return "0";
    std::string out;
    for (const auto& [i, c] : e.terms()) {
      if (!out.empty()) out += " + ";
      out += scalar_to_string(c) + "*" + basis(i).label;
    }
    return out;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= dim())
      throw ElementError("basis index " + std::to_string(i) + " out of range in " + name_);
  }

  std::string name_;
  int grading_bits_;
  Pairing pairing_;
  std::vector<BasisElement> basis_;
  std::map<std::string, int> index_;
  std::vector<std::vector<Term>> table_;
};

// ---------------------------------------------------------------------------
// Auditors. Each one sweeps the whole table and reports counterexamples with
// full data; they never stop at the first hit.
// ---------------------------------------------------------------------------

/// Definition item 1: [[g_a, g_b]] lies in g_{a+b}.
inline Report check_closure(const ColorAlgebra& A) {
  Report report;
  report.check = "closure";
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      ++report.checked;
      GradeVec expected = A.basis(i).grade + A.basis(j).grade;
      for (const Term& t : A.row(i, j)) {
        if (A.basis(t.target).grade != expected) {
          report.add("[[" + A.basis(i).label + ", " + A.basis(j).label + "]]",
                     "grade " + expected.to_string(),
                     "term " + A.basis(t.target).label + " has grade " +
                         A.basis(t.target).grade.to_string());
        }
      }
    }
  }
  return report;
}

/// Definition item 2: [[x,y]] + (-1)^{<x,y>} [[y,x]] = 0.
inline Report check_antisymmetry(const ColorAlgebra& A) {
  Report report;
  report.check = "antisymmetry";
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      ++report.checked;
      int sign = A.pairing_exponent_of(i, j) % 2 == 0 ? 1 : -1;
      Element residual = A.bracket_basis(i, j);
      for (const Term& t : A.row(j, i))
        residual.add(t.target, sign > 0 ? t.coeff : -t.coeff);
      if (!residual.zero()) {
        report.add("[[" + A.basis(i).label + ", " + A.basis(j).label + "]] + (-1)^" +
                       std::to_string(A.pairing_exponent_of(i, j)) + " [[" +
                       A.basis(j).label + ", " + A.basis(i).label + "]]",
                   "0", A.element_to_string(residual));
      }
    }
  }
  return report;
}

namespace detail {

/// Exact int64 fraction for the Jacobi hot loop. Any overflow aborts the
/// fast path; callers fall back to Scalar arithmetic.
struct SmallRat {
  long long num = 0;
  long long den = 1;
};

struct SmallRatOverflow {};

inline SmallRat small_mul(SmallRat a, SmallRat b) {
  SmallRat r;
  if (__builtin_mul_overflow(a.num, b.num, &r.num) ||
      __builtin_mul_overflow(a.den, b.den, &r.den))
    throw SmallRatOverflow{};
  return r;
}

inline SmallRat small_add(SmallRat a, SmallRat b) {
  SmallRat r;
  long long x = 0, y = 0;
  if (__builtin_mul_overflow(a.num, b.den, &x) ||
      __builtin_mul_overflow(b.num, a.den, &y) || __builtin_add_overflow(x, y, &r.num) ||
      __builtin_mul_overflow(a.den, b.den, &r.den))
    throw SmallRatOverflow{};
  if (r.num != 0) {
    long long g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    r.num /= g;
    r.den /= g;
  } else {
    r.den = 1;
  }
  return r;
}

struct FastTable {
  struct FastTerm {
    std::int32_t target;
    SmallRat coeff;
  };
  std::vector<std::vector<FastTerm>> rows;
  bool usable = false;
};

inline FastTable make_fast_table(const ColorAlgebra& A) {
  FastTable ft;
  ft.rows.resize(std::size_t(A.dim()) * std::size_t(A.dim()));
  constexpr long long kLimit = 1ll << 31;
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      auto& out = ft.rows[std::size_t(i) * std::size_t(A.dim()) + std::size_t(j)];
      for (const Term& t : A.row(i, j)) {
        const BigInt& n = numerator(t.coeff);
        const BigInt& d = denominator(t.coeff);
        if (abs(n) >= kLimit || d >= kLimit) return ft;  // usable stays false
        out.push_back({t.target, {n.convert_to<long long>(), d.convert_to<long long>()}});
      }
    }
  }
  ft.usable = true;
  return ft;
}

}  // namespace detail

/// Definition item 3, the graded Jacobi identity with the cyclic phases
///   [[x,[[y,z]]]](-1)^{<x,z>} + [[y,[[z,x]]]](-1)^{<y,x>}
///                             + [[z,[[x,y]]]](-1)^{<z,y>} = 0.
/// The triple sweep is the hot path of every acceptance run, so it carries an
/// exact int64 fast lane; algebras with large constants take the Scalar lane.
inline Report check_jacobi(const ColorAlgebra& A, int workers = 1) {
  Report report;
  report.check = "graded-jacobi";
  const int dim = A.dim();
  report.checked = std::size_t(dim) * std::size_t(dim) * std::size_t(dim);

  // Evaluates one triple exactly with Scalar arithmetic; used to confirm and
  // format every violation, and as the fallback lane.
  auto slow_residual = [&A](int x, int y, int z) {
    Element acc;
    auto cyclic = [&](int a, int b, int c, int phase_l, int phase_r) {
      int s = A.pairing_exponent_of(phase_l, phase_r) % 2 == 0 ? 1 : -1;
      for (const Term& inner : A.row(b, c))
        for (const Term& outer : A.row(a, inner.target))
          acc.add(outer.target, s > 0 ? inner.coeff * outer.coeff
                                      : -(inner.coeff * outer.coeff));
    };
    cyclic(x, y, z, x, z);
    cyclic(y, z, x, y, x);
    cyclic(z, x, y, z, y);
    return acc;
  };

  auto record = [&](Report& rep, int x, int y, int z) {
    Element residual = slow_residual(x, y, z);
    if (residual.zero()) return;
    rep.add("J(" + A.basis(x).label + ", " + A.basis(y).label + ", " + A.basis(z).label +
                ")",
            "0", A.element_to_string(residual));
  };

  // Pairing signs are reused dim^3 times; precompute the dim^2 table.
  std::vector<int> sign(std::size_t(dim) * std::size_t(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      sign[std::size_t(i) * std::size_t(dim) + std::size_t(j)] =
          A.pairing_exponent_of(i, j) % 2 == 0 ? 1 : -1;

  detail::FastTable fast = detail::make_fast_table(A);

  auto run_range = [&](int x_begin, int x_end, Report& rep) {
    if (fast.usable) {
      std::vector<detail::SmallRat> acc(std::size_t(dim));
      std::vector<int> touched;
      touched.reserve(16);
      auto row_of = [&](int a, int b) -> const std::vector<detail::FastTable::FastTerm>& {
        return fast.rows[std::size_t(a) * std::size_t(dim) + std::size_t(b)];
      };
      for (int x = x_begin; x < x_end; ++x) {
        for (int y = 0; y < dim; ++y) {
          for (int z = 0; z < dim; ++z) {
            touched.clear();
            bool overflow = false;
            auto cyclic = [&](int a, int b, int c, int s) {
              for (const auto& inner : row_of(b, c)) {
                for (const auto& outer : row_of(a, inner.target)) {
                  try {
                    detail::SmallRat v = detail::small_mul(inner.coeff, outer.coeff);
                    if (s < 0) v.num = -v.num;
                    auto& slot = acc[std::size_t(outer.target)];
                    if (slot.num == 0 && slot.den == 1 &&
                        std::find(touched.begin(), touched.end(), outer.target) ==
                            touched.end())
                      touched.push_back(outer.target);
                    slot = detail::small_add(slot, v);
                  } catch (const detail::SmallRatOverflow&) {
                    overflow = true;
                  }
                }
              }
            };
            cyclic(x, y, z, sign[std::size_t(x) * std::size_t(dim) + std::size_t(z)]);
            cyclic(y, z, x, sign[std::size_t(y) * std::size_t(dim) + std::size_t(x)]);
            cyclic(z, x, y, sign[std::size_t(z) * std::size_t(dim) + std::size_t(y)]);
            bool nonzero = overflow;
            for (int t : touched) {
              nonzero = nonzero || acc[std::size_t(t)].num != 0;
              acc[std::size_t(t)] = {};
            }
            if (nonzero) record(rep, x, y, z);
          }
        }
      }
    } else {
      for (int x = x_begin; x < x_end; ++x)
        for (int y = 0; y < dim; ++y)
          for (int z = 0; z < dim; ++z) record(rep, x, y, z);
    }
  };

  workers = std::max(1, std::min(workers, dim));
  if (workers == 1) {
    run_range(0, dim, report);
    return report;
  }

  std::vector<Report> parts(std::size_t(workers));
  std::vector<std::thread> pool;
  int chunk = (dim + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int begin = w * chunk, end = std::min(dim, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] { run_range(begin, end, parts[std::size_t(w)]); });
  }
  for (auto& t : pool) t.join();
  for (auto& part : parts)
    for (auto& v : part.violations) report.violations.push_back(std::move(v));
  return report;
}

/// Cl(p,q) regarded as a color (super)algebra over its blade basis:
/// [[gamma_a, gamma_b]] = (1-(-1)^e) kappa(a,b) gamma_{a+b}, where e is
/// sigma(a)sigma(b) for the dot pairing and picks up the blockwise
/// sigma(a_k)sigma(b_k) sum for the symplectic one.
inline ColorAlgebra clifford_as_color_algebra(const Signature& sig, const Pairing& pairing) {
  const int n = sig.n();
  if (pairing.kind() == Pairing::Kind::Symplectic && n % 2 != 0)
    throw PairingError("symplectic pairing needs even p+q, got " + std::to_string(n));
  std::vector<BasisElement> basis;
  const std::uint32_t count = 1u << n;
  basis.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m)
    basis.push_back({blade_label(std::uint16_t(m)), GradeVec(n, std::uint16_t(m))});
  ColorAlgebra A("Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")|" +
                     pairing.name(),
                 n, pairing, std::move(basis));
  for (std::uint32_t ma = 0; ma < count; ++ma) {
    GradeVec a(n, std::uint16_t(ma));
    for (std::uint32_t mb = 0; mb < count; ++mb) {
      GradeVec b(n, std::uint16_t(mb));
      int e = sigma(a) * sigma(b);
      if (pairing.kind() == Pairing::Kind::Symplectic) {
        for (int k = 0; k < n / 2; ++k) {
          int sa = a.bit(2 * k) + a.bit(2 * k + 1);
          int sb = b.bit(2 * k) + b.bit(2 * k + 1);
          e += sa * sb;
        }
      }
      if (e % 2 == 0) continue;  // bracket vanishes: commutator of commuting blades
      int k = kappa(a, b, sig);
      A.set_bracket(int(ma), int(mb), {{std::int32_t(ma ^ mb), Scalar(2 * k)}});
    }
  }
  return A;
}

}  // namespace colorsuper
