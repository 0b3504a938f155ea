#include <catch2/catch_amalgamated.hpp>

#include "colorsuper/clifford.hpp"
#include "colorsuper/matrix_oracle.hpp"

using namespace colorsuper;

TEST_CASE("gamma_of_grade maps supports to blades") {
  CHECK(gamma_of_grade(GradeVec::parse("000")) == Blade{0, 1});
  CHECK(gamma_of_grade(GradeVec::parse("110")) == Blade{0b011, 1});
  CHECK(gamma_of_grade(GradeVec::parse("111")) == Blade{0b111, 1});
  for (std::uint32_t m = 0; m < 8; ++m) {
    GradeVec v(3, std::uint16_t(m));
    CHECK(grade_of_blade(gamma_of_grade(v), 3) == v);
  }
}

TEST_CASE("blade squares follow the metric") {
  Blade g1{0b1, 1};
  CHECK(blade_mul(g1, g1, Signature(2, 0)) == Blade{0, 1});
  CHECK(blade_mul(g1, g1, Signature(0, 1)) == Blade{0, -1});
}

TEST_CASE("one anticommutation swap flips the sign") {
  Blade g1{0b01, 1}, g2{0b10, 1};
  CHECK(blade_mul(g2, g1, Signature(3, 0)) == Blade{0b11, -1});
  CHECK(blade_mul(g1, g2, Signature(3, 0)) == Blade{0b11, 1});
}

TEST_CASE("kappa against simple contractions") {
  CHECK(kappa(GradeVec::parse("110"), GradeVec::parse("010"), Signature(3, 0)) == 1);
  CHECK(kappa(GradeVec::parse("110"), GradeVec::parse("010"), Signature(0, 3)) == -1);
}

TEST_CASE("kappa of the top blade in Cl(2,1) matches the matrix oracle") {
  Signature sig(2, 1);
  GradeVec top = GradeVec::parse("111");
  auto gammas = gamma_matrices(sig);
  ExactMatrix m = blade_matrix(top.bits(), gammas);
  ExactMatrix square = m.mul(m);
  // gamma_111 * gamma_111 = kappa * gamma_000 = kappa * identity.
  ExactMatrix id = ExactMatrix::identity(m.dim());
  int k = kappa(top, top, sig);
  CHECK(square == (k == 1 ? id : id.negated()));
}

TEST_CASE("blade textual forms") {
  CHECK(blade_to_string(Blade{0, 1}) == "+1");
  CHECK(blade_to_string(Blade{0b011, 1}) == "+g1g2");
  CHECK(blade_to_string(Blade{0b100, -1}) == "-g3");
}

TEST_CASE("sign law sweep has no violations") {
  Report r1 = check_sign_law(Signature(1, 0));
  CHECK(r1.checked == 4);
  CHECK(r1.ok());
  Report r2 = check_sign_law(Signature(2, 2));
  CHECK(r2.checked == 256);
  CHECK(r2.ok());
}

TEST_CASE("relative sign counting rule (-1)^{rs-m}") {
  // gamma1 vs gamma1gamma2 in Cl(3,0): r=1, s=2, one common generator.
  Signature sig(3, 0);
  GradeVec a = GradeVec::parse("100"), b = GradeVec::parse("110");
  CHECK(kappa(a, b, sig) * kappa(b, a, sig) == -1);

  // Property over all pairs and splits for p+q <= 5.
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      Signature s(p, n - p);
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        for (std::uint32_t y = 0; y < (1u << n); ++y) {
          GradeVec va(n, std::uint16_t(x)), vb(n, std::uint16_t(y));
          int r = sigma(va), ss = sigma(vb), m = dot(va, vb);
          int expected = (r * ss - m) % 2 == 0 ? 1 : -1;
          REQUIRE(kappa(va, vb, s) * kappa(vb, va, s) == expected);
        }
      }
    }
  }
}

TEST_CASE("blade products associate") {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      Signature sig(p, n - p);
      const std::uint32_t count = 1u << n;
      for (std::uint32_t x = 0; x < count; ++x) {
        Blade a{std::uint16_t(x), 1};
        for (std::uint32_t y = 0; y < count; ++y) {
          Blade b{std::uint16_t(y), 1};
          Blade ab = blade_mul(a, b, sig);
          for (std::uint32_t z = 0; z < count; ++z) {
            Blade c{std::uint16_t(z), 1};
            REQUIRE(blade_mul(ab, c, sig) == blade_mul(a, blade_mul(b, c, sig), sig));
          }
        }
      }
    }
  }
}

TEST_CASE("blades reject out-of-range generators") {
  CHECK_THROWS_AS(blade_mul(Blade{0b100, 1}, Blade{0b1, 1}, Signature(1, 1)),
                  DimensionError);
}
