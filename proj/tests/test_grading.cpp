#include <catch2/catch_amalgamated.hpp>

#include "colorsuper/grading.hpp"

using namespace colorsuper;

TEST_CASE("dot product evaluates the defining sum") {
  CHECK(dot(GradeVec::parse("000"), GradeVec::parse("111")) == 0);
  CHECK(dot(GradeVec::parse("101"), GradeVec::parse("110")) == 1);
  CHECK(dot(GradeVec::parse("111"), GradeVec::parse("111")) == 3);
}

TEST_CASE("dot rejects mismatched lengths") {
  CHECK_THROWS_AS(dot(GradeVec::parse("10"), GradeVec::parse("101")), DimensionError);
}

TEST_CASE("sigma counts non-zero entries") {
  CHECK(sigma(GradeVec::parse("000")) == 0);
  CHECK(sigma(GradeVec::parse("101")) == 2);
  CHECK(sigma(GradeVec::parse("111")) == 3);
}

TEST_CASE("symplectic pairing sums the block determinants") {
  CHECK(symplectic(GradeVec::parse("10"), GradeVec::parse("01")) == 1);
  CHECK(symplectic(GradeVec::parse("11"), GradeVec::parse("11")) == 0);
  CHECK(symplectic(GradeVec::parse("1001"), GradeVec::parse("0110")) == 0);
}

TEST_CASE("symplectic needs even length") {
  CHECK_THROWS_AS(symplectic(GradeVec::parse("101"), GradeVec::parse("110")),
                  PairingError);
}

TEST_CASE("pairing parity picks commutator vs anticommutator") {
  Pairing dotp = Pairing::dot_product();
  CHECK(pairing_parity(dotp, GradeVec::parse("10"), GradeVec::parse("10")) == Parity::Odd);
  CHECK(pairing_parity(dotp, GradeVec::parse("00"), GradeVec::parse("11")) ==
        Parity::Even);
  Pairing sym = Pairing::symplectic_sum(1);
  CHECK(pairing_parity(sym, GradeVec::parse("10"), GradeVec::parse("01")) == Parity::Odd);
}

TEST_CASE("grade vector textual forms") {
  GradeVec v = GradeVec::parse("(1,0,1)");
  CHECK(v == GradeVec::parse("101"));
  CHECK(v.to_string() == "(1,0,1)");
  CHECK(v.to_bits() == "101");
  CHECK_THROWS_AS(GradeVec::parse("10x"), SchemaError);
  CHECK_THROWS_AS(GradeVec::parse(""), SchemaError);
}

TEST_CASE("addition is componentwise mod 2") {
  GradeVec a = GradeVec::parse("1011");
  GradeVec b = GradeVec::parse("0110");
  CHECK(a + b == GradeVec::parse("1101"));
  CHECK(a + a == GradeVec::zero(4));
}

TEST_CASE("bilinearity and symmetry of the pairings, exhaustive N<=4") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      GradeVec a(n, std::uint16_t(x));
      for (std::uint32_t y = 0; y < (1u << n); ++y) {
        GradeVec b(n, std::uint16_t(y));
        CHECK(dot(a, b) == dot(b, a));
        CHECK(((sigma(a + b) - sigma(a) - sigma(b)) % 2 + 2) % 2 == 0);
        for (std::uint32_t z = 0; z < (1u << n); ++z) {
          GradeVec c(n, std::uint16_t(z));
          CHECK((dot(a + b, c) - dot(a, c) - dot(b, c)) % 2 == 0);
        }
        if (n % 2 == 0) {
          CHECK(symplectic(a, b) == -symplectic(b, a));
        }
      }
    }
  }
}

TEST_CASE("symplectic equals dot plus blockwise sigma products mod 2") {
  // Exhaustive for N in {2,4,6}.
  for (int n : {2, 4, 6}) {
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      GradeVec a(n, std::uint16_t(x));
      for (std::uint32_t y = 0; y < (1u << n); ++y) {
        GradeVec b(n, std::uint16_t(y));
        int rhs = dot(a, b);
        for (int k = 0; k < n / 2; ++k) {
          int sa = a.bit(2 * k) + a.bit(2 * k + 1);
          int sb = b.bit(2 * k) + b.bit(2 * k + 1);
          rhs += sa * sb;
        }
        REQUIRE(((symplectic(a, b) - rhs) % 2 + 2) % 2 == 0);
      }
    }
  }
}
