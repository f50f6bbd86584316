#include "slnpres/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace slnpres;

TEST_CASE("epsilon sign alternates with rank", "[matrix]") {
  REQUIRE(epsilon(3) == 1);
  REQUIRE(epsilon(4) == -1);
  REQUIRE(epsilon(5) == 1);
  REQUIRE(epsilon(12) == -1);
}

TEST_CASE("construction and entry access", "[matrix]") {
  IntMatrix z(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) REQUIRE(z.entry(i, j) == 0);

  IntMatrix id = IntMatrix::identity(4);
  REQUIRE(id.is_identity());
  REQUIRE(id.rank() == 4);
  REQUIRE_FALSE(z.is_identity());

  REQUIRE_THROWS_AS(IntMatrix(0), std::invalid_argument);
  REQUIRE_THROWS_AS(z.entry(0, 1), std::out_of_range);
  REQUIRE_THROWS_AS(z.entry(1, 4), std::out_of_range);
}

TEST_CASE("matrix units multiply by the delta rule", "[matrix]") {
  // E_{i,j} E_{k,l} = E_{i,l} if j == k, else 0.
  REQUIRE(matrix_unit(4, 1, 2) * matrix_unit(4, 2, 3) == matrix_unit(4, 1, 3));
  REQUIRE(matrix_unit(4, 1, 2) * matrix_unit(4, 3, 4) == IntMatrix(4));
  REQUIRE(matrix_unit(4, 2, 2) * matrix_unit(4, 2, 2) == matrix_unit(4, 2, 2));
}

TEST_CASE("shears and transvections", "[matrix]") {
  IntMatrix t = transvection(3, 2, 1);
  REQUIRE(t.entry(2, 1) == 1);
  REQUIRE(t.entry(1, 1) == 1);
  REQUIRE(t.det() == 1);
  REQUIRE(shear(3, 2, 1, 5) * shear(3, 2, 1, -5) == IntMatrix::identity(3));
  REQUIRE_THROWS_AS(shear(3, 2, 2, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(transvection(3, 4, 1), std::out_of_range);
}

TEST_CASE("product, dimension guard, and powers", "[matrix]") {
  IntMatrix a(2), b(2);
  a.entry(1, 1) = 1; a.entry(1, 2) = 2; a.entry(2, 1) = 3; a.entry(2, 2) = 4;
  b.entry(1, 1) = 5; b.entry(1, 2) = 6; b.entry(2, 1) = 7; b.entry(2, 2) = 8;
  IntMatrix ab = a * b;
  REQUIRE(ab.entry(1, 1) == 19);
  REQUIRE(ab.entry(1, 2) == 22);
  REQUIRE(ab.entry(2, 1) == 43);
  REQUIRE(ab.entry(2, 2) == 50);

  REQUIRE_THROWS_AS(a * IntMatrix(3), std::invalid_argument);

  IntMatrix p = a.pow(5);
  IntMatrix q = IntMatrix::identity(2);
  for (int t = 0; t < 5; ++t) q = q * a;
  REQUIRE(p == q);
  REQUIRE(a.pow(0) == IntMatrix::identity(2));
  REQUIRE_THROWS_AS(a.pow(-1), std::invalid_argument);
}

TEST_CASE("trace and determinant", "[matrix]") {
  REQUIRE(IntMatrix::identity(5).trace() == 5);
  REQUIRE(IntMatrix::identity(5).det() == 1);
  REQUIRE(IntMatrix(3).det() == 0);

  // 3x3 with a zero pivot forces the row-swap path.
  IntMatrix m(3);
  m.entry(1, 2) = 2; m.entry(1, 3) = 1;
  m.entry(2, 1) = 1; m.entry(2, 2) = 1; m.entry(2, 3) = 1;
  m.entry(3, 1) = 3; m.entry(3, 3) = 4;
  // det = -(2*(1*4 - 1*3)) + ... cofactor along first row: -2*(4-3) + 1*(0-3) = -5
  REQUIRE(m.det() == -5);

  // Singular: two equal rows.
  IntMatrix s(3);
  for (int j = 1; j <= 3; ++j) { s.entry(1, j) = j; s.entry(2, j) = j; s.entry(3, j) = 1; }
  REQUIRE(s.det() == 0);

  for (int n = 3; n <= 8; ++n) REQUIRE(cyclic_generator(n).det() == 1);
}

TEST_CASE("cyclic generator action on basis vectors", "[matrix]") {
  for (int n = 3; n <= 7; ++n) {
    IntMatrix a = cyclic_generator(n);
    // column j holds a*e_j: e_{j-1} for j >= 2, epsilon*e_n for j = 1.
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i <= n; ++i) REQUIRE(a.entry(i, j) == (i == j - 1 ? 1 : 0));
    for (int i = 1; i <= n; ++i) REQUIRE(a.entry(i, 1) == (i == n ? epsilon(n) : 0));

    REQUIRE(a * cyclic_generator_inverse(n) == IntMatrix::identity(n));
    REQUIRE(cyclic_generator_inverse(n) * a == IntMatrix::identity(n));

    // a^n = epsilon * I.
    IntMatrix an = a.pow(n);
    IntMatrix want = IntMatrix::identity(n);
    if (epsilon(n) == -1) want = want.negated();
    REQUIRE(an == want);
  }
  // Closed-form inverses: a_3^-1 coincides with a_3^2 (a_3 has order 3) and
  // the shear inverse is literally I - E_21.
  REQUIRE(cyclic_generator_inverse(3) == cyclic_generator(3).pow(2));
  IntMatrix b_inv = IntMatrix::identity(3);
  b_inv.entry(2, 1) = -1;
  REQUIRE(shear(3, 2, 1, -1) == b_inv);
  REQUIRE(shear(3, 2, 1, -1) * shear(3, 2, 1, 1) == IntMatrix::identity(3));

  REQUIRE_THROWS_AS(cyclic_generator(1), std::invalid_argument);
}

TEST_CASE("multiplicative orders", "[matrix]") {
  REQUIRE(order(IntMatrix::identity(3), 10) == 1);
  REQUIRE(order(sigma_rotation(2, 1), 10) == 4);
  REQUIRE(order(IntMatrix::identity(4).negated(), 10) == 2);
  // A shear has infinite order: the probe gives up at the cap.
  REQUIRE_FALSE(order(transvection(3, 2, 1), 100).has_value());
  REQUIRE_THROWS_AS(order(IntMatrix::identity(2), 0), std::invalid_argument);

  for (int n = 3; n <= 8; ++n) {
    long long expected = (n % 2 != 0) ? n : 2 * n;
    REQUIRE(order(cyclic_generator(n), 2 * n) == expected);
  }
}

TEST_CASE("block rotations compose to the cyclic generator", "[matrix]") {
  for (int n = 3; n <= 8; ++n) {
    IntMatrix prod = IntMatrix::identity(n);
    for (int r = n - 1; r >= 1; --r) prod = prod * sigma_rotation(n, r);
    REQUIRE(prod == cyclic_generator(n));
  }
  // sigma_r sends e_r to -e_{r+1} and e_{r+1} to e_r.
  IntMatrix s = sigma_rotation(4, 2);
  REQUIRE(s.entry(3, 2) == -1);
  REQUIRE(s.entry(2, 3) == 1);
  REQUIRE(s.entry(1, 1) == 1);
  REQUIRE(s.entry(4, 4) == 1);
  REQUIRE_THROWS_AS(sigma_rotation(3, 3), std::out_of_range);
}

TEST_CASE("shear powers stay one-parameter", "[matrix]") {
  IntMatrix b = transvection(5, 2, 1);
  IntMatrix bi = shear(5, 2, 1, -1);
  for (int m = -3; m <= 3; ++m) {
    IntMatrix got = m >= 0 ? b.pow(m) : bi.pow(-m);
    REQUIRE(got == shear(5, 2, 1, m == 0 ? Int(0) : Int(m)));
  }
  REQUIRE(b.pow(1000) == shear(5, 2, 1, 1000));
}

TEST_CASE("mod matrices reduce, multiply, and power", "[matrix]") {
  IntMatrix m(2);
  m.entry(1, 1) = -1; m.entry(1, 2) = 7; m.entry(2, 1) = 5; m.entry(2, 2) = -12;
  ModMatrix r = mod_reduce(m, 5);
  REQUIRE(r.entry(1, 1) == 4);
  REQUIRE(r.entry(1, 2) == 2);
  REQUIRE(r.entry(2, 1) == 0);
  REQUIRE(r.entry(2, 2) == 3);

  // Reduction commutes with multiplication.
  IntMatrix a = transvection(3, 2, 1) * cyclic_generator(3);
  IntMatrix b2 = cyclic_generator(3) * transvection(3, 1, 3);
  REQUIRE(mod_reduce(a * b2, 7) == mod_reduce(a, 7) * mod_reduce(b2, 7));
  REQUIRE(mod_reduce(a.pow(6), 7) == mod_reduce(a, 7).pow(6));

  REQUIRE(ModMatrix::identity(3, 4).is_identity());
  REQUIRE(order(mod_reduce(transvection(3, 2, 1), 9), 10) == 9);
  REQUIRE_THROWS_AS(ModMatrix(3, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(ModMatrix(0, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(ModMatrix::identity(2, 3) * ModMatrix::identity(2, 5), std::invalid_argument);
}

TEST_CASE("big integer entries do not wrap", "[matrix]") {
  IntMatrix b = transvection(3, 2, 1);
  IntMatrix p = b.pow(Int("123456789012345678901234567890"));
  REQUIRE(p.entry(2, 1) == Int("123456789012345678901234567890"));
  REQUIRE(p.det() == 1);
}
