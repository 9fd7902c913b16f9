#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "supercodim/quadext.hpp"
#include "supercodim/rational.hpp"
#include "supercodim/sparse_matrix.hpp"

using namespace supercodim;

TEST_CASE("rational arithmetic basics") {
  BigRat half(1, 2), third(1, 3);
  CHECK(half + third == BigRat(5, 6));
  CHECK(half - third == BigRat(1, 6));
  CHECK(half * third == BigRat(1, 6));
  CHECK(half / third == BigRat(3, 2));
  CHECK(-half == BigRat(-1, 2));
  CHECK(BigRat(2, 4) == half);            // canonical form
  CHECK(BigRat(3, -6) == BigRat(-1, 2));  // denominator sign normalized
  CHECK(BigRat(3, -6).denominator() == 2);
  CHECK(BigRat(0, 5).is_zero());
  CHECK(half < BigRat(2, 3));
  CHECK(BigRat(-7).sign() == -1);
  CHECK(BigRat(3, 7) * BigRat(7, 3) == BigRat(1));
  CHECK(BigRat(3, 7).inverse() == BigRat(7, 3));
  CHECK(BigRat(-2, 5).pow(3) == BigRat(-8, 125));
}

TEST_CASE("rational division by zero") {
  CHECK_THROWS_AS(BigRat(1) / BigRat(0), DivisionByZero);
  CHECK_THROWS_AS(BigRat(1, 0), DivisionByZero);
  CHECK_THROWS_AS(BigRat(0).inverse(), DivisionByZero);
}

TEST_CASE("rational parsing") {
  CHECK(BigRat::parse("5") == BigRat(5));
  CHECK(BigRat::parse("-5") == BigRat(-5));
  CHECK(BigRat::parse("3/9") == BigRat(1, 3));
  CHECK(BigRat::parse("-4/6") == BigRat(-2, 3));
  CHECK(BigRat::parse("-4/6").to_string() == "-2/3");
  CHECK(BigRat::parse("7").to_string() == "7");
  CHECK_THROWS_AS(BigRat::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(BigRat::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(BigRat::parse("1/x"), std::invalid_argument);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(5, 0) == 1);
  CHECK(int_pow(BigInt(3), 18) == BigInt("387420489"));
  CHECK(int_pow(BigInt(2), 100) == BigInt("1267650600228229401496703205376"));
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 24);
  auto pick = [&] { return BigRat(num(rng), den(rng)); };
  for (int trial = 0; trial < 250; ++trial) {
    BigRat a = pick(), b = pick(), c = pick();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + BigRat(0) == a);
    CHECK(a * BigRat(1) == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == BigRat(1));
  }
}

TEST_CASE("quadext arithmetic") {
  QuadExt3 x(BigRat(3), BigRat(2));  // 3 + 2 sqrt3
  CHECK(x * x == QuadExt3(BigRat(21), BigRat(12)));
  CHECK(x + x == QuadExt3(BigRat(6), BigRat(4)));
  CHECK(x - x == QuadExt3());
  CHECK((QuadExt3::sqrt3() * QuadExt3::sqrt3()) == QuadExt3(BigRat(3)));
  QuadExt3 two_sqrt3(BigRat(0), BigRat(2));
  CHECK(two_sqrt3.pow(6) == QuadExt3(BigRat(1728)));
  CHECK(x.pow(0) == QuadExt3(BigRat(1)));
  CHECK(x.pow(7) == QuadExt3(BigRat(235791), BigRat(136134)));
}

TEST_CASE("quadext exact sign") {
  CHECK(QuadExt3(BigRat(21), BigRat(12)).sign() == 1);
  CHECK(QuadExt3(BigRat(-21), BigRat(-12)).sign() == -1);
  // -21 + 12 sqrt3 < 0 because 21^2 = 441 > 432 = 3 * 12^2
  CHECK(QuadExt3(BigRat(-21), BigRat(12)).sign() == -1);
  CHECK(QuadExt3(BigRat(21), BigRat(-12)).sign() == 1);
  // -12 + 7 sqrt3 > 0 because 144 < 147
  CHECK(QuadExt3(BigRat(-12), BigRat(7)).sign() == 1);
  CHECK(QuadExt3(BigRat(12), BigRat(-7)).sign() == -1);
  CHECK(QuadExt3().sign() == 0);
  CHECK(QuadExt3(BigRat(0), BigRat(-5)).sign() == -1);
  CHECK(QuadExt3(BigRat(5)).sign() == 1);
  CHECK(QuadExt3(BigRat(-12), BigRat(7)) > QuadExt3());
  CHECK(QuadExt3(BigRat(1)) < QuadExt3::sqrt3());
  CHECK(QuadExt3(BigRat(2)) > QuadExt3::sqrt3());
}

TEST_CASE("quadext powers match binomial expansion") {
  // Independent route: (3 + 2 sqrt3)^q expanded by the binomial theorem,
  // splitting even and odd powers of sqrt3.
  for (unsigned long q = 0; q <= 60; ++q) {
    BigRat rat(0), irr(0);
    for (unsigned long i = 0; i <= q; ++i) {
      BigInt c = binomial(q, i) * int_pow(BigInt(3), q - i) *
                 int_pow(BigInt(2), i) * int_pow(BigInt(3), i / 2);
      if (i % 2 == 0)
        rat += BigRat(c);
      else
        irr += BigRat(c);
    }
    CHECK(QuadExt3(BigRat(3), BigRat(2)).pow(q) == QuadExt3(rat, irr));
  }
}

TEST_CASE("quadext printing") {
  CHECK(QuadExt3(BigRat(21), BigRat(12)).to_string() == "21+12*sqrt3");
  CHECK(QuadExt3(BigRat(-21), BigRat(12)).to_string() == "-21+12*sqrt3");
  CHECK(QuadExt3(BigRat(0), BigRat(-1)).to_string() == "-sqrt3");
  CHECK(QuadExt3(BigRat(1, 2), BigRat(-3, 4)).to_string() == "1/2-3/4*sqrt3");
  CHECK(QuadExt3().to_string() == "0");
  CHECK(QuadExt3::sqrt3().to_string() == "sqrt3");
}

namespace {

// Independent dense-elimination rank oracle for cross-checking.
SparseMat::Index dense_rank(const SparseMat& m) {
  std::vector<std::vector<BigRat>> a(
      m.rows(), std::vector<BigRat>(m.cols(), BigRat(0)));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
  SparseMat::Index rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < static_cast<std::size_t>(m.cols()) &&
                            row < static_cast<std::size_t>(m.rows());
       ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t r = row + 1; r < a.size(); ++r) {
      if (a[r][col].is_zero()) continue;
      BigRat f = a[r][col] / a[row][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("sparse matrix entry handling") {
  SparseMat m(3, 4);
  CHECK(m.nnz() == 0);
  m.set(0, 1, BigRat(5));
  m.add(0, 1, BigRat(-5));
  CHECK(m.nnz() == 0);  // exact cancellation removes the entry
  m.set(2, 3, BigRat(1, 3));
  CHECK(m.at(2, 3) == BigRat(1, 3));
  CHECK(m.at(0, 0).is_zero());
  CHECK_THROWS_AS(m.set(3, 0, BigRat(1)), std::out_of_range);
  CHECK_THROWS_AS(m.at(0, 4), std::out_of_range);
  CHECK(m.transpose().at(3, 2) == BigRat(1, 3));
}

TEST_CASE("sparse rank on fixed matrices") {
  SparseMat empty(0, 0);
  CHECK(empty.rank() == 0);

  SparseMat zero(4, 5);
  CHECK(zero.rank() == 0);

  SparseMat id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, BigRat(1));
  CHECK(id.rank() == 3);

  SparseMat prop(2, 2);  // second row is twice the first
  prop.set(0, 0, BigRat(1));
  prop.set(0, 1, BigRat(2));
  prop.set(1, 0, BigRat(2));
  prop.set(1, 1, BigRat(4));
  CHECK(prop.rank() == 1);

  SparseMat r2(3, 4);  // row3 = row1 + row2
  r2.set(0, 0, BigRat(1));
  r2.set(0, 2, BigRat(1));
  r2.set(1, 1, BigRat(1));
  r2.set(1, 2, BigRat(1));
  r2.set(2, 0, BigRat(1));
  r2.set(2, 1, BigRat(1));
  r2.set(2, 2, BigRat(2));
  CHECK(r2.rank() == 2);

  SparseMat frac(2, 2);  // determinant zero with fractional entries
  frac.set(0, 0, BigRat(1, 2));
  frac.set(0, 1, BigRat(1, 3));
  frac.set(1, 0, BigRat(3, 2));
  frac.set(1, 1, BigRat(1));
  CHECK(frac.rank() == 1);
}

TEST_CASE("sparse rank invariances on random matrices") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> dim(1, 8), val(-3, 3), pct(0, 99);
  for (int trial = 0; trial < 40; ++trial) {
    SparseMat::Index R = dim(rng), C = dim(rng);
    SparseMat m(R, C);
    for (SparseMat::Index r = 0; r < R; ++r)
      for (SparseMat::Index c = 0; c < C; ++c)
        if (pct(rng) < 45) m.set(r, c, BigRat(val(rng)));

    SparseMat::Index rk = m.rank();
    CHECK(rk == dense_rank(m));
    CHECK(rk <= std::min(R, C));
    CHECK(m.transpose().rank() == rk);

    // Row permutation plus nonzero row scalings preserve rank.
    std::vector<SparseMat::Index> perm(R);
    for (SparseMat::Index r = 0; r < R; ++r) perm[r] = r;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> scale_num(1, 5);
    SparseMat t(R, C);
    for (const auto& [rc, v] : m.entries()) t.set(rc.first, rc.second, v);
    SparseMat scrambled(R, C);
    for (SparseMat::Index r = 0; r < R; ++r) {
      BigRat s(scale_num(rng), scale_num(rng));
      if (pct(rng) < 50) s = -s;
      for (SparseMat::Index c = 0; c < C; ++c) {
        BigRat v = t.at(r, c);
        if (!v.is_zero()) scrambled.set(perm[r], c, s * v);
      }
    }
    CHECK(scrambled.rank() == rk);
  }
}
