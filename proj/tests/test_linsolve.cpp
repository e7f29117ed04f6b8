#include "doctest.h"

#include "dunkl/exceptional.hpp"
#include "dunkl/matrix.hpp"
#include "dunkl/rng.hpp"

using namespace dunkl;

namespace {

Matrix<Rat> rat_matrix(size_t r, size_t c, std::initializer_list<long> vals) {
  Matrix<Rat> m(r, c);
  auto it = vals.begin();
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = Rat(*it++);
  return m;
}

}  // namespace

TEST_CASE("kernel_basis trivial cases") {
  Matrix<Rat> id3(3, 3);
  for (size_t i = 0; i < 3; ++i) id3.at(i, i) = Rat(1);
  CHECK(kernel_basis(id3).empty());

  Matrix<Rat> zero23(2, 3);
  CHECK(kernel_basis(zero23).size() == 3);
}

TEST_CASE("rank + nullity = cols and M v = 0, randomized") {
  ProbeRng rng(5);
  for (int round = 0; round < 12; ++round) {
    size_t r = 2 + rng.uint(4), c = 2 + rng.uint(5);
    Matrix<Rat> m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        if (rng.uint(3)) m.at(i, j) = rng.rational();
    size_t rk = rank(m);
    auto ker = kernel_basis(m);
    CHECK(rk + ker.size() == c);
    for (const auto& v : ker) {
      for (size_t i = 0; i < r; ++i) {
        Rat dot(0);
        for (size_t j = 0; j < c; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("bareiss pivots reproduce determinants") {
  CHECK(det_bareiss(rat_matrix(2, 2, {2, 0, 0, 3})) == Rat(6));

  // [[c,1],[1,c]] -> det c^2 - 1.
  Matrix<CPoly> m(2, 2);
  m.at(0, 0) = cpoly_c1();
  m.at(0, 1) = CPoly::constant(Rat(1));
  m.at(1, 0) = CPoly::constant(Rat(1));
  m.at(1, 1) = cpoly_c1();
  CHECK(det_bareiss(m) == cpoly_c1() * cpoly_c1() - CPoly::constant(Rat(1)));

  // Random integer matrices: Bareiss determinant == cofactor expansion.
  ProbeRng rng(9);
  for (int round = 0; round < 6; ++round) {
    Matrix<Rat> a(3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        a.at(i, j) = Rat(static_cast<long>(rng.uint(11)) - 5);
    Rat direct =
        a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
        a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
        a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
    CHECK(det_bareiss(a) == direct);
  }
}

TEST_CASE("fraction-free elimination then ev_c agrees with ev_c then rank") {
  ProbeRng rng(13);
  for (int round = 0; round < 8; ++round) {
    Matrix<CPoly> m(3, 4);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 4; ++j) {
        CPoly e = CPoly::constant(rng.rational());
        if (rng.uint(2)) e += cpoly_c1() * rng.rational();
        m.at(i, j) = e;
      }
    Echelon<CPoly> ech = bareiss(m);
    // Substitute a value that is regular for this matrix (not a root of the
    // last pivot) and compare ranks.
    Rat c0(1, 7);
    if (!ech.pivots.empty() && ech.pivots.back().eval(c0, Rat(0)).is_zero())
      c0 = Rat(2, 7);
    Matrix<Rat> at = m.map([&](const CPoly& v) { return v.eval(c0, Rat(0)); });
    CHECK(rank(at) == ech.rank);
  }
}

TEST_CASE("kernel over Q[c] is cleared to polynomial entries") {
  // Kernel of [c, 1] is spanned by (1, -c) after clearing.
  Matrix<CPoly> m(1, 2);
  m.at(0, 0) = cpoly_c1();
  m.at(0, 1) = CPoly::constant(Rat(1));
  auto ker = kernel_basis_cleared(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == CPoly::constant(Rat(1)));
  CHECK(ker[0][1] == -cpoly_c1());
}

TEST_CASE("rank_over_parameters: diagonal example") {
  // diag(c, 1): generic rank 2, c = 0 drops to 1.
  Matrix<CPoly> m(2, 2);
  m.at(0, 0) = cpoly_c1();
  m.at(1, 1) = CPoly::constant(Rat(1));
  ExceptionalLocus loc = rank_over_parameters(m);
  CHECK(loc.generic_rank == 2);
  REQUIRE(loc.confirmed_values.size() == 1);
  CHECK(loc.confirmed_values[0].value == Rat(0));
  CHECK(loc.confirmed_values[0].rank == 1);
}

TEST_CASE("rank_over_parameters agrees with plain rank at regular probes") {
  ProbeRng rng(17);
  Matrix<CPoly> m(3, 5);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 5; ++j)
      m.at(i, j) = CPoly::constant(rng.rational()) + cpoly_c1() * rng.rational();
  ExceptionalLocus loc = rank_over_parameters(m);
  std::vector<Rat> excluded;
  for (const auto& cv : loc.confirmed_values) excluded.push_back(cv.value);
  for (int probe = 0; probe < 5; ++probe) {
    Rat c0 = rng.rational_excluding(excluded);
    Matrix<Rat> at = m.map([&](const CPoly& v) { return v.eval(c0, Rat(0)); });
    CHECK(rank(at) == loc.generic_rank);
  }
}

TEST_CASE("two-parameter slicing explores the diagonal and affine lines") {
  // diag(c1, c2): on c1 = c2 the defect is c; on generic lines two values.
  Matrix<CPoly> m(2, 2);
  m.at(0, 0) = cpoly_c1();
  m.at(1, 1) = cpoly_c2();
  SlicedLocus sl = rank_over_two_parameters(m);
  REQUIRE(!sl.slices.empty());
  const auto& diag = sl.slices.front();
  CHECK(diag.a == Rat(1));
  CHECK(diag.b == Rat(0));
  CHECK(diag.locus.generic_rank == 2);
  REQUIRE(diag.locus.confirmed_values.size() == 1);
  CHECK(diag.locus.confirmed_values[0].value == Rat(0));
}
