#include <random>
#include <vector>

#include "doctest.h"
#include "subfac/errors.hpp"
#include "subfac/exactalg/linalg.hpp"

using namespace subfac;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);

Mat random_mat(Field f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<long long> d(-2, 2);
  std::vector<long long> e(r * c);
  for (auto& x : e) x = d(rng);
  return Mat::from_ints(f, r, c, e);
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(Field::prime(7).characteristic() == 7);
  CHECK_THROWS_AS(Field::prime(4), InputError);
  CHECK_THROWS_AS(Field::prime(1), InputError);
  CHECK(Q.characteristic() == 0);
  CHECK(Q != F2);
}

TEST_CASE("entries are reduced canonically") {
  auto m = Mat::from_ints(F5, 1, 3, {7, -1, 10});
  CHECK(m.entry_residue(0, 0) == 2);
  CHECK(m.entry_residue(0, 1) == 4);
  CHECK(m.entry_is_zero(0, 2));
  std::vector<std::string> s{"2/4", "-3/6"};
  auto q = Mat::from_strings(Q, 1, 2, s);
  CHECK(q.entry_string(0, 0) == "1/2");
  CHECK(q.entry_string(0, 1) == "-1/2");
  std::vector<std::string> half{"1/2"};
  CHECK(Mat::from_strings(F5, 1, 1, half).entry_residue(0, 0) == 3);
  std::vector<std::string> bad{"1/5"};
  CHECK_THROWS_AS(Mat::from_strings(F5, 1, 1, bad), InputError);
}

TEST_CASE("solve examples") {
  auto x = solve(Mat::identity(Q, 2), Mat::column(Q, {3, 7}));
  REQUIRE(x);
  CHECK(*x == Mat::column(Q, {3, 7}));

  auto y = solve(Mat::from_ints(F5, 1, 1, {2}), Mat::column(F5, {3}));
  REQUIRE(y);
  CHECK(y->entry_residue(0, 0) == 4);

  CHECK_FALSE(solve(Mat::from_ints(Q, 2, 2, {1, 1, 1, 1}), Mat::column(Q, {1, 0})));
  CHECK_THROWS_AS(solve(Mat::identity(Q, 2), Mat::column(Q, {1})), InputError);

  // free variables are set to zero
  auto z = solve(Mat::from_ints(Q, 1, 2, {1, 1}), Mat::column(Q, {5}));
  REQUIRE(z);
  CHECK(*z == Mat::column(Q, {5, 0}));
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Mat::zero(Q, 2, 2)).size() == 2);
  CHECK(kernel_basis(Mat::identity(Q, 3)).empty());
  auto k = kernel_basis(Mat::from_ints(F3, 1, 2, {1, 2}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Mat::column(F3, {1, 1}));
  CHECK(free_columns(Mat::from_ints(F3, 1, 2, {1, 2})) == std::vector<std::size_t>{1});
}

TEST_CASE("in_span examples") {
  std::vector<Mat> s{Mat::column(Q, {0, 1})};
  CHECK(in_span(Mat::column(Q, {0, 0}), s));
  CHECK_FALSE(in_span(Mat::column(Q, {1, 0}), s));
  std::vector<Mat> d{Mat::column(Q, {1, 1})};
  CHECK(in_span(Mat::column(Q, {2, 2}), d));
  std::vector<Mat> tall{Mat::column(Q, {1, 1, 1})};
  CHECK_THROWS_AS(in_span(Mat::column(Q, {2, 2}), tall), InputError);
}

TEST_CASE("complement examples") {
  auto c0 = complement_basis(Q, {}, 2);
  REQUIRE(c0.size() == 2);
  CHECK(c0[0] == Mat::unit(Q, 2, 0));
  CHECK(c0[1] == Mat::unit(Q, 2, 1));

  std::vector<Mat> e1{Mat::unit(Q, 2, 0)};
  auto c1 = complement_basis(Q, e1, 2);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == Mat::unit(Q, 2, 1));

  std::vector<Mat> diag{Mat::column(F2, {1, 1})};
  auto c2 = complement_basis(F2, diag, 2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == Mat::unit(F2, 2, 0));
  // e1 is outside span{(1,1)} over F2: the span is {0, (1,1)}
  CHECK_FALSE(in_span(Mat::unit(F2, 2, 0), diag));

  std::vector<Mat> dep{Mat::column(Q, {1, 1}), Mat::column(Q, {2, 2})};
  CHECK_THROWS_AS(complement_basis(Q, dep, 2), InputError);
}

TEST_CASE("matrix algebra") {
  auto a = Mat::from_ints(Q, 2, 3, {1, 2, 3, 4, 5, 6});
  auto b = Mat::from_ints(Q, 3, 1, {1, 0, -1});
  CHECK(a * b == Mat::column(Q, {-2, -2}));
  CHECK(a.transpose().transpose() == a);
  CHECK(a.kron(Mat::identity(Q, 2)).rows() == 4);
  auto inv = Mat::from_ints(Q, 2, 2, {2, 1, 1, 1}).inverse();
  CHECK(inv == Mat::from_ints(Q, 2, 2, {1, -1, -1, 2}));
  CHECK_THROWS_AS(Mat::from_ints(Q, 2, 2, {1, 1, 1, 1}).inverse(), InputError);
  CHECK(a.reshaped(3, 2).reshaped(2, 3) == a);
  CHECK(a.rank() == 2);
}

TEST_CASE("subspace quotient coordinates") {
  Subspace s(F3, 3);
  CHECK(s.insert(Mat::column(F3, {1, 1, 0})));
  CHECK_FALSE(s.insert(Mat::column(F3, {2, 2, 0})));
  CHECK(s.contains(Mat::column(F3, {2, 2, 0})));
  CHECK(s.nonpivots() == std::vector<std::size_t>{1, 2});
  // (1,0,0) = (1,1,0) - (0,1,0) so its class is -(e2)
  CHECK(s.quotient_coords(Mat::column(F3, {1, 0, 0})) == Mat::column(F3, {2, 0}));
  CHECK(s.insert(Mat::column(F3, {0, 1, 1})));
  CHECK(s.dim() == 2);
  CHECK(s.quotient_coords(Mat::column(F3, {1, 0, 0})).rows() == 1);
}

TEST_CASE("solve and kernel properties on random systems") {
  std::mt19937 rng(17);
  for (Field f : {Q, F2, F5}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Mat a = random_mat(f, r, c, rng);
      Mat b = random_mat(f, r, 1, rng);
      auto x = solve(a, b);
      std::vector<Mat> cols;
      for (std::size_t j = 0; j < c; ++j) cols.push_back(a.col(j));
      if (x) {
        CHECK(a * *x == b);
      } else {
        CHECK_FALSE(in_span(b, cols));
      }
      auto k = kernel_basis(a);
      CHECK(k.size() == c - a.rank());
      for (const auto& v : k) CHECK((a * v).is_zero());
      if (!k.empty()) CHECK(Mat::hstack(f, c, k).rank() == k.size());
      // complement of an independent set completes it
      auto e = a.transpose().echelon();
      std::vector<Mat> indep;
      for (std::size_t i = 0; i < e.pivots.size(); ++i) indep.push_back(e.rref.row(i).transpose());
      auto comp = complement_basis(f, indep, r);
      CHECK(indep.size() + comp.size() == r);
      auto all = indep;
      all.insert(all.end(), comp.begin(), comp.end());
      CHECK(Mat::hstack(f, r, all).rank() == r);
      CHECK(solve(a, b) == x);
    }
  }
}
