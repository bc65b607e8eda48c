#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/complexes.hpp"
#include "zinbiel/errors.hpp"
#include "zinbiel/matrix.hpp"
#include "zinbiel/scalar.hpp"

using namespace zinbiel;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng) {
  std::vector<Triplet> entries;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) < density) entries.push_back({r, c, Scalar(static_cast<std::int64_t>(rng() % 9) - 4)});
    }
  }
  return Matrix::from_triplets(rows, cols, entries);
}

// Rank-deficient by construction: product of two thin factors.
Matrix low_rank(std::size_t rows, std::size_t cols, std::size_t inner, std::mt19937_64& rng) {
  return random_matrix(rows, inner, 0.6, rng) * random_matrix(inner, cols, 0.6, rng);
}

}  // namespace

TEST(Scalar, CanonicalForm) {
  Scalar s(6, -4);
  EXPECT_EQ(s.to_string(), "-3/2");
  EXPECT_EQ(s.denominator(), 2);
  EXPECT_EQ(Scalar(4, 2).to_string(), "2");
  EXPECT_EQ(Scalar(0, 5).to_string(), "0");
}

TEST(Scalar, ParseRoundTrip) {
  for (const char* text : {"0", "7", "-7", "3/4", "-12/5", "123456789012345678901234567891/7"}) {
    EXPECT_EQ(Scalar::parse(text).to_string(), text);
  }
  EXPECT_EQ(Scalar::parse("4/6").to_string(), "2/3");
  EXPECT_EQ(Scalar::parse("123456789012345678901234567890/7").to_string(), "17636684144620811271604938270");
}

TEST(Scalar, ParseRejectsGarbage) {
  for (const char* text : {"", "1/0", "abc", "1.5", "1/", "/2", "1//2", "3/-6"}) {
    EXPECT_THROW(Scalar::parse(text), ParseError) << text;
  }
}

TEST(Scalar, ArithmeticIsExact) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const Scalar a(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 97) + 1);
    const Scalar b(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 97) + 1);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
  EXPECT_EQ(Scalar(1, 3) + Scalar(1, 6), Scalar(1, 2));
}

TEST(Scalar, DivisionByZeroThrows) { EXPECT_THROW(Scalar(1) / Scalar(0), DimensionError); }

TEST(Matrix, TripletsSumAndDropZeros) {
  const std::vector<Triplet> t{{0, 0, Scalar(1)}, {0, 0, Scalar(-1)}, {1, 2, Scalar(3)}, {1, 2, Scalar(2)}};
  const Matrix m = Matrix::from_triplets(2, 3, t);
  EXPECT_EQ(m.nonzeros(), 1u);
  EXPECT_EQ(m.at(1, 2), Scalar(5));
  EXPECT_EQ(m.at(0, 0), Scalar(0));
}

TEST(Matrix, RejectsOutOfRangeEntries) {
  const std::vector<Triplet> t{{2, 0, Scalar(1)}};
  EXPECT_THROW(Matrix::from_triplets(2, 2, t), DimensionError);
}

TEST(Rank, TrivialCases) {
  EXPECT_EQ(rank(Matrix::identity(3)), 3u);
  EXPECT_EQ(rank(Matrix(2, 4)), 0u);
  EXPECT_EQ(rank(Matrix(0, 0)), 0u);
}

TEST(Nullspace, TrivialCases) {
  EXPECT_TRUE(nullspace(Matrix::identity(2)).empty());
  const auto ns = nullspace(Matrix::from_dense({{Scalar(1), Scalar(1)}}));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0], -ns[0][1]);
  EXPECT_FALSE(ns[0][0].is_zero());
}

TEST(Rank, DlDeltaTwoOfTwoDimensionalAlgebra) {
  const auto b = builtin_algebra("B2");
  const Matrix d2 = delta_matrix(Theory::dl, b, regular_bimodule(b), 2).matrix;
  ASSERT_EQ(d2.rows(), 16u);
  ASSERT_EQ(d2.cols(), 8u);
  EXPECT_EQ(rank(d2), 5u);
  EXPECT_EQ(nullspace(d2).size(), 3u);
  EXPECT_EQ(oracle::dense_rank(d2.to_dense()), 5u);
}

TEST(Rank, AgreesWithDenseOracle) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 12;
    const Matrix m = k % 2 ? random_matrix(rows, cols, 0.4, rng) : low_rank(rows, cols, 1 + rng() % 4, rng);
    EXPECT_EQ(rank(m), oracle::dense_rank(m.to_dense()));
  }
}

TEST(RankProperties, RankNullity) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 40; ++k) {
    const std::size_t rows = 1 + rng() % 10;
    const std::size_t cols = 1 + rng() % 10;
    const Matrix m = low_rank(rows, cols, 1 + rng() % 5, rng);
    const auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), m.cols());
    for (const auto& v : ns) {
      for (const auto& x : m * std::span<const Scalar>(v)) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(RankProperties, TransposeInvariant) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 40; ++k) {
    const Matrix m = low_rank(1 + rng() % 10, 1 + rng() % 10, 1 + rng() % 5, rng);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(RankProperties, PermutationInvariant) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 40; ++k) {
    const Matrix m = low_rank(1 + rng() % 10, 1 + rng() % 10, 1 + rng() % 5, rng);
    std::vector<std::size_t> rp(m.rows());
    std::vector<std::size_t> cp(m.cols());
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    EXPECT_EQ(rank(m), rank(oracle::permute(m, rp, cp)));
  }
}

TEST(RowEchelon, ReducedAndSpansRowSpace) {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 20; ++k) {
    const Matrix m = low_rank(2 + rng() % 8, 2 + rng() % 8, 1 + rng() % 4, rng);
    const RowEchelon e = row_echelon(m);
    ASSERT_EQ(e.rows.size(), rank(m));
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      ASSERT_FALSE(e.rows[i].empty());
      EXPECT_EQ(e.rows[i].front().index, e.pivots[i]);
      EXPECT_EQ(e.rows[i].front().value, Scalar(1));
      if (i) EXPECT_LT(e.pivots[i - 1], e.pivots[i]);
      // pivot columns are cleared in every other row
      for (std::size_t j = 0; j < e.rows.size(); ++j) {
        if (j == i) continue;
        for (const auto& x : e.rows[j]) EXPECT_NE(x.index, e.pivots[i]);
      }
    }
    // same row space: stacking the echelon rows on m does not raise the rank
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      for (const auto& x : e.rows[i]) t.push_back({i, x.index, x.value});
    }
    const Matrix echelon = Matrix::from_triplets(e.rows.size(), m.cols(), t);
    EXPECT_EQ(rank(vconcat(m, echelon)), rank(m));
  }
}

TEST(Matrix, ProductMatchesDense) {
  std::mt19937_64 rng(16);
  const Matrix a = random_matrix(4, 5, 0.5, rng);
  const Matrix b = random_matrix(5, 3, 0.5, rng);
  const auto da = a.to_dense();
  const auto db = b.to_dense();
  const auto dc = (a * b).to_dense();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Scalar s(0);
      for (std::size_t k = 0; k < 5; ++k) s = s + da[i][k] * db[k][j];
      EXPECT_EQ(dc[i][j], s);
    }
  }
  EXPECT_THROW(a * a, DimensionError);
}

TEST(Matrix, DenseInverse) {
  std::mt19937_64 rng(17);
  const auto p = oracle::random_invertible(4, rng);
  const auto inv = dense_inverse(p);
  EXPECT_EQ(Matrix::from_dense(p) * Matrix::from_dense(inv), Matrix::identity(4));
  EXPECT_THROW(dense_inverse({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}), DimensionError);
}
