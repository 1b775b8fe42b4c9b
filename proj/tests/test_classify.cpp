#include <doctest.h>

#include "oracles.hpp"
#include "strata/classify.hpp"
#include "strata/realize.hpp"

using namespace strata;

namespace {

ErrorCode code_of(const SymmetricMatrix& s) {
  try {
    classify_massless(s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected classification to fail");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("rank-two block matrix") {
    // Parts {1,2} and {3,4}, element 5 a loop, off-diagonal block u v^T.
    const mpq_class u[] = {1, 3}, v[] = {2, mpq_class(1, 2)};
    oracle::RationalRows rows(5, std::vector<mpq_class>(5));
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) rows[a][2 + b] = rows[2 + b][a] = u[a] * v[b];
    }
    const auto s = SymmetricMatrix::from_rows(rows);
    const auto label = classify_massless(s).label;
    CHECK(label.signed_matroid.matroid() == RankTwoMatroid::from_parts(5, {{0, 1}, {2, 3}}));
    CHECK(label.signed_matroid.all_plus());
    CHECK(label.rank == 2);
    CHECK(label.kind == Region::Lorentzian);
    CHECK(label.dimension() == 3);
    CHECK(check_rank_one_blocks(s, label.signed_matroid.matroid()));
  }

  TEST_CASE("generic Gram with mixed multipliers") {
    MomentumConfig c;
    c.n = 4;
    c.r = 4;
    c.lambdas = {1.0, 0.8, -1.2, -0.6};
    c.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-0.48, -0.6, -0.64}};
    const auto cls = classify_massless(gram(c));
    CHECK(cls.label.signed_matroid ==
          SignedMatroid(RankTwoMatroid::uniform(4), std::vector<int>{1, 1, -1, -1}));
    CHECK(cls.label.rank == 4);
    CHECK(cls.label.kind == Region::Mandelstam);
    CHECK(cls.margin > 0.1);
  }

  TEST_CASE("structural errors") {
    // s12 = 0 and s14 = 0 force s24 = 0.
    const auto intransitive = SymmetricMatrix::from_rows(oracle::RationalRows{
        {0, 0, 1, 0}, {0, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 0}});
    CHECK(code_of(intransitive) == ErrorCode::IntransitiveZeros);
    const auto odd = SymmetricMatrix::from_rows(oracle::RationalRows{{0, 1, 1}, {1, 0, -1}, {1, -1, 0}});
    CHECK(code_of(odd) == ErrorCode::InconsistentSigns);
    const auto diagonal = SymmetricMatrix::from_rows(oracle::RationalRows{{1, 1}, {1, 0}});
    CHECK(code_of(diagonal) == ErrorCode::NonzeroDiagonal);
    CHECK(code_of(SymmetricMatrix(3, Mode::Exact)) == ErrorCode::ZeroMatrix);
    // Positive entries, consistent signs, but two positive eigenvalues.
    const auto quartic = SymmetricMatrix::from_rows(oracle::RationalRows{
        {0, 3, 1, 1}, {3, 0, 1, 1}, {1, 1, 0, 3}, {1, 1, 3, 0}});
    CHECK(code_of(quartic) == ErrorCode::NotMandelstam);
    // Three pairwise positive entries: a rank-3 point of U_3.
    const auto low = SymmetricMatrix::from_rows(oracle::RationalRows{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(classify_massless(low).label.rank == 3);
  }

  TEST_CASE("error witnesses name indices") {
    const auto intransitive = SymmetricMatrix::from_rows(oracle::RationalRows{
        {0, 0, 1, 0}, {0, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 0}});
    try {
      classify_massless(intransitive);
    } catch (const Error& e) {
      CHECK(e.witness().size() == 3);
    }
  }

  TEST_CASE("row sums put the label in the conserving region") {
    const mpq_class x(-1), y(-2), z = -x - y;
    const auto s = SymmetricMatrix::from_rows(oracle::RationalRows{{0, x, z, y}, {x, 0, y, z}, {z, y, 0, x}, {y, z, x, 0}});
    const auto label = classify_massless(s).label;
    CHECK(label.kind == Region::MMC);
    CHECK(label.rank == 3);
    CHECK(label.dimension() == 2);
  }

  TEST_CASE("rank-one blocks") {
    const auto p = RankTwoMatroid::from_parts(4, {{0, 1}, {2, 3}});
    const auto bad = SymmetricMatrix::from_rows(oracle::RationalRows{
        {0, 0, 1, 2}, {0, 0, 3, 1}, {1, 3, 0, 0}, {2, 1, 0, 0}});
    CHECK_FALSE(check_rank_one_blocks(bad, p));
    for (int seed = 0; seed < 20; ++seed) {
      for (const auto& sm : enumerate_signed(5)) {
        if (sm.matroid().num_parts() < 3 || seed > 2) continue;
        const auto c = sample_stratum(sm, 3, static_cast<std::uint64_t>(seed));
        const auto g = gram(c);
        const auto label = classify_massless(g).label;
        CHECK(check_rank_one_blocks(g, label.signed_matroid.matroid()));
      }
    }
  }

  TEST_CASE("float and exact classification agree") {
    const auto s = SymmetricMatrix::from_rows(oracle::RationalRows{{0, 2, 3}, {2, 0, 5}, {3, 5, 0}});
    CHECK(classify_massless(s).label == classify_massless(s.to_float()).label);
  }
}
