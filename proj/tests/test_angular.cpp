#include <vcsirreps/angular.hpp>

#include "oracles/oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace vcsirreps;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST(ClebschGordan, CouplingWithZero) {
  for (int tj = 0; tj <= 6; ++tj)
    for (int tm = -tj; tm <= tj; tm += 2) EXPECT_EQ(clebsch_gordan(h(tj), h(tm), 0, 0, h(tj), h(tm)), Radical(1));
}

TEST(ClebschGordan, TriangleViolationIsZero) {
  EXPECT_TRUE(clebsch_gordan(1, 0, 1, 0, 3, 0).is_zero());
  EXPECT_TRUE(clebsch_gordan(1, 1, 1, 0, 2, 0).is_zero());
}

TEST(ClebschGordan, SingletOfTwoSpinHalves) {
  // brute-force oracle value 0.7071..., frozen as +1/sqrt(2)
  EXPECT_NEAR(oracles::cg_bruteforce(1, 1, 1, -1, 0, 0), std::sqrt(0.5), 1e-14);
  EXPECT_EQ(clebsch_gordan(kHalf, kHalf, kHalf, -kHalf, 0, 0), Radical::sqrt(Rational(1, 2)));
}

TEST(ClebschGordan, AgreesWithBruteForceOracle) {
  for (int tj1 = 0; tj1 <= 5; ++tj1)
    for (int tj2 = 0; tj2 <= 4; ++tj2)
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2)
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
          for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            const int tM = tm1 + tm2;
            if (std::abs(tM) > tJ) continue;
            EXPECT_NEAR(clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tM)).to_double(),
                        oracles::cg_bruteforce(tj1, tm1, tj2, tm2, tJ, tM), 1e-12)
                << tj1 << " " << tm1 << " " << tj2 << " " << tm2 << " " << tJ;
          }
}

TEST(ClebschGordan, InputErrors) {
  EXPECT_THROW(clebsch_gordan(1, kHalf, 1, 0, 1, kHalf), std::invalid_argument);
  EXPECT_THROW(clebsch_gordan(1, 2, 1, 0, 2, 2), std::invalid_argument);
}

TEST(ClebschGordan, ExchangeSymmetryExact) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> spin(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const int tj1 = spin(rng), tj2 = spin(rng);
    std::uniform_int_distribution<int> jd(0, (tj1 + tj2 - std::abs(tj1 - tj2)) / 2);
    const int tJ = std::abs(tj1 - tj2) + 2 * jd(rng);
    std::uniform_int_distribution<int> md1(0, tj1), md2(0, tj2);
    const int tm1 = -tj1 + 2 * md1(rng), tm2 = -tj2 + 2 * md2(rng);
    if (std::abs(tm1 + tm2) > tJ) continue;
    Radical a = clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tm1 + tm2));
    Radical b = clebsch_gordan(h(tj2), h(tm2), h(tj1), h(tm1), h(tJ), h(tm1 + tm2));
    EXPECT_EQ(a, phase(h(tj1 + tj2 - tJ)) > 0 ? b : -b);
  }
}

TEST(ClebschGordan, ColumnOrthonormalitySweep) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> spin(0, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const int tj1 = spin(rng), tj2 = spin(rng);
    for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2)
      for (int tM = -tJ; tM <= tJ; tM += 2) {
        Rational sum = 0;
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
          const int tm2 = tM - tm1;
          if (std::abs(tm2) > tj2) continue;
          sum += clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tM)).square();
        }
        EXPECT_EQ(sum, 1);
      }
  }
}

TEST(RacahU, ZeroSpinRecoupling) {
  for (int ta = 0; ta <= 6; ++ta)
    for (int tc = 0; tc <= 6; ++tc)
      for (int td = std::abs(ta - tc); td <= ta + tc; td += 2)
        EXPECT_EQ(racah_U(h(ta), 0, h(tc), h(td), h(ta), h(td)), Radical(1));
}

TEST(RacahU, HalfHalfOneHalfHasNoCoupling) {
  // a + b + c + d is half-odd, so no (e, f) satisfies all four triangles
  for (int te = 0; te <= 4; ++te)
    for (int tf = 0; tf <= 4; ++tf) EXPECT_TRUE(racah_U(kHalf, kHalf, 1, kHalf, h(te), h(tf)).is_zero());
}

TEST(RacahU, UnitarityTwoByTwo) {
  for (int te : {1, 3})
    for (int tep : {1, 3}) {
      Surd sum;
      for (int tf : {0, 2}) sum += Surd(racah_U(1, kHalf, 1, kHalf, h(te), h(tf)) * racah_U(1, kHalf, 1, kHalf, h(tep), h(tf)));
      EXPECT_EQ(sum, Surd(te == tep ? 1 : 0));
    }
}

TEST(RacahU, FrozenOracleValues) {
  // contracted-CG oracle: sqrt(3)/2, -1/2, sqrt(3)/2, 1/2
  EXPECT_NEAR(oracles::racah_u_contracted(1, 1, 1, 1, 0, 2), std::sqrt(3.0) / 2, 1e-14);
  EXPECT_EQ(racah_U(kHalf, kHalf, kHalf, kHalf, 0, 1), Radical::sqrt(Rational(3, 4)));
  EXPECT_EQ(racah_U(kHalf, kHalf, kHalf, kHalf, 0, 0), Radical(Rational(-1, 2)));
  EXPECT_EQ(racah_U(kHalf, kHalf, kHalf, kHalf, 1, 0), Radical::sqrt(Rational(3, 4)));
  EXPECT_EQ(racah_U(kHalf, kHalf, kHalf, kHalf, 1, 1), Radical(Rational(1, 2)));
}

TEST(RacahU, AgreesWithContractedOracle) {
  for (int ta = 0; ta <= 4; ++ta)
    for (int tb = 0; tb <= 3; ++tb)
      for (int tc = 0; tc <= 4; ++tc)
        for (int td = 0; td <= 3; ++td)
          for (int te = std::abs(ta - tb); te <= ta + tb; te += 2)
            for (int tf = std::abs(tb - td); tf <= tb + td; tf += 2)
              EXPECT_NEAR(racah_U(h(ta), h(tb), h(tc), h(td), h(te), h(tf)).to_double(),
                          oracles::racah_u_contracted(ta, tb, tc, td, te, tf), 1e-12)
                  << ta << tb << tc << td << te << tf;
}

TEST(RacahU, InvalidTrianglesGiveZero) {
  EXPECT_TRUE(racah_U(1, kHalf, h(3), kHalf, h(3), 1).is_zero());
}

TEST(Memo, ConcurrentCallersAgree) {
  std::vector<std::thread> threads;
  std::vector<Radical> results(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { results[t] = racah_U(2, h(3), h(5), 1, h(3), 1) * clebsch_gordan(3, 1, 2, -1, 4, 0); });
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
  EXPECT_GT(coefficient_cache_stats().cg_entries, 0u);
}
