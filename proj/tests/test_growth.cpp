#include <doctest.h>

#include <sstream>

#include "growthlab/budget.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/lattice.hpp"
#include "growthlab/numtheory.hpp"

using namespace growthlab;

TEST_SUITE_BEGIN("growth");

TEST_CASE("ig_zk") {
  CHECK(ig_zk(1, 3, Flavor::All) == 1);
  CHECK(ig_zk(6, 1, Flavor::All) == 60);
  CHECK(ig_zk(6, 1, Flavor::All) == brute_lambda_zk(6, 1).index());
  CHECK(ig_zk(10, 2, Flavor::Max) == 44100);
  CHECK(ig_zk(10, 1, Flavor::Max) == 210);
  CHECK(ig_zk(30, 1, Flavor::Max) == BigNat("6469693230"));
  // abelian groups: all = normal and max = max-normal
  for (uint64_t n : {2ull, 9ull, 30ull}) {
    CHECK(ig_zk(n, 2, Flavor::All) == ig_zk(n, 2, Flavor::Normal));
    CHECK(ig_zk(n, 2, Flavor::Max) == ig_zk(n, 2, Flavor::MaxNormal));
  }
  // product rule applied k times
  for (int k : {2, 3}) {
    BigNat base = ig_zk(12, 1, Flavor::All);
    CHECK(ig_zk(12, k, Flavor::All) == boost::multiprecision::pow(base, k));
  }
  // strict-less variant at a prime boundary
  CHECK(ig_zk(7, 1, Flavor::Max, true) == 30);
  CHECK(ig_zk(7, 1, Flavor::Max, false) == 210);
}

TEST_CASE("sl3 step functions") {
  CHECK(ig_slk_max_normal(167, 3) == 1);
  CHECK(ig_slk_max_normal(168, 3) == 168);
  CHECK(ig_slk_max_normal(10000, 3) == BigNat(168) * 5616);
  CHECK(ig_slk_max(6, 3) == 1);
  CHECK(ig_slk_max(7, 3) == 168);
  CHECK(ig_slk_max(31, 3) == BigNat(168) * 5616 * 372000);
  CHECK_THROWS_AS(ig_slk_max_normal(10, 2), std::invalid_argument);

  // jumps happen exactly at the PSL orders / projective-space sizes
  CHECK(ig_slk_max_normal(5615, 3) == 168);
  CHECK(ig_slk_max_normal(5616, 3) == BigNat(168) * 5616);
  CHECK(ig_slk_max(12, 3) == 168);
  CHECK(ig_slk_max(13, 3) == BigNat(168) * 5616);

  auto jumps = slk_jump_thresholds(3, Flavor::MaxNormal, 1, 10000);
  CHECK(jumps == std::vector<uint64_t>{168, 5616});
  auto mjumps = slk_jump_thresholds(3, Flavor::Max, 1, 100);
  CHECK(mjumps == std::vector<uint64_t>{7, 13, 31, 57});

  // log twins agree
  CHECK(log_ig_slk_max_normal(10000, 3) ==
        doctest::Approx(log_of(BigNat(168) * 5616)).epsilon(1e-12));
}

TEST_CASE("sl3 normal bracket") {
  auto [lo100, hi100] = ig_slk_normal_bracket(100, 3);
  CHECK(lo100.log == 0.0);
  CHECK(hi100.log == 0.0);

  auto [lo168, hi168] = ig_slk_normal_bracket(168, 3);
  CHECK(lo168.log == doctest::Approx(std::log(168.0)));
  CHECK(hi168.log == doctest::Approx(std::log(3.0 * 168)));
  CHECK(lo168.log <= hi168.log);

  // the exact max-normal value sits below the normal upper bound
  for (uint64_t n : {168ull, 5616ull, 100000ull, 10000000ull}) {
    auto [lo, hi] = ig_slk_normal_bracket(n, 3);
    CHECK(lo.log <= hi.log);
    CHECK(log_ig_slk_max_normal(n, 3) <= hi.log + 1e-9);
  }
}

TEST_CASE("ig_free exact values") {
  auto v59 = ig_free(59, 2, Flavor::MaxNormal, EvalMode::Exact);
  REQUIRE(v59.kind == GrowthValue::Kind::Exact);
  CHECK(v59.exact == primorial(59) * primorial(59));

  auto v60 = ig_free(60, 2, Flavor::MaxNormal, EvalMode::Exact);
  CHECK(v60.exact == primorial(59) * primorial(59) *
                         boost::multiprecision::pow(BigNat(60), 19));

  auto m5 = ig_free(5, 2, Flavor::Max, EvalMode::Exact);
  CHECK(m5.exact ==
        BigNat(900) * boost::multiprecision::pow(BigNat(60), 19));

  // the max flavor dominates max-normal pointwise (every |S| <= n entry
  // also has min index <= n); exact up to n = 6, estimate beyond
  for (uint64_t n : {5ull, 6ull}) {
    auto mn = ig_free(n, 2, Flavor::MaxNormal, EvalMode::Exact);
    auto mx = ig_free(n, 2, Flavor::Max, EvalMode::Exact);
    CHECK(mn.exact <= mx.exact);
  }
  for (uint64_t n : {10ull, 60ull, 150ull}) {
    auto mn = ig_free(n, 2, Flavor::MaxNormal, EvalMode::Estimate);
    auto mx = ig_free(n, 2, Flavor::Max, EvalMode::Estimate);
    CHECK(mn.log_high() <= mx.log_high() + 1e-9);
  }
}

TEST_CASE("ig_free estimate series") {
  auto ns = log_spaced(1000, 100000, 12);
  auto series = ig_free_series(ns, 2, Flavor::MaxNormal, EvalMode::Estimate);
  REQUIRE(series.points.size() == ns.size());
  double prev = 0;
  for (const auto& [n, v] : series.points) {
    CHECK(v.log_low() >= prev - 1e-9);  // non-decreasing
    prev = v.log_low();
    CHECK(v.mode == EvalMode::Estimate);
  }
  // brackets appear once entries with unknown |Out| are inside (PSU3(3) at 6048)
  auto at5000 = ig_free(5000, 2, Flavor::MaxNormal, EvalMode::Estimate);
  CHECK(at5000.kind == GrowthValue::Kind::Log);
  auto at7000 = ig_free(7000, 2, Flavor::MaxNormal, EvalMode::Estimate);
  CHECK(at7000.kind == GrowthValue::Kind::Bracket);
  CHECK(at7000.log_lo < at7000.log_hi);
}

TEST_CASE("ig_free hybrid uses exact counts under the cap") {
  auto est = ig_free(60, 2, Flavor::MaxNormal, EvalMode::Estimate);
  auto hyb = ig_free(60, 2, Flavor::MaxNormal, EvalMode::Hybrid);
  auto ex = ig_free(60, 2, Flavor::MaxNormal, EvalMode::Exact);
  // hybrid log equals the exact value's log; the estimate overshoots (d = 30 vs 19)
  CHECK(hyb.log_low() == doctest::Approx(log_of(ex.exact)).epsilon(1e-9));
  CHECK(est.log_low() > hyb.log_low());
  CHECK(hyb.mode == EvalMode::Hybrid);
}

TEST_CASE("ig_free exact beyond the cap refuses") {
  CHECK_THROWS_AS(ig_free(1092, 2, Flavor::MaxNormal, EvalMode::Exact),
                  CapExceeded);
  CHECK_THROWS_AS(ig_free(7, 2, Flavor::Max, EvalMode::Exact), CapExceeded);
}

TEST_CASE("family growth") {
  auto empty = family_growth(Family::PSL, 2, 59, 2, Flavor::MaxNormal);
  CHECK(empty.value.log_low() == 0.0);
  CHECK(empty.dimension == 3);

  auto psl2 = family_growth(Family::PSL, 2, 1000000, 2, Flavor::MaxNormal);
  CHECK(psl2.value.log_low() > 0);

  auto alt = family_growth(Family::Alternating, 0, 1000, 2, Flavor::MaxNormal);
  CHECK(alt.value.log_low() > 0);

  auto fams = lie_families_in_census(1000000);
  CHECK(std::find(fams.begin(), fams.end(),
                  std::pair<Family, long long>{Family::PSL, 2}) != fams.end());
  CHECK(std::find(fams.begin(), fams.end(),
                  std::pair<Family, long long>{Family::B, 2}) != fams.end());
}

TEST_CASE("PSL_2 family growth exponent approaches (k-1) + 1/3") {
  std::vector<std::pair<double, double>> pts;
  for (uint64_t n : log_spaced(1000, 10000000, 12))
    pts.emplace_back(
        static_cast<double>(n),
        family_growth(Family::PSL, 2, n, 2, Flavor::MaxNormal).value.log_mid());
  auto fit = fit_exponent(pts);
  CHECK(fit.alpha > 1.2);
  CHECK(fit.alpha < 1.45);
}

TEST_CASE("alternating family growth stays under n^{k-1} log n") {
  // ratio log i_A(n) / (n log n) bounded across four decades
  double worst = 0;
  for (uint64_t n : log_spaced(100, 1000000, 9)) {
    double v =
        family_growth(Family::Alternating, 0, n, 2, Flavor::MaxNormal)
            .value.log_high();
    worst = std::max(worst, v / (static_cast<double>(n) *
                                 std::log(static_cast<double>(n))));
  }
  CHECK(worst > 0);
  CHECK(worst < 1.0);
}

TEST_CASE("ig_product") {
  GrowthSeries za, zb;
  za.flavor = zb.flavor = Flavor::All;
  for (uint64_t n : {1ull, 2ull, 4ull, 6ull}) {
    za.points.emplace_back(n, GrowthValue::exact_value(ig_zk(n, 1, Flavor::All)));
    zb.points.emplace_back(n, GrowthValue::exact_value(ig_zk(n, 1, Flavor::All)));
  }
  auto prod = ig_product(za, zb);
  CHECK(prod.points[3].second.exact == 3600);
  CHECK(prod.points[3].second.exact == brute_lambda_zk(6, 2).index());
  // commutativity
  auto prod2 = ig_product(zb, za);
  CHECK(prod2.points[3].second.exact == prod.points[3].second.exact);

  GrowthSeries trivial;
  trivial.flavor = Flavor::All;
  for (uint64_t n : {1ull, 2ull, 4ull, 6ull})
    trivial.points.emplace_back(n, GrowthValue::exact_value(BigNat(1)));
  auto same = ig_product(za, trivial);
  for (size_t i = 0; i < za.points.size(); ++i)
    CHECK(same.points[i].second.exact == za.points[i].second.exact);
}

TEST_CASE("fit recovers a synthetic exponent") {
  std::vector<std::pair<double, double>> pts;
  for (uint64_t n : log_spaced(1000, 1000000000, 16))
    pts.emplace_back(static_cast<double>(n),
                     std::pow(static_cast<double>(n), 4.0 / 3.0));
  auto fit = fit_exponent(pts);
  CHECK(fit.alpha == doctest::Approx(4.0 / 3.0).epsilon(1e-6));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-9));

  // too few points / insufficient span
  CHECK_THROWS_AS(
      fit_exponent(std::vector<std::pair<double, double>>(pts.begin(),
                                                          pts.begin() + 4)),
      std::invalid_argument);
}

TEST_CASE("csv cells are exact integers or log-prefixed") {
  auto ns = log_spaced(1000, 20000, 9);
  auto series = ig_free_series(ns, 2, Flavor::MaxNormal, EvalMode::Estimate);
  auto csv = series_to_csv(series);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    auto c1 = line.find(','), c2 = line.find(',', line.find(',') + 1);
    std::string value = line.substr(c1 + 1, c2 - c1 - 1);
    bool exact = value.find_first_not_of("0123456789") == std::string::npos;
    bool logged = value.rfind("log:", 0) == 0;
    CHECK((exact || logged));
  }
}

TEST_SUITE_END();
