#include <doctest.h>

#include <json.hpp>
#include <map>

#include "growthlab/census.hpp"
#include "growthlab/numtheory.hpp"

using namespace growthlab;

TEST_SUITE_BEGIN("census");

TEST_CASE("order formulas") {
  CHECK(order_of(Family::Alternating, 5, 0) == 60);
  CHECK(order_of(Family::PSL, 2, 7) == 168);
  CHECK(order_of(Family::PSL, 3, 2) == 168);
  CHECK(order_of(Family::TwoB2, 0, 8) == 29120);
  CHECK(order_of(Family::B, 2, 3) == 25920);
  CHECK(order_of(Family::TwoA, 2, 3) == 6048);
  CHECK(order_of(Family::PSL, 3, 3) == 5616);
  CHECK(order_of(Family::G2, 0, 3) == BigNat("4245696"));
  CHECK_THROWS_AS(order_of(Family::Sporadic, 0, 0), std::invalid_argument);
}

TEST_CASE("order formula guards") {
  CHECK_THROWS_AS(order_of(Family::PSL, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::PSL, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::PSL, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::G2, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::TwoB2, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::TwoB2, 0, 16), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::TwoG2, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::B, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::TwoA, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(order_of(Family::Alternating, 4, 0), std::invalid_argument);
}

TEST_CASE("PSL order times gcd is the SL order") {
  for (auto [k, q] : std::vector<std::pair<int, int>>{
           {2, 5}, {2, 7}, {2, 9}, {3, 2}, {3, 4}, {4, 3}}) {
    BigNat sl = 1;
    BigNat qb = q;
    for (int i = 0; i < k * (k - 1) / 2; ++i) sl *= qb;
    BigNat qp = qb;
    for (int i = 2; i <= k; ++i) {
      qp *= qb;
      sl *= qp - 1;
    }
    CHECK(order_of(Family::PSL, k, q) * std::gcd(k, q - 1) == sl);
  }
}

TEST_CASE("table leading-order cross-check") {
  // exact order tracks q^dim up to the bounded gcd and (1 - q^-i) factors
  auto check = [](Family f, long long m, long long q) {
    double lq = std::log(static_cast<double>(q));
    double exponent = log_of(order_of(f, m, q)) / lq;
    CHECK(std::abs(exponent - family_dimension(f, m)) < 2.5);
  };
  check(Family::PSL, 2, 7);
  check(Family::PSL, 3, 3);
  check(Family::B, 2, 3);
  check(Family::B, 3, 2);
  check(Family::D, 4, 2);
  check(Family::TwoA, 2, 3);
  check(Family::TwoD, 4, 2);
  check(Family::G2, 0, 3);
  check(Family::F4, 0, 2);
  check(Family::E6, 0, 2);
  check(Family::E7, 0, 2);
  check(Family::E8, 0, 2);
  check(Family::TwoE6, 0, 2);
  check(Family::ThreeD4, 0, 2);
  check(Family::TwoB2, 0, 8);
  check(Family::TwoG2, 0, 27);
  check(Family::TwoF4, 0, 8);
}

TEST_CASE("census slices") {
  CHECK(enumerate_simple(BigNat(59), false, true).entries.empty());

  auto at60 = enumerate_simple(BigNat(60), false, true);
  REQUIRE(at60.entries.size() == 1);
  CHECK(at60.entries[0].name == "A5");

  auto at400 = enumerate_simple(BigNat(400), false, true);
  REQUIRE(at400.entries.size() == 3);
  CHECK(at400.entries[0].name == "A5");
  CHECK(at400.entries[1].name == "PSL2(7)");
  CHECK(at400.entries[2].name == "A6");
}

TEST_CASE("nonabelian slice up to 1e4 is the frozen list") {
  auto slice = enumerate_simple(BigNat(10000), false, true);
  std::vector<uint64_t> orders;
  for (const auto& d : slice.entries)
    orders.push_back(d.order.convert_to<uint64_t>());
  CHECK(orders == std::vector<uint64_t>{60, 168, 360, 504, 660, 1092, 2448,
                                        2520, 3420, 4080, 5616, 6048, 6072,
                                        7800, 7920, 9828});
}

TEST_CASE("equal-order non-isomorphic pair is kept") {
  auto slice = enumerate_simple(BigNat(25000), false, true);
  std::vector<std::string> at20160;
  for (const auto& d : slice.entries)
    if (d.order == 20160) at20160.push_back(d.name);
  CHECK(at20160 == std::vector<std::string>{"A8", "PSL3(4)"});
}

TEST_CASE("abelian inclusion") {
  auto slice = enumerate_simple(BigNat(12), true, true);
  std::vector<std::string> names;
  for (const auto& d : slice.entries) names.push_back(d.name);
  CHECK(names == std::vector<std::string>{"Z2", "Z3", "Z5", "Z7", "Z11"});
}

TEST_CASE("describe canonicalizes the exceptional isomorphisms") {
  CHECK(describe(Family::PSL, 2, 4).name == "A5");
  CHECK(describe(Family::PSL, 2, 5).name == "A5");
  CHECK(describe(Family::PSL, 2, 9).name == "A6");
  CHECK(describe(Family::PSL, 3, 2).name == "PSL2(7)");
  CHECK(describe(Family::PSL, 4, 2).name == "A8");
  CHECK(describe(Family::TwoA, 3, 2).name == "B2(3)");
  CHECK(describe(Family::C, 3, 2).name == "B3(2)");
  CHECK(describe(Family::C, 3, 3).name == "C3(3)");
}

TEST_CASE("min_max_subgroup_index") {
  CHECK(*describe(Family::Alternating, 7, 0).min_index == 7);
  CHECK(*describe(Family::PSL, 2, 13).min_index == 14);
  CHECK(*describe(Family::PSL, 2, 9).min_index == 6);   // acts as A6
  CHECK(*describe(Family::PSL, 2, 11).min_index == 11);
  CHECK(*describe(Family::PSL, 2, 7).min_index == 7);
  CHECK(*describe(Family::PSL, 3, 3).min_index == 13);
  auto b23 = describe(Family::B, 2, 3);
  CHECK(b23.min_index_approx);
  CHECK(*b23.min_index == 27);  // table value q^{2m-1}
  bool approx = false;
  min_max_subgroup_index(b23, &approx);
  CHECK(approx);
}

TEST_CASE("out orders") {
  CHECK(*describe(Family::Alternating, 5, 0).out_order == 2);
  CHECK(*describe(Family::Alternating, 6, 0).out_order == 4);
  CHECK(*describe(Family::PSL, 2, 7).out_order == 2);
  CHECK(*describe(Family::PSL, 2, 8).out_order == 3);   // field part only
  CHECK(*describe(Family::PSL, 2, 9).out_order == 4);   // = Out(A6)
  CHECK(*describe(Family::PSL, 3, 3).out_order == 2);
  CHECK(!describe(Family::B, 2, 3).out_order);
  CHECK(!describe(Family::TwoB2, 0, 8).out_order);
}

TEST_CASE("sporadic entries") {
  auto slice = enumerate_simple(BigNat(100000), false, true);
  bool m11 = false;
  for (const auto& d : slice.entries)
    if (d.name == "M11") {
      m11 = true;
      CHECK(d.order == 7920);
      CHECK(!d.out_order);
      CHECK(!d.min_index);
      CHECK(!d.constructible);
    }
  CHECK(m11);
  auto no_sporadic = enumerate_simple(BigNat(100000), false, false);
  CHECK(slice.entries.size() == no_sporadic.entries.size() + 2);  // M11, M12
}

TEST_CASE("json export parses back") {
  auto slice = enumerate_simple(BigNat(400), false, true);
  auto j = nlohmann::json::parse(census_to_json(slice));
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][0]["order"] == "60");
  CHECK(j["entries"][0]["flags"].size() == 1);
}

TEST_SUITE_END();
