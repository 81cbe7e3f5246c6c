#include <catch2/catch.hpp>

#include "fardiff/fixtures.hpp"
#include "fardiff/serialize.hpp"

using namespace fardiff;

TEST_CASE("symbolic and numeric text forms") {
  const auto dec = decompose(2014, SequenceFamily::skipponacci(1));
  CHECK(symbolic_form(dec) == "+S17 -S14 +S9 -S6 -S2");
  CHECK(numeric_form(dec) == "2584-610+55-13-2");
  CHECK(symbolic_form({{}, SequenceFamily::skipponacci(1)}).empty());
}

TEST_CASE("decomposition JSON carries family, indices and signs") {
  const auto dec = decompose(2014, SequenceFamily::skipponacci(1));
  const auto j = decomposition_json(dec);
  CHECK(j["family"]["kind"] == "skipponacci");
  CHECK(j["family"]["k"] == 1);
  CHECK(j["family"]["s"] == 4);
  CHECK(j["family"]["d"] == 3);
  REQUIRE(j["terms"].size() == 5);
  CHECK(j["terms"][0]["index"] == 17);
  CHECK(j["terms"][0]["sign"] == 1);
  CHECK(j["terms"][0]["value"] == "2584");
  CHECK(j["terms"][1]["sign"] == -1);
  CHECK(j["value"] == "2014");
}

TEST_CASE("stats CSV dialect") {
  const auto t = build_count_table(1, 8);
  std::vector<MomentSummary> rows{moments(t, 6, 1, 0), moments(t, 8, 1, 0)};
  const auto csv = stats_csv(rows);
  CHECK(csv.rfind("n,a,b,mean,variance,skewness,excess_kurtosis,corr_KL\n", 0) == 0);
  CHECK(csv.find("\r") == std::string::npos);
  CHECK(csv.back() == '\n');
  CHECK(csv == stats_csv(rows));  // deterministic
}

TEST_CASE("gaps CSV dialect") {
  const auto emp = empirical_gaps(1, 8);
  const auto cnt = counting_gaps(1, 8);
  const auto lim = theoretical_gaps(1, 12);
  const auto csv = gaps_csv(1, {{8, emp, cnt, lim}});
  CHECK(csv.rfind("k,n,j,p_empirical,p_counting,p_theoretical\n", 0) == 0);
  CHECK(csv.find("1,8,3,") != std::string::npos);
}

TEST_CASE("constants JSON uses fixed precision") {
  const auto gc = growth_constants(0, 1, 0);
  const auto j = constants_json(gc);
  CHECK(j["k"] == 0);
  CHECK(j["lambda1"] == Approx(2.0));
  CHECK(j["A"].get<double>() > 0);
  CHECK(constants_json(gc).dump() == j.dump());
}

TEST_CASE("format_number gives 12 significant digits") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.0) == "2");
}
