#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "nbscp/io.hpp"
#include "nbscp/model.hpp"
#include "nbscp/synth.hpp"

using namespace nbscp;
using Catch::Approx;

TEST_CASE("the bundled sample loads with sixteen features") {
  const auto data = load_dataset(std::string(NBSCP_DATA_DIR) + "/votes_sample.csv");
  CHECK(data.feature_count() == 16);
  CHECK(data.points.size() >= 200);
  CHECK(data.labels.size() == data.points.size());
}

TEST_CASE("csv parsing accepts the documented contract") {
  std::istringstream is("a,class,b\n1,0,0\n0,1,1\n");
  const auto data = parse_dataset_csv(is, "test");
  REQUIRE(data.points.size() == 2);
  CHECK(data.feature_names == std::vector<std::string>{"a", "b"});
  CHECK(data.points[0].bits == std::vector<std::uint8_t>{1, 0});
  CHECK(data.labels == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("csv parsing reports precise failures") {
  SECTION("missing class column") {
    std::istringstream is("a,b\n0,1\n");
    CHECK_THROWS_WITH(parse_dataset_csv(is, "t"), Catch::Matchers::ContainsSubstring("class"));
  }
  SECTION("non-binary cell names the position") {
    std::istringstream is("a,class\n2,0\n");
    CHECK_THROWS_WITH(parse_dataset_csv(is, "t"),
                      Catch::Matchers::ContainsSubstring("column 'a'") &&
                          Catch::Matchers::ContainsSubstring("'2'"));
  }
  SECTION("ragged row") {
    std::istringstream is("a,class\n0,1,1\n");
    CHECK_THROWS_WITH(parse_dataset_csv(is, "t"), Catch::Matchers::ContainsSubstring("row 2"));
  }
  SECTION("empty file") {
    std::istringstream is("");
    CHECK_THROWS_AS(parse_dataset_csv(is, "t"), validation_error);
  }
  SECTION("no feature columns") {
    std::istringstream is("class\n0\n");
    CHECK_THROWS_AS(parse_dataset_csv(is, "t"), validation_error);
  }
}

TEST_CASE("datasets round trip through csv") {
  const auto data = synth_dataset(5, 40, SynthProfile::mixed, 11);
  std::istringstream is(dataset_to_csv(data));
  const auto back = parse_dataset_csv(is, "roundtrip");
  REQUIRE(back.points.size() == data.points.size());
  CHECK(back.feature_names == data.feature_names);
  CHECK(back.labels == data.labels);
  for (std::size_t i = 0; i < data.points.size(); ++i)
    CHECK(back.points[i].bits == data.points[i].bits);
}

TEST_CASE("csv tables serialize deterministically and parse back") {
  CsvTable t;
  t.header = {"k", "value"};
  t.rows = {{"2", format_g12(0.123456789012345)}, {"3", format_g12(1.0 / 3.0)}};
  const auto text = t.to_string();
  CHECK(text == CsvTable::parse(text).to_string());
  CHECK(t.to_string() == text);

  CsvTable empty;
  empty.header = {"k", "value"};
  CHECK(empty.to_string() == "k,value\n");
}

TEST_CASE("synthetic datasets are reproducible") {
  const auto a = synth_dataset(2, 100, SynthProfile::mixed, 77);
  const auto b = synth_dataset(2, 100, SynthProfile::mixed, 77);
  REQUIRE(a.points.size() == b.points.size());
  CHECK(a.labels == b.labels);
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].bits == b.points[i].bits);
  const auto c = synth_dataset(2, 100, SynthProfile::mixed, 78);
  bool any_diff = c.labels != a.labels;
  for (std::size_t i = 0; i < a.points.size() && !any_diff; ++i)
    any_diff = c.points[i].bits != a.points[i].bits;
  CHECK(any_diff);
}

TEST_CASE("a single-row synthetic dataset is valid") {
  const auto d = synth_dataset(4, 1, SynthProfile::similar, 5);
  CHECK(d.points.size() == 1);
  CHECK(d.feature_count() == 4);
  CHECK_THROWS_AS(synth_dataset(0, 1, SynthProfile::similar, 5), validation_error);
}

TEST_CASE("profiles control the spread of estimated feature separations") {
  auto separation_spread = [](const Dataset& data) {
    const auto m = train(data, 1.0);
    double lo = 1.0, hi = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) {
      const double sep = std::abs(m.theta0[i] - m.theta1[i]);
      lo = std::min(lo, sep);
      hi = std::max(hi, sep);
    }
    return hi - lo;
  };
  const double similar = separation_spread(synth_dataset(8, 3000, SynthProfile::similar, 42));
  const double mixed = separation_spread(synth_dataset(8, 3000, SynthProfile::mixed, 42));
  CHECK(similar < 0.15);
  CHECK(mixed > 0.2);
}

TEST_CASE("model files round trip through the filesystem") {
  const auto m = train(synth_dataset(6, 50, SynthProfile::mixed, 9), 1.0);
  std::ostringstream os;
  save_model(m, os);
  const auto path = std::string("model_roundtrip.tmp");
  write_text_file(path, os.str());
  std::istringstream is(read_text_file(path));
  const auto back = load_model(is);
  CHECK(back.n == m.n);
  CHECK(back.prior0 == m.prior0);
  CHECK(back.theta0 == m.theta0);
  CHECK(back.theta1 == m.theta1);
  std::remove(path.c_str());
}
