#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "mchar/io.hpp"

using namespace mchar;
using nlohmann::json;

TEST_CASE("complex formatting") {
  CHECK(format_complex({1, 0}) == "1+0i");
  CHECK(format_complex({-0.5, -2}) == "-0.5-2i");
}

TEST_CASE("table json round trip") {
  const Group g(5);
  const Conjugacy conj(g);
  const auto t = build_table(conj);
  const json j = json::parse(table_json(t));
  CHECK(j["q"] == 5);
  CHECK(j["group_order"] == 15600);
  CHECK(j["classes"].size() == 15);
  REQUIRE(j["characters"].size() == 15);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = j["characters"][r];
    CHECK(row["label"] == label(t.rows[r].label));
    CHECK(row["degree"] == t.rows[r].degree);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const auto v = t.rows[r].values[c].eval();
      CHECK(std::abs(row["values"][c]["re"].get<double>() - v.real()) < 1e-12);
      CHECK(std::abs(row["values"][c]["im"].get<double>() - v.imag()) < 1e-12);
      CharValue back(t.rows[r].values[c].modulus());
      for (const auto& term : row["exact"][c]) {
        back += CharValue::root(back.modulus(), term["t"].get<std::int64_t>(), term["c"].get<std::int64_t>());
      }
      CHECK(back == t.rows[r].values[c]);
    }
  }
}

TEST_CASE("table csv shape") {
  const Group g(3);
  const Conjugacy conj(g);
  const auto t = build_table(conj);
  std::istringstream in(table_csv(t));
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(std::count(line.begin(), line.end(), ',') == 8);
  }
  CHECK(lines == 9);
  CHECK(table_csv(t).rfind("character,I,", 0) == 0);
}

TEST_CASE("inventory and reports") {
  const Group g(3);
  const Conjugacy conj(g);
  const json inv = json::parse(inventory_json(conj));
  REQUIRE(inv.size() == 8);
  CHECK(inv[0]["label"] == "I");
  CHECK(inv[0]["size"] == 1);
  CHECK(inv[0]["centralizer"] == 720);

  std::vector<CheckReport> reps{{"a", true, 0.1, 1, 0, ""}, {"b", false, 2, 1, 0, "bad"}};
  const json rj = json::parse(reports_json(reps));
  CHECK(rj.size() == 2);
  CHECK(rj[1]["passed"] == false);
  const auto text = reports_text(reps);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);

  CMatrix m(2, 2);
  m << 1, std::complex<double>(0, 1), 0, -1;
  const json mj = json::parse(matrix_json(m));
  CHECK(mj[0][1][1] == 1.0);
  CHECK(mj[1][1][0] == -1.0);
}
