#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <vector>

#include "bott/census.hpp"
#include "bott/json_io.hpp"

using namespace bott;

TEST_CASE("matrix JSON round trip", "[json]") {
  std::mt19937 gen(20u);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 5u);
    int_matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<entry_t>(gen() % 21u) - 10;
    CHECK(matrix_from_json(to_json(m)) == m);
  }
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), std::invalid_argument);
}

TEST_CASE("typed JSON round trips", "[json]") {
  const char_matrix_cube c(int_matrix({{-1, -2}, {-1, -1}}));
  CHECK(char_matrix_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(char_matrix_from_json(json::parse(R"({"n":3,"lambda_star":[[1]]})")),
                  std::invalid_argument);

  const bott_matrix a(int_matrix({{-1, -2, 0}, {0, -1, 4}, {0, 0, -1}}));
  CHECK(bott_matrix_from_json(to_json(a)) == a);

  const fan_2d f{{{1, 0}, {0, 1}, {-1, -2}, {0, -1}}};
  CHECK(fan_from_json(to_json(f)) == f);

  const circle_vector nu({1, -1, 1});
  CHECK(circle_vector_from_json(to_json(nu)) == nu);

  const simplicial_complex k(4, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
  const simplicial_complex back = complex_from_json(to_json(k));
  CHECK(back.vertex_count() == k.vertex_count());
  CHECK(back.facets() == k.facets());
}

TEST_CASE("classification record for the non-Bott square", "[census]") {
  const census_record r = classify(char_matrix_cube(int_matrix({{-1, -2}, {-1, -1}})));
  CHECK(r.valid);
  CHECK_FALSE(r.bott);
  CHECK_FALSE(r.omni.has_value());
  CHECK(r.semifree.empty());
  CHECK_FALSE(r.all_signs_positive);
  CHECK(r.signs == std::vector<int>{1, 1, 1, -1});
  CHECK_FALSE(r.strict_factorization.has_value());
  CHECK_FALSE(r.ring_iso_to_product);

  const json j = record_to_json(r);
  CHECK(j["valid"] == true);
  CHECK(j["bott"] == false);
  CHECK(j["strict_factorization"].is_null());
  CHECK(j["semifree_vectors"].is_array());
  CHECK(j["semifree_vectors"].empty());
}

TEST_CASE("classification record for a Bott input", "[census]") {
  const census_record r =
      classify(bott_matrix(int_matrix({{-1, -2, -2}, {0, -1, 0}, {0, 0, -1}})));
  CHECK(r.valid);
  CHECK(r.bott);
  CHECK(r.all_signs_positive);
  REQUIRE(r.strict_factorization.has_value());
  CHECK(*r.strict_factorization);
  CHECK(*r.relaxed_factorization);
  CHECK(*r.integer_factorization);
  CHECK(r.ring_iso_to_product);
  CHECK_FALSE(r.semifree.empty());
  REQUIRE(r.recognition.has_value());
  CHECK(conjugate(r.input.lambda_star, r.recognition->sigma) ==
        r.recognition->a.matrix().transposed());
}

TEST_CASE("hirzebruch parity shows up in records", "[census]") {
  const census_record even = classify(bott_matrix::hirzebruch(-4));
  CHECK(even.ring_iso_to_product);
  const census_record odd = classify(bott_matrix::hirzebruch(3));
  CHECK_FALSE(odd.ring_iso_to_product);
  CHECK(odd.valid);
  CHECK(odd.bott);
}

TEST_CASE("census output is deterministic across worker counts", "[census]") {
  census_options opt;
  opt.rank = 2;
  opt.entry_min = -2;
  opt.entry_max = 2;

  std::ostringstream one, four;
  opt.jobs = 1;
  const census_summary s1 = run_census(opt, one);
  opt.jobs = 4;
  const census_summary s4 = run_census(opt, four);
  CHECK(one.str() == four.str());
  CHECK(s1.valid == s4.valid);
  CHECK(s1.valid > 0);
  CHECK(s1.bott > 0);
  CHECK(s1.bott < s1.valid);  // the sweep contains non-Bott matrices

  // Re-running is byte-identical.
  std::ostringstream again;
  opt.jobs = 1;
  run_census(opt, again);
  CHECK(one.str() == again.str());
}

TEST_CASE("bott census sweeps upper entries only", "[census]") {
  census_options opt;
  opt.rank = 2;
  opt.entry_min = -2;
  opt.entry_max = 2;
  opt.bott_only = true;
  std::ostringstream out;
  const census_summary s = run_census(opt, out);
  CHECK(s.candidates == 5);  // one twist slot
  CHECK(s.valid == 5);
  CHECK(s.bott == 5);

  std::istringstream lines(out.str());
  std::string line;
  int parsed = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    CHECK(j["valid"] == true);
    CHECK(j["bott"] == true);
    ++parsed;
  }
  CHECK(parsed == 5);
}

TEST_CASE("every census verdict is reproducible from the input", "[census]") {
  census_options opt;
  opt.rank = 2;
  opt.entry_min = -1;
  opt.entry_max = 1;
  std::ostringstream out;
  run_census(opt, out);
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    const census_record again = classify(char_matrix_from_json(j));
    CHECK(record_to_json(again) == j);
  }
}
