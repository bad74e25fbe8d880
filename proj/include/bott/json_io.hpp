#pragma once

// JSON schemas for every value that crosses the CLI boundary. Matrices are
// arrays of arrays, row-major. Witness permutations and generator subsets
// are serialized 1-based to match the facet/generator numbering used in the
// reports; everything in memory stays 0-based.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bott/cohomology.hpp"
#include "bott/fan2d.hpp"
#include "bott/intmat.hpp"
#include "bott/quasitoric.hpp"
#include "bott/semifree.hpp"
#include "bott/simplicial.hpp"

namespace bott {

using json = nlohmann::ordered_json;

inline json to_json(const int_matrix& m) { return json(m.rows()); }

inline int_matrix matrix_from_json(const json& j) {
  detail::check_arg(j.is_array() && !j.empty(), "matrix: expected a non-empty array of rows");
  std::vector<std::vector<entry_t>> rows;
  for (const auto& row : j) {
    detail::check_arg(row.is_array(), "matrix: rows must be arrays");
    rows.push_back(row.get<std::vector<entry_t>>());
  }
  return int_matrix(rows);
}

inline json to_json(const char_matrix_cube& c) {
  return json{{"n", c.n()}, {"lambda_star", to_json(c.lambda_star)}};
}

inline char_matrix_cube char_matrix_from_json(const json& j) {
  detail::check_arg(j.contains("lambda_star"), "char matrix: missing lambda_star");
  char_matrix_cube c(matrix_from_json(j.at("lambda_star")));
  if (j.contains("n"))
    detail::check_arg(j.at("n").get<int>() == c.n(), "char matrix: n does not match matrix");
  return c;
}

inline json to_json(const bott_matrix& a) {
  return json{{"n", a.n()}, {"a", to_json(a.matrix())}};
}

inline bott_matrix bott_matrix_from_json(const json& j) {
  detail::check_arg(j.contains("a"), "bott matrix: missing a");
  bott_matrix a(matrix_from_json(j.at("a")));
  if (j.contains("n"))
    detail::check_arg(j.at("n").get<int>() == a.n(), "bott matrix: n does not match matrix");
  return a;
}

inline json to_json(const permutation& p) {
  std::vector<int> images;
  for (int i = 0; i < p.n(); ++i) images.push_back(p(i) + 1);
  return json(images);
}

inline json to_json(const circle_vector& v) { return json(v.values()); }

inline circle_vector circle_vector_from_json(const json& j) {
  return circle_vector(j.get<std::vector<entry_t>>());
}

inline json to_json(const factorization& f) {
  json steps = json::array();
  for (const auto& s : f.steps)
    steps.push_back(json{{"column", s.column + 1}, {"source", s.source + 1}, {"scale", s.scale}});
  return json{{"n", f.n}, {"steps", steps}};
}

template <class Coeff>
json to_json(const ring_element<Coeff>& e) {
  json terms = json::array();
  for (const auto& [mask, c] : e.terms()) {
    std::vector<int> subset;
    for (int i = 0; i < 32; ++i)
      if ((mask >> i) & 1u) subset.push_back(i + 1);
    terms.push_back(json::array({json(subset), coefficient_to_int(c)}));
  }
  return json{{"terms", terms}};
}

template <class Coeff>
json to_json(const graded_ring<Coeff>& r) {
  json rules = json::array();
  for (int k = 0; k < r.generator_count(); ++k) {
    for (const auto& [mask, c] : r.square_rule(k).terms()) {
      std::vector<int> subset;
      for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1u) subset.push_back(i + 1);
      rules.push_back(json::array({k + 1, json(subset), coefficient_to_int(c)}));
    }
  }
  return json{{"n", r.generator_count()}, {"square_rules", rules}};
}

inline json to_json(const simplicial_complex& k) {
  json faces = json::array();
  for (std::uint32_t f : k.facets()) {
    std::vector<int> verts;
    for (int i = 0; i < k.vertex_count(); ++i)
      if ((f >> i) & 1u) verts.push_back(i);
    faces.push_back(verts);
  }
  return json{{"vertices", k.vertex_count()}, {"facets", faces}};
}

inline simplicial_complex complex_from_json(const json& j) {
  detail::check_arg(j.contains("vertices") && j.contains("facets"),
                    "complex: need vertices and facets");
  return simplicial_complex(j.at("vertices").get<int>(),
                            j.at("facets").get<std::vector<std::vector<int>>>());
}

inline simple_polytope polytope_from_json(const json& j) {
  detail::check_arg(j.contains("facets") && j.contains("vertex_facets"),
                    "polytope: need facets and vertex_facets");
  simple_polytope p;
  p.facet_count = j.at("facets").get<int>();
  p.vertex_facets = j.at("vertex_facets").get<std::vector<std::vector<int>>>();
  return p;
}

inline json to_json(const fan_2d& f) {
  json rays = json::array();
  for (const ray2& r : f.rays) rays.push_back(json::array({r.x, r.y}));
  return json{{"rays", rays}};
}

inline fan_2d fan_from_json(const json& j) {
  detail::check_arg(j.contains("rays"), "fan: missing rays");
  fan_2d f;
  for (const auto& r : j.at("rays")) {
    detail::check_arg(r.is_array() && r.size() == 2, "fan: rays must be [x, y] pairs");
    f.rays.push_back(ray2{r[0].get<entry_t>(), r[1].get<entry_t>()});
  }
  return f;
}

}  // namespace bott
