#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "bott/simplicial.hpp"

using namespace bott;

namespace {

simplicial_complex octahedron() {
  return simplicial_complex(6, std::vector<std::vector<int>>{{0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                                             {0, 3, 5}, {1, 2, 4}, {1, 2, 5},
                                                             {1, 3, 4}, {1, 3, 5}});
}

simplicial_complex simplex_boundary(int verts) {
  std::vector<std::uint32_t> faces;
  const std::uint32_t full = (1u << verts) - 1;
  for (int v = 0; v < verts; ++v) faces.push_back(full & ~(1u << v));
  return simplicial_complex(verts, faces);
}

// All faces of the complex (downward closure), grouped by dimension.
std::map<int, std::set<std::uint32_t>> faces_by_dimension(const simplicial_complex& k) {
  std::map<int, std::set<std::uint32_t>> out;
  for (std::uint32_t f : k.facets()) {
    // Enumerate sub-masks.
    std::uint32_t sub = f;
    for (;;) {
      if (sub != 0) out[std::popcount(sub) - 1].insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates faces", "[simplicial]") {
  CHECK_THROWS_AS(simplicial_complex(3, std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(simplicial_complex(2, std::vector<std::vector<int>>{{0, 5}}),
                  std::invalid_argument);
  CHECK_NOTHROW(simplicial_complex(4, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST_CASE("links", "[simplicial]") {
  {
    const simplicial_complex lk = link(octahedron(), 0);
    CHECK(lk.dimension() == 1);
    CHECK(is_crosscomplex(lk));  // 4-cycle on {2,3,4,5}
    CHECK(lk.facets().size() == 4);
  }
  {
    const simplicial_complex lk = link(simplex_boundary(4), 0);
    CHECK(lk.facets().size() == 3);  // boundary of the triangle on {1,2,3}
    CHECK(lk.dimension() == 1);
    CHECK_FALSE(is_crosscomplex(lk));
  }
  {
    const simplicial_complex two_edges(4, std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    const simplicial_complex lk = link(two_edges, 0);
    REQUIRE(lk.facets().size() == 1);
    CHECK(lk.facets()[0] == 0b10u);  // the single point 1
  }
  CHECK_THROWS_AS(link(octahedron(), 7), std::invalid_argument);
}

TEST_CASE("crosscomplex recognition", "[simplicial]") {
  CHECK(is_crosscomplex(octahedron()));
  CHECK_FALSE(is_crosscomplex(simplex_boundary(4)));
  CHECK_FALSE(is_crosscomplex(simplex_boundary(5)));
  for (int dim = 0; dim <= 4; ++dim) CHECK(is_crosscomplex(crosscomplex(dim)));

  // Two disjoint points and the 4-cycle are the base cases.
  CHECK(is_crosscomplex(simplicial_complex(2, std::vector<std::vector<int>>{{0}, {1}})));
  std::vector<std::vector<int>> square{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(is_crosscomplex(simplicial_complex(4, square)));
  std::vector<std::vector<int>> pentagon{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  CHECK_FALSE(is_crosscomplex(simplicial_complex(5, pentagon)));
}

TEST_CASE("links of crosscomplexes are crosscomplexes", "[simplicial]") {
  for (int dim = 1; dim <= 4; ++dim) {
    const simplicial_complex k = crosscomplex(dim);
    for (int v = 0; v < k.vertex_count(); ++v) {
      const simplicial_complex lk = link(k, v);
      CHECK(is_crosscomplex(lk));
      CHECK(lk.dimension() == dim - 1);
    }
  }
}

TEST_CASE("crosscomplex face counts", "[simplicial]") {
  for (int dim = 0; dim <= 3; ++dim) {
    const simplicial_complex k = crosscomplex(dim);
    CHECK(std::popcount(k.active_vertices()) == 2 * (dim + 1));
    const auto faces = faces_by_dimension(k);
    for (int j = 0; j <= dim; ++j) {
      std::int64_t expected = (1ll << (j + 1));
      std::int64_t choose = 1;
      for (int i = 0; i < j + 1; ++i) choose = choose * (dim + 1 - i) / (i + 1);
      expected *= choose;
      CHECK(static_cast<std::int64_t>(faces.at(j).size()) == expected);
    }
  }
}

TEST_CASE("direct and recursive recognizers agree", "[simplicial]") {
  std::vector<simplicial_complex> battery;
  for (int dim = 0; dim <= 3; ++dim) battery.push_back(crosscomplex(dim));
  for (int verts = 3; verts <= 5; ++verts) battery.push_back(simplex_boundary(verts));
  battery.push_back(octahedron());
  battery.push_back(simplicial_complex(
      8, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                       {4, 5}, {5, 6}, {6, 7}, {7, 4}}));

  std::mt19937 gen(19u);
  for (int trial = 0; trial < 150; ++trial) {
    const int verts = 5 + static_cast<int>(gen() % 6u);
    const int tris = 3 + static_cast<int>(gen() % 10u);
    std::vector<std::uint32_t> faces;
    for (int t = 0; t < tris; ++t) {
      std::uint32_t f = 0;
      while (std::popcount(f) < 3) f |= 1u << (gen() % static_cast<std::uint32_t>(verts));
      faces.push_back(f);
    }
    battery.emplace_back(verts, faces);
  }

  for (const auto& k : battery) {
    CHECK(is_crosscomplex(k) == is_crosscomplex_recursive(k));
    const std::uint32_t active = k.active_vertices();
    for (int v = 0; v < k.vertex_count(); ++v) {
      if (!((active >> v) & 1u)) continue;
      const simplicial_complex lk = link(k, v);
      if (!lk.empty()) CHECK(is_crosscomplex(lk) == is_crosscomplex_recursive(lk));
    }
  }
}

TEST_CASE("combinatorial cube recognition", "[simplicial]") {
  for (int n = 1; n <= 5; ++n) CHECK(is_combinatorial_cube(cube_polytope(n)));

  simple_polytope pentagon;
  pentagon.facet_count = 5;
  for (int i = 0; i < 5; ++i) pentagon.vertex_facets.push_back({i, (i + 1) % 5});
  CHECK_FALSE(is_combinatorial_cube(pentagon));

  // Triangular prism: facets 0,1 are the triangles, 2,3,4 the squares.
  simple_polytope prism;
  prism.facet_count = 5;
  prism.vertex_facets = {{0, 2, 3}, {0, 3, 4}, {0, 2, 4}, {1, 2, 3}, {1, 3, 4}, {1, 2, 4}};
  CHECK_FALSE(is_combinatorial_cube(prism));

  simple_polytope malformed;
  malformed.facet_count = 4;
  malformed.vertex_facets = {{0, 1}, {0, 1, 2}};
  CHECK_THROWS_AS(is_combinatorial_cube(malformed), std::invalid_argument);
}
