#pragma once

// Crosscomplex recognition and combinatorial-cube recognition for simple
// polytopes via vertex-facet duality. Complexes are stored by their maximal
// faces as bit masks over a fixed vertex universe; vertices outside every
// face are simply inactive (links keep the universe of their parent).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "bott/intmat.hpp"

namespace bott {

class simplicial_complex {
 public:
  simplicial_complex(int vertex_count, std::vector<std::uint32_t> maximal_faces)
      : vertex_count_(vertex_count), facets_(std::move(maximal_faces)) {
    detail::check_arg(vertex_count >= 1 && vertex_count <= 31,
                      "simplicial_complex: vertex count out of range");
    for (std::uint32_t f : facets_) {
      detail::check_arg(f != 0 && f < (1u << vertex_count),
                        "simplicial_complex: face out of range");
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    for (std::uint32_t f : facets_)
      for (std::uint32_t g : facets_)
        detail::check_arg(f == g || (f & g) != f,
                          "simplicial_complex: maximal faces must form an antichain");
  }

  simplicial_complex(int vertex_count, const std::vector<std::vector<int>>& faces)
      : simplicial_complex(vertex_count, masks_of(vertex_count, faces)) {}

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::uint32_t>& facets() const { return facets_; }

  std::uint32_t active_vertices() const {
    std::uint32_t u = 0;
    for (std::uint32_t f : facets_) u |= f;
    return u;
  }

  bool empty() const { return facets_.empty(); }

  /// Largest face size minus one.
  int dimension() const {
    int s = 0;
    for (std::uint32_t f : facets_) s = std::max(s, std::popcount(f));
    return s - 1;
  }

  bool is_pure() const {
    for (std::uint32_t f : facets_)
      if (std::popcount(f) != dimension() + 1) return false;
    return true;
  }

  bool contains_vertex(int v) const {
    return v >= 0 && v < vertex_count_ && (active_vertices() >> v) & 1u;
  }

  /// Connectivity of the active vertex set through shared faces.
  bool is_connected() const {
    if (facets_.empty()) return false;
    std::uint32_t reached = facets_[0];
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t f : facets_) {
        if ((f & reached) && (f & ~reached)) {
          reached |= f;
          grew = true;
        }
      }
    }
    return reached == active_vertices();
  }

 private:
  static std::vector<std::uint32_t> masks_of(int vertex_count,
                                             const std::vector<std::vector<int>>& faces) {
    std::vector<std::uint32_t> masks;
    masks.reserve(faces.size());
    for (const auto& face : faces) {
      std::uint32_t m = 0;
      for (int v : face) {
        detail::check_arg(v >= 0 && v < vertex_count,
                          "simplicial_complex: vertex id out of range");
        m |= 1u << v;
      }
      masks.push_back(m);
    }
    return masks;
  }

  int vertex_count_;
  std::vector<std::uint32_t> facets_;
};

/// Link of a vertex: faces that join v to a face of the complex, v removed.
/// The link of an isolated vertex comes back empty.
inline simplicial_complex link(const simplicial_complex& k, int v) {
  detail::check_arg(k.contains_vertex(v), "link: vertex not in the complex");
  std::vector<std::uint32_t> faces;
  for (std::uint32_t f : k.facets()) {
    const std::uint32_t rest = f & ~(1u << v);
    if (((f >> v) & 1u) && rest != 0) faces.push_back(rest);
  }
  return simplicial_complex(k.vertex_count(), std::move(faces));
}

/// Boundary complex of the (dim+1)-dimensional crosspolytope: vertices come
/// in dim+1 antipodal pairs (2i, 2i+1) and the maximal faces are all
/// transversals picking one vertex from each pair.
inline simplicial_complex crosscomplex(int dim) {
  detail::check_arg(dim >= 0 && dim <= 14, "crosscomplex: dimension out of range");
  const int pairs = dim + 1;
  std::vector<std::uint32_t> faces;
  for (std::uint32_t pick = 0; pick < (1u << pairs); ++pick) {
    std::uint32_t f = 0;
    for (int i = 0; i < pairs; ++i) f |= 1u << (2 * i + ((pick >> i) & 1u));
    faces.push_back(f);
  }
  return simplicial_complex(2 * pairs, std::move(faces));
}

/// Direct crosscomplex recognition: 2s active vertices carrying a perfect
/// non-adjacency pairing, all maximal faces of size s, and all 2^s
/// transversals present. This is the decision procedure; the recursive test
/// below exists for cross-validation.
inline bool is_crosscomplex(const simplicial_complex& k) {
  if (k.empty()) return false;
  const std::uint32_t active = k.active_vertices();
  const int v = std::popcount(active);
  if (v % 2 != 0) return false;
  const int s = v / 2;

  if (static_cast<std::uint64_t>(k.facets().size()) != (1ull << s)) return false;
  for (std::uint32_t f : k.facets())
    if (std::popcount(f) != s) return false;

  std::vector<std::uint32_t> adj(k.vertex_count(), 0);
  for (std::uint32_t f : k.facets()) {
    for (std::uint32_t rest = f; rest;) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      adj[a] |= f & ~(1u << a);
    }
  }
  for (int a = 0; a < k.vertex_count(); ++a) {
    if (!((active >> a) & 1u)) continue;
    const std::uint32_t non = active & ~adj[a] & ~(1u << a);
    if (std::popcount(non) != 1) return false;
    const int b = std::countr_zero(non);
    const std::uint32_t back = active & ~adj[b] & ~(1u << b);
    if (back != (1u << a)) return false;
  }
  return true;
}

/// Recursive recognition following the link characterization: in dimension
/// at least 2, connected with every vertex link a crosscomplex one dimension
/// down. Base cases: two disjoint points (dimension 0) and the 4-cycle
/// (dimension 1) are checked directly.
inline bool is_crosscomplex_recursive(const simplicial_complex& k) {
  if (k.empty()) return false;
  const int dim = k.dimension();
  if (dim <= 1) return is_crosscomplex(k);
  if (!k.is_connected()) return false;
  const std::uint32_t active = k.active_vertices();
  for (int v = 0; v < k.vertex_count(); ++v) {
    if (!((active >> v) & 1u)) continue;
    const simplicial_complex lk = link(k, v);
    if (lk.dimension() != dim - 1) return false;
    if (!is_crosscomplex_recursive(lk)) return false;
  }
  return true;
}

/// Simple polytope given purely combinatorially: each vertex is the set of
/// facets through it, and simplicity means those sets share one size n.
struct simple_polytope {
  int facet_count = 0;
  std::vector<std::vector<int>> vertex_facets;
};

/// Vertex-facet dual: a simplicial complex whose vertices are the facets and
/// whose maximal faces are the facet sets of the polytope's vertices.
inline simplicial_complex dual_complex(const simple_polytope& p) {
  detail::check_arg(p.facet_count >= 1 && !p.vertex_facets.empty(),
                    "simple_polytope: malformed incidence data");
  const std::size_t n = p.vertex_facets.front().size();
  detail::check_arg(n >= 1, "simple_polytope: malformed incidence data");
  for (const auto& vf : p.vertex_facets)
    detail::check_arg(vf.size() == n, "simple_polytope: vertices must lie in equally many facets");
  return simplicial_complex(p.facet_count, p.vertex_facets);
}

/// A simple polytope is a combinatorial cube exactly when its dual boundary
/// complex is a crosscomplex.
inline bool is_combinatorial_cube(const simple_polytope& p) {
  return is_crosscomplex(dual_complex(p));
}

/// Vertex-facet incidences of the standard n-cube, facet i and facet n+i
/// opposite (test and demo constructor).
inline simple_polytope cube_polytope(int n) {
  detail::check_arg(n >= 1 && n <= 15, "cube_polytope: dimension out of range");
  simple_polytope p;
  p.facet_count = 2 * n;
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    std::vector<int> facets;
    for (int i = 0; i < n; ++i) facets.push_back(((v >> i) & 1u) ? n + i : i);
    p.vertex_facets.push_back(std::move(facets));
  }
  return p;
}

}  // namespace bott
