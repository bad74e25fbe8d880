#pragma once

// Classification record for one reduced submatrix, and the census driver
// that sweeps entry ranges. Census output is canonically ordered (row-major
// lexicographic in the input matrix) and byte-identical for any worker
// count, so records never carry wall-clock data; timing lives in the
// summary.

#include <atomic>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bott/cohomology.hpp"
#include "bott/json_io.hpp"
#include "bott/quasitoric.hpp"
#include "bott/semifree.hpp"

namespace bott {

struct census_record {
  char_matrix_cube input;
  bool valid = false;
  std::vector<int> signs;  // indexed by vertex mask; empty when invalid
  bool all_signs_positive = false;
  bool bott = false;
  std::optional<bott_recognition> recognition;
  std::optional<omniorientation_witness> omni;
  std::vector<circle_vector> semifree;
  std::optional<bool> strict_factorization;   // meaningful only for Bott towers
  std::optional<bool> relaxed_factorization;
  std::optional<bool> integer_factorization;
  std::optional<factorization> strict_steps;
  bool ring_iso_to_product = false;
  std::int64_t elapsed_us = 0;
};

/// Runs every verdict on one matrix. All witnesses returned by the
/// recognizers are replay-verified by the operations themselves, so a record
/// that comes back without throwing is sound.
inline census_record classify(const char_matrix_cube& c) {
  const auto start = std::chrono::steady_clock::now();
  census_record r;
  r.input = c;
  r.valid = is_valid_characteristic(c);
  if (r.valid) {
    const int n = c.n();
    r.all_signs_positive = true;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const int s = sign_of_fixed_point(c, cube_vertex(n, mask));
      r.signs.push_back(s);
      if (s != 1) r.all_signs_positive = false;
    }
    r.bott = is_bott_tower(c);
    r.omni = bott_up_to_omniorientation(c);
    r.semifree = enumerate_semifree_vectors(c);
    if (r.bott) {
      r.recognition = bott_matrix_from(c);
      const bott_matrix& a = r.recognition->a;
      if (const auto d = half_e_minus_a(a)) {
        auto strict = factorize_unit(*d);
        r.strict_factorization = strict.has_value();
        if (strict) r.strict_steps = std::move(strict);
        r.relaxed_factorization = factorize_signed_unit(*d).has_value();
        r.integer_factorization = factorize_integer(*d).has_value();
      } else {
        r.strict_factorization = false;
        r.relaxed_factorization = false;
        r.integer_factorization = false;
      }
      r.ring_iso_to_product = iso_to_product_test(a).isomorphic;
    }
  }
  r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

inline census_record classify(const bott_matrix& a) {
  return classify(char_matrix_cube(a.matrix().transposed()));
}

inline json record_to_json(const census_record& r, bool include_timing = false) {
  json j;
  j["n"] = r.input.n();
  j["lambda_star"] = to_json(r.input.lambda_star);
  j["valid"] = r.valid;
  if (!r.valid) {
    if (include_timing) j["elapsed_us"] = r.elapsed_us;
    return j;
  }
  j["bott"] = r.bott;
  j["bott_up_to_omniorientation"] = r.omni.has_value();
  j["all_signs_positive"] = r.all_signs_positive;
  j["signs"] = r.signs;
  json vecs = json::array();
  for (const auto& v : r.semifree) vecs.push_back(to_json(v));
  j["semifree_vectors"] = vecs;
  j["strict_factorization"] =
      r.strict_factorization ? json(*r.strict_factorization) : json(nullptr);
  j["relaxed_factorization"] =
      r.relaxed_factorization ? json(*r.relaxed_factorization) : json(nullptr);
  j["integer_factorization"] =
      r.integer_factorization ? json(*r.integer_factorization) : json(nullptr);
  j["ring_iso_to_product"] = r.ring_iso_to_product;
  if (r.recognition) {
    j["bott_matrix"] = to_json(r.recognition->a);
    j["bott_permutation"] = to_json(r.recognition->sigma);
  } else {
    j["bott_matrix"] = nullptr;
    j["bott_permutation"] = nullptr;
  }
  if (r.strict_steps) j["strict_steps"] = to_json(*r.strict_steps);
  if (include_timing) j["elapsed_us"] = r.elapsed_us;
  return j;
}

struct census_options {
  int rank = 2;
  entry_t entry_min = -2;
  entry_t entry_max = 2;
  int jobs = 1;
  bool bott_only = false;  // sweep Bott matrices (upper entries) instead
};

struct census_summary {
  std::int64_t candidates = 0;
  std::int64_t valid = 0;
  std::int64_t bott = 0;
  std::int64_t with_semifree = 0;
  std::int64_t elapsed_ms = 0;
};

namespace detail {

// One unit of census work: all matrices with a fixed first row. Prefixes
// enumerate in lexicographic order, so concatenating per-prefix results in
// prefix order reproduces the global lexicographic stream.
inline std::vector<std::vector<entry_t>> census_prefixes(const census_options& opt) {
  std::vector<std::vector<entry_t>> prefixes;
  std::vector<entry_t> row(opt.rank, opt.entry_min);
  const entry_t lo = opt.entry_min, hi = opt.entry_max;
  auto fill = [&](auto&& self, int j) -> void {
    if (j == opt.rank) {
      prefixes.push_back(row);
      return;
    }
    if (j == 0 && !opt.bott_only) {
      for (entry_t v : {entry_t{-1}, entry_t{1}}) {
        if (v < lo || v > hi) continue;
        row[j] = v;
        self(self, j + 1);
      }
    } else if (j == 0) {
      row[j] = -1;  // Bott sweep: diagonal fixed
      self(self, j + 1);
    } else {
      for (entry_t v = lo; v <= hi; ++v) {
        row[j] = v;
        self(self, j + 1);
      }
    }
  };
  fill(fill, 0);
  return prefixes;
}

template <class F>
void census_rest(const census_options& opt, const std::vector<entry_t>& first_row, F&& emit) {
  const int n = opt.rank;
  int_matrix m(n);
  for (int j = 0; j < n; ++j) m.at(0, j) = first_row[j];
  const entry_t lo = opt.entry_min, hi = opt.entry_max;
  auto fill = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      emit(m);
      return;
    }
    const int i = cell / n, j = cell % n;
    if (opt.bott_only) {
      if (i == j) {
        m.at(i, j) = -1;
        self(self, cell + 1);
      } else if (j < i) {
        m.at(i, j) = 0;
        self(self, cell + 1);
      } else {
        for (entry_t v = lo; v <= hi; ++v) {
          m.at(i, j) = v;
          self(self, cell + 1);
        }
      }
      return;
    }
    if (i == j) {
      for (entry_t v : {entry_t{-1}, entry_t{1}}) {
        if (v < lo || v > hi) continue;
        m.at(i, j) = v;
        self(self, cell + 1);
      }
    } else {
      for (entry_t v = lo; v <= hi; ++v) {
        m.at(i, j) = v;
        self(self, cell + 1);
      }
    }
  };
  fill(fill, n);
}

}  // namespace detail

/// Sweeps the entry range and writes one JSON line per record (every
/// candidate for a Bott sweep, every matrix for the general sweep; invalid
/// matrices get a one-field record). Work is partitioned by first row across
/// jobs and merged in canonical order.
inline census_summary run_census(const census_options& opt, std::ostream& lines) {
  detail::check_arg(opt.rank >= 1 && opt.rank <= 5, "census: rank out of range");
  detail::check_arg(opt.entry_min <= opt.entry_max, "census: empty entry range");
  detail::check_arg(opt.jobs >= 1, "census: jobs must be positive");

  const auto start = std::chrono::steady_clock::now();
  const auto prefixes = detail::census_prefixes(opt);

  struct chunk_stats {
    std::string text;
    std::int64_t candidates = 0, valid = 0, bott = 0, semifree = 0;
  };
  std::vector<chunk_stats> results(prefixes.size());

  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t p = cursor.fetch_add(1);
      if (p >= prefixes.size()) return;
      chunk_stats& out = results[p];
      detail::census_rest(opt, prefixes[p], [&](const int_matrix& m) {
        ++out.candidates;
        census_record r;
        if (opt.bott_only) {
          r = classify(bott_matrix(m));
        } else {
          if (!is_valid_characteristic(m)) return;  // general sweep streams valid only
          r = classify(char_matrix_cube(m));
        }
        if (r.valid) ++out.valid;
        if (r.bott) ++out.bott;
        if (!r.semifree.empty()) ++out.semifree;
        out.text += record_to_json(r).dump();
        out.text += '\n';
      });
    }
  };

  std::vector<std::thread> pool;
  const int jobs = std::min<int>(opt.jobs, static_cast<int>(prefixes.size()));
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  census_summary s;
  for (const auto& c : results) {
    lines << c.text;
    s.candidates += c.candidates;
    s.valid += c.valid;
    s.bott += c.bott;
    s.with_semifree += c.semifree;
  }
  s.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return s;
}

}  // namespace bott
