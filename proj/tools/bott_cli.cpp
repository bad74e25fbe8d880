// Command-line front end: classification, semifree reports, cohomology
// dumps, entry-range censuses, combinatorial recognizers, the fan sweep,
// and the acceptance battery. Exit codes: 0 success, 1 input error,
// 2 internal invariant failure (always a bug).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bott/census.hpp"
#include "bott/cohomology.hpp"
#include "bott/fan2d.hpp"
#include "bott/json_io.hpp"
#include "bott/selfcheck.hpp"
#include "bott/simplicial.hpp"

namespace {

struct io_options {
  std::string input_path;
  std::string inline_json;
  std::string output_path;
};

void add_io(CLI::App* cmd, io_options& io, bool needs_input) {
  cmd->add_option("--input", io.input_path, "input JSON file ('-' for stdin)");
  cmd->add_option("--output", io.output_path, "output file (default stdout)");
  if (needs_input) cmd->add_option("json", io.inline_json, "inline JSON input");
}

bott::json load_input(const io_options& io) {
  std::string text;
  if (!io.input_path.empty()) {
    if (io.input_path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(io.input_path);
      if (!in) throw std::invalid_argument("cannot open input file: " + io.input_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
  } else if (!io.inline_json.empty()) {
    text = io.inline_json;
  } else {
    throw std::invalid_argument("no input given; pass inline JSON or --input");
  }
  try {
    return bott::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

class output_stream {
 public:
  explicit output_stream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// A matrix input is either a reduced submatrix {"lambda_star": ...} or a
// Bott matrix {"a": ...}; bare arrays are read as reduced submatrices.
bott::char_matrix_cube char_matrix_input(const bott::json& j) {
  if (j.is_array()) return bott::char_matrix_cube(bott::matrix_from_json(j));
  if (j.contains("lambda_star")) return bott::char_matrix_from_json(j);
  if (j.contains("a")) {
    const bott::bott_matrix a = bott::bott_matrix_from_json(j);
    return bott::char_matrix_cube(a.matrix().transposed());
  }
  throw std::invalid_argument("expected a matrix object with lambda_star or a");
}

void print_pretty_record(const bott::census_record& r, std::ostream& os) {
  os << "rank " << r.input.n() << " reduced submatrix "
     << bott::to_json(r.input.lambda_star).dump() << "\n";
  os << "  valid characteristic . " << (r.valid ? "yes" : "no") << "\n";
  if (!r.valid) return;
  os << "  Bott tower ........... " << (r.bott ? "yes" : "no") << "\n";
  os << "  Bott up to omniorient. " << (r.omni ? "yes" : "no") << "\n";
  os << "  all signs +1 ......... " << (r.all_signs_positive ? "yes" : "no") << "\n";
  os << "  semifree vectors ..... ";
  if (r.semifree.empty()) {
    os << "none";
  } else {
    for (const auto& v : r.semifree) os << bott::to_json(v).dump() << " ";
  }
  os << "\n";
  auto show = [&](const char* label, const std::optional<bool>& v) {
    os << "  " << label;
    if (v)
      os << (*v ? "yes" : "no");
    else
      os << "n/a";
    os << "\n";
  };
  show("strict factorization . ", r.strict_factorization);
  show("relaxed factorization  ", r.relaxed_factorization);
  show("integer factorization  ", r.integer_factorization);
  os << "  ring iso to product .. " << (r.ring_iso_to_product ? "yes" : "no") << "\n";
  os << "  elapsed .............. " << r.elapsed_us << " us\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact classification toolkit for quasitoric manifolds over cubes"};
  app.require_subcommand(1);

  io_options io;
  bool pretty = false;

  auto* classify_cmd =
      app.add_subcommand("classify", "full classification record for one matrix");
  add_io(classify_cmd, io, true);
  classify_cmd->add_flag("--pretty", pretty, "human-readable report");

  auto* semifree_cmd =
      app.add_subcommand("semifree", "semifree vectors and factorizations for one matrix");
  add_io(semifree_cmd, io, true);

  auto* cohomology_cmd = app.add_subcommand(
      "cohomology", "ring dump, graded ranks, BQ verdict, product-iso test");
  add_io(cohomology_cmd, io, true);
  cohomology_cmd->add_flag("--pretty", pretty, "human-readable table");

  bott::census_options census_opt;
  auto* census_cmd = app.add_subcommand("census", "sweep an entry range, JSON-lines output");
  census_cmd->add_option("--rank", census_opt.rank, "matrix rank")->required();
  census_cmd->add_option("--entry-min", census_opt.entry_min, "smallest entry (default -2)");
  census_cmd->add_option("--entry-max", census_opt.entry_max, "largest entry (default 2)");
  census_cmd->add_option("--bound", census_opt.entry_max,
                         "symmetric entry bound (sets min = -bound, max = bound)");
  census_cmd->add_option("--jobs", census_opt.jobs, "worker threads (default 1)");
  census_cmd->add_flag("--bott", census_opt.bott_only, "sweep Bott matrices instead");
  std::string census_output;
  census_cmd->add_option("--output", census_output, "output file (default stdout)");

  auto* cross_cmd = app.add_subcommand(
      "crosscomplex", "crosscomplex / combinatorial-cube recognizers");
  add_io(cross_cmd, io, true);

  auto* fan_cmd = app.add_subcommand("fan2d", "2d fan classification and census");
  add_io(fan_cmd, io, true);
  int fan_max_rays = 0;
  bott::entry_t fan_bound = 0;
  fan_cmd->add_option("--max-rays", fan_max_rays, "sweep: maximum ray count");
  fan_cmd->add_option("--bound", fan_bound, "sweep: ray coordinate bound");

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run the acceptance battery");
  std::string selfcheck_output;
  selfcheck_cmd->add_option("--output", selfcheck_output, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (classify_cmd->parsed()) {
    const auto record = bott::classify(char_matrix_input(load_input(io)));
    output_stream out(io.output_path);
    if (pretty)
      print_pretty_record(record, out.get());
    else
      out.get() << bott::record_to_json(record, true).dump() << "\n";
    return 0;
  }

  if (semifree_cmd->parsed()) {
    const bott::json j = load_input(io);
    output_stream out(io.output_path);
    bott::json rep;
    if (j.contains("a")) {
      const bott::bott_matrix a = bott::bott_matrix_from_json(j);
      rep["n"] = a.n();
      rep["a"] = bott::to_json(a.matrix());
      bott::json vecs = bott::json::array();
      for (const auto& v :
           bott::enumerate_semifree_vectors(bott::char_matrix_cube(a.matrix().transposed())))
        vecs.push_back(bott::to_json(v));
      rep["semifree_vectors"] = vecs;
      if (const auto d = bott::half_e_minus_a(a)) {
        const auto strict = bott::factorize_unit(*d);
        rep["strict_factorization"] = strict.has_value();
        rep["relaxed_factorization"] = bott::factorize_signed_unit(*d).has_value();
        rep["integer_factorization"] = bott::factorize_integer(*d).has_value();
        if (strict) rep["strict_steps"] = bott::to_json(*strict);
      } else {
        rep["strict_factorization"] = false;
        rep["relaxed_factorization"] = false;
        rep["integer_factorization"] = false;
      }
    } else {
      const auto c = char_matrix_input(j);
      const auto record = bott::classify(c);
      rep = bott::record_to_json(record);
    }
    out.get() << rep.dump() << "\n";
    return 0;
  }

  if (cohomology_cmd->parsed()) {
    const bott::json j = load_input(io);
    output_stream out(io.output_path);
    std::optional<bott::bott_matrix> tower;
    bott::char_matrix_cube c;
    if (j.contains("a")) {
      tower = bott::bott_matrix_from_json(j);
      c = bott::char_matrix_cube(tower->matrix().transposed());
    } else {
      c = char_matrix_input(j);
      if (bott::is_valid_characteristic(c) && bott::is_bott_tower(c))
        tower = bott::bott_matrix_from(c).a;
    }
    bott::detail::check_arg(bott::is_valid_characteristic(c),
                            "cohomology: matrix is not a valid characteristic matrix");

    const auto ring2 = bott::ring_z2::from_char_matrix(c);
    const bool bq = bott::is_bq_algebra(ring2);
    bott::json rep;
    rep["n"] = c.n();
    rep["lambda_star"] = bott::to_json(c.lambda_star);
    if (tower) rep["ring_z"] = bott::to_json(bott::ring_z::from_bott(*tower));
    rep["ring_mod2"] = bott::to_json(ring2);
    bott::json ranks = bott::json::array();
    for (int q = 0; q <= c.n(); ++q) ranks.push_back(ring2.graded_rank(q));
    rep["graded_ranks"] = ranks;
    rep["bq_algebra"] = bq;
    if (tower) {
      const auto iso = bott::iso_to_product_test(*tower);
      rep["iso_to_product"] = iso.isomorphic;
      if (iso.basis) rep["square_zero_basis"] = bott::to_json(*iso.basis);
    } else {
      rep["iso_to_product"] = false;
    }
    const auto fc = c.n() >= 2 ? bott::expected_face_counts(c.n()) : bott::face_counts{2, 0};
    rep["face_counts"] = bott::json{{"f0", fc.f0}, {"f1", fc.f1}};

    if (pretty) {
      auto& os = out.get();
      os << "rank " << c.n() << " ring over lambda_star "
         << bott::to_json(c.lambda_star).dump() << "\n";
      os << "  degree 2q ranks:";
      for (int q = 0; q <= c.n(); ++q) os << " " << ring2.graded_rank(q);
      os << "\n  BQ algebra mod 2:  " << (bq ? "yes" : "no") << "\n";
      os << "  iso to product:    "
         << (rep["iso_to_product"].get<bool>() ? "yes" : "no") << "\n";
    } else {
      out.get() << rep.dump() << "\n";
    }
    return 0;
  }

  if (census_cmd->parsed()) {
    if (census_cmd->count("--bound")) {
      census_opt.entry_min = -census_opt.entry_max;
    }
    output_stream out(census_output);
    const auto summary = bott::run_census(census_opt, out.get());
    std::cerr << "census: " << summary.candidates << " candidates, " << summary.valid
              << " valid, " << summary.bott << " Bott, " << summary.with_semifree
              << " with semifree vectors, " << summary.elapsed_ms << " ms\n";
    return 0;
  }

  if (cross_cmd->parsed()) {
    const bott::json j = load_input(io);
    output_stream out(io.output_path);
    bott::json rep;
    if (j.contains("vertex_facets")) {
      const auto p = bott::polytope_from_json(j);
      rep["facets"] = p.facet_count;
      rep["combinatorial_cube"] = bott::is_combinatorial_cube(p);
      rep["dual_complex"] = bott::to_json(bott::dual_complex(p));
    } else {
      const auto k = bott::complex_from_json(j);
      rep["vertices"] = k.vertex_count();
      rep["dimension"] = k.dimension();
      rep["crosscomplex"] = bott::is_crosscomplex(k);
      rep["crosscomplex_recursive"] = bott::is_crosscomplex_recursive(k);
    }
    out.get() << rep.dump() << "\n";
    return 0;
  }

  if (fan_cmd->parsed()) {
    output_stream out(io.output_path);
    if (fan_max_rays > 0) {
      bott::detail::check_arg(fan_bound >= 1, "fan2d sweep: --bound must be at least 1");
      std::int64_t fans = 0, semifree = 0;
      bott::enumerate_fans(fan_max_rays, fan_bound, [&](const bott::fan_2d& f) {
        ++fans;
        const auto vecs = bott::semifree_vectors(f);
        if (!vecs.empty()) ++semifree;
        bott::json line = bott::to_json(f);
        bott::json sv = bott::json::array();
        for (const auto& v : vecs) sv.push_back(bott::to_json(v));
        line["semifree"] = sv;
        out.get() << line.dump() << "\n";
      });
      std::cerr << "fan census: " << fans << " fans, " << semifree
                << " with semifree vectors\n";
      return 0;
    }
    const auto f = bott::fan_from_json(load_input(io));
    bott::json rep = bott::to_json(f);
    rep["complete_smooth"] = bott::is_complete_smooth(f);
    if (rep["complete_smooth"].get<bool>()) {
      bott::json sv = bott::json::array();
      for (const auto& v : bott::semifree_vectors(f)) sv.push_back(bott::to_json(v));
      rep["semifree"] = sv;
      if (f.rays.size() == 4 && f.rays[0] == bott::ray2{1, 0} &&
          f.rays[1] == bott::ray2{0, 1})
        rep["lambda_star"] = bott::to_json(bott::reduced_submatrix(f).lambda_star);
    }
    out.get() << rep.dump() << "\n";
    return 0;
  }

  if (selfcheck_cmd->parsed()) {
    output_stream out(selfcheck_output);
    return bott::print_acceptance(out.get()) ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bott::internal_error& e) {
    std::cerr << "{\"error\":\"internal invariant violation\",\"what\":\"" << e.what()
              << "\"}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"input\",\"what\":\"" << e.what() << "\"}\n";
    return 1;
  }
}
