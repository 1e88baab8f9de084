// matjul command line: classification, Green values and Boettcher maps of
// 2x2 matrices under conjugation-equivariant polynomial dynamics, slice
// renders, and the randomized verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "matjul/matjul.hpp"

namespace {

using namespace matjul;

struct CommonArgs {
  std::string poly;
  std::string matrix;
  int budget = 1000;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_matrix = true) {
  cmd->add_option("--poly", args.poly,
                  "ascending coefficients a0,a1,...,ad (complex literals) or @file.json")
      ->required();
  if (with_matrix)
    cmd->add_option("--matrix", args.matrix, "matrix entries a;b;c;d (row-major)")
        ->required();
  cmd->add_option("--budget", args.budget, "iteration budget");
}

int run_classify(const CommonArgs& args, const std::string& out_path) {
  const Polynomial p = io::parse_polynomial(args.poly);
  const Mat2 m = io::parse_matrix(args.matrix);
  ClassifyParams params;
  params.budget = args.budget;
  const MatrixClass verdict = classify_matrix(p, m, params);
  const std::string text = io::to_json(verdict, params).dump(2) + "\n";
  if (!out_path.empty())
    write_file(out_path, text);
  else
    std::cout << text;
  return 0;
}

int run_green(const CommonArgs& args, bool as_json, const std::string& route) {
  const Polynomial p = io::parse_polynomial(args.poly);
  const Mat2 m = io::parse_matrix(args.matrix);
  const MatrixGreen g = route == "direct" ? green_direct(p, m, 20)
                                          : green_matrix(p, m, args.budget);
  if (as_json) {
    std::cout << io::to_json(g).dump(2) << "\n";
  } else {
    std::printf("%.6f\n", g.value);
  }
  return 0;
}

int run_boettcher(const CommonArgs& args, int series_order) {
  const Polynomial p = io::parse_polynomial(args.poly);
  const Mat2 m = io::parse_matrix(args.matrix);
  const Mat2 phi = series_order >= 0 ? boettcher_series(p, m, series_order)
                                     : boettcher_matrix(p, m);
  std::cout << io::to_json(phi).dump() << "\n";
  return 0;
}

int run_render(const std::string& poly, const std::string& slice_file,
               const std::string& quantity, const std::string& format,
               const std::string& out_path, int budget, int jobs) {
  RenderJob job{io::parse_polynomial(poly), io::load_slice(slice_file)};
  if (quantity == "classification") job.quantity = RenderJob::Quantity::Classification;
  else if (quantity == "green") job.quantity = RenderJob::Quantity::Green;
  else if (quantity == "escape") job.quantity = RenderJob::Quantity::EscapeTime;
  else throw CLI::ValidationError("--quantity must be classification, green or escape");
  job.params.budget = budget;
  job.jobs = jobs;
  const RenderResult result = render(job);
  const std::string bytes =
      format == "csv" ? encode_csv(result) : encode_pgm(result);
  if (!out_path.empty())
    write_file(out_path, bytes);
  else
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int count, int jobs,
               const std::string& out_path) {
  const verify::VerifyReport report = verify::run_verify(suite, seed, count, jobs);
  const std::string csv = verify::to_csv(report);
  if (!out_path.empty())
    write_file(out_path, csv);
  else
    std::cout << csv;
  for (const auto& r : report.rows)
    std::fprintf(stderr, "[%s] %s  max_violation=%.3e  tolerance=%.3e\n",
                 r.pass ? "pass" : "FAIL", r.name.c_str(), r.max_violation, r.tolerance);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamics of conjugation-equivariant polynomial maps on 2x2 complex matrices"};
  app.require_subcommand(1);

  CommonArgs classify_args, green_args, boettcher_args;
  std::string out_path, green_route = "eigen";
  bool green_json = false;
  int series_order = -1;

  auto* classify = app.add_subcommand("classify", "stratify a matrix (Fatou/Julia verdict)");
  add_common(classify, classify_args);
  classify->add_option("--out", out_path, "write the verdict JSON here");

  auto* green = app.add_subcommand("green", "matrix Green function value");
  add_common(green, green_args);
  green->add_flag("--json", green_json, "print the full estimate");
  green->add_option("--route", green_route, "eigen (default) or direct");

  auto* boettcher = app.add_subcommand("boettcher", "matrix Boettcher map");
  add_common(boettcher, boettcher_args);
  boettcher->add_option("--series", series_order,
                        "evaluate the truncated Laurent series of this order instead");

  std::string render_poly, slice_file, quantity = "classification", format = "pgm",
              render_out;
  int render_budget = 1000, jobs = matjul::default_worker_count();
  auto* render_cmd = app.add_subcommand("render", "render a 2-parameter slice");
  render_cmd->add_option("--poly", render_poly, "polynomial")->required();
  render_cmd->add_option("--slice-file", slice_file, "slice spec JSON")->required();
  render_cmd->add_option("--quantity", quantity, "classification | green | escape");
  render_cmd->add_option("--format", format, "pgm | csv");
  render_cmd->add_option("--out", render_out, "output path");
  render_cmd->add_option("--budget", render_budget, "iteration budget");
  render_cmd->add_option("--jobs", jobs, "worker count (default MATJUL_JOBS or hardware)");

  std::string suite = "all", verify_out;
  std::uint64_t seed = 0;
  int count = 1000;
  auto* verify_cmd = app.add_subcommand("verify", "run the randomized invariant suite");
  verify_cmd->add_option("--suite", suite, "suite name or 'all'");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--count", count, "base sample count");
  verify_cmd->add_option("--jobs", jobs, "worker count");
  verify_cmd->add_option("--out", verify_out, "write the CSV report here");

  try {
    app.parse(argc, argv);
    if (classify->parsed()) return run_classify(classify_args, out_path);
    if (green->parsed()) return run_green(green_args, green_json, green_route);
    if (boettcher->parsed()) return run_boettcher(boettcher_args, series_order);
    if (render_cmd->parsed())
      return run_render(render_poly, slice_file, quantity, format, render_out,
                        render_budget, jobs);
    if (verify_cmd->parsed()) return run_verify(suite, seed, count, jobs, verify_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
