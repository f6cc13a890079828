// exactla: exact linear algebra over the integers and F_p[x].
//
//   exactla <det|adj|rank|solve|bench> [A-file] [c-file]
//       --ring z|polymod=<p> --mode rational|diophantine
//       --method bareiss|adjoint|dixon|auto --seed <u64> --max-iters <n>
//       --sizes 8,16,32 --non-pow2 --json --out <path>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "exactla/cli.hpp"

namespace {

bool parse_ring(const std::string& text, exactla::JobConfig& cfg, std::string& err) {
  if (text == "z") {
    cfg.ring = exactla::JobConfig::Ring::Integers;
    return true;
  }
  if (text.rfind("polymod=", 0) == 0) {
    const std::string num = text.substr(8);
    try {
      cfg.modulus = std::stoull(num);
    } catch (...) {
      err = "invalid modulus '" + num + "'";
      return false;
    }
    cfg.ring = exactla::JobConfig::Ring::PolyMod;
    return true;
  }
  err = "ring must be 'z' or 'polymod=<p>'";
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact linear algebra over commutative domains"};
  app.require_subcommand(1);

  exactla::JobConfig cfg;
  std::string ring_text = "z";
  std::string mode_text = "rational";
  std::string method_text = "auto";
  std::string sizes_text;

  const auto add_common = [&](CLI::App* sub, bool with_matrix) {
    if (with_matrix) sub->add_option("A-file", cfg.a_path, "matrix file")->required();
    sub->add_option("--ring", ring_text, "z | polymod=<p>");
    sub->add_option("--method", method_text, "bareiss | adjoint | dixon | auto");
    sub->add_option("--seed", cfg.seed, "rng seed (default 0)");
    sub->add_option("--out", cfg.out_path, "write output to file instead of stdout");
    sub->add_flag("--json", cfg.json, "structured output");
  };

  CLI::App* det = app.add_subcommand("det", "exact determinant");
  add_common(det, true);
  CLI::App* adj = app.add_subcommand("adj", "adjugate matrix and determinant");
  add_common(adj, true);
  CLI::App* rank = app.add_subcommand("rank", "rank");
  add_common(rank, true);
  CLI::App* solve = app.add_subcommand("solve", "basis of solutions of A x = c");
  add_common(solve, true);
  solve->add_option("c-file", cfg.c_path, "right-hand side file")->required();
  solve->add_option("--mode", mode_text, "rational | diophantine");
  solve->add_option("--max-iters", cfg.max_iters, "cap on randomized iterations");
  CLI::App* bench = app.add_subcommand("bench", "instrumented adjugate benchmark");
  add_common(bench, false);
  bench->add_option("--sizes", sizes_text, "comma-separated matrix orders (default 8,16,32,64)");
  bench->add_flag("--non-pow2", cfg.allow_non_pow2, "allow orders that are not powers of two");

  CLI11_PARSE(app, argc, argv);

  if (det->parsed()) cfg.command = exactla::JobConfig::Command::Det;
  if (adj->parsed()) cfg.command = exactla::JobConfig::Command::Adj;
  if (rank->parsed()) cfg.command = exactla::JobConfig::Command::Rank;
  if (solve->parsed()) cfg.command = exactla::JobConfig::Command::Solve;
  if (bench->parsed()) cfg.command = exactla::JobConfig::Command::Bench;

  std::string err;
  if (!parse_ring(ring_text, cfg, err)) {
    std::cerr << "error: " << err << '\n';
    return 2;
  }
  if (mode_text == "rational") {
    cfg.mode = exactla::JobConfig::Mode::Rational;
  } else if (mode_text == "diophantine") {
    cfg.mode = exactla::JobConfig::Mode::Diophantine;
  } else {
    std::cerr << "error: mode must be 'rational' or 'diophantine'\n";
    return 2;
  }
  if (method_text == "auto") {
    cfg.method = exactla::SolveMethod::Auto;
  } else if (method_text == "bareiss") {
    cfg.method = exactla::SolveMethod::Bareiss;
  } else if (method_text == "adjoint") {
    cfg.method = exactla::SolveMethod::Adjoint;
  } else if (method_text == "dixon") {
    cfg.method = exactla::SolveMethod::Dixon;
  } else {
    std::cerr << "error: method must be bareiss, adjoint, dixon or auto\n";
    return 2;
  }
  if (!sizes_text.empty()) {
    cfg.sizes.clear();
    std::string token;
    std::istringstream in(sizes_text);
    while (std::getline(in, token, ',')) {
      try {
        cfg.sizes.push_back(static_cast<exactla::Index>(std::stoll(token)));
      } catch (...) {
        std::cerr << "error: invalid size '" << token << "'\n";
        return 2;
      }
    }
    if (cfg.sizes.empty()) {
      std::cerr << "error: --sizes is empty\n";
      return 2;
    }
  }

  return exactla::run(cfg);
}
