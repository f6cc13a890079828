#ifndef EXACTLA_CLI_HPP
#define EXACTLA_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "exactla/bench.hpp"
#include "exactla/diophantine.hpp"
#include "exactla/matrix_io.hpp"
#include "exactla/solve_rational.hpp"

namespace exactla {

/*
 * Batch front end. Exit codes: 0 success, 1 mathematical negative
 * (inconsistent system, no Diophantine solution, inconclusive search,
 * singular input to adj), 2 input or configuration error, 3 internal error.
 */
struct JobConfig {
  enum class Command { Det, Adj, Rank, Solve, Bench };
  enum class Ring { Integers, PolyMod };
  enum class Mode { Rational, Diophantine };

  Command command = Command::Det;
  Ring ring = Ring::Integers;
  std::uint64_t modulus = 0;  // PolyMod only; must be prime
  Mode mode = Mode::Rational;
  SolveMethod method = SolveMethod::Auto;
  std::uint64_t seed = 0;
  int max_iters = 0;  // 0 = derived from the instance
  std::string a_path;
  std::string c_path;
  std::string out_path;  // empty = stdout
  std::vector<Index> sizes{8, 16, 32, 64};  // bench
  bool allow_non_pow2 = false;
  bool json = false;
};

namespace detail {

inline bool is_probable_prime_u64(std::uint64_t n) {
  const mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

template <typename S>
Mat<S> load_matrix(const std::string& path, std::uint64_t modulus) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return read_matrix<S>(in, modulus);
}

template <typename S>
Vec<S> load_vector(const std::string& path, std::uint64_t modulus, Index rows) {
  const Mat<S> m = load_matrix<S>(path, modulus);
  if (m.cols() != 1 || m.rows() != rows)
    throw DimensionMismatch("right-hand side must be a " + std::to_string(rows) +
                            " x 1 matrix");
  return m.col(0);
}

template <typename S>
std::string basis_row(const BasisVector<S>& v) {
  std::string row;
  for (Index i = 0; i < v.numerator.size(); ++i) {
    if (i) row += ' ';
    row += format_element(v.numerator(i));
  }
  row += " / ";
  row += format_element(v.denominator);
  return row;
}

template <typename S>
int run_typed(const JobConfig& cfg, std::ostream& out) {
  const std::uint64_t p = cfg.modulus;
  std::mt19937_64 rng(cfg.seed);
  OpCounter counter;
  SolveOptions sopts;
  sopts.method = cfg.method;

  switch (cfg.command) {
    case JobConfig::Command::Det: {
      if (cfg.method == SolveMethod::Dixon)
        throw ParseError("det: method must be bareiss, adjoint or auto");
      const Mat<S> a = load_matrix<S>(cfg.a_path, p);
      S d = zero_like(a(0, 0));
      if (cfg.method == SolveMethod::Adjoint) {
        try {
          d = adjoint(a, counter).det;
        } catch (const SingularMatrix&) {
          // rank deficiency confirmed by elimination: the determinant is zero
        }
      } else {
        d = determinant(a, counter);
      }
      if (cfg.json) {
        nlohmann::ordered_json j;
        j["det"] = format_element(d);
        out << j.dump(2) << '\n';
      } else {
        out << format_element(d) << '\n';
      }
      return 0;
    }

    case JobConfig::Command::Rank: {
      if (cfg.method != SolveMethod::Auto && cfg.method != SolveMethod::Bareiss)
        throw ParseError("rank: method must be bareiss or auto");
      const Mat<S> a = load_matrix<S>(cfg.a_path, p);
      const RankProfile rp = rank_profile(a);
      if (cfg.json) {
        nlohmann::ordered_json j;
        j["rank"] = rp.rank;
        out << j.dump(2) << '\n';
      } else {
        out << rp.rank << '\n';
      }
      return 0;
    }

    case JobConfig::Command::Adj: {
      if (cfg.method != SolveMethod::Auto && cfg.method != SolveMethod::Adjoint)
        throw ParseError("adj: method must be adjoint or auto");
      const Mat<S> a = load_matrix<S>(cfg.a_path, p);
      try {
        const AdjointResult<S> r = adjoint(a, counter);
        if (cfg.json) {
          nlohmann::ordered_json j = matrix_to_json(r.adjugate);
          j["det"] = format_element(r.det);
          out << j.dump(2) << '\n';
        } else {
          write_matrix(out, r.adjugate);
          out << "det " << format_element(r.det) << '\n';
        }
      } catch (const SingularMatrix&) {
        out << "SINGULAR\n";
        return 1;
      }
      return 0;
    }

    case JobConfig::Command::Solve: {
      if (cfg.method == SolveMethod::Bareiss)
        throw ParseError("solve: method must be adjoint, dixon or auto");
      const Mat<S> a = load_matrix<S>(cfg.a_path, p);
      if (cfg.c_path.empty()) throw ParseError("solve: missing right-hand side file");
      const Vec<S> c = load_vector<S>(cfg.c_path, p, a.rows());

      if (cfg.mode == JobConfig::Mode::Rational) {
        std::optional<RationalBasis<S>> maybe;
        try {
          maybe = rational_basis(a, c, sopts, rng, counter);
        } catch (const InconsistentSystem&) {
          out << "INCONSISTENT\n";
          return 1;
        }
        const RationalBasis<S>& basis = *maybe;
        if (cfg.json) {
          nlohmann::ordered_json j;
          j["kind"] = basis.homogeneous ? "homogeneous" : "nonhomogeneous";
          j["rank"] = basis.rank;
          j["vectors"] = nlohmann::ordered_json::array();
          for (const auto& v : basis.vectors) {
            nlohmann::ordered_json jv;
            std::vector<std::string> nums;
            for (Index i = 0; i < v.numerator.size(); ++i)
              nums.push_back(format_element(v.numerator(i)));
            jv["numerator"] = nums;
            jv["denominator"] = format_element(v.denominator);
            j["vectors"].push_back(jv);
          }
          out << j.dump(2) << '\n';
        } else {
          for (const auto& v : basis.vectors) out << basis_row(v) << '\n';
        }
        return 0;
      }

      DiophantineOutcome<S> res;
      try {
        res = solve_diophantine(a, c, rng, cfg.max_iters, sopts);
      } catch (const InconsistentSystem&) {
        out << "NO_SOLUTION\n";
        return 1;
      }
      if (res.status == DiophantineStatus::NoSolution) {
        out << "NO_SOLUTION\n";
        return 1;
      }
      if (res.status == DiophantineStatus::Inconclusive) {
        out << "INCONCLUSIVE\n";
        return 1;
      }
      if (cfg.json) {
        nlohmann::ordered_json j;
        j["rank"] = res.rank;
        j["iterations"] = res.iterations;
        j["vectors"] = nlohmann::ordered_json::array();
        for (const auto& z : res.basis) {
          std::vector<std::string> entries;
          for (Index i = 0; i < z.size(); ++i) entries.push_back(format_element(z(i)));
          j["vectors"].push_back(entries);
        }
        out << j.dump(2) << '\n';
      } else {
        for (const auto& z : res.basis) {
          for (Index i = 0; i < z.size(); ++i) {
            if (i) out << ' ';
            out << format_element(z(i));
          }
          out << '\n';
        }
      }
      return 0;
    }

    case JobConfig::Command::Bench:
      throw ParseError("bench: handled before ring dispatch");
  }
  return 3;
}

}  // namespace detail

inline int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == JobConfig::Command::Bench) {
      if (cfg.ring != JobConfig::Ring::Integers)
        throw ParseError("bench: only --ring z is supported");
      for (const Index n : cfg.sizes) {
        if (n < 1 || n > 1024) throw ParseError("bench: sizes must be in 1..1024");
        if (!cfg.allow_non_pow2 && next_pow2(n) != n)
          throw ParseError("bench: size " + std::to_string(n) +
                           " is not a power of two (use --non-pow2)");
      }
      const auto records = run_adjoint_bench(cfg.sizes, cfg.seed);
      out << bench_report_json(records).dump(2) << '\n';
      return 0;
    }
    if (cfg.a_path.empty()) throw ParseError("missing input matrix file");
    if (cfg.ring == JobConfig::Ring::Integers)
      return detail::run_typed<mpz_class>(cfg, out);
    if (cfg.modulus < 2 || cfg.modulus >= Fp::kMaxModulus ||
        !detail::is_probable_prime_u64(cfg.modulus))
      throw ParseError("polymod modulus must be a prime below 2^62");
    return detail::run_typed<PolyFp>(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotSquare& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

inline int run(const JobConfig& cfg) {
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    if (!out) {
      std::cerr << "error: cannot open output file '" << cfg.out_path << "'\n";
      return 2;
    }
    return run(cfg, out, std::cerr);
  }
  return run(cfg, std::cout, std::cerr);
}

}  // namespace exactla

#endif  // EXACTLA_CLI_HPP
