#ifndef EXACTLA_BENCH_HPP
#define EXACTLA_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "exactla/adjoint.hpp"
#include "exactla/matrix.hpp"

namespace exactla {

struct BenchRecord {
  Index n = 0;
  OpCounter ops;
  std::uint64_t predicted = 0;
  double seconds = 0.0;
};

// Independent prediction of the adjugate's block-product tally: the binary
// recursion tree has 2^k frames at depth k, each performing six products of
// order 2^(p-k-1) blocks, and a classical product of order m costs exactly
// m^3 element multiplications. Computed from the padded order.
inline std::uint64_t predicted_block_mults(Index order) {
  const Index padded = next_pow2(order);
  int p = 0;
  while ((Index(1) << p) < padded) ++p;
  std::uint64_t total = 0;
  for (int k = 0; k <= p - 2; ++k) {
    const std::uint64_t frames = std::uint64_t(1) << k;
    const std::uint64_t half = std::uint64_t(1) << (p - k - 1);
    total += 6 * frames * half * half * half;
  }
  return total;
}

// Random integer matrix whose leading corner minors are all nonzero, so the
// adjugate recursion stays on the unpermuted fast path.
inline Mat<mpz_class> random_strongly_nonsingular(Index n, std::mt19937_64& rng) {
  for (;;) {
    Mat<mpz_class> m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        m(i, j) = mpz_class(static_cast<long>(uniform_in(rng, -99, 99)));
    OpCounter scratch;
    const EliminationResult<mpz_class> e = bareiss_eliminate(m, scratch);
    if (e.rank == n && e.row_perm.is_identity() && e.col_perm.is_identity())
      return m;
  }
}

inline std::vector<BenchRecord> run_adjoint_bench(const std::vector<Index>& sizes,
                                                  std::uint64_t seed) {
  std::vector<BenchRecord> records;
  records.reserve(sizes.size());
  std::mt19937_64 rng(seed);
  for (const Index n : sizes) {
    const Mat<mpz_class> m = random_strongly_nonsingular(n, rng);
    OpCounter counter;
    const auto t0 = std::chrono::steady_clock::now();
    const AdjointResult<mpz_class> r = adjoint(m, counter);
    const auto t1 = std::chrono::steady_clock::now();
    BenchRecord rec;
    rec.n = n;
    rec.ops = r.ops;
    rec.predicted = predicted_block_mults(n);
    rec.seconds = std::chrono::duration<double>(t1 - t0).count();
    records.push_back(rec);
  }
  return records;
}

inline nlohmann::ordered_json bench_report_json(const std::vector<BenchRecord>& records) {
  nlohmann::ordered_json report;
  report["records"] = nlohmann::ordered_json::array();
  for (const BenchRecord& r : records) {
    nlohmann::ordered_json rec;
    rec["n"] = r.n;
    rec["mults"] = r.ops.multiplications;
    rec["divs"] = r.ops.exact_divisions;
    rec["scalings"] = r.ops.scalings;
    rec["predicted"] = r.predicted;
    rec["seconds"] = r.seconds;
    const double n3 = static_cast<double>(r.n) * static_cast<double>(r.n) *
                      static_cast<double>(r.n);
    rec["mults_per_n3"] = static_cast<double>(r.ops.multiplications) / n3;
    report["records"].push_back(rec);
  }
  return report;
}

}  // namespace exactla

#endif  // EXACTLA_BENCH_HPP
