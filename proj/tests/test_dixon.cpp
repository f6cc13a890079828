#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactla/adjoint.hpp"
#include "exactla/dixon.hpp"
#include "test_util.hpp"

using namespace exactla;
using testutil::rand_zmat;
using testutil::zmat;
using testutil::zvec;

TEST_CASE("hadamard bound over the integers") {
  CHECK(hadamard_bound(identity_like(Index(2), mpz_class(0))) == 1);
  CHECK(hadamard_bound(zmat({{3, 4}, {0, 5}})) == 25);
  std::mt19937_64 rng(32);
  for (int t = 0; t < 50; ++t) {
    const Mat<mpz_class> a = rand_zmat(rng, 4, 4, -50, 50);
    const mpz_class d = oracles::laplace_det(a);
    CHECK(hadamard_bound(a) >= abs(d));
  }
  CHECK_THROWS_AS(hadamard_bound(Mat<mpz_class>(rand_zmat(rng, 2, 3))), NotSquare);
}

TEST_CASE("hadamard degree bound over F_p[x]") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 40; ++t) {
    const Mat<PolyFp> a = testutil::rand_pmat(rng, 7, 3, 3, 3);
    const PolyFp d = oracles::laplace_det(a);
    const std::int64_t bound = hadamard_bound(a);
    if (!is_zero(d)) CHECK(d.degree() <= bound);
  }
  Mat<PolyFp> z = zeros_like(2, 2, PolyFp::zero(7));
  z(0, 0) = parse_poly("1*x", 7);  // second row vanishes
  CHECK(hadamard_bound(z) == -1);
}

TEST_CASE("rational reconstruction over the integers") {
  CHECK(*rational_reconstruct(mpz_class(0), mpz_class(101)) == Fraction<mpz_class>(mpz_class(0)));
  const auto f = rational_reconstruct(mpz_class(6), mpz_class(11));
  REQUIRE(f.has_value());
  CHECK(f->num() == 1);
  CHECK(f->den() == 2);
  const auto g = rational_reconstruct(mpz_class(2), mpz_class(11));
  REQUIRE(g.has_value());
  CHECK(g->num() == 2);
  CHECK(g->den() == 1);
  CHECK_THROWS_AS(rational_reconstruct(mpz_class(12), mpz_class(11)), PreconditionViolated);

  SUBCASE("round-trip on random reduced fractions") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 3000; ++t) {
      const mpz_class m = random_prime(40, rng) * random_prime(24, rng);
      const mpz_class bound = isqrt_floor_half(m);
      mpz_class n = testutil::rand_z(rng, -1000, 1000);
      mpz_class d = testutil::rand_z(rng, 1, 1000);
      const mpz_class q = gcd(n, d);
      n = exact_div(n, q);
      d = exact_div(d, q);
      if (abs(n) > bound || d > bound || gcd(d, m) != 1) continue;
      const auto e = gcd_ext(d, m);
      mpz_class u = (n * e.u) % m;
      if (u < 0) u += m;
      const auto rec = rational_reconstruct(u, m);
      REQUIRE(rec.has_value());
      CHECK(rec->num() == n);
      CHECK(rec->den() == d);
    }
  }
}

TEST_CASE("rational reconstruction over F_p[x]") {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 500; ++t) {
    const std::uint64_t p = 13;
    PolyFp n = testutil::rand_poly(rng, p, 2);
    PolyFp d = testutil::rand_poly(rng, p, 2);
    if (is_zero(d)) d = PolyFp::one(p);
    const Fraction<PolyFp> target(n, d);
    const std::uint64_t pt = uniform_below(rng, p);
    if (target.den().eval(pt) == 0) continue;
    PolyFp m = PolyFp::one(p);
    const PolyFp prime = PolyFp::linear_root(p, pt);
    for (int k = 0; k < 8; ++k) m *= prime;  // deg m = 8 > 2*2 + 1
    // residue u = n * d^-1 mod m
    const auto e = gcd_ext(target.den(), m);
    REQUIRE(is_one(e.g));
    const PolyFp u = div_rem(target.num() * e.u, m).second;
    const auto rec = rational_reconstruct(u, m);
    REQUIRE(rec.has_value());
    CHECK(*rec == target);
  }
}

TEST_CASE("dixon solver on worked examples") {
  std::mt19937_64 rng(36);
  OpCounter c;
  const auto x1 = dixon_solve(identity_like(Index(2), mpz_class(0)), zvec({7, -2}), rng, c);
  CHECK(x1[0] == Fraction<mpz_class>(mpz_class(7)));
  CHECK(x1[1] == Fraction<mpz_class>(mpz_class(-2)));

  const auto x2 = dixon_solve(zmat({{2, 0}, {0, 3}}), zvec({1, 1}), rng, c);
  CHECK(x2[0] == Fraction<mpz_class>(mpz_class(1), mpz_class(2)));
  CHECK(x2[1] == Fraction<mpz_class>(mpz_class(1), mpz_class(3)));
}

TEST_CASE("dixon equals Cramer via the adjugate") {
  std::mt19937_64 rng(37);
  OpCounter c;
  for (int t = 0; t < 25; ++t) {
    const Mat<mpz_class> a = testutil::rand_nonsingular(
        [&] { return rand_zmat(rng, 5, 5, -100, 100); });
    const Vec<mpz_class> rhs = testutil::rand_zvec(rng, 5, -100, 100);
    const auto x = dixon_solve(a, rhs, rng, c);
    const auto adj = adjoint(a, c);
    const Vec<mpz_class> nums = mat_vec(adj.adjugate, rhs, c);
    for (Index i = 0; i < 5; ++i)
      CHECK(x[static_cast<std::size_t>(i)] == Fraction<mpz_class>(nums(i), adj.det));
    CHECK(solves_exactly(a, rhs, x, c));
  }
}

TEST_CASE("dixon rejects singular systems") {
  std::mt19937_64 rng(38);
  OpCounter c;
  const Mat<mpz_class> sing = testutil::rand_zmat_rank(rng, 4, 4, 2);
  CHECK_THROWS_AS(dixon_solve(sing, zvec({1, 0, 0, 0}), rng, c), SingularMatrix);
  Mat<mpz_class> zero_col = rand_zmat(rng, 3, 3);
  for (Index i = 0; i < 3; ++i) zero_col(i, 1) = 0;
  CHECK_THROWS_AS(dixon_solve(zero_col, zvec({1, 1, 1}), rng, c), SingularMatrix);
}

TEST_CASE("dixon over F_p[x] by evaluation-point lifting") {
  std::mt19937_64 rng(39);
  OpCounter c;
  for (int t = 0; t < 20; ++t) {
    const Mat<PolyFp> a = testutil::rand_nonsingular(
        [&] { return testutil::rand_pmat(rng, 17, 3, 3, 2); });
    const Vec<PolyFp> rhs = testutil::rand_pvec(rng, 17, 3, 2);
    const auto x = dixon_solve(a, rhs, rng, c);
    CHECK(solves_exactly(a, rhs, x, c));
    // cross-check against the adjugate route
    const auto adj = adjoint(a, c);
    const Vec<PolyFp> nums = mat_vec(adj.adjugate, rhs, c);
    for (Index i = 0; i < 3; ++i)
      CHECK(x[static_cast<std::size_t>(i)] == Fraction<PolyFp>(nums(i), adj.det));
  }
}

TEST_CASE("dixon over F_p[x] exhausts evaluation points honestly") {
  std::mt19937_64 rng(40);
  OpCounter c;
  // det = x^2 + x vanishes at both points of F_2 but is not zero
  Mat<PolyFp> a(1, 1);
  a(0, 0) = parse_poly("x+x^2", 2);
  Vec<PolyFp> rhs(1);
  rhs(0) = PolyFp::one(2);
  CHECK_THROWS_AS(dixon_solve(a, rhs, rng, c), ExhaustedCandidates);
}

TEST_CASE("zero right-hand side lifts to the zero solution") {
  std::mt19937_64 rng(41);
  OpCounter c;
  const Mat<mpz_class> a = testutil::rand_nonsingular(
      [&] { return rand_zmat(rng, 3, 3, -9, 9); });
  const auto x = dixon_solve(a, Vec<mpz_class>(zvec({0, 0, 0})), rng, c);
  for (const auto& f : x) CHECK(is_zero(f));
}
