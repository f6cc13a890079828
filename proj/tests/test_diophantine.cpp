#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "exactla/diophantine.hpp"
#include "test_util.hpp"

using namespace exactla;
using testutil::rand_zmat;
using testutil::zmat;
using testutil::zvec;

TEST_CASE("vector denominators") {
  using F = Fraction<mpz_class>;
  {
    const auto [xbar, chi] = denominator<mpz_class>(
        {F{mpz_class(1), mpz_class(2)}, F{mpz_class(1), mpz_class(3)}});
    CHECK(chi == 6);
    CHECK(xbar(0) == 3);
    CHECK(xbar(1) == 2);
  }
  {
    const auto [xbar, chi] =
        denominator<mpz_class>({F{mpz_class(5)}, F{mpz_class(7)}});
    CHECK(chi == 1);
    CHECK(xbar(0) == 5);
    CHECK(xbar(1) == 7);
  }
  {
    const auto [xbar, chi] = denominator<mpz_class>(
        {F{mpz_class(3), mpz_class(4)}, F{mpz_class(1), mpz_class(6)}});
    CHECK(chi == 12);
    CHECK(xbar(0) == 9);
    CHECK(xbar(1) == 2);
  }
}

TEST_CASE("unit ideal witness") {
  SUBCASE("coprime pair") {
    const auto w = unit_ideal_witness<mpz_class>({2, 3});
    REQUIRE(w.q.has_value());
    CHECK((*w.q)[0] * 2 + (*w.q)[1] * 3 == 1);
    CHECK((*w.q)[0] == -1);
    CHECK((*w.q)[1] == 1);
  }
  SUBCASE("single unit") {
    const auto w = unit_ideal_witness<mpz_class>({1});
    REQUIRE(w.q.has_value());
    CHECK((*w.q)[0] == 1);
  }
  SUBCASE("common factor is reported") {
    const auto w = unit_ideal_witness<mpz_class>({4, 6});
    CHECK(!w.q.has_value());
    CHECK(w.gcd == 2);
  }
  SUBCASE("polynomials") {
    const std::vector<PolyFp> chi{parse_poly("1*x", 7), parse_poly("1+1*x", 7)};
    const auto w = unit_ideal_witness(chi);
    REQUIRE(w.q.has_value());
    CHECK((*w.q)[0] * chi[0] + (*w.q)[1] * chi[1] == PolyFp::one(7));
  }
  SUBCASE("random identities") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 500; ++t) {
      std::vector<mpz_class> chi;
      for (int i = 0; i < 4; ++i) {
        mpz_class v = testutil::rand_z(rng, -60, 60);
        if (is_zero(v)) v = 1;
        chi.push_back(v);
      }
      const auto w = unit_ideal_witness(chi);
      mpz_class g = chi[0];
      for (const auto& x : chi) g = gcd(g, x);
      if (w.q) {
        CHECK(is_one(g));
        mpz_class dot = 0;
        for (std::size_t i = 0; i < chi.size(); ++i) dot += (*w.q)[i] * chi[i];
        CHECK(dot == 1);
      } else {
        CHECK(w.gcd == g);
        CHECK(!is_one(g));
      }
    }
  }
  CHECK_THROWS_AS(unit_ideal_witness<mpz_class>({}), EmptyInput);
  CHECK_THROWS_AS(unit_ideal_witness<mpz_class>({2, 0}), ZeroElement);
}

namespace {

RationalBasis<mpz_class> make_basis(bool homogeneous, Index rank,
                                    std::vector<BasisVector<mpz_class>> vecs,
                                    Index m) {
  return RationalBasis<mpz_class>{homogeneous, rank,
                                  PermutationMap::identity(rank == 0 ? 1 : rank),
                                  PermutationMap::identity(m), std::move(vecs)};
}

}  // namespace

TEST_CASE("diophantine solution from a witness") {
  // system x + 2y = 5 with basis {(5,0)/1, (1,2)/1}
  std::vector<BasisVector<mpz_class>> vecs;
  vecs.push_back({zvec({5, 0}), mpz_class(1)});
  vecs.push_back({zvec({1, 2}), mpz_class(1)});
  const auto basis = make_basis(false, 1, std::move(vecs), 2);
  const Vec<mpz_class> z = diophantine_solution(basis, {mpz_class(1), mpz_class(0)});
  CHECK(z(0) == 5);
  CHECK(z(1) == 0);
  CHECK_THROWS_AS(diophantine_solution(basis, {mpz_class(1), mpz_class(1)}),
                  WitnessInvalid);
  CHECK_THROWS_AS(diophantine_solution(basis, {mpz_class(1)}), WitnessInvalid);
}

TEST_CASE("diophantine basis from chi_1 = 1") {
  SUBCASE("already integral stays put") {
    std::vector<BasisVector<mpz_class>> vecs;
    vecs.push_back({zvec({5, 0}), mpz_class(1)});
    vecs.push_back({zvec({1, 2}), mpz_class(1)});
    const auto basis = make_basis(false, 1, std::move(vecs), 2);
    const auto dio = diophantine_basis(basis);
    CHECK(equal(dio[0], Vec<mpz_class>(zvec({5, 0}))));
    CHECK(equal(dio[1], Vec<mpz_class>(zvec({1, 2}))));
  }
  SUBCASE("worked example for 3x + y = 3") {
    // (1,0)/1 and (1,3)/2 both solve; the second maps to (0,3)
    std::vector<BasisVector<mpz_class>> vecs;
    vecs.push_back({zvec({1, 0}), mpz_class(1)});
    vecs.push_back({zvec({1, 3}), mpz_class(2)});
    const auto basis = make_basis(false, 1, std::move(vecs), 2);
    const auto dio = diophantine_basis(basis);
    REQUIRE(dio.size() == 2);
    CHECK(equal(dio[0], Vec<mpz_class>(zvec({1, 0}))));
    CHECK(equal(dio[1], Vec<mpz_class>(zvec({0, 3}))));
    const Mat<mpz_class> a = zmat({{3, 1}});
    CHECK(verify_diophantine_basis(a, Vec<mpz_class>(zvec({3})), dio, Index(1)));
  }
  SUBCASE("precondition is enforced") {
    std::vector<BasisVector<mpz_class>> vecs;
    vecs.push_back({zvec({1, 3}), mpz_class(2)});
    const auto basis = make_basis(false, 1, std::move(vecs), 2);
    CHECK_THROWS_AS(diophantine_basis(basis), PreconditionViolated);
  }
}

TEST_CASE("solve_diophantine decides worked examples") {
  std::mt19937_64 rng(62);
  SUBCASE("2x = 3 has no integer solution") {
    const auto out = solve_diophantine(zmat({{2}}), zvec({3}), rng);
    CHECK(out.status == DiophantineStatus::NoSolution);
  }
  SUBCASE("x + 2y = 5") {
    const auto out = solve_diophantine(zmat({{1, 2}}), zvec({5}), rng);
    REQUIRE(out.status == DiophantineStatus::Basis);
    CHECK(verify_diophantine_basis(zmat({{1, 2}}), Vec<mpz_class>(zvec({5})),
                                   out.basis, out.rank));
  }
  SUBCASE("homogeneous systems succeed by scaling") {
    const auto out = solve_diophantine(zmat({{2, 4}}), zvec({0}), rng);
    REQUIRE(out.status == DiophantineStatus::Basis);
    REQUIRE(out.basis.size() == 1);
    CHECK(out.basis[0](0) * 2 + out.basis[0](1) * 4 == 0);
    CHECK(!is_zero_vector(out.basis[0]));
  }
  SUBCASE("inconsistent systems throw") {
    CHECK_THROWS_AS(solve_diophantine(zmat({{1}, {1}}), zvec({1, 2}), rng),
                    InconsistentSystem);
  }
  SUBCASE("underdetermined system without integer solutions stays inconclusive") {
    // 2x + 4y = 3: every rational solution has an even denominator, so no
    // permutation can ever produce a unit denominator ideal
    const auto out = solve_diophantine(zmat({{2, 4}}), zvec({3}), rng, 12);
    CHECK(out.status == DiophantineStatus::Inconclusive);
    CHECK(out.iterations == 12);
    CHECK(out.basis.empty());
  }
  SUBCASE("determined integral system") {
    const auto out = solve_diophantine(zmat({{2, 1}, {1, 1}}), zvec({5, 3}), rng);
    REQUIRE(out.status == DiophantineStatus::Basis);
    REQUIRE(out.basis.size() == 1);
    CHECK(out.basis[0](0) == 2);
    CHECK(out.basis[0](1) == 1);
  }
}

TEST_CASE("planted integer solutions are always found") {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 40; ++t) {
    const Index n = 1 + static_cast<Index>(uniform_below(rng, 3));
    const Index m = n + 1 + static_cast<Index>(uniform_below(rng, 3));
    const Mat<mpz_class> a = rand_zmat(rng, n, m, -6, 6);
    const Vec<mpz_class> x0 = testutil::rand_zvec(rng, m, -5, 5);
    OpCounter scratch;
    const Vec<mpz_class> c = mat_vec(a, x0, scratch);
    const auto out = solve_diophantine(a, c, rng);
    REQUIRE(out.status == DiophantineStatus::Basis);
    CHECK(verify_diophantine_basis(a, c, out.basis, out.rank));
  }
}

TEST_CASE("membership of scaled combinations") {
  // any q with <chi, q> != 0 turns the basis into a fraction-field solution
  std::mt19937_64 rng(64);
  OpCounter c;
  SolveOptions opts;
  using F = Fraction<mpz_class>;
  for (int t = 0; t < 20; ++t) {
    const Mat<mpz_class> a = testutil::rand_zmat_rank(rng, 2, 4, 2);
    const Vec<mpz_class> x0 = testutil::rand_zvec(rng, 4, -5, 5);
    const Vec<mpz_class> rhs = mat_vec(a, x0, c);
    if (is_zero_vector(rhs)) continue;
    const auto rb = basis_nonhomogeneous(a, rhs, opts, rng, c);
    std::vector<mpz_class> q;
    mpz_class dot = 0;
    for (const auto& v : rb.vectors) {
      const mpz_class qi = testutil::rand_z(rng, -4, 4);
      dot += qi * v.denominator;
      q.push_back(qi);
    }
    if (is_zero(dot)) continue;
    for (Index i = 0; i < a.rows(); ++i) {
      F acc{mpz_class(0)};
      for (Index k = 0; k < a.cols(); ++k) {
        mpz_class num = 0;
        for (std::size_t s = 0; s < q.size(); ++s)
          num += q[s] * rb.vectors[s].numerator(k);
        acc += F(a(i, k)) * F(num, dot);
      }
      CHECK(acc == F(rhs(i)));
    }
  }
}

TEST_CASE("seeded runs are reproducible") {
  const Mat<mpz_class> a = zmat({{2, 3, 5}, {1, 4, 1}});
  const Vec<mpz_class> c = zvec({10, 6});
  std::mt19937_64 rng1(777), rng2(777);
  const auto o1 = solve_diophantine(a, c, rng1);
  const auto o2 = solve_diophantine(a, c, rng2);
  REQUIRE(o1.status == o2.status);
  REQUIRE(o1.basis.size() == o2.basis.size());
  CHECK(o1.iterations == o2.iterations);
  for (std::size_t i = 0; i < o1.basis.size(); ++i)
    CHECK(equal(o1.basis[i], o2.basis[i]));
}

TEST_CASE("diophantine solving over F_p[x]") {
  std::mt19937_64 rng(65);
  OpCounter scratch;
  for (int t = 0; t < 15; ++t) {
    const Mat<PolyFp> a = testutil::rand_pmat(rng, 11, 2, 4, 1);
    const Vec<PolyFp> x0 = testutil::rand_pvec(rng, 11, 4, 1);
    const Vec<PolyFp> c = mat_vec(a, x0, scratch);
    const auto out = solve_diophantine(a, c, rng);
    if (out.status != DiophantineStatus::Basis) continue;  // Inconclusive is allowed
    CHECK(verify_diophantine_basis(a, c, out.basis, out.rank));
  }
  // determined fractional case over F5[x]: x * y(x) = 1 + x^2 has solution
  // only with denominator x
  Mat<PolyFp> d(1, 1);
  d(0, 0) = parse_poly("1*x", 5);
  Vec<PolyFp> rhs(1);
  rhs(0) = parse_poly("1+1*x^2", 5);
  const auto out = solve_diophantine(d, rhs, rng);
  CHECK(out.status == DiophantineStatus::NoSolution);
}
