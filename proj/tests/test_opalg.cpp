#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crext/errors.hpp"
#include "crext/opalg.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace crext;
using namespace crext::opalg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NCOperator random_operator(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> a(-2, 2);
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> count(1, 3);
  NCOperator op;
  for (int i = count(rng); i > 0; --i) {
    Monomial m{a(rng), static_cast<unsigned>(small(rng)), static_cast<unsigned>(small(rng)),
               static_cast<unsigned>(small(rng) % 2)};
    Coefficient c(GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
    c += Coefficient(GaussianRational(Rational(num(rng), den(rng)))) * g();
    op += NCOperator(m, c);
  }
  return op;
}

// Drops every term with a d_t factor (t-independent functions).
NCOperator drop_dt(const NCOperator& op) {
  NCOperator out;
  for (const auto& [m, c] : op.terms()) {
    if (m.dt_power == 0) out += NCOperator(m, c);
  }
  return out;
}

}  // namespace

TEST_CASE("k = 2 operator matches the sympy golden file") {
  const std::string golden = read_file(std::string(CREXT_GOLDEN_DIR) + "/opalg_k2.txt");
  REQUIRE_FALSE(golden.empty());
  CHECK(to_string(build_poly_sublaplacian(2)) + "\n" == golden);
}

TEST_CASE("factorization holds exactly for k = 1..6") {
  for (unsigned k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(check_factorization(k).is_zero());
  }
}

TEST_CASE("commutator chain vanishes for k = 3..5") {
  for (unsigned k = 3; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(check_commutator_chain(k).is_zero());
  }
}

TEST_CASE("association order of the product does not matter") {
  for (unsigned k = 1; k <= 4; ++k) CHECK(build_poly_sublaplacian(k) == build_poly_sublaplacian_right_assoc(k));
}

TEST_CASE("factored product is real") {
  for (unsigned k = 1; k <= 4; ++k) CHECK(factored_poly_sublaplacian(k).is_real());
}

TEST_CASE("composition is associative on random triples") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 100; ++i) {
    NCOperator a = random_operator(rng);
    NCOperator b = random_operator(rng);
    NCOperator c = random_operator(rng);
    CHECK(normal_compose(normal_compose(a, b), c) == normal_compose(a, normal_compose(b, c)));
  }
}

TEST_CASE("without the t-direction the product collapses to a power of L_g") {
  const NCOperator lg = build_weighted_laplacian(g());
  NCOperator power = NCOperator::identity();
  for (unsigned k = 1; k <= 4; ++k) {
    power = normal_compose(power, lg);
    CHECK(drop_dt(build_poly_sublaplacian(k)) == drop_dt(power));
  }
}

TEST_CASE("normal ordering basics") {
  CHECK(commutator(NCOperator::d_rho(), NCOperator::rho()) == NCOperator::identity());
  CHECK(commutator(NCOperator::d_rho(), NCOperator::rho(-1)) == Coefficient(GaussianRational(-1)) * NCOperator::rho(-2));
  CHECK(commutator(NCOperator::d_t(), NCOperator::delta_b()).is_zero());
  CHECK(to_string(NCOperator::zero()) == "0");
  CHECK(y_operator() == normal_compose(NCOperator::rho(-1), NCOperator::d_rho()));
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(build_poly_sublaplacian(0), DomainError);
  CHECK_THROWS_AS(check_factorization(7), DomainError);
  CHECK_THROWS_AS(check_commutator_chain(2), DomainError);
}
