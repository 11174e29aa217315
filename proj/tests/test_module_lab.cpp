#include <random>

#include "doctest.h"

#include "gammalab/errors.hpp"
#include "gammalab/exact_kernel.hpp"
#include "gammalab/module_lab.hpp"
#include "oracles.hpp"

using namespace gammalab;

namespace {

nlohmann::json one_by_one(int n, int q0, const std::string& value) {
  nlohmann::json gens = nlohmann::json::object();
  for (int i = 0; i < n; ++i) gens["s" + std::to_string(i)] = {{value}};
  return {{"n", n}, {"q0", q0}, {"dim", 1}, {"generators", gens}};
}

}  // namespace

TEST_CASE("loading and validating modules") {
  CHECK_NOTHROW(load_module(one_by_one(3, 2, "4")));
  CHECK_NOTHROW(load_module(one_by_one(3, 2, "-1")));
  CHECK_THROWS_AS(load_module(one_by_one(3, 2, "2")), ValidationError);
  CHECK_THROWS_AS(load_module(nlohmann::json{{"n", 2}}), ValidationError);
  CHECK_THROWS_AS(builtin_module("steinberg", 2, 2), ValidationError);

  // Quadratic relations hold but the braid relation fails: s0 -> q, s1 -> -1 on a triangle.
  nlohmann::json mixed = one_by_one(3, 2, "4");
  mixed["generators"]["s1"] = {{"-1"}};
  try {
    load_module(mixed);
    FAIL("expected a braid failure");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("braid") != std::string::npos);
  }
  // For n = 2 there is no braid relation.
  nlohmann::json free_pair = one_by_one(2, 2, "4");
  free_pair["generators"]["s1"] = {{"-1"}};
  CHECK_NOTHROW(load_module(free_pair));

  const auto mod = builtin_module("trivial", 3, 3);
  CHECK(load_module(to_json(mod)).generators[2](0, 0) == Rat(9));
}

TEST_CASE("evaluation") {
  const HeckeAlgebra alg{3, 2};
  const auto trivial = builtin_module("trivial", 3, 2);
  const auto sign = builtin_module("sign", 3, 2);
  CHECK(evaluate(trivial, HeckeElem::generator(alg, 1))(0, 0) == Rat(4));
  CHECK(evaluate(sign, panel_element({3, 2, 0, 0}, alg))(0, 0) == Rat(-3, 2));
  CHECK(evaluate(sign, HeckeElem::one(alg))(0, 0) == Rat(1));

  std::mt19937_64 rng(17);
  const auto mod = oracle::random_rank_one_module(rng, 2, 2);
  REQUIRE_FALSE(check_relations(mod).has_value());
  const HeckeAlgebra a2{2, 2};
  const auto e0 = HeckeElem::generator(a2, 0);
  const auto e1 = HeckeElem::generator(a2, 1);
  CHECK(evaluate(mod, e0 * e1) == mod.generators[0] * mod.generators[1]);

  // Multiplicativity on products of total length up to 6.
  const auto pool = elements_up_to_length(2, 3);
  for (const auto& w : pool)
    for (const auto& v : pool) {
      const auto a = HeckeElem::basis(a2, w, Rat(2, 3)) + e1;
      const auto b = HeckeElem::basis(a2, v) - e0;
      CHECK(evaluate(mod, a * b) == evaluate(mod, a) * evaluate(mod, b));
      CHECK(contragredient(mod, a * b) == contragredient(mod, a) * contragredient(mod, b));
    }
}

TEST_CASE("fraction-free kernel") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = dim(rng), cols = dim(rng), rank_target = std::min(rows, dim(rng));
    // Product of random factors gives rank <= rank_target.
    RatMatrix l(rows, rank_target), r(rank_target, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rank_target; ++j) l(i, j) = oracle::random_rat(rng);
    for (int i = 0; i < rank_target; ++i)
      for (int j = 0; j < cols; ++j) r(i, j) = oracle::random_rat(rng);
    const RatMatrix m = l * r;
    const auto ker = exact_kernel(m);
    const int rank = oracle::rational_rank(m);
    CHECK(ker.rank == rank);
    CHECK(ker.basis.cols() == cols - rank);
    if (ker.basis.cols() > 0) {
      CHECK(is_exact_zero(RatMatrix(m * ker.basis)));
      CHECK(oracle::rational_rank(ker.basis) == ker.basis.cols());
    }
  }
}

TEST_CASE("fixed spaces") {
  const HeckeAlgebra alg{3, 2};
  const HModule zero{3, 2, 0, {RatMatrix(0, 0), RatMatrix(0, 0), RatMatrix(0, 0)}};
  CHECK(gamma_fixed_dim(zero, std::vector<HeckeElem>{HeckeElem::generator(alg, 0)}).dim == 0);

  std::mt19937_64 rng(29);
  const auto mod = oracle::random_rank_one_module(rng, 2, 3);
  CHECK(gamma_fixed_dim(mod, std::vector<HeckeElem>{}).dim == 3);

  // Trivial character: dimension 1 iff each generator acts by 1.
  const auto trivial = builtin_module("trivial", 3, 2);
  const auto es = HeckeElem::generator(alg, 0);
  const auto inv_q = Rat(1, 4) * es;
  CHECK(gamma_fixed_dim(trivial, std::vector<HeckeElem>{inv_q}).dim == 1);
  CHECK(gamma_fixed_dim(trivial, std::vector<HeckeElem>{es}).dim == 0);

  // Adding generators never raises the dimension.
  const HeckeAlgebra a2{2, 2};
  std::vector<HeckeElem> gens;
  int last = 3;
  for (int k = 0; k < 3; ++k) {
    gens.push_back(HeckeElem::generator(a2, k % 2) - Rat(k) * HeckeElem::one(a2));
    const int d = gamma_fixed_dim(mod, gens).dim;
    CHECK(d <= last);
    last = d;
  }
}

TEST_CASE("reconstruction and local relations for SL(2)") {
  std::mt19937_64 rng(31);
  for (int q0 : {2, 3}) {
    const auto g = explore({2, q0, 14}, 5);
    const auto dag = build_gallery_dag(g);
    const auto gens = gamma_generators(dag, 5, 10000);
    std::vector<HModule> mods{builtin_module("sign", 2, q0), builtin_module("trivial", 2, q0),
                              oracle::random_rank_one_module(rng, q0, 2)};
    for (const auto& mod : mods) {
      const auto fixed = gamma_fixed_dim(mod, gens);
      CHECK(fixed.dim == mod.dim);
      for (Eigen::Index k = 0; k < fixed.basis.cols(); ++k) {
        const RatVector m = fixed.basis.col(k);
        const auto f = reconstruct_f(mod, m, dag);
        for (std::size_t c = 0; c < g.size(); ++c) {
          if (g.rational(c)) CHECK(*f.values[c] == m);
          if (dag.gallery_certified(c)) CHECK(f.defined(c));
        }
        const auto rep = check_local_relation(mod, f, g);
        CHECK(rep.violations.empty());
        CHECK(rep.panel_sum_checked > 0);
        CHECK(rep.far_to_near_checked == rep.panels_checked);
      }
    }
  }
}

TEST_CASE("constant and zero functions") {
  const auto g = explore({2, 2, 12}, 4);
  const auto dag = build_gallery_dag(g);
  const auto sign = builtin_module("sign", 2, 2);
  const RatVector one = RatVector::Constant(1, Rat(1));

  DistributionFunction constant;
  DistributionFunction zero;
  for (std::size_t c = 0; c < g.size(); ++c) {
    constant.values.push_back(dag.in_region(c) ? std::optional<RatVector>(one) : std::nullopt);
    zero.values.push_back(dag.in_region(c) ? std::optional<RatVector>(RatVector::Constant(1, Rat(0)))
                                           : std::nullopt);
  }
  const auto bad = check_local_relation(sign, constant, g);
  CHECK_FALSE(bad.violations.empty());
  bool at_xf_panel = false;
  for (const auto& v : bad.violations)
    if (v.relation == "near-to-far") at_xf_panel = at_xf_panel || g.panel_stats(v.chamber, v.type)->d == 0;
  CHECK(at_xf_panel);
  CHECK(check_local_relation(sign, zero, g).violations.empty());
}

TEST_CASE("sums of characters versus the reflection module for SL(3)") {
  const auto g = explore({3, 2, 14}, 5);
  const auto dag = build_gallery_dag(g);
  const auto gens = gamma_generators(dag, 5, 10000);
  REQUIRE_FALSE(gens.generators.empty());

  // All generators acting by one matrix: a sum of the two characters, so everything is fixed.
  std::mt19937_64 rng(37);
  const RatMatrix a = oracle::random_hecke_generator(rng, 2, 4, 1);
  const HModule sum{3, 2, 2, {a, a, a}};
  REQUIRE_FALSE(check_relations(sum).has_value());
  const auto fixed = gamma_fixed_dim(sum, gens);
  CHECK(fixed.dim == 2);
  const auto f = reconstruct_f(sum, fixed.basis.col(0), dag);
  CHECK(check_local_relation(sum, f, g).violations.empty());

  // Reflection representation of the finite Hecke algebra of S3, with s0 acting
  // as the conjugate A1 A2 A1^{-1}.
  const Rat q(4);
  RatMatrix t1(2, 2), t2(2, 2);
  t1 << Rat(-1), Rat(0), Rat(1), q;
  t2 << q, q, Rat(0), Rat(-1);
  const HModule refl{3, 2, 2, {t1 * t2 * oracle::inverse(t1), t1, t2}};
  REQUIRE_FALSE(check_relations(refl).has_value());
  CHECK(gamma_fixed_dim(refl, gens).dim == 0);
  RatVector m(2);
  m << Rat(1), Rat(0);
  CHECK_THROWS_AS(reconstruct_f(refl, m, dag), DomainError);
}
