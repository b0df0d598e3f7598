#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace etale {

using Rational = boost::rational<long long>;
using Weight = std::vector<int>;

long long lcm_ll(long long a, long long b);
long long floor_div(long long a, long long b);
long long mod_pos(long long a, long long m);

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);

struct Root {
  std::vector<int> simple_coords;
  // (lambda|alpha) = sum_i lambda_i * pairing[i] / pairing_den
  std::vector<long long> pairing;
};

// Permutation of extended Dynkin labels: (J lambda)_i = lambda_{src[i]}.
using Perm = std::vector<int>;

struct AlgebraData {
  Series series;
  int rank;
  std::vector<std::vector<int>> cartan;  // A_ij = <alpha_i^vee, alpha_j>
  std::vector<Rational> root_norm;       // (alpha_i|alpha_i), long roots 2
  std::vector<int> marks;
  std::vector<int> comarks;
  int dual_coxeter;
  int dim;
  std::vector<std::vector<Rational>> quad_form;  // F_ij = (Lambda_i|Lambda_j)
  std::vector<std::vector<long long>> quad_int;  // quad_den * F
  long long quad_den;
  std::vector<long long> rho_quad;  // quad_int * rho
  std::vector<Root> pos_roots;
  long long pairing_den;
  Rational weyl_vector_norm;
  int f_g;
  int center_exponent;
  std::vector<int> duality_perm;  // finite labels, 0-based
  std::vector<Perm> simple_currents;  // whole group, identity first
  std::vector<int> sc_generators;     // indices into simple_currents
  std::vector<int> sc_target;  // node that J maps 0 to: J(k Lambda_0) = k Lambda_{sc_target}

  std::string name() const;
  // index of J_a^j for A-series, identity for j = 0
  int a_current(int j) const;
};

using AlgebraPtr = std::shared_ptr<const AlgebraData>;

AlgebraPtr build_algebra(Series series, int rank);
AlgebraPtr parse_algebra(const std::string& spec);

Rational inner_product(const Weight& lam, const Weight& mu, const AlgebraData& alg);
long long inner_product_scaled(const Weight& lam, const Weight& mu, const AlgebraData& alg);

// A-series closed forms, exact
int t_index(const Weight& lam);
Weight partial_sums(const Weight& lam);  // lambda[i] = sum_{j>=i} lambda_j, length r
Rational a_series_inner(const Weight& lam, const Weight& mu);

Weight contragredient(const Weight& lam, const AlgebraData& alg);

// level is k for unshifted weights and kappa for shifted ones
int zeroth_label(const Weight& lam, int level, const AlgebraData& alg);
Weight apply_simple_current(const Perm& J, const Weight& lam, int level, const AlgebraData& alg);
Perm compose(const Perm& outer, const Perm& inner);
Perm inverse(const Perm& p);
int perm_order(const Perm& p);

Weight rho_weight(const AlgebraData& alg);
Weight shift(const Weight& lam);
Weight unshift(const Weight& lam);

}  // namespace etale
