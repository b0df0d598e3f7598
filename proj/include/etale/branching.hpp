#pragma once

#include <map>
#include <string>
#include <vector>

#include "etale/classify.hpp"

namespace etale {

struct SurvivorEntry {
  Weight mu;
  double value = 0;  // sum_lambda Z_lambda S_{lambda,mu}
  Rational t_exp;    // h_mu - c/24 mod 1
  bool singleton = false;
};

struct SurvivorTable {
  EtaleObject algebra;
  double unit_value = 0;  // value at mu = 1
  double guard = 0;
  std::vector<SurvivorEntry> entries;  // sorted by (t_exp, value, weight)

  const SurvivorEntry* find(const Weight& mu) const;
  std::map<Rational, std::vector<size_t>> groups() const;
};

SurvivorTable survivor_table(const EtaleObject& a, const ModularData& md);
// singleton flags, closed under duality and Galois associates
std::vector<bool> singleton_flags(const SurvivorTable& table, const ModularData& md);

struct BranchRow {
  std::string ext_label;
  Weight target_weight;
  std::map<Weight, long long> terms;
};

struct BranchingMatrix {
  LevelContext base;
  AlgebraPtr target;
  std::vector<BranchRow> rows;
  std::vector<std::string> notes;
};

std::string ext_label_of(const Weight& target_weight);
Weight target_weight_of(const std::string& ext_label, int target_rank);

struct SolveResult {
  std::vector<BranchingMatrix> solutions;
  bool ambiguous = false;
  long long labelings = 0;  // number of valid row-to-target assignments for the first solution
  std::string note;
};

// throws std::runtime_error("no-solution ...") when nothing balances
SolveResult solve_branching(const EtaleObject& a, const ModularData& md, const ModularData& target);

struct VerifyReport {
  double s_residual = 0;
  bool t_exact = true;
  double qdim_residual = 0;
  double completeness = 0;
  double z_s_commutator = 0;
  bool z_t_commutes = true;
  bool galois_constant = true;
  bool unit_row = true;  // B_{M,1} = delta_{M,1^e}
  bool row_count = true;
  std::vector<std::string> issues;

  bool ok(double s_tol = 1e-8, double comp_tol = 1e-6) const;
};

VerifyReport verify_branching(const BranchingMatrix& b, const ModularData& md, const ModularData& target);

using IntMatrix = std::vector<std::vector<long long>>;

// Z = B^t B over the base simples
IntMatrix modular_invariant_of(const BranchingMatrix& b, const ModularData& md);
bool check_modular_invariant(const IntMatrix& z, const ModularData& md, double tol = 1e-7);
// A series: Z[J_d]; throws when d is not admissible
IntMatrix simple_current_invariant(const ModularData& md, int d);
std::vector<int> simple_current_invariant_divisors(const LevelContext& ctx);
// (A1,16): Z[J_2] with its exceptional terms
IntMatrix a1_level16_exceptional(const ModularData& md);

double completeness_sum(const BranchingMatrix& b, const ModularData& md);
bool completeness_check(const BranchingMatrix& b, const ModularData& md, double tol = 1e-6);

struct CatalogEntry {
  std::string algebra;
  int level = 0;
  std::string target;
  std::vector<BranchRow> rows;
};

std::vector<CatalogEntry> load_catalog(const std::string& path);
void write_catalog(const std::string& path, const std::vector<CatalogEntry>& entries);
std::string catalog_json(const std::vector<CatalogEntry>& entries);
BranchingMatrix to_matrix(const CatalogEntry& e);
CatalogEntry to_entry(const BranchingMatrix& b);
// row contents equal as multisets, ignoring labels
bool same_rows(const BranchingMatrix& a, const BranchingMatrix& b);

}  // namespace etale
