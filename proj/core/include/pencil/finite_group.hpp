#pragma once

// Small finite groups given by multiplication tables, and homomorphism
// counting from finitely presented groups.

#include <cstdint>
#include <string>
#include <vector>

#include "pencil/presentation.hpp"

namespace pencil {

class FiniteGroupTable {
 public:
  /// `table[a*n + b]` is the index of a*b. Throws std::invalid_argument
  /// unless the table defines a group with identity 0.
  FiniteGroupTable(std::string name, int order, std::vector<int> table);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  static constexpr int identity() { return 0; }

 private:
  std::string name_;
  int n_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// Z/2, Z/3, Z/4, Z/5, S3, D4, A4, S4 (axioms checked on first use).
const std::vector<FiniteGroupTable>& battery_groups();
const FiniteGroupTable& battery_group(const std::string& name);
/// The trivial group.
const FiniteGroupTable& trivial_group();

struct HomCountBudget {
  int max_generators = 6;
  int max_order = 24;
};

/// Number of assignments generators -> G satisfying every relator.
/// Throws BudgetExceeded beyond the budget.
std::uint64_t count_homomorphisms(const Presentation& P, const FiniteGroupTable& G,
                                  const HomCountBudget& budget = {});

}  // namespace pencil
