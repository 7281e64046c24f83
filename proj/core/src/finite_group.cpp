#include "pencil/finite_group.hpp"

#include <cstdlib>
#include <iterator>
#include <stdexcept>

#include "pencil/error.hpp"

namespace pencil {

namespace {

// Multiplication tables, row-major, identity first. The permutation groups
// compose as (a*b)(k) = a(b(k)).
// Z/2
constexpr int kCyclic2Table[] = {
    0,1,1,0};

// Z/3
constexpr int kCyclic3Table[] = {
    0,1,2,1,2,0,2,0,1};

// Z/4
constexpr int kCyclic4Table[] = {
    0,1,2,3,1,2,3,0,2,3,0,1,3,0,1,2};

// Z/5
constexpr int kCyclic5Table[] = {
    0,1,2,3,4,1,2,3,4,0,2,3,4,0,1,3,4,0,1,2,4,0,1,2,3};

// S3
constexpr int kS3Table[] = {
    0,1,2,3,4,5,1,0,4,5,2,3,2,3,0,1,5,4,3,2,5,4,0,1,4,5,1,0,3,2,5,4,3,2,1,0};

// D4
constexpr int kD4Table[] = {
    0,1,2,3,4,5,6,7,1,3,4,6,7,2,0,5,2,5,0,7,6,1,4,3,3,6,7,0,5,4,1,2,4,2,1,5,0,3,7,6,5,7,6,4,3,0,
    2,1,6,0,5,1,2,7,3,4,7,4,3,2,1,6,5,0};

// A4
constexpr int kA4Table[] = {
    0,1,2,3,4,5,6,7,8,9,10,11,1,2,0,6,8,7,9,11,10,3,4,5,2,0,1,9,10,11,3,5,4,6,8,7,3,5,4,0,2,1,
    10,9,11,7,6,8,4,3,5,7,6,8,0,1,2,10,11,9,5,4,3,10,11,9,7,8,6,0,2,1,6,7,8,1,0,2,4,3,5,11,9,10,
    7,8,6,4,5,3,11,10,9,1,0,2,8,6,7,11,9,10,1,2,0,4,5,3,9,11,10,2,1,0,8,6,7,5,3,4,10,9,11,5,3,4,
    2,0,1,8,7,6,11,10,9,8,7,6,5,4,3,2,1,0};

// S4
constexpr int kS4Table[] = {
    0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,1,0,4,5,2,3,7,6,10,11,8,9,18,
    19,20,21,22,23,12,13,14,15,16,17,2,3,0,1,5,4,12,13,14,15,16,17,6,7,8,9,10,11,19,18,22,23,20,
    21,3,2,5,4,0,1,13,12,16,17,14,15,19,18,22,23,20,21,6,7,8,9,10,11,4,5,1,0,3,2,18,19,20,21,22,
    23,7,6,10,11,8,9,13,12,16,17,14,15,5,4,3,2,1,0,19,18,22,23,20,21,13,12,16,17,14,15,7,6,10,
    11,8,9,6,7,8,9,10,11,0,1,2,3,4,5,14,15,12,13,17,16,20,21,18,19,23,22,7,6,10,11,8,9,1,0,4,5,
    2,3,20,21,18,19,23,22,14,15,12,13,17,16,8,9,6,7,11,10,14,15,12,13,17,16,0,1,2,3,4,5,21,20,
    23,22,18,19,9,8,11,10,6,7,15,14,17,16,12,13,21,20,23,22,18,19,0,1,2,3,4,5,10,11,7,6,9,8,20,
    21,18,19,23,22,1,0,4,5,2,3,15,14,17,16,12,13,11,10,9,8,7,6,21,20,23,22,18,19,15,14,17,16,12,
    13,1,0,4,5,2,3,12,13,14,15,16,17,2,3,0,1,5,4,8,9,6,7,11,10,22,23,19,18,21,20,13,12,16,17,14,
    15,3,2,5,4,0,1,22,23,19,18,21,20,8,9,6,7,11,10,14,15,12,13,17,16,8,9,6,7,11,10,2,3,0,1,5,4,
    23,22,21,20,19,18,15,14,17,16,12,13,9,8,11,10,6,7,23,22,21,20,19,18,2,3,0,1,5,4,16,17,13,12,
    15,14,22,23,19,18,21,20,3,2,5,4,0,1,9,8,11,10,6,7,17,16,15,14,13,12,23,22,21,20,19,18,9,8,
    11,10,6,7,3,2,5,4,0,1,18,19,20,21,22,23,4,5,1,0,3,2,10,11,7,6,9,8,16,17,13,12,15,14,19,18,
    22,23,20,21,5,4,3,2,1,0,16,17,13,12,15,14,10,11,7,6,9,8,20,21,18,19,23,22,10,11,7,6,9,8,4,5,
    1,0,3,2,17,16,15,14,13,12,21,20,23,22,18,19,11,10,9,8,7,6,17,16,15,14,13,12,4,5,1,0,3,2,22,
    23,19,18,21,20,16,17,13,12,15,14,5,4,3,2,1,0,11,10,9,8,7,6,23,22,21,20,19,18,17,16,15,14,13,
    12,11,10,9,8,7,6,5,4,3,2,1,0};

FiniteGroupTable make(const char* name, int order, const int* begin, const int* end) {
  return FiniteGroupTable(name, order, std::vector<int>(begin, end));
}

}  // namespace

FiniteGroupTable::FiniteGroupTable(std::string name, int order, std::vector<int> table)
    : name_(std::move(name)), n_(order), table_(std::move(table)) {
  const auto n = static_cast<std::size_t>(n_);
  if (n_ < 1 || table_.size() != n * n)
    throw std::invalid_argument(name_ + ": table size does not match order");
  for (int v : table_)
    if (v < 0 || v >= n_) throw std::invalid_argument(name_ + ": entry out of range");
  for (int a = 0; a < n_; ++a)
    if (multiply(0, a) != a || multiply(a, 0) != a)
      throw std::invalid_argument(name_ + ": element 0 is not an identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (multiply(a, b) == 0) {
        if (multiply(b, a) != 0) throw std::invalid_argument(name_ + ": one-sided inverse");
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw std::invalid_argument(name_ + ": element without inverse");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw std::invalid_argument(name_ + ": multiplication is not associative");
}

const std::vector<FiniteGroupTable>& battery_groups() {
  static const std::vector<FiniteGroupTable> groups = [] {
    std::vector<FiniteGroupTable> g;
    g.push_back(make("Z/2", 2, std::begin(kCyclic2Table), std::end(kCyclic2Table)));
    g.push_back(make("Z/3", 3, std::begin(kCyclic3Table), std::end(kCyclic3Table)));
    g.push_back(make("Z/4", 4, std::begin(kCyclic4Table), std::end(kCyclic4Table)));
    g.push_back(make("Z/5", 5, std::begin(kCyclic5Table), std::end(kCyclic5Table)));
    g.push_back(make("S3", 6, std::begin(kS3Table), std::end(kS3Table)));
    g.push_back(make("D4", 8, std::begin(kD4Table), std::end(kD4Table)));
    g.push_back(make("A4", 12, std::begin(kA4Table), std::end(kA4Table)));
    g.push_back(make("S4", 24, std::begin(kS4Table), std::end(kS4Table)));
    return g;
  }();
  return groups;
}

const FiniteGroupTable& battery_group(const std::string& name) {
  for (const auto& g : battery_groups())
    if (g.name() == name) return g;
  throw std::invalid_argument("no battery group named '" + name + "'");
}

const FiniteGroupTable& trivial_group() {
  static const FiniteGroupTable g("1", 1, {0});
  return g;
}

std::uint64_t count_homomorphisms(const Presentation& P, const FiniteGroupTable& G,
                                  const HomCountBudget& budget) {
  const int n = P.generator_count();
  if (n > budget.max_generators)
    throw BudgetExceeded(std::to_string(n) + " generators exceed the limit of " +
                         std::to_string(budget.max_generators));
  if (G.order() > budget.max_order)
    throw BudgetExceeded("group order " + std::to_string(G.order()) + " exceeds the limit of " +
                         std::to_string(budget.max_order));
  P.validate();

  // Each relator is checked as soon as its last generator is assigned.
  std::vector<std::vector<const FreeWord*>> due(static_cast<std::size_t>(n) + 1);
  for (const auto& r : P.relators) due[static_cast<std::size_t>(r.max_generator())].push_back(&r);
  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  auto holds = [&](const FreeWord& r) {
    int acc = FiniteGroupTable::identity();
    for (int l : r.letters()) {
      const int v = img[static_cast<std::size_t>(std::abs(l))];
      acc = G.multiply(acc, l > 0 ? v : G.inverse(v));
    }
    return acc == FiniteGroupTable::identity();
  };
  for (const FreeWord* r : due[0])
    if (!holds(*r)) return 0;

  std::uint64_t count = 0;
  auto search = [&](auto&& self, int k) -> void {
    if (k > n) {
      ++count;
      return;
    }
    for (int v = 0; v < G.order(); ++v) {
      img[static_cast<std::size_t>(k)] = v;
      bool ok = true;
      for (const FreeWord* r : due[static_cast<std::size_t>(k)])
        if (!holds(*r)) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
  };
  search(search, 1);
  return count;
}

}  // namespace pencil
