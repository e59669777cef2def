#pragma once

#include <functional>
#include <vector>

#include "incompat/errors.hpp"

namespace incompat {

// Index sets are 1-based throughout the public surface, matching the
// reports and the CLI; entries are kept sorted.
using IndexSet = std::vector<int>;

IndexSet complement_of(const IndexSet& s, int size);

// A pair of index subsets S ⊆ {1..m}, T ⊆ {1..n}.
struct SubsetSelection {
  IndexSet S;
  IndexSet T;
  int m = 0;
  int n = 0;

  IndexSet s_complement() const { return complement_of(S, m); }
  IndexSet t_complement() const { return complement_of(T, n); }
  int total() const { return int(S.size() + T.size()); }

  void validate() const;
};

// One index subset per frame, for the n-frame order computation.
struct MultiSelection {
  std::vector<IndexSet> subsets;
  std::vector<int> sizes;

  int total() const;
  void validate() const;
};

// (S, T) then lexicographic on sorted entries; used for the deterministic
// "first witness wins" contracts.
bool lex_less(const IndexSet& a, const IndexSet& b);
bool lex_less(const SubsetSelection& a, const SubsetSelection& b);
bool lex_less(const MultiSelection& a, const MultiSelection& b);

// Enumeration guard. Sizes above the caps are refused up front unless
// `force` is set; max_subsets caps the number of subsets any single search
// may visit (a hard stop even when forced sizes are accepted).
struct Budget {
  int max_total_vectors = 24;
  int max_dim = 8;
  long long max_subsets = 20'000'000;
  bool force = false;

  void check_instance(int dim, int total_vectors) const;
  void charge(long long& counter, long long amount = 1) const;
};

// Calls fn with each k-subset of {1..n} in lexicographic order, until fn
// returns false or subsets are exhausted. Returns false iff fn stopped it.
bool for_each_combination(int n, int k,
                          const std::function<bool(const IndexSet&)>& fn);

}  // namespace incompat
