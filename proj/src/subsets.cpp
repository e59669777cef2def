#include "incompat/subsets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace incompat {

IndexSet complement_of(const IndexSet& s, int size) {
  IndexSet out;
  out.reserve(std::size_t(size) - s.size());
  std::size_t pos = 0;
  for (int i = 1; i <= size; ++i) {
    if (pos < s.size() && s[pos] == i) {
      ++pos;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

static void validate_index_set(const IndexSet& s, int size, const char* name) {
  int prev = 0;
  for (int i : s) {
    if (i <= prev) {
      fail(ErrorCode::InvalidInput,
           std::string(name) + ": indices must be strictly increasing");
    }
    if (i < 1 || i > size) {
      fail(ErrorCode::InvalidInput,
           std::string(name) + ": index " + std::to_string(i) +
               " out of range 1.." + std::to_string(size));
    }
    prev = i;
  }
}

void SubsetSelection::validate() const {
  validate_index_set(S, m, "S");
  validate_index_set(T, n, "T");
}

int MultiSelection::total() const {
  int t = 0;
  for (const IndexSet& s : subsets) t += int(s.size());
  return t;
}

void MultiSelection::validate() const {
  if (subsets.size() != sizes.size()) {
    fail(ErrorCode::InvalidInput, "multi selection: size list mismatch");
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    validate_index_set(subsets[i], sizes[i], "S_i");
  }
}

bool lex_less(const IndexSet& a, const IndexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const SubsetSelection& a, const SubsetSelection& b) {
  if (a.S != b.S) return lex_less(a.S, b.S);
  return lex_less(a.T, b.T);
}

bool lex_less(const MultiSelection& a, const MultiSelection& b) {
  for (std::size_t i = 0; i < a.subsets.size() && i < b.subsets.size(); ++i) {
    if (a.subsets[i] != b.subsets[i]) return lex_less(a.subsets[i], b.subsets[i]);
  }
  return a.subsets.size() < b.subsets.size();
}

void Budget::check_instance(int dim, int total_vectors) const {
  if (force) return;
  if (dim > max_dim || total_vectors > max_total_vectors) {
    fail(ErrorCode::BudgetExceeded,
         "instance size d=" + std::to_string(dim) + ", vectors=" +
             std::to_string(total_vectors) + " exceeds the enumeration guard (d <= " +
             std::to_string(max_dim) + ", vectors <= " +
             std::to_string(max_total_vectors) + "); pass --force to override");
  }
}

void Budget::charge(long long& counter, long long amount) const {
  counter += amount;
  if (counter > max_subsets) {
    fail(ErrorCode::BudgetExceeded,
         "subset enumeration exceeded " + std::to_string(max_subsets) +
             " candidates");
  }
}

bool for_each_combination(int n, int k,
                          const std::function<bool(const IndexSet&)>& fn) {
  if (k < 0 || k > n) return true;
  IndexSet idx(static_cast<std::size_t>(k), 0);
  std::iota(idx.begin(), idx.end(), 1);
  if (k == 0) return fn(idx);
  while (true) {
    if (!fn(idx)) return false;
    // advance: rightmost index that can still grow
    int i = k - 1;
    while (i >= 0 && idx[std::size_t(i)] == n - (k - 1 - i)) --i;
    if (i < 0) return true;
    ++idx[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
  }
}

}  // namespace incompat
