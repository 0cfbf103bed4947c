#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace loopsl2 {

inline int permutation_sign(const std::vector<int>& perm)
{
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j])
        sign = -sign;
  return sign;
}

// Calls fn(perm, sign) for every permutation of {0, ..., n-1}.
template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn)
{
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(static_cast<const std::vector<int>&>(perm), permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Calls fn(arrangement) once per distinct rearrangement of `values`.
// Returns the number of distinct rearrangements.
template <class T, class Fn>
std::size_t for_each_distinct_arrangement(std::vector<T> values, Fn&& fn)
{
  std::sort(values.begin(), values.end());
  std::size_t count = 0;
  do {
    fn(static_cast<const std::vector<T>&>(values));
    ++count;
  } while (std::next_permutation(values.begin(), values.end()));
  return count;
}

template <class T>
std::size_t count_distinct_arrangements(std::vector<T> values)
{
  return for_each_distinct_arrangement(std::move(values), [](const auto&) {});
}

} // namespace loopsl2
