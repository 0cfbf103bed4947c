#pragma once

// Exact rational elimination. Columns are processed left to right and the
// pivot is the first row (in input order) with a nonzero entry, so results are
// reproducible.

#include <map>
#include <vector>

#include "loopsl2/loopmod.hpp"

namespace loopsl2 {

using Row = std::vector<Rational>;

struct Echelon {
  std::vector<Row> rows;            // reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

inline Echelon rref(std::vector<Row> m, std::size_t cols)
{
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j)
      m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0)
          m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Row> kernel_basis(const std::vector<Row>& m, std::size_t cols)
{
  Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    Row v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of module elements against the union of their supports.
class MonomialCoordinates {
public:
  explicit MonomialCoordinates(const std::vector<ModuleElement>& elements)
  {
    for (const auto& x : elements)
      for (const auto& entry : x)
        index_.emplace(entry.first, 0);
    std::size_t i = 0;
    for (auto& [mono, idx] : index_) {
      idx = i++;
      monomials_.push_back(mono);
    }
  }

  std::size_t size() const { return monomials_.size(); }

  Row row(const ModuleElement& x) const
  {
    Row r(size(), Rational(0));
    for (const auto& [mono, coeff] : x)
      r[index_.at(mono)] = coeff;
    return r;
  }

  ModuleElement element(const Row& r) const
  {
    ModuleElement x;
    for (std::size_t i = 0; i < r.size(); ++i)
      x.add(monomials_[i], r[i]);
    return x;
  }

private:
  std::map<FMonomial, std::size_t> index_;
  std::vector<FMonomial> monomials_;
};

// Reduced echelon basis of the span; deterministic for a given input.
inline std::vector<ModuleElement> echelon_basis(const std::vector<ModuleElement>& elements)
{
  MonomialCoordinates coords(elements);
  std::vector<Row> rows;
  for (const auto& x : elements)
    rows.push_back(coords.row(x));
  Echelon e = rref(std::move(rows), coords.size());
  std::vector<ModuleElement> out;
  for (const auto& r : e.rows)
    out.push_back(coords.element(r));
  return out;
}

inline std::size_t span_dimension(const std::vector<ModuleElement>& elements)
{
  return echelon_basis(elements).size();
}

inline bool span_contains(const std::vector<ModuleElement>& space, const std::vector<ModuleElement>& vectors)
{
  std::vector<ModuleElement> all = space;
  all.insert(all.end(), vectors.begin(), vectors.end());
  return span_dimension(all) == span_dimension(space);
}

inline bool same_span(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b)
{
  return span_contains(a, b) && span_contains(b, a);
}

} // namespace loopsl2
