#pragma once

// The determinant-shaped singular vectors
//   S_χ = Σ_σ sign(σ) Π_i f_{χ_i + σ(i)} v,
// the discriminant span identity, and window-restricted kernel searches.

#include <optional>
#include <string>
#include <vector>

#include "loopsl2/linalg.hpp"
#include "loopsl2/realization.hpp"

namespace loopsl2 {

inline ModuleElement build_singular(const std::vector<Index>& chi)
{
  const std::size_t n = chi.size();
  if (n == 0)
    throw domain_error("build_singular: chi must be nonempty");
  ModuleElement out;
  for_each_permutation(n, [&](const std::vector<int>& sigma, int sign) {
    std::vector<Index> exps(n);
    for (std::size_t i = 0; i < n; ++i)
      exps[i] = chi[i] + sigma[i] + 1;
    out.add(FMonomial(std::move(exps)), Rational(sign));
  });
  return out;
}

// Λ_n · f_χ v == Σ_σ sign(σ) S_{χ(σ)}, with χ(σ)_i = χ_i + σ(i). Both sides are
// computed independently: the left through the S_n action, the right from
// build_singular.
inline bool verify_span_identity(const std::vector<Index>& chi)
{
  const std::size_t n = chi.size();
  ModuleElement lhs = apply_sym(lambda_poly(n), monomial_element(chi));
  ModuleElement rhs;
  for_each_permutation(n, [&](const std::vector<int>& sigma, int sign) {
    std::vector<Index> shifted(n);
    for (std::size_t i = 0; i < n; ++i)
      shifted[i] = chi[i] + sigma[i] + 1;
    rhs.add_scaled(build_singular(shifted), Rational(sign));
  });
  return lhs == rhs;
}

// Θ(S_χ) / D_n in S_n. Θ(S_χ) is always a D_n-multiple, so a failed division
// indicates a bug and is reported as an error.
inline SymElement theta_divisibility(const std::vector<Index>& chi)
{
  ModuleElement s = build_singular(chi);
  if (s.empty())
    throw domain_error("theta_divisibility: S_chi vanishes (repeated entries)");
  return divide_exact(theta(s), discriminant(chi.size()));
}

// Nondecreasing exponent sequences of length n in [lo, hi], optionally of
// fixed total degree.
struct Window {
  Index lo = 0;
  Index hi = 0;
  std::size_t n = 1;
  std::optional<Index> degree;
};

inline std::vector<FMonomial> window_monomials(const Window& w)
{
  if (w.lo > w.hi)
    throw empty_window("window has lo > hi");
  std::vector<FMonomial> out;
  std::vector<Index> exps;
  auto rec = [&](auto&& self, Index start, Index sum) -> void {
    const std::size_t remaining = w.n - exps.size();
    if (remaining == 0) {
      if (!w.degree || sum == *w.degree)
        out.emplace_back(exps);
      return;
    }
    for (Index e = start; e <= w.hi; ++e) {
      if (w.degree) {
        // all remaining entries are >= e and <= hi
        Index r = static_cast<Index>(remaining);
        if (sum + r * e > *w.degree)
          break;
        if (sum + e + (r - 1) * w.hi < *w.degree)
          continue;
      }
      exps.push_back(e);
      self(self, e, sum + e);
      exps.pop_back();
    }
  };
  rec(rec, w.lo, 0);
  return out;
}

// Basis of the singular vectors supported on the window: the exact kernel of
// the formal e-action. Layers 0 and 1 are entirely singular.
inline std::vector<ModuleElement> singular_space(const Window& w)
{
  auto monos = window_monomials(w);
  std::vector<ModuleElement> columns;
  for (const auto& m : monos)
    columns.push_back(ModuleElement::term(m));
  if (w.n < 2)
    return columns;

  std::map<FormalKey, std::size_t> rows_index;
  std::vector<FormalEElement> certs;
  for (const auto& c : columns) {
    certs.push_back(formal_e(c));
    for (const auto& entry : certs.back())
      rows_index.emplace(entry.first, 0);
  }
  std::size_t r = 0;
  for (auto& entry : rows_index)
    entry.second = r++;
  std::vector<Row> matrix(rows_index.size(), Row(columns.size(), Rational(0)));
  for (std::size_t j = 0; j < certs.size(); ++j)
    for (const auto& [key, coeff] : certs[j])
      matrix[rows_index[key]][j] = coeff;

  std::vector<ModuleElement> basis;
  for (const auto& v : kernel_basis(matrix, columns.size())) {
    ModuleElement x;
    for (std::size_t j = 0; j < v.size(); ++j)
      x.add(monos[j], v[j]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Span of {D_n·y : y supported on the window widened by `slack` on both
// sides} intersected with the window-supported subspace.
inline std::vector<ModuleElement> discriminant_image_space(const Window& w, Index slack)
{
  if (slack < 0)
    throw domain_error("slack must be nonnegative");
  auto inside = window_monomials(w);
  if (w.n < 2) {
    std::vector<ModuleElement> out;
    for (const auto& m : inside)
      out.push_back(ModuleElement::term(m));
    return out;
  }
  const Index spread = static_cast<Index>(w.n * (w.n - 1));
  Window pre{w.lo - slack, w.hi + slack, w.n, std::nullopt};
  if (w.degree)
    pre.degree = *w.degree - spread;

  const SymElement disc = discriminant(w.n);
  std::vector<ModuleElement> images;
  for (const auto& m : window_monomials(pre))
    images.push_back(apply_sym(disc, ModuleElement::term(m)));

  std::map<FMonomial, bool> in_window;
  for (const auto& m : inside)
    in_window[m] = true;
  std::map<FMonomial, std::size_t> outside;
  for (const auto& img : images)
    for (const auto& entry : img)
      if (!in_window.count(entry.first))
        outside.emplace(entry.first, 0);
  std::size_t r = 0;
  for (auto& entry : outside)
    entry.second = r++;

  std::vector<Row> matrix(outside.size(), Row(images.size(), Rational(0)));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [mono, coeff] : images[j]) {
      auto it = outside.find(mono);
      if (it != outside.end())
        matrix[it->second][j] = coeff;
    }

  std::vector<ModuleElement> combos;
  for (const auto& v : kernel_basis(matrix, images.size())) {
    ModuleElement x;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0)
        x.add_scaled(images[j], v[j]);
    combos.push_back(std::move(x));
  }
  return echelon_basis(combos);
}

struct ConjectureRow {
  std::size_t n;
  Index degree;
  std::size_t dim_singular;
  std::size_t dim_disc_image;
  bool forward_contained;  // D_n·M_n ∩ window ⊆ singular (always expected)
  bool reverse_contained;  // singular ⊆ D_n·M_n (evidence only)
  Index slack;             // slack actually used
};

struct ConjectureScanOptions {
  // Extra slack tried, one step at a time, before a reverse-containment
  // failure is reported.
  Index max_extra_slack = 2;
};

inline ConjectureRow conjecture_scan_degree(std::size_t n, Index d, Index lo, Index hi, Index slack,
                                            ConjectureScanOptions options = {})
{
  Window w{lo, hi, n, d};
  auto sing = singular_space(w);
  ConjectureRow row{n, d, sing.size(), 0, false, false, slack};
  for (Index s = slack; s <= slack + options.max_extra_slack; ++s) {
    auto disc = discriminant_image_space(w, s);
    row.dim_disc_image = disc.size();
    row.forward_contained = span_contains(sing, disc);
    row.reverse_contained = span_contains(disc, sing);
    row.slack = s;
    if (row.reverse_contained)
      break;
  }
  return row;
}

inline std::vector<ConjectureRow> conjecture_scan(std::size_t n, Index dmin, Index dmax, Index lo, Index hi, Index slack,
                                                  ConjectureScanOptions options = {})
{
  if (lo > hi)
    throw empty_window("window has lo > hi");
  if (dmin > dmax)
    throw domain_error("degree range has dmin > dmax");
  std::vector<ConjectureRow> rows;
  for (Index d = dmin; d <= dmax; ++d)
    rows.push_back(conjecture_scan_degree(n, d, lo, hi, slack, options));
  return rows;
}

} // namespace loopsl2
