#pragma once

// Brute-force reference computations for tests. Written from the textbook
// definitions with plain loops and doubles, sharing no code with the library.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// Cohen's kappa from the full k x k table: p_o = trace / n,
// p_e = sum over labels of (row marginal / n) * (column marginal / n).
inline std::optional<double> kappa(const std::vector<int>& a, const std::vector<int>& b, int k) {
  const std::size_t n = a.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<double>> table(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < n; ++i) table[a[i]][b[i]] += 1.0;
  double agree = 0.0;
  for (int c = 0; c < k; ++c) agree += table[c][c];
  double pe = 0.0;
  for (int c = 0; c < k; ++c) {
    double row = 0.0, col = 0.0;
    for (int d = 0; d < k; ++d) {
      row += table[c][d];
      col += table[d][c];
    }
    pe += (row / n) * (col / n);
  }
  const double po = agree / n;
  // Chance agreement of exactly 1 happens only when both annotators use
  // one and the same label throughout.
  bool degenerate = false;
  for (int c = 0; c < k; ++c) {
    if (table[c][c] == static_cast<double>(n)) degenerate = true;
  }
  if (degenerate) return std::nullopt;
  return (po - pe) / (1.0 - pe);
}

struct Counts {
  double tp = 0, fp = 0, fn = 0;
  double precision() const { return tp + fp == 0 ? 0.0 : tp / (tp + fp); }
  double recall() const { return tp + fn == 0 ? 0.0 : tp / (tp + fn); }
  double f1() const {
    const double p = precision(), r = recall();
    return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
  }
};

template <typename T>
Counts one_vs_rest(const std::vector<T>& gold, const std::vector<T>& pred, const T& positive) {
  Counts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == positive, p = pred[i] == positive;
    if (g && p) c.tp += 1;
    if (!g && p) c.fp += 1;
    if (g && !p) c.fn += 1;
  }
  return c;
}

struct Harmonized {
  std::vector<bool> a, b;
  bool matched;
};

// The 50% rule: match when at least half of the smaller marked component
// (ties go to a) is marked by the other side too; then both become the
// smaller one. Two empty masks match; one empty mask never does.
inline Harmonized harmonize(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::size_t na = 0, nb = 0, both = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    na += a[i];
    nb += b[i];
    both += a[i] && b[i];
  }
  if (na == 0 && nb == 0) return {a, b, true};
  if (na == 0 || nb == 0) return {a, b, false};
  const bool a_small = na <= nb;
  const std::size_t small = a_small ? na : nb;
  if (static_cast<double>(both) / static_cast<double>(small) >= 0.5) {
    const auto& s = a_small ? a : b;
    return {s, s, true};
  }
  return {a, b, false};
}

inline std::vector<bool> random_mask(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<bool> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = coin(rng);
  return m;
}

}  // namespace oracle
