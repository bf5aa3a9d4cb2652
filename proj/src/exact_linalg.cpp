#include "splinedim/exact_linalg.hpp"

#include <algorithm>

namespace splinedim {

namespace {

void remove_content(SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// a*row - b*pivot, dropping the cancelled leading entry.
SparseRow combine(const SparseRow& row, const Integer& a, const SparseRow& pivot, const Integer& b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      Integer v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow integer_row(const RationalRow& row) {
  Integer den = 1;
  for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  SparseRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row)
    if (v != 0) out.emplace_back(c, v.get_num() * (den / v.get_den()));
  remove_content(out);
  return out;
}

SparseRow SparseEchelon::reduce(SparseRow row) const {
  while (!row.empty()) {
    const long p = pivot_of_column_[row.front().first];
    if (p < 0) break;
    const SparseRow& pivot = rows_[static_cast<std::size_t>(p)];
    Integer a = pivot.front().second;
    Integer b = row.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    row = combine(row, a, pivot, b);
    remove_content(row);
  }
  return row;
}

bool SparseEchelon::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  pivot_of_column_[row.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t columns) {
  SparseEchelon e(columns);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<std::vector<Rational>> kernel_basis(const std::vector<SparseRow>& rows, std::size_t columns) {
  SparseEchelon e(columns);
  std::vector<SparseRow> pivots;
  for (const auto& r : rows) {
    SparseRow red = e.reduce(r);
    if (red.empty()) continue;
    e.insert(red);
    pivots.push_back(std::move(red));
  }
  // Back-substitute to reduced row echelon form over Q.
  std::sort(pivots.begin(), pivots.end(), [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
  std::vector<std::vector<Rational>> dense;
  dense.reserve(pivots.size());
  std::vector<std::size_t> pivot_col;
  for (const auto& p : pivots) {
    std::vector<Rational> row(columns, Rational(0));
    for (const auto& [c, v] : p) row[c] = Rational(v);
    const Rational lead = row[p.front().first];
    for (auto& x : row) x /= lead;
    dense.push_back(std::move(row));
    pivot_col.push_back(p.front().first);
  }
  for (std::size_t k = dense.size(); k > 0; --k) {
    const std::size_t i = k - 1;
    const std::size_t c = pivot_col[i];
    for (std::size_t j = 0; j < i; ++j) {
      const Rational f = dense[j][c];
      if (f == 0) continue;
      for (std::size_t col = c; col < columns; ++col)
        if (dense[i][col] != 0) dense[j][col] -= f * dense[i][col];
    }
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < dense.size(); ++i) v[pivot_col[i]] = -dense[i][free];
    // Coprime integer scaling keeps printed bases short.
    RationalRow sparse;
    for (std::size_t c = 0; c < columns; ++c)
      if (v[c] != 0) sparse.emplace_back(c, v[c]);
    const SparseRow ints = integer_row(sparse);
    std::vector<Rational> scaled(columns, Rational(0));
    for (const auto& [c, x] : ints) scaled[c] = Rational(x);
    basis.push_back(std::move(scaled));
  }
  return basis;
}

}  // namespace splinedim
