#include "freeleray/linalg.hpp"

#include <cmath>

namespace fleray {

namespace detail {

std::int64_t bareiss_rank(std::vector<std::vector<BigInt>>& a) {
  const std::int64_t rows = static_cast<std::int64_t>(a.size());
  const std::int64_t cols = rows ? static_cast<std::int64_t>(a[0].size()) : 0;
  const std::int64_t steps = std::min(rows, cols);
  BigInt prev = 1;
  std::int64_t r = 0;
  for (; r < steps; ++r) {
    // Smallest nonzero |entry| as pivot keeps the exact intermediates flat.
    std::int64_t pi = -1, pj = -1;
    for (std::int64_t i = r; i < rows; ++i) {
      for (std::int64_t j = r; j < cols; ++j) {
        const BigInt& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (v == 0) continue;
        if (pi < 0 || boost::multiprecision::abs(v) <
                          boost::multiprecision::abs(
                              a[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)])) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pi)]);
    if (pj != r) {
      for (std::int64_t i = 0; i < rows; ++i) {
        std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)],
                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
      }
    }
    const BigInt pivot = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    for (std::int64_t i = r + 1; i < rows; ++i) {
      const BigInt head = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
      for (std::int64_t j = r + 1; j < cols; ++j) {
        BigInt& cell = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        cell = (pivot * cell -
                head * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) /
               prev;
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = 0;
    }
    prev = pivot;
  }
  return r;
}

namespace {

// Connected components of the row/column adjacency graph; the workloads
// here (orbit-indexed spans) split into many tiny blocks.
std::vector<std::vector<std::int64_t>> row_components(const Matrix<Rational>& m) {
  UnionFind uf(m.rows + m.cols);
  for (std::int64_t r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : m.entries[static_cast<std::size_t>(r)]) {
      uf.unite(r, m.rows + c);
    }
  }
  std::map<std::int64_t, std::vector<std::int64_t>> groups;
  for (std::int64_t r = 0; r < m.rows; ++r) {
    if (!m.entries[static_cast<std::size_t>(r)].empty()) {
      groups[uf.find(r)].push_back(r);
    }
  }
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(groups.size());
  for (auto& [root, rows] : groups) out.push_back(std::move(rows));
  return out;
}

// Densify one component with denominators cleared row by row.
std::vector<std::vector<BigInt>> densify_component(const Matrix<Rational>& m,
                                                   const std::vector<std::int64_t>& rows) {
  std::map<std::int64_t, std::int64_t> col_ids;
  for (std::int64_t r : rows) {
    for (const auto& [c, v] : m.entries[static_cast<std::size_t>(r)]) col_ids.emplace(c, 0);
  }
  std::int64_t next = 0;
  for (auto& [c, id] : col_ids) id = next++;

  std::vector<std::vector<BigInt>> block(rows.size(),
                                         std::vector<BigInt>(static_cast<std::size_t>(next)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = m.entries[static_cast<std::size_t>(rows[i])];
    BigInt scale = 1;
    for (const auto& [c, v] : row) {
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v));
    }
    for (const auto& [c, v] : row) {
      block[i][static_cast<std::size_t>(col_ids.at(c))] =
          boost::multiprecision::numerator(v) *
          (scale / boost::multiprecision::denominator(v));
    }
  }
  return block;
}

}  // namespace

}  // namespace detail

std::int64_t rank(const Matrix<Rational>& m) {
  std::int64_t total = 0;
  for (const auto& rows : detail::row_components(m)) {
    auto block = detail::densify_component(m, rows);
    total += detail::bareiss_rank(block);
  }
  return total;
}

std::int64_t rank(const Matrix<Complex>& m) {
  constexpr double kRelTol = 1e-9;
  std::vector<std::vector<Complex>> a(
      static_cast<std::size_t>(m.rows),
      std::vector<Complex>(static_cast<std::size_t>(m.cols)));
  for (std::int64_t r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : m.entries[static_cast<std::size_t>(r)]) {
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    }
  }
  const std::int64_t steps = std::min(m.rows, m.cols);
  double max_pivot = 0.0;
  std::int64_t r = 0;
  for (; r < steps; ++r) {
    std::int64_t pi = r, pj = r;
    double best = 0.0;
    for (std::int64_t i = r; i < m.rows; ++i) {
      for (std::int64_t j = r; j < m.cols; ++j) {
        double v = std::abs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        if (v > best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (best == 0.0 || best < kRelTol * max_pivot) break;
    max_pivot = std::max(max_pivot, best);
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pi)]);
    if (pj != r) {
      for (std::int64_t i = 0; i < m.rows; ++i) {
        std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)],
                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
      }
    }
    const Complex pivot = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    for (std::int64_t i = r + 1; i < m.rows; ++i) {
      const Complex f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] / pivot;
      if (f == Complex(0.0, 0.0)) continue;
      for (std::int64_t j = r; j < m.cols; ++j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
    }
  }
  return r;
}

namespace {

// f by value: callers pass coefficients living inside dst.
void axpy_sparse(std::map<std::int64_t, Rational>& dst, const Rational f,
                 const std::map<std::int64_t, Rational>& src) {
  for (const auto& [c, v] : src) {
    auto [cell, inserted] = dst.emplace(c, -f * v);
    if (!inserted) {
      cell->second -= f * v;
      if (cell->second == 0) dst.erase(cell);
    }
  }
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m) {
  // Incremental reduced row echelon form with sparse rows. Invariant: each
  // pivot row is monic at its pivot column and zero at every other pivot
  // column.
  std::map<std::int64_t, std::map<std::int64_t, Rational>> pivot_rows;  // pivot col -> row
  for (std::int64_t r = 0; r < m.rows; ++r) {
    std::map<std::int64_t, Rational> row = m.entries[static_cast<std::size_t>(r)];
    while (!row.empty()) {
      auto it = pivot_rows.find(row.begin()->first);
      if (it == pivot_rows.end()) break;
      axpy_sparse(row, row.begin()->second, it->second);
    }
    if (row.empty()) continue;
    const std::int64_t lead = row.begin()->first;
    // Clear the remaining pivot-column entries; eliminations only insert
    // at non-pivot columns further right, so one sweep suffices.
    std::int64_t scan = lead;
    for (;;) {
      auto it = row.upper_bound(scan);
      while (it != row.end() && !pivot_rows.count(it->first)) {
        scan = it->first;
        ++it;
      }
      if (it == row.end()) break;
      scan = it->first;
      axpy_sparse(row, it->second, pivot_rows.at(scan));
    }
    const Rational lead_val = row.begin()->second;
    for (auto& [c, v] : row) v /= lead_val;
    for (auto& [pc, prow] : pivot_rows) {
      auto hit = prow.find(lead);
      if (hit == prow.end()) continue;
      axpy_sparse(prow, hit->second, row);
    }
    pivot_rows.emplace(lead, std::move(row));
  }

  std::vector<std::vector<Rational>> basis;
  for (std::int64_t c = 0; c < m.cols; ++c) {
    if (pivot_rows.count(c)) continue;
    std::vector<Rational> x(static_cast<std::size_t>(m.cols));
    x[static_cast<std::size_t>(c)] = 1;
    for (const auto& [pc, prow] : pivot_rows) {
      auto hit = prow.find(c);
      if (hit != prow.end()) x[static_cast<std::size_t>(pc)] = -hit->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<Complex>> nullspace(const Matrix<Complex>&) {
  throw UnsupportedModeError("nullspace: exact scalars required for kernel computations");
}

}  // namespace fleray
