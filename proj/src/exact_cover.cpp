#include "starcode/exact_cover.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace starcode {

namespace {

constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

// Index-linked sparse matrix. Cells 0..C-1 are the column headers of the
// vertical lists; data cells follow, stored row by row.
struct Matrix {
  std::size_t column_count;
  std::vector<std::uint32_t> up, down, colof, rowof;
  std::vector<std::uint32_t> len;            // live cells per column
  std::vector<std::uint32_t> llink, rlink;   // circular header list; root = C
  std::vector<std::uint32_t> row_begin, row_end;  // cell span of each row

  explicit Matrix(std::size_t columns,
                  const std::vector<std::vector<std::uint32_t>>& rows,
                  const std::vector<bool>& banned)
      : column_count(columns) {
    const std::uint32_t c = static_cast<std::uint32_t>(columns);
    up.resize(columns);
    down.resize(columns);
    colof.resize(columns);
    rowof.assign(columns, kNil);
    len.assign(columns, 0);
    for (std::uint32_t i = 0; i < c; ++i) {
      up[i] = i;
      down[i] = i;
      colof[i] = i;
    }
    llink.resize(columns + 1);
    rlink.resize(columns + 1);
    for (std::uint32_t i = 0; i <= c; ++i) {
      llink[i] = i == 0 ? c : i - 1;
      rlink[i] = i == c ? 0 : i + 1;
    }

    row_begin.resize(rows.size());
    row_end.resize(rows.size());
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      row_begin[r] = static_cast<std::uint32_t>(up.size());
      if (!banned[r]) {
        for (std::uint32_t col : rows[r]) {
          if (col >= columns) throw std::invalid_argument("dlx: column out of range");
          const auto cell = static_cast<std::uint32_t>(up.size());
          // Append at the bottom of the column list.
          up.push_back(up[col]);
          down.push_back(col);
          down[up[col]] = cell;
          up[col] = cell;
          colof.push_back(col);
          rowof.push_back(r);
          ++len[col];
        }
      }
      row_end[r] = static_cast<std::uint32_t>(up.size());
    }
  }

  bool column_live(std::uint32_t col) const { return rlink[llink[col]] == col; }

  void cover(std::uint32_t col) {
    rlink[llink[col]] = rlink[col];
    llink[rlink[col]] = llink[col];
    for (std::uint32_t i = down[col]; i != col; i = down[i])
      for (std::uint32_t j = row_begin[rowof[i]]; j < row_end[rowof[i]]; ++j) {
        if (j == i) continue;
        up[down[j]] = up[j];
        down[up[j]] = down[j];
        --len[colof[j]];
      }
  }

  void uncover(std::uint32_t col) {
    for (std::uint32_t i = up[col]; i != col; i = up[i])
      for (std::uint32_t j = row_begin[rowof[i]]; j < row_end[rowof[i]]; ++j) {
        if (j == i) continue;
        ++len[colof[j]];
        up[down[j]] = j;
        down[up[j]] = j;
      }
    rlink[llink[col]] = col;
    llink[rlink[col]] = col;
  }

  void select_row(std::uint32_t r) {
    for (std::uint32_t j = row_begin[r]; j < row_end[r]; ++j) cover(colof[j]);
  }

  void unselect_row(std::uint32_t r) {
    for (std::uint32_t j = row_end[r]; j-- > row_begin[r];) uncover(colof[j]);
  }
};

struct Enumerator {
  Matrix& m;
  const std::function<bool(const std::vector<std::uint32_t>&)>& on_solution;
  std::vector<std::uint32_t> chosen;  // forced rows first, then search picks
  DlxStats stats;
  bool stopped = false;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;

  bool out_of_budget() {
    return has_deadline && (stats.nodes & 1023) == 1 &&
           std::chrono::steady_clock::now() >= deadline;
  }

  void search() {
    if (stopped) return;
    const std::uint32_t root = static_cast<std::uint32_t>(m.column_count);
    if (m.rlink[root] == root) {
      std::vector<std::uint32_t> solution = chosen;
      std::sort(solution.begin(), solution.end());
      if (!on_solution(solution)) {
        stopped = true;
        stats.complete = false;
      }
      return;
    }

    std::uint32_t best = kNil;
    for (std::uint32_t c = m.rlink[root]; c != root; c = m.rlink[c])
      if (best == kNil || m.len[c] < m.len[best]) best = c;
    if (m.len[best] == 0) return;

    m.cover(best);
    for (std::uint32_t i = m.down[best]; i != best && !stopped; i = m.down[i]) {
      ++stats.nodes;
      if (out_of_budget()) {
        stopped = true;
        stats.complete = false;
        break;
      }
      const std::uint32_t r = m.rowof[i];
      for (std::uint32_t j = m.row_begin[r]; j < m.row_end[r]; ++j)
        if (j != i) m.cover(m.colof[j]);
      chosen.push_back(r);
      search();
      chosen.pop_back();
      for (std::uint32_t j = m.row_end[r]; j-- > m.row_begin[r];)
        if (j != i) m.uncover(m.colof[j]);
    }
    m.uncover(best);
  }
};

}  // namespace

DlxStats dlx_enumerate(
    std::size_t column_count, const std::vector<std::vector<std::uint32_t>>& rows,
    const std::vector<std::uint32_t>& forced,
    const std::vector<std::uint32_t>& forbidden, double budget_seconds,
    const std::function<bool(const std::vector<std::uint32_t>&)>& on_solution) {
  std::vector<bool> banned(rows.size(), false);
  for (std::uint32_t r : forbidden) banned.at(r) = true;
  for (std::uint32_t r : forced)
    if (banned.at(r)) throw std::invalid_argument("dlx: forced row is forbidden");

  Matrix m(column_count, rows, banned);
  Enumerator e{m, on_solution};
  if (budget_seconds > 0) {
    e.has_deadline = true;
    e.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(budget_seconds));
  }

  // Pre-select the forced rows; overlapping balls make the instance
  // trivially infeasible.
  for (std::uint32_t r : forced) {
    bool live = true;
    for (std::uint32_t j = m.row_begin[r]; j < m.row_end[r]; ++j)
      if (!m.column_live(m.colof[j])) live = false;
    if (m.row_begin[r] == m.row_end[r]) live = false;  // row was banned away
    if (!live) return e.stats;
    m.select_row(r);
    e.chosen.push_back(r);
  }

  e.search();
  return e.stats;
}

}  // namespace starcode
