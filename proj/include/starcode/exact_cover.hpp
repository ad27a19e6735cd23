#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace starcode {

struct DlxStats {
  std::uint64_t nodes = 0;
  bool complete = true;
};

// Algorithm X over dancing links. Enumerates all selections of rows that
// cover every column exactly once, in a deterministic order: branch column
// = fewest remaining rows with ties to the lowest column index, rows tried
// in increasing row id. Rows listed in forced are pre-selected, rows in
// forbidden never enter the matrix.
//
// on_solution receives the sorted row ids of each cover and returns false
// to stop the enumeration early. budget_seconds <= 0 means no budget.
DlxStats dlx_enumerate(
    std::size_t column_count, const std::vector<std::vector<std::uint32_t>>& rows,
    const std::vector<std::uint32_t>& forced,
    const std::vector<std::uint32_t>& forbidden, double budget_seconds,
    const std::function<bool(const std::vector<std::uint32_t>&)>& on_solution);

}  // namespace starcode
