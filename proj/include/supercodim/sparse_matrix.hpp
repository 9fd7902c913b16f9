#pragma once

// Sparse rational matrices and exact rank.
//
// Rank is computed by fraction-exact Gaussian elimination over sparse rows
// kept sorted by column. The pivot rule is fixed (among the rows whose
// leading entry sits in the leftmost unresolved column, the one with the
// lowest row index wins), so the elimination trace is deterministic for a
// given entry set. The result is of course pivot-order independent.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace supercodim {

class SparseMat {
 public:
  using Index = std::int64_t;

  SparseMat(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("matrix dimensions must be non-negative");
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }

  void set(Index r, Index c, BigRat v) {
    check(r, c);
    if (v.is_zero())
      entries_.erase({r, c});
    else
      entries_[{r, c}] = std::move(v);
  }

  void add(Index r, Index c, const BigRat& v) {
    check(r, c);
    if (v.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
      entries_.emplace(std::make_pair(r, c), v);
    } else {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  BigRat at(Index r, Index c) const {
    check(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? BigRat(0) : it->second;
  }

  const std::map<std::pair<Index, Index>, BigRat>& entries() const {
    return entries_;
  }

  SparseMat transpose() const {
    SparseMat t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
  }

  Index rank() const {
    using Row = std::vector<std::pair<Index, BigRat>>;  // sorted by column
    std::vector<Row> row(static_cast<std::size_t>(rows_));
    for (const auto& [rc, v] : entries_)  // map order => columns arrive sorted
      row[static_cast<std::size_t>(rc.first)].emplace_back(rc.second, v);

    // Bucket live rows by leading column.
    std::map<Index, std::vector<Index>> lead;
    for (Index i = 0; i < rows_; ++i)
      if (!row[static_cast<std::size_t>(i)].empty())
        lead[row[static_cast<std::size_t>(i)][0].first].push_back(i);

    Index rank = 0;
    while (!lead.empty()) {
      auto node = lead.extract(lead.begin());
      std::vector<Index>& ids = node.mapped();
      std::sort(ids.begin(), ids.end());
      const Index piv = ids[0];
      const Row& prow = row[static_cast<std::size_t>(piv)];
      const BigRat& plead = prow[0].second;
      ++rank;
      for (std::size_t t = 1; t < ids.size(); ++t) {
        const Index r = ids[t];
        Row& target = row[static_cast<std::size_t>(r)];
        BigRat factor = target[0].second / plead;
        target = axpy(target, prow, factor);
        if (!target.empty()) lead[target[0].first].push_back(r);
      }
      row[static_cast<std::size_t>(piv)].clear();
    }
    return rank;
  }

 private:
  void check(Index r, Index c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index out of range");
  }

  // target - factor * pivot, merging sorted column lists.
  static std::vector<std::pair<Index, BigRat>> axpy(
      const std::vector<std::pair<Index, BigRat>>& target,
      const std::vector<std::pair<Index, BigRat>>& pivot, const BigRat& factor) {
    std::vector<std::pair<Index, BigRat>> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() ||
          (i < target.size() && target[i].first < pivot[j].first)) {
        out.push_back(target[i++]);
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
        ++j;
      } else {
        BigRat v = target[i].second - factor * pivot[j].second;
        if (!v.is_zero()) out.emplace_back(target[i].first, std::move(v));
        ++i, ++j;
      }
    }
    return out;
  }

  Index rows_, cols_;
  std::map<std::pair<Index, Index>, BigRat> entries_;
};

}  // namespace supercodim
