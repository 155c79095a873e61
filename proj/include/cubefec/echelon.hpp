// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0
//
// Exact reduced row echelon form over sparse rational vectors with arbitrary
// ordered keys. Pivots are the first nonzero entry in key order and are
// normalized to 1; no other scaling happens, so identical inputs always give
// identical bases.

#ifndef CUBEFEC_ECHELON_HPP
#define CUBEFEC_ECHELON_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "cubefec/rational.hpp"

namespace cubefec {

template <class Key>
class SparseEchelon {
 public:
  using Vec = std::map<Key, Rational>;
  using Combo = std::map<long, Rational>;  // coefficients over inserted vectors

  explicit SparseEchelon(bool track_combos = false) : track_(track_combos) {}

  struct InsertResult {
    bool independent;
    // With tracking on: expression of the reduced row (independent) or the
    // discovered linear relation (dependent) over the inserted vectors. The
    // relation always carries coefficient 1 on the newest vector.
    Combo combo;
  };

  InsertResult insert(Vec v) {
    Combo combo;
    if (track_) combo[n_inserted_] = 1;
    ++n_inserted_;
    reduce_leading(v, track_ ? &combo : nullptr);
    if (v.empty()) return {false, std::move(combo)};
    const Rational lead = v.begin()->second;
    for (auto& [key, c] : v) c /= lead;
    if (track_) {
      for (auto& [i, c] : combo) c /= lead;
    }
    pivot_of_[v.begin()->first] = rows_.size();
    rows_.push_back(std::move(v));
    if (track_) combos_.push_back(combo);
    return {true, std::move(combo)};
  }

  /// Remainder of v after leading-term reduction; empty iff v is in the span.
  Vec reduce(Vec v) const {
    reduce_leading(v, nullptr);
    return v;
  }

  bool contains(Vec v) const { return reduce(std::move(v)).empty(); }

  long rank() const { return static_cast<long>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<Combo>& row_combos() const { return combos_; }

  /// Full back-reduction: afterwards each pivot key appears in exactly one
  /// row and rows are sorted by pivot. The result is the unique RREF basis of
  /// the span, independent of insertion order.
  void finalize() {
    if (finalized_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return rows_[a].begin()->first < rows_[b].begin()->first;
    });
    // Eliminate pivots from all other rows, largest pivot first.
    for (std::size_t t = order.size(); t-- > 0;) {
      const std::size_t i = order[t];
      const Key& p = rows_[i].begin()->first;
      for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (j == i) continue;
        auto it = rows_[j].find(p);
        if (it == rows_[j].end()) continue;
        const Rational c = it->second;
        axpy(rows_[j], -c, rows_[i]);
        if (track_) axpy_combo(combos_[j], -c, combos_[i]);
      }
    }
    std::vector<Vec> sorted;
    std::vector<Combo> sorted_combos;
    sorted.reserve(rows_.size());
    for (std::size_t i : order) {
      sorted.push_back(std::move(rows_[i]));
      if (track_) sorted_combos.push_back(std::move(combos_[i]));
    }
    rows_ = std::move(sorted);
    combos_ = std::move(sorted_combos);
    pivot_of_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_of_[rows_[i].begin()->first] = i;
    finalized_ = true;
  }

  /// Coordinates of v over the finalized RREF rows; nullopt when v is outside
  /// the span. Requires finalize() to have run.
  std::optional<std::vector<Rational>> coordinates(const Vec& v) const {
    std::vector<Rational> coords(rows_.size(), Rational(0));
    Vec rem = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto it = rem.find(rows_[i].begin()->first);
      if (it == rem.end()) continue;
      coords[i] = it->second;
      axpy(rem, -coords[i], rows_[i]);
    }
    if (!rem.empty()) return std::nullopt;
    return coords;
  }

  static void axpy(Vec& dst, const Rational& c, const Vec& src) {
    if (c == 0) return;
    for (const auto& [key, v] : src) {
      auto [it, inserted] = dst.emplace(key, c * v);
      if (!inserted) {
        it->second += c * v;
        if (it->second == 0) dst.erase(it);
      }
    }
  }

 private:
  static void axpy_combo(Combo& dst, const Rational& c, const Combo& src) {
    if (c == 0) return;
    for (const auto& [key, v] : src) {
      auto [it, inserted] = dst.emplace(key, c * v);
      if (!inserted) {
        it->second += c * v;
        if (it->second == 0) dst.erase(it);
      }
    }
  }

  void reduce_leading(Vec& v, Combo* combo) const {
    while (!v.empty()) {
      auto it = pivot_of_.find(v.begin()->first);
      if (it == pivot_of_.end()) return;
      const Rational c = v.begin()->second;
      axpy(v, -c, rows_[it->second]);
      if (combo && track_) axpy_combo(*combo, -c, combos_[it->second]);
    }
  }

  bool track_;
  bool finalized_ = false;
  long n_inserted_ = 0;
  std::map<Key, std::size_t> pivot_of_;
  std::vector<Vec> rows_;
  std::vector<Combo> combos_;
};

}  // namespace cubefec

#endif
