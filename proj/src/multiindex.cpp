// Copyright (c) the cubefec contributors
// SPDX-License-Identifier: Apache-2.0

#include "cubefec/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cubefec {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int v : e_) {
    if (v < 0) throw std::invalid_argument("multi-index with negative exponent");
  }
  deg_ = std::accumulate(e_.begin(), e_.end(), 0);
}

MultiIndex MultiIndex::bump(int axis, int delta) const {
  std::vector<int> e = e_;
  e[axis - 1] += delta;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::drop_axis(int axis) const {
  std::vector<int> e = e_;
  e.erase(e.begin() + (axis - 1));
  return MultiIndex(std::move(e));
}

IndexSet::IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (idx_[i] < 1) throw std::invalid_argument("index set entries must be >= 1");
    if (i > 0 && idx_[i] <= idx_[i - 1])
      throw std::invalid_argument("index set must be strictly increasing");
  }
}

bool IndexSet::contains(int q) const {
  return std::binary_search(idx_.begin(), idx_.end(), q);
}

IndexSet IndexSet::insert(int q) const {
  if (contains(q)) throw std::domain_error("index already in set");
  std::vector<int> v = idx_;
  v.insert(std::upper_bound(v.begin(), v.end(), q), q);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::erase(int q) const {
  if (!contains(q)) throw std::domain_error("index not in set");
  std::vector<int> v = idx_;
  v.erase(std::lower_bound(v.begin(), v.end(), q));
  return IndexSet(std::move(v));
}

std::vector<int> IndexSet::complement(int n) const {
  std::vector<int> out;
  out.reserve(n - size());
  for (int q = 1; q <= n; ++q) {
    if (!contains(q)) out.push_back(q);
  }
  return out;
}

IndexSet IndexSet::shift_down_above(int axis) const {
  std::vector<int> v = idx_;
  for (int& q : v) {
    if (q > axis) --q;
  }
  return IndexSet(std::move(v));
}

int eps(int q, const IndexSet& sigma) {
  if (sigma.contains(q)) throw std::domain_error("eps: q lies in sigma");
  int l = static_cast<int>(std::lower_bound(sigma.indices().begin(),
                                            sigma.indices().end(), q) -
                           sigma.indices().begin());
  return (l % 2 == 0) ? 1 : -1;
}

int eps2(int q, int p, const IndexSet& sigma) {
  if (sigma.contains(q)) throw std::domain_error("eps2: q lies in sigma");
  if (!sigma.contains(p)) throw std::domain_error("eps2: p outside sigma");
  return eps(q, sigma) * eps(p, sigma.insert(q).erase(p));
}

FormMonomial::FormMonomial(MultiIndex a, IndexSet s)
    : alpha(std::move(a)), sigma(std::move(s)) {
  if (sigma.size() > 0 && sigma.indices().back() > alpha.size())
    throw std::invalid_argument("alternator index beyond ambient dimension");
}

int FormMonomial::ldeg() const {
  int l = 0;
  for (int i = 1; i <= alpha.size(); ++i) {
    if (alpha[i] == 1 && !sigma.contains(i)) ++l;
  }
  return l;
}

std::vector<MultiIndex> multi_indices_of_degree(int n, int deg) {
  std::vector<MultiIndex> out;
  if (deg < 0) return out;
  if (n == 0) {
    if (deg == 0) out.push_back(MultiIndex(std::vector<int>{}));
    return out;
  }
  std::vector<int> cur(n, 0);
  // Enumerate recursively, emitting in ascending lexicographic order per degree.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[pos] = remaining;
      out.push_back(MultiIndex(cur));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> index_sets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  cur.reserve(k);
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(IndexSet(cur));
      return;
    }
    for (int q = start; q <= n; ++q) {
      cur.push_back(q);
      self(self, q + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

long long binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
  }
  return r;
}

}  // namespace cubefec
