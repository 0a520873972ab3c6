// Partitions, compositions, multi-partitions and standard Young tableaux.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "grpd/error.hpp"
#include "grpd/perm.hpp"

namespace grpd {

/// Weakly decreasing list of positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    require(std::is_sorted(parts.rbegin(), parts.rend()), "partition parts must be weakly decreasing");
    for (int x : parts) require(x > 0, "partition parts must be positive");
  }

  [[nodiscard]] int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  [[nodiscard]] int rows() const { return static_cast<int>(parts.size()); }
  [[nodiscard]] int column_height(int j) const {
    int h = 0;
    for (int x : parts) h += x > j;
    return h;
  }

  auto operator<=>(const Partition&) const = default;

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

/// Composition of d with l nonnegative parts; index i is color i+1.
using Composition = std::vector<int>;

inline int composition_sum(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

/// lambda! = prod lambda_i!.
inline std::int64_t composition_factorial(const Composition& c) {
  std::int64_t r = 1;
  for (int x : c) r *= factorial(x);
  return r;
}

/// All compositions of d into l parts, lexicographically decreasing
/// (so (d,0,...,0) comes first).
inline std::vector<Composition> enum_compositions(int l, int d) {
  require(l >= 1 && d >= 0, "enum_compositions: need l >= 1 and d >= 0");
  std::vector<Composition> out;
  Composition cur(l, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == l - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, d);
  return out;
}

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> enum_partitions(int n) {
  require(n >= 0, "enum_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, maxpart); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// An l-tuple of partitions; component i has size shape()[i].
struct MultiPartition {
  std::vector<Partition> comps;

  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> c) : comps(std::move(c)) {}

  [[nodiscard]] Composition shape() const {
    Composition s;
    s.reserve(comps.size());
    for (const auto& p : comps) s.push_back(p.size());
    return s;
  }
  [[nodiscard]] int size() const { return composition_sum(shape()); }

  auto operator<=>(const MultiPartition&) const = default;

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i) s += ",";
      s += comps[i].parts.empty() ? std::string("()") : comps[i].str();
    }
    return s + ")";
  }
};

/// Cartesian product of per-component partition lists; the first component
/// varies slowest.
inline std::vector<MultiPartition> enum_multipartitions(const Composition& shape) {
  std::vector<std::vector<Partition>> lists;
  for (int x : shape) lists.push_back(enum_partitions(x));
  std::vector<MultiPartition> out;
  std::vector<Partition> cur(shape.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == shape.size()) {
      out.emplace_back(cur);
      return;
    }
    for (const auto& p : lists[i]) {
      cur[i] = p;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// All l-multi-partitions of total size d, grouped by shape in
/// enum_compositions order.
inline std::vector<MultiPartition> enum_all_multipartitions(int l, int d) {
  std::vector<MultiPartition> out;
  for (const auto& shape : enum_compositions(l, d)) {
    for (auto& p : enum_multipartitions(shape)) out.push_back(std::move(p));
  }
  return out;
}

/// dim of the Specht module by the hook length formula.
inline std::int64_t hook_length_dim(const Partition& mu) {
  std::int64_t num = factorial(mu.size());
  std::int64_t den = 1;
  for (int i = 0; i < mu.rows(); ++i) {
    for (int j = 0; j < mu.parts[i]; ++j) {
      const int arm = mu.parts[i] - j - 1;
      const int leg = mu.column_height(j) - i - 1;
      den *= arm + leg + 1;
    }
  }
  return num / den;
}

/// Young tableau as rows of entries; entries are 1..n for standard tableaux.
struct StdTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  auto operator<=>(const StdTableau&) const = default;
};

inline bool is_standard(const std::vector<std::vector<int>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j + 1 < rows[i].size() && rows[i][j] >= rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i][j] >= rows[i + 1][j]) return false;
    }
  }
  return true;
}

/// Standard tableaux of shape mu, filling 1..n in order; at each step the
/// candidate rows are tried top to bottom, so the row-reading tableau is first.
inline std::vector<StdTableau> standard_tableaux(const Partition& mu) {
  const int n = mu.size();
  std::vector<StdTableau> out;
  std::vector<std::vector<int>> rows(mu.rows());
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(StdTableau{mu, rows});
      return;
    }
    for (int r = 0; r < mu.rows(); ++r) {
      const auto len = static_cast<int>(rows[r].size());
      if (len >= mu.parts[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(next);
      rec(next + 1);
      rows[r].pop_back();
    }
  };
  rec(1);
  if (static_cast<std::int64_t>(out.size()) != hook_length_dim(mu)) {
    throw std::logic_error("standard tableau count disagrees with the hook length formula for " + mu.str());
  }
  return out;
}

/// Partitions obtained from mu by removing one removable node, top row first.
inline std::vector<Partition> remove_one_node(const Partition& mu) {
  std::vector<Partition> out;
  for (int i = 0; i < mu.rows(); ++i) {
    if (i + 1 < mu.rows() && mu.parts[i + 1] == mu.parts[i]) continue;
    std::vector<int> p = mu.parts;
    if (--p[i] == 0) p.pop_back();
    out.emplace_back(std::move(p));
  }
  return out;
}

/// Multi-partitions obtained by removing one removable node from one component.
inline std::vector<MultiPartition> remove_one_node(const MultiPartition& p) {
  std::vector<MultiPartition> out;
  for (std::size_t c = 0; c < p.comps.size(); ++c) {
    for (auto& q : remove_one_node(p.comps[c])) {
      MultiPartition r = p;
      r.comps[c] = std::move(q);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace grpd
