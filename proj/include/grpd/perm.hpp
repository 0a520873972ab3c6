// Permutations of {0..n-1} in one-line notation: p[i] is the image of i.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "grpd/error.hpp"

namespace grpd {

using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

inline bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

/// (a o b)(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) {
  require(a.size() == b.size(), "compose: permutations of different degree");
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) r[p[i]] = i;
  return r;
}

/// Transposition of i and i+1 (0-based) in S_n.
inline Perm adjacent_transposition(int n, int i) {
  require(i >= 0 && i + 1 < n, "adjacent transposition out of range");
  Perm p = identity_perm(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

inline int inversion_count(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  }
  return c;
}

inline int sign(const Perm& p) { return inversion_count(p) % 2 == 0 ? 1 : -1; }

/// Word i_1 ... i_r with p = s_{i_1} o ... o s_{i_r}, s_i swapping i and i+1.
inline std::vector<int> reduced_word(Perm p) {
  std::vector<int> rev;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < static_cast<int>(p.size()); ++i) {
      if (p[i] > p[i + 1]) {
        // p = (p o s_i) o s_i and p o s_i has one inversion fewer
        std::swap(p[i], p[i + 1]);
        rev.push_back(i);
        changed = true;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

/// Cycle lengths sorted decreasingly.
inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Rank of p among all permutations of its degree in lexicographic order.
inline std::int64_t perm_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::int64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

inline Perm perm_unrank(int n, std::int64_t r) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Perm p;
  p.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::int64_t f = factorial(n - 1 - i);
    const auto idx = static_cast<std::size_t>(r / f);
    r %= f;
    p.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return p;
}

/// All permutations of degree n in lexicographic order.
inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// One-line notation, 1-based.
inline std::string perm_str(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i] + 1);
  }
  return s + "]";
}

}  // namespace grpd
