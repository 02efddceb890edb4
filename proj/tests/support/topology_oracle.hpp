#pragma once

// Brute-force complexes as sets of bitmasks, with reduced Betti numbers from
// dense boundary matrices. Nothing here goes through SimplicialComplex.

#include "strongconv/numeric/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

/// All subsets of the given faces (the empty face included when any face is).
inline std::set<Mask> closure(const std::vector<Mask>& faces) {
  std::set<Mask> out;
  for (Mask f : faces) {
    // enumerate submasks of f
    for (Mask s = f;; s = (s - 1) & f) {
      out.insert(s);
      if (s == 0) break;
    }
  }
  return out;
}

/// Reduced Betti numbers b[-1..n-1] of a complex on n vertices, with the
/// augmentation to the empty face. An empty set of faces is the void complex
/// and has every entry zero.
inline std::map<int, std::uint64_t> reduced_betti(const std::set<Mask>& c, std::size_t n) {
  std::map<int, std::vector<Mask>> by_size;
  for (Mask s : c) by_size[std::popcount(s)].push_back(s);
  // rank of the boundary from size k to size k - 1
  auto rank = [&](int k) -> std::size_t {
    if (k <= 0 || !by_size.count(k) || !by_size.count(k - 1)) return 0;
    const auto& cols = by_size[k];
    const auto& rows = by_size[k - 1];
    strongconv::numeric::RationalMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      for (std::size_t v = 0; v < 64; ++v) {
        if (!(cols[j] >> v & 1)) continue;
        const Mask face = cols[j] & ~(Mask{1} << v);
        const auto it = std::lower_bound(rows.begin(), rows.end(), face);
        m(static_cast<std::size_t>(it - rows.begin()), j) = sign;
        sign = -sign;
      }
    }
    return strongconv::numeric::matrix_rank(m);
  };
  std::map<int, std::uint64_t> out;
  for (int d = -1; d < static_cast<int>(n); ++d) {
    const int k = d + 1;  // faces of dimension d have k vertices
    const std::size_t faces = by_size.count(k) ? by_size[k].size() : 0;
    const std::size_t b = faces - rank(k) - rank(k + 1);
    if (b) out[d] = b;
  }
  return out;
}

inline std::uint64_t at(const std::map<int, std::uint64_t>& b, int i) {
  auto it = b.find(i);
  return it == b.end() ? 0 : it->second;
}

/// {S : V \ S not in c}.
inline std::set<Mask> alexander_dual(const std::set<Mask>& c, std::size_t n) {
  std::set<Mask> out;
  const Mask all = (Mask{1} << n) - 1;
  for (Mask s = 0; s <= all; ++s)
    if (!c.count(all & ~s)) out.insert(s);
  return out;
}

inline std::set<Mask> induced(const std::set<Mask>& c, Mask keep) {
  std::set<Mask> out;
  for (Mask s : c)
    if ((s & ~keep) == 0) out.insert(s);
  return out;
}

inline std::set<Mask> link(const std::set<Mask>& c, Mask sigma) {
  std::set<Mask> out;
  for (Mask s : c)
    if ((s & sigma) == 0 && c.count(s | sigma)) out.insert(s);
  return out;
}

/// Every transversal of the parts, as masks.
inline std::vector<Mask> transversals(const std::vector<Mask>& parts) {
  std::vector<Mask> out{0};
  for (Mask p : parts) {
    std::vector<Mask> next;
    for (Mask t : out)
      for (std::size_t v = 0; v < 64; ++v)
        if (p >> v & 1) next.push_back(t | Mask{1} << v);
    out = std::move(next);
  }
  return out;
}

/// Hypothesis of Meshulam's lemma over all nonempty colour sets I:
/// b_i(C[I]) = 0 for i <= |I| - 2.
inline bool meshulam_hypothesis(const std::set<Mask>& c, const std::vector<Mask>& parts, std::size_t n) {
  const std::size_t m = parts.size();
  for (Mask sel = 1; sel < (Mask{1} << m); ++sel) {
    Mask keep = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (sel >> i & 1) keep |= parts[i];
    const auto b = reduced_betti(induced(c, keep), n);
    const int top = std::popcount(sel) - 2;
    for (int i = -1; i <= top; ++i)
      if (at(b, i) != 0) return false;
  }
  return true;
}

/// Conditions (partition into n + 1 parts, transversals, homology, links) of
/// the link criterion for a colourful pair.
inline bool link_hypothesis(const std::set<Mask>& c, const std::vector<Mask>& parts, std::size_t verts, std::size_t n) {
  if (parts.size() != n + 1 || c.empty()) return false;
  for (Mask t : transversals(parts))
    if (!c.count(t)) return false;
  const auto b = reduced_betti(c, verts);
  for (const auto& [i, v] : b)
    if (i >= static_cast<int>(n) && v) return false;
  for (Mask s : c) {
    if (s == 0) continue;
    const auto lb = reduced_betti(link(c, s), verts);
    for (const auto& [i, v] : lb)
      if (i >= static_cast<int>(n) - 1 && v) return false;
  }
  return true;
}

}  // namespace oracle
