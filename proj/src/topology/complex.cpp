#include "strongconv/topology/complex.hpp"

#include "strongconv/errors.hpp"
#include "strongconv/numeric/rational.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace strongconv::topology {

using numeric::Rational;

int simplex_size(Simplex s) { return std::popcount(s); }

std::vector<std::size_t> simplex_vertices(Simplex s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

namespace {

bool simplex_less(Simplex a, Simplex b) {
  const int sa = std::popcount(a), sb = std::popcount(b);
  return sa != sb ? sa < sb : a < b;
}

void check_ground(std::size_t n) {
  if (n > 64) throw SizeLimitError("complexes support at most 64 ground-set elements");
}

Simplex full_mask(std::size_t n) { return n == 64 ? ~Simplex{0} : (Simplex{1} << n) - 1; }

std::string part_text(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// Compact relabelling of the ground set to the bits of `keep`.
std::vector<std::string> restrict_labels(const std::vector<std::string>& labels, Simplex keep) {
  std::vector<std::string> out;
  for (std::size_t v : simplex_vertices(keep)) out.push_back(labels[v]);
  return out;
}

Simplex compress(Simplex s, Simplex keep) {
  Simplex out = 0;
  int bit = 0;
  for (std::size_t v : simplex_vertices(keep)) {
    if (s >> v & 1) out |= Simplex{1} << bit;
    ++bit;
  }
  return out;
}

}  // namespace

bool HomologyProfile::all_zero() const {
  return std::all_of(betti.begin(), betti.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<std::string> SimplicialComplex::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> labels) {
  check_ground(labels.size());
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.void_ = true;
  return c;
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<std::string> labels, std::vector<Simplex> simplices,
                                                std::optional<std::vector<Simplex>> partition) {
  check_ground(labels.size());
  const Simplex full = full_mask(labels.size());
  std::unordered_set<Simplex> all;
  all.insert(0);
  for (Simplex f : simplices) {
    if (f & ~full) throw InputError("simplex uses a vertex outside the ground set");
    if (all.count(f)) continue;
    if (std::popcount(f) > 26) throw SizeLimitError("facet too large to close downward");
    for (Simplex s = f;; s = (s - 1) & f) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.simplices_.assign(all.begin(), all.end());
  std::sort(c.simplices_.begin(), c.simplices_.end(), simplex_less);
  if (partition) c = c.with_partition(std::move(*partition));
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels, const std::vector<std::vector<std::size_t>>& facets,
                                                 std::optional<std::vector<std::vector<std::size_t>>> partition) {
  check_ground(labels.size());
  std::vector<Simplex> masks;
  for (const auto& f : facets) {
    Simplex m = 0;
    for (std::size_t v : f) {
      if (v >= labels.size()) throw InputError("facet vertex " + std::to_string(v) + " is outside the ground set");
      m |= Simplex{1} << v;
    }
    masks.push_back(m);
  }
  std::optional<std::vector<Simplex>> parts;
  if (partition) {
    parts.emplace();
    for (const auto& p : *partition) {
      Simplex m = 0;
      for (std::size_t v : p) {
        if (v >= labels.size()) throw InputError("partition vertex " + std::to_string(v) + " is outside the ground set");
        m |= Simplex{1} << v;
      }
      parts->push_back(m);
    }
  }
  return from_masks(std::move(labels), std::move(masks), std::move(parts));
}

SimplicialComplex SimplicialComplex::with_partition(std::vector<Simplex> parts) const {
  Simplex seen = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw InputError("partition part " + std::to_string(i) + " is empty");
    if (parts[i] & seen) throw InputError("partition parts overlap");
    seen |= parts[i];
  }
  if (seen != full_mask(labels_.size())) throw InputError("partition does not cover the ground set");
  SimplicialComplex c = *this;
  c.partition_ = std::move(parts);
  return c;
}

bool SimplicialComplex::contains(Simplex s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, simplex_less);
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    const Simplex s = simplices_[i];
    bool maximal = true;
    for (std::size_t v = 0; v < labels_.size() && maximal; ++v) {
      if (!(s >> v & 1) && contains(s | Simplex{1} << v)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

Simplex SimplicialComplex::vertex_mask() const {
  Simplex m = 0;
  for (Simplex s : simplices_) m |= s;
  return m;
}

int SimplicialComplex::dimension() const { return simplices_.empty() ? -1 : simplex_size(simplices_.back()) - 1; }

bool SimplicialComplex::is_full_simplex() const { return !void_ && contains(full_mask(labels_.size())); }

std::uint64_t boundary_rank(const SimplicialComplex& c, int k) {
  if (c.is_void() || k < 0) return 0;
  std::vector<Simplex> cols, rows;
  for (Simplex s : c.simplices()) {
    const int sz = simplex_size(s);
    if (sz == k + 1) cols.push_back(s);
    if (sz == k) rows.push_back(s);
  }
  if (cols.empty() || rows.empty()) return 0;
  if (k == 0) return 1;
  std::unordered_map<Simplex, std::uint32_t> row_index;
  for (std::uint32_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

  // Column reduction keyed by the largest row index ("low").
  using Column = std::vector<std::pair<std::uint32_t, Rational>>;
  std::unordered_map<std::uint32_t, Column> pivots;
  std::uint64_t rank = 0;
  for (Simplex s : cols) {
    Column col;
    int sign = 1;
    for (std::size_t v : simplex_vertices(s)) {
      col.emplace_back(row_index.at(s & ~(Simplex{1} << v)), Rational(sign));
      sign = -sign;
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!col.empty()) {
      auto it = pivots.find(col.back().first);
      if (it == pivots.end()) break;
      const Column& p = it->second;
      const Rational f = col.back().second / p.back().second;
      Column merged;
      merged.reserve(col.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < p.size()) {
        if (j == p.size() || (i < col.size() && col[i].first < p[j].first)) {
          merged.push_back(std::move(col[i++]));
        } else if (i == col.size() || p[j].first < col[i].first) {
          merged.emplace_back(p[j].first, -f * p[j].second);
          ++j;
        } else {
          Rational v = col[i].second - f * p[j].second;
          if (v != 0) merged.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      ++rank;
      const std::uint32_t low = col.back().first;
      pivots.emplace(low, std::move(col));
    }
  }
  return rank;
}

HomologyProfile reduced_betti(const SimplicialComplex& c) {
  HomologyProfile h;
  if (c.is_void()) {
    h.is_empty_complex = true;
    return h;
  }
  const int top = c.dimension();
  std::vector<std::uint64_t> count(static_cast<std::size_t>(top + 2), 0);
  for (Simplex s : c.simplices()) ++count[static_cast<std::size_t>(simplex_size(s))];
  std::vector<std::uint64_t> rank(static_cast<std::size_t>(top + 3), 0);
  for (int k = 0; k <= top; ++k) rank[static_cast<std::size_t>(k)] = boundary_rank(c, k);
  for (int dim = -1; dim <= top; ++dim) {
    const std::size_t size = static_cast<std::size_t>(dim + 1);
    const std::uint64_t out = dim >= 0 ? rank[static_cast<std::size_t>(dim)] : 0;
    const std::uint64_t in = rank[static_cast<std::size_t>(dim + 1)];
    h.betti[dim] = count[size] - out - in;
  }
  return h;
}

bool is_acyclic_complex(const SimplicialComplex& c) {
  if (c.is_void()) throw PreconditionError("acyclicity is undefined for the void complex");
  return reduced_betti(c).all_zero();
}

SimplicialComplex link(const SimplicialComplex& c, Simplex sigma) {
  if (c.is_void() || !c.contains(sigma)) throw InputError("the simplex is not in the complex");
  std::vector<Simplex> taus;
  Simplex used = 0;
  for (Simplex t : c.simplices()) {
    if ((t & sigma) == 0 && c.contains(t | sigma)) {
      taus.push_back(t);
      used |= t;
    }
  }
  std::vector<Simplex> compact;
  for (Simplex t : taus) compact.push_back(compress(t, used));
  return SimplicialComplex::from_masks(restrict_labels(c.labels(), used), std::move(compact));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, Simplex keep) {
  if (keep & ~full_mask(c.ground_size())) throw InputError("vertex subset leaves the ground set");
  if (keep == 0) throw InputError("induced subcomplex needs a nonempty vertex subset");
  if (c.is_void()) return SimplicialComplex::void_complex(restrict_labels(c.labels(), keep));
  std::vector<Simplex> out;
  for (Simplex s : c.simplices()) {
    if ((s & ~keep) == 0) out.push_back(compress(s, keep));
  }
  return SimplicialComplex::from_masks(restrict_labels(c.labels(), keep), std::move(out));
}

SimplicialComplex induced_by_colors(const SimplicialComplex& c, const std::vector<std::size_t>& colors) {
  if (!c.partition()) throw InputError("the complex has no partition");
  if (colors.empty()) throw InputError("induced subcomplex needs a nonempty color subset");
  Simplex keep = 0;
  for (std::size_t i : colors) {
    if (i >= c.partition()->size()) throw InputError("unknown color index " + std::to_string(i));
    keep |= (*c.partition())[i];
  }
  SimplicialComplex sub = induced_subcomplex(c, keep);
  std::vector<Simplex> parts;
  for (std::size_t i : colors) parts.push_back(compress((*c.partition())[i], keep));
  return sub.with_partition(std::move(parts));
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  const std::size_t n = c.ground_size();
  if (n > 24) throw SizeLimitError("Alexander dual enumerates 2^|V| subsets; |V| must be <= 24");
  const Simplex full = full_mask(n);
  std::vector<Simplex> dual;
  for (Simplex s = 0;; ++s) {
    if (c.is_void() || !c.contains(full ^ s)) dual.push_back(s);
    if (s == full) break;
  }
  if (dual.empty()) return SimplicialComplex::void_complex(c.labels());
  SimplicialComplex d = SimplicialComplex::from_masks(c.labels(), std::move(dual));
  if (c.partition()) d = d.with_partition(*c.partition());
  return d;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t na = a.ground_size();
  check_ground(na + b.ground_size());
  std::unordered_set<std::string> la(a.labels().begin(), a.labels().end());
  bool clash = false;
  for (const auto& l : b.labels()) clash = clash || la.count(l);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(clash ? "a:" + l : l);
  for (const auto& l : b.labels()) labels.push_back(clash ? "b:" + l : l);
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(std::move(labels));
  std::vector<Simplex> out;
  out.reserve(a.simplices().size() * b.simplices().size());
  for (Simplex x : a.simplices())
    for (Simplex y : b.simplices()) out.push_back(x | (y << na));
  std::optional<std::vector<Simplex>> parts;
  if (a.partition() && b.partition()) {
    parts = *a.partition();
    for (Simplex p : *b.partition()) parts->push_back(p << na);
  }
  return SimplicialComplex::from_masks(std::move(labels), std::move(out), std::move(parts));
}

SimplicialComplex nerve(std::vector<std::string> labels, const std::function<bool(Simplex)>& intersects, std::uint64_t cap) {
  const std::size_t n = labels.size();
  check_ground(n);
  std::vector<Simplex> all{0};
  std::vector<Simplex> level;
  for (std::size_t i = 0; i < n; ++i) {
    if (intersects(Simplex{1} << i)) level.push_back(Simplex{1} << i);
  }
  std::unordered_set<Simplex> present(level.begin(), level.end());
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    if (all.size() > cap) throw SizeLimitError("nerve exceeds " + std::to_string(cap) + " simplices");
    std::vector<Simplex> next;
    for (Simplex s : level) {
      // extend by vertices above the top vertex, requiring all faces present
      const int top = 63 - std::countl_zero(s);
      for (std::size_t v = static_cast<std::size_t>(top) + 1; v < n; ++v) {
        const Simplex t = s | Simplex{1} << v;
        bool faces = true;
        for (std::size_t u : simplex_vertices(s)) {
          if (!present.count(t & ~(Simplex{1} << u))) {
            faces = false;
            break;
          }
        }
        if (faces && intersects(t)) next.push_back(t);
      }
    }
    for (Simplex t : next) present.insert(t);
    level = std::move(next);
  }
  return SimplicialComplex::from_masks(std::move(labels), std::move(all));
}

namespace {

// First transversal (one vertex per part, lexicographic in vertex order)
// accepted by `pred`.
std::optional<Simplex> first_transversal(const std::vector<Simplex>& parts, const std::function<bool(Simplex)>& pred) {
  std::vector<std::vector<std::size_t>> choices;
  for (Simplex p : parts) choices.push_back(simplex_vertices(p));
  std::vector<std::size_t> pick(parts.size(), 0);
  for (;;) {
    Simplex s = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) s |= Simplex{1} << choices[i][pick[i]];
    if (pred(s)) return s;
    std::size_t i = parts.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

}  // namespace

MeshulamReport meshulam_check(const SimplicialComplex& c, std::size_t max_parts) {
  if (!c.partition()) throw InputError("Meshulam check needs a partitioned complex");
  const auto& parts = *c.partition();
  const std::size_t n = parts.size();
  if (n > max_parts) throw SizeLimitError("Meshulam check is capped at " + std::to_string(max_parts) + " parts");
  MeshulamReport report;
  report.hypothesis_holds = true;
  for (std::size_t size = 1; size <= n && report.hypothesis_holds; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      const HomologyProfile h = reduced_betti(induced_by_colors(c, idx));
      for (int i = -1; i <= static_cast<int>(size) - 2; ++i) {
        if (h.is_empty_complex || h.at(i) != 0) {
          report.hypothesis_holds = false;
          report.violating_I = idx;
          report.violating_dimension = i;
          report.violating_betti = h.at(i);
          break;
        }
      }
      if (!report.hypothesis_holds) break;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  report.colorful_simplex = first_transversal(parts, [&](Simplex s) { return c.contains(s); });
  return report;
}

LinkCheckReport very_colorful_link_check(const SimplicialComplex& c, std::size_t n, std::uint64_t max_simplices) {
  if (c.simplices().size() > max_simplices) {
    throw SizeLimitError("complex has more than " + std::to_string(max_simplices) + " simplices");
  }
  LinkCheckReport report;
  if (!c.partition() || c.partition()->size() != n + 1 || c.is_void()) {
    report.partition = {false, "expected a partition into " + std::to_string(n + 1) + " nonempty parts"};
    report.transversals = report.homology = report.links = {false, "not checked"};
    return report;
  }
  const auto& parts = *c.partition();
  if (auto missing = first_transversal(parts, [&](Simplex s) { return !c.contains(s); })) {
    report.transversals = {false, "transversal " + part_text(simplex_vertices(*missing)) + " is not a simplex"};
  }
  const HomologyProfile h = reduced_betti(c);
  for (const auto& [dim, b] : h.betti) {
    if (dim >= static_cast<int>(n) && b != 0) {
      report.homology = {false, "reduced Betti number " + std::to_string(b) + " in dimension " + std::to_string(dim)};
      break;
    }
  }
  for (Simplex s : c.simplices()) {
    if (s == 0) continue;
    const HomologyProfile hl = reduced_betti(link(c, s));
    for (const auto& [dim, b] : hl.betti) {
      if (dim >= static_cast<int>(n) - 1 && b != 0) {
        report.links = {false, "link of " + part_text(simplex_vertices(s)) + " has reduced Betti number " +
                                   std::to_string(b) + " in dimension " + std::to_string(dim)};
        break;
      }
    }
    if (!report.links.holds) break;
  }
  for (std::size_t i = 0; i < parts.size() && !report.pair; ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (c.contains(parts[i] | parts[j])) {
        report.pair = std::make_pair(i, j);
        break;
      }
    }
  }
  return report;
}

SimplicialComplex partial_transversals(const std::vector<std::size_t>& sizes) {
  std::size_t total = 0;
  std::vector<Simplex> parts;
  for (std::size_t s : sizes) {
    if (s == 0) throw InputError("parts must be nonempty");
    parts.push_back(((Simplex{1} << s) - 1) << total);
    total += s;
  }
  check_ground(total);
  std::vector<Simplex> simplices{0};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::size_t count = simplices.size();
    for (std::size_t v : simplex_vertices(parts[i]))
      for (std::size_t k = 0; k < count; ++k) simplices.push_back(simplices[k] | Simplex{1} << v);
  }
  return SimplicialComplex::from_masks(SimplicialComplex::numbered(total, "w"), std::move(simplices), std::move(parts));
}

}  // namespace strongconv::topology
