#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strongconv::topology {

/// A simplex as a bitmask over the ground set (at most 64 vertices).
using Simplex = std::uint64_t;

/// Finite abstract simplicial complex on a labelled ground set V. Simplices
/// are kept downward closed and sorted by (size, mask); the empty simplex is
/// present in every complex except the void one. Ground-set elements need
/// not be vertices.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::vector<std::string> labels);
  /// Downward closure of the facets (lists of ground-set indices). The void
  /// complex is expressed by `void_complex`; no facets gives {∅}.
  static SimplicialComplex from_facets(std::vector<std::string> labels, const std::vector<std::vector<std::size_t>>& facets,
                                       std::optional<std::vector<std::vector<std::size_t>>> partition = std::nullopt);
  static SimplicialComplex from_masks(std::vector<std::string> labels, std::vector<Simplex> simplices,
                                      std::optional<std::vector<Simplex>> partition = std::nullopt);
  /// Ground set labelled "0", "1", ..., n-1.
  static std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "");

  std::size_t ground_size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_void() const { return void_; }
  /// All simplices including the empty one.
  const std::vector<Simplex>& simplices() const { return simplices_; }
  bool contains(Simplex s) const;
  /// Facets (maximal simplices) in (size, mask) order.
  std::vector<Simplex> facets() const;
  /// Union of all simplices.
  Simplex vertex_mask() const;
  /// -1 for {∅}; the void complex also reports -1.
  int dimension() const;
  bool is_full_simplex() const;

  const std::optional<std::vector<Simplex>>& partition() const { return partition_; }
  SimplicialComplex with_partition(std::vector<Simplex> parts) const;

  bool operator==(const SimplicialComplex& other) const {
    return void_ == other.void_ && simplices_ == other.simplices_ && labels_.size() == other.labels_.size();
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> simplices_;
  std::optional<std::vector<Simplex>> partition_;
  bool void_ = false;
};

int simplex_size(Simplex s);
std::vector<std::size_t> simplex_vertices(Simplex s);

/// Reduced rational Betti numbers, one entry per dimension -1..dim (zeros
/// included). Void complexes carry no numbers.
struct HomologyProfile {
  std::map<int, std::uint64_t> betti;
  bool is_empty_complex = false;

  std::uint64_t at(int i) const {
    auto it = betti.find(i);
    return it == betti.end() ? 0 : it->second;
  }
  bool all_zero() const;
  bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile reduced_betti(const SimplicialComplex& c);
/// Throws PreconditionError on the void complex.
bool is_acyclic_complex(const SimplicialComplex& c);

/// Rank over Q of the boundary map from k-simplices to (k-1)-simplices
/// (k = 0 maps vertices onto the empty simplex).
std::uint64_t boundary_rank(const SimplicialComplex& c, int k);

/// The link, on the ground set of vertices that occur in it.
SimplicialComplex link(const SimplicialComplex& c, Simplex sigma);
/// Restriction to a vertex subset; the ground set becomes that subset in order.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, Simplex vertices);
/// Restriction to the union of the given color classes; the partition is
/// kept for those classes in the given order.
SimplicialComplex induced_by_colors(const SimplicialComplex& c, const std::vector<std::size_t>& colors);

/// {S ⊆ V : V∖S ∉ C} over the ground set V; void when C is the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& c);

/// Join on the disjoint union of ground sets; colliding labels get "a:"/"b:"
/// prefixes. Partitions are concatenated when both are present.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Nerve of n sets, given a test for nonempty common intersection of a subset.
SimplicialComplex nerve(std::vector<std::string> labels, const std::function<bool(Simplex)>& intersects,
                        std::uint64_t cap = 50'000);

struct MeshulamReport {
  bool hypothesis_holds = false;
  std::optional<std::vector<std::size_t>> violating_I;
  int violating_dimension = 0;
  std::uint64_t violating_betti = 0;
  std::optional<Simplex> colorful_simplex;
  bool theorem_violated() const { return hypothesis_holds && !colorful_simplex; }
};

/// Meshulam's criterion on a partitioned complex (at most 16 parts).
MeshulamReport meshulam_check(const SimplicialComplex& c, std::size_t max_parts = 16);

struct LinkCondition {
  bool holds = true;
  std::string detail;
};

struct LinkCheckReport {
  LinkCondition partition;
  LinkCondition transversals;
  LinkCondition homology;
  LinkCondition links;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  bool all_hold() const { return partition.holds && transversals.holds && homology.holds && links.holds; }
  bool theorem_violated() const { return all_hold() && !pair; }
};

/// Conditions (partition, transversals, H_i(C) = 0 for i >= n, H_i(lk σ) = 0
/// for i >= n-1) and the search for parts i < j whose union is a simplex.
LinkCheckReport very_colorful_link_check(const SimplicialComplex& c, std::size_t n, std::uint64_t max_simplices = 50'000);

/// Complex of all partial transversals of parts with the given sizes.
SimplicialComplex partial_transversals(const std::vector<std::size_t>& sizes);

}  // namespace strongconv::topology
