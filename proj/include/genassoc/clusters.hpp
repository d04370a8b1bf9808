#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genassoc/compat.hpp"

namespace genassoc {

/// n pairwise-compatible catalog indices forming a Z-basis of the root
/// lattice; members sorted ascending.
struct Cluster {
  std::vector<int> members;

  bool operator==(const Cluster& o) const { return members == o.members; }
  bool operator<(const Cluster& o) const { return members < o.members; }
};

/// All maximal pairwise-compatible subsets of the catalog, sorted
/// lexicographically. Every maximal set is verified to have exactly n
/// elements (purity) and coordinate determinant +-1; violations throw
/// ConsistencyError. Catalog size is capped at 256 vertices.
std::vector<Cluster> enumerate_clusters_serial(const RootCatalog& cat,
                                               const DegreeTable& table);

/// Same result; the search tree is split on the first chosen vertex and the
/// branches run under OpenMP, merged and sorted deterministically.
std::vector<Cluster> enumerate_clusters(const RootCatalog& cat,
                                        const DegreeTable& table,
                                        int threads = 0);

/// Ordered terms of a cluster expansion: catalog index -> positive
/// coefficient. Term order is the emission order of the K-recursion
/// (stable, reproduces the recorded E6 golden table).
struct ClusterExpansion {
  std::vector<std::pair<int, Int>> terms;
  int depth = 0;  // tau-descents taken by the recursion

  RootVec reconstruct(const RootCatalog& cat) const;
  std::string str(const RootCatalog& cat) const;  // "[..] + 2*[..]"
};

/// K(gamma) via the recursion K(gamma) = {(-c_i)(-alpha_i) : c_i < 0} u
/// tau_eps(K(tau_eps(gamma_+))), eps alternating starting with -. The
/// result reproduces gamma exactly (checked); descending past h+2 levels
/// throws ConsistencyError.
ClusterExpansion cluster_expansion(const RootCatalog& cat, const RootVec& gamma);

/// Adjacent pair of clusters together with the exchanged roots and the
/// cluster expansion of their sum.
struct ExchangePair {
  int c1 = -1, c2 = -1;       // indices into the cluster list, c1 < c2
  int alpha = -1;             // in c1 \ c2
  int alpha_prime = -1;       // in c2 \ c1
  ClusterExpansion expansion; // of alpha + alpha', support in c1 n c2
};

/// All unordered adjacent pairs (shared (n-1)-subset). Verifies per pair:
/// the shared facet belongs to exactly two clusters, mutual compatibility
/// degree 1, expansion support inside the intersection, positive integer
/// coefficients. Violations throw ConsistencyError with witnesses.
std::vector<ExchangePair> exchange_pairs(const RootCatalog& cat,
                                         const DegreeTable& table,
                                         const std::vector<Cluster>& clusters,
                                         int threads = 0);

/// For a deterministic sample of lattice vectors (exhaustive [-2,2]^n box
/// for rank <= 4, seeded sample otherwise): the expansion reconstructs the
/// input, its support is pairwise compatible and lies inside an enumerated
/// cluster, and the recursion stays within h descents.
Report expansion_uniqueness_check(const RootCatalog& cat,
                                  const DegreeTable& table,
                                  const std::vector<Cluster>& clusters,
                                  std::uint64_t seed, int threads = 0);

/// One line per full-support positive root alpha and simple index j with
/// [alpha:alpha_j] = [alpha^vee:alpha_j^vee] = 1, giving the cluster
/// expansion of alpha - alpha_j. Rows ordered by (height, reverse-lex) on
/// alpha, then j ascending; for E6 this reproduces the golden table
/// byte for byte.
std::string full_support_expansion_table(const RootCatalog& cat);

}  // namespace genassoc
