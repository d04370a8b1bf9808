#pragma once

#include <map>
#include <string>
#include <vector>

#include "genassoc/numeric.hpp"

namespace genassoc {

using IntMatrix = std::vector<std::vector<Int>>;

struct CartanType {
  char family = 'A';  // one of A,B,C,D,E,F,G
  int rank = 1;

  /// Parses "A3", "e6", "C12". Throws std::invalid_argument on junk or a
  /// rank outside the family's range (A n>=1, B/C n>=2, D n>=4, E 6..8,
  /// F4, G2).
  static CartanType parse(const std::string& s);
  std::string str() const { return family + std::to_string(rank); }
  bool simply_laced() const {
    return family == 'A' || family == 'D' || family == 'E';
  }
};

/// The indexed, immutable set of almost positive roots with its Cartan data.
///
/// Catalog order: indices 0..n-1 are -alpha_1..-alpha_n, then the positive
/// roots sorted by height, ties broken lexicographically. Index i in `sign`,
/// `minus_w0` refers to the simple root alpha_{i+1} (0-based internally,
/// 1-based in printed output).
struct RootCatalog {
  CartanType type;
  int rank = 0;
  IntMatrix cartan;               // a[i][j] = <alpha_i^vee, alpha_j>
  std::vector<int> sign;          // epsilon(i) in {+1,-1}, bipartition
  std::vector<RootVec> roots;     // all of Phi_{>=-1}
  std::vector<RootVec> coroots;   // coordinates in the simple-coroot basis
  std::vector<Int> symmetrizer;   // d_i with d_i a_ij = d_j a_ji
  int num_positive = 0;
  int coxeter_number = 0;         // h
  std::vector<int> minus_w0;      // P with -w0(alpha_i) = alpha_{P(i)}

  // tau restricted to the catalog, as permutations of catalog indices;
  // filled during construction (see tau.hpp).
  std::vector<int> tau_plus_perm;
  std::vector<int> tau_minus_perm;

  std::map<RootVec, int> index_of;

  int size() const { return static_cast<int>(roots.size()); }
  /// Catalog index of v, or -1 if v is not an almost positive root.
  int idx(const RootVec& v) const {
    auto it = index_of.find(v);
    return it == index_of.end() ? -1 : it->second;
  }
  bool is_negative_simple(int i) const { return i >= 0 && i < rank; }
  const std::vector<int>& tau_perm(int eps) const {
    return eps > 0 ? tau_plus_perm : tau_minus_perm;
  }
  /// Display name like "a1+a2", "-a3".
  std::string root_name(int i) const;
};

/// Builds the full catalog for an irreducible type: Cartan matrix, positive
/// roots by reflection closure, bipartition, coroots, Coxeter number, the
/// tau permutations and the -w0 diagram permutation.
RootCatalog build_root_system(CartanType t);

/// BFS 2-coloring of the Coxeter graph from the smallest index; vertices at
/// even distance get +1. Throws ConsistencyError if the graph is not
/// 2-colorable (cannot happen for the supported types).
std::vector<int> bipartition(const IntMatrix& cartan);

/// h = 2|Phi_{>0}|/n, asserted to divide exactly.
int coxeter_number(const RootCatalog& cat);

/// The permutation P of I with (alternating tau word, h+2 factors)(-alpha_i)
/// = -alpha_{P(i)}; verified to be an involution and a Cartan automorphism.
std::vector<int> minus_w0(const RootCatalog& cat);

}  // namespace genassoc
