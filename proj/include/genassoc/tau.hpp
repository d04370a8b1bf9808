#pragma once

#include <string>
#include <vector>

#include "genassoc/cartan.hpp"
#include "genassoc/report.hpp"

namespace genassoc {

/// Word in the generators tau_+, tau_-. `signs` holds the factors in
/// application order: signs.front() acts first. Since each generator is an
/// involution, the normal form has no two adjacent equal signs.
struct TauWord {
  std::vector<int> signs;  // entries in {+1,-1}

  void normalize();        // cancel adjacent equal signs
  bool alternating() const;
  std::string str() const; // product-order display, e.g. "(-,+)"
};

/// Reversing the word inverts the composition (involutive generators).
TauWord sigma_inverse(TauWord w);

/// The piecewise-linear involution tau_eps on any lattice vector:
/// coordinates at i in I_eps become -v_i - sum_{j != i} a_ij * max(v_j, 0),
/// the rest are unchanged.
RootVec tau_apply(const RootCatalog& cat, int eps, const RootVec& v);

/// tau_eps restricted to the catalog. Throws ConsistencyError if the image
/// is not an almost positive root (construction bug).
int tau_on_catalog(const RootCatalog& cat, int eps, int idx);

/// Applies the word factor by factor (PL maps, valid on any lattice vector).
RootVec sigma_apply(const RootCatalog& cat, const TauWord& w, RootVec v);

/// Same, staying on catalog indices via the precomputed permutations.
int sigma_apply_idx(const RootCatalog& cat, const TauWord& w, int idx);

/// Builds tau_eps as a permutation of catalog indices (used once during
/// catalog construction).
std::vector<int> tau_catalog_permutation(const RootCatalog& cat, int eps);

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;   // disjoint, sorted, cover catalog;
                                          // ordered by smallest member
  std::vector<int> orbit_of;              // catalog index -> orbit id
  std::vector<std::vector<int>> negative_reps;  // per orbit: 0-based i with
                                                // -alpha_{i+1} in the orbit
  int count() const { return static_cast<int>(orbits.size()); }
};

/// <tau_+,tau_->-orbits on the catalog. Every orbit meets -Pi;
/// negative_reps records that intersection.
OrbitPartition orbits(const RootCatalog& cat);

/// Named checks: (i) both alternating words with h+2 factors act on every
/// catalog element as the linear map -w0; (ii) the orbit of -alpha_i holds
/// exactly h positive roots when P(i) != i, else h/2; (iii) orbit count
/// equals the number of <P>-orbits on I.
Report check_periodicity(const RootCatalog& cat);

}  // namespace genassoc
