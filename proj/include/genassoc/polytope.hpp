#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genassoc/clusters.hpp"

namespace genassoc {

/// tau-invariant support function data: one rational per <-w0>-orbit of
/// -Pi (orbit order: by smallest simple index), extended to the whole
/// catalog by orbit constancy. Validated against conditions (5)-(6);
/// `scaled` carries numerators over the common denominator `den` for
/// all-integer comparisons downstream.
struct SupportFunction {
  bool rho_mode = false;
  std::vector<Rat> orbit_values;   // per orbit id
  std::vector<Rat> full;           // per catalog index
  Int den = 1;                     // common denominator
  std::vector<Int> scaled;         // scaled[i] = full[i] * den

  const Rat& at(int catalog_idx) const { return full[catalog_idx]; }
};

/// Custom values, one per orbit. Throws std::invalid_argument on a count
/// mismatch and SupportConditionError when condition (5) or (6) fails
/// (listing the failing 1-based j).
SupportFunction build_support_function(const RootCatalog& cat,
                                       const OrbitPartition& orb,
                                       const std::vector<Rat>& orbit_values);

/// rho^vee mode: F(-alpha_i) = [rho^vee : alpha_i^vee], the half-sum of
/// positive coroots. Every condition-(6) left side is verified to equal 1.
SupportFunction build_support_function_rho(const RootCatalog& cat,
                                           const OrbitPartition& orb);

/// The (unique) linear form agreeing with F on the cluster, as the exact
/// solution of the unimodular n x n system. Throws ConsistencyError on a
/// singular system.
RatVec vertex(const RootCatalog& cat, const Cluster& c, const SupportFunction& F);

struct Facet {
  int root = -1;    // catalog index; normal = that root's coordinates
  Rat rhs;          // F(root)
};

/// One inequality sum_j [alpha:alpha_j] z_j <= F(alpha) per catalog element,
/// in catalog order.
std::vector<Facet> facets(const RootCatalog& cat, const SupportFunction& F);

/// Exact-rational realization: vertices indexed by clusters (stored as
/// integer numerators over F.den) plus the facet system.
struct PolytopeRealization {
  const RootCatalog* cat = nullptr;
  SupportFunction F;
  std::vector<Cluster> clusters;
  std::vector<std::vector<Int>> vertex_num;  // scaled by F.den
  Int den = 1;

  RatVec vertex_coords(int cluster_idx) const;
  int vertex_count() const { return static_cast<int>(vertex_num.size()); }
};

/// Solves every cluster's vertex (OpenMP over clusters).
PolytopeRealization realize(const RootCatalog& cat, const SupportFunction& F,
                            std::vector<Cluster> clusters, int threads = 0);

/// Three exact sub-checks: (a) simplicity - each vertex meets exactly its
/// own n facets with equality, all others strictly; (b) exchange convexity
/// - F(alpha)+F(alpha') - sum m_b F(beta) > 0 for every exchange pair;
/// (c) the vertex map is injective.
Report verify_realization(const PolytopeRealization& real,
                          const std::vector<ExchangePair>& pairs,
                          int threads = 0);

/// Folds conditions (6) along <-w0>-orbits into a square matrix M over
/// orbit variables, then for every pair (alpha, j) with [alpha:alpha_j] =
/// [alpha^vee:alpha_j^vee] = 1 forms the orbit-coefficient vector c of
/// F(-alpha_j) + F(alpha) - sum m_beta F(beta) and checks M^-T c >= 0
/// entrywise: a symbolic proof that (6) implies the inequality for every
/// admissible F. Fold inconsistency or a singular M throws
/// ConsistencyError; negative certificate entries are reported with
/// (alpha, j).
Report certificate_check(const RootCatalog& cat, const OrbitPartition& orb,
                         int threads = 0);

/// Certificate vector M^-T c for one qualifying pair (exposed for tests and
/// the worked E6 example). Returns {c, lambda}.
struct CertificateRow {
  std::vector<Rat> c;
  std::vector<Rat> lambda;
};
CertificateRow certificate_row(const RootCatalog& cat, const OrbitPartition& orb,
                               int alpha_catalog_idx, int j);

/// Stable-field-order JSON per the documented schema.
std::string export_json(const PolytopeRealization& real, const OrbitPartition& orb,
                        bool verified);
/// OFF with face cycles from facet incidence; rank 3 only (else
/// std::invalid_argument). Decimal vertices carry exact rationals in
/// comments.
std::string export_off(const PolytopeRealization& real);
/// Plain-text inequality listing in the z-coordinates.
std::string export_txt(const PolytopeRealization& real);

/// Exact rational linear algebra helpers (n <= rank sized problems).
RatVec solve_linear(const IntMatrix& m, const RatVec& rhs);  // ConsistencyError if singular
std::vector<std::vector<Rat>> rat_inverse(const std::vector<std::vector<Rat>>& m);
Int det_int(IntMatrix m);  // Bareiss, fraction-free

}  // namespace genassoc
