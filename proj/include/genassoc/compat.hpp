#pragma once

#include <vector>

#include "genassoc/report.hpp"
#include "genassoc/tau.hpp"

namespace genassoc {

struct Transport {
  TauWord word;  // sigma with sigma(alpha) = -alpha_{j+1}
  int j = -1;    // 0-based simple index
};

/// Shortest alternating word moving alpha into -Pi, at most h+2 factors.
/// Deterministic: among the two alternating words of the winning length the
/// one whose first applied factor is tau_+ is preferred. Throws
/// ConsistencyError if nothing is found within h+2 steps.
Transport transport_to_negative(const RootCatalog& cat, int alpha);

/// (alpha || beta): transport alpha to some -alpha_j, apply the same word
/// to beta, read off max([. : alpha_j], 0).
int compatibility_degree(const RootCatalog& cat, int alpha, int beta);

bool compatible(const RootCatalog& cat, int alpha, int beta);

/// Full |catalog|^2 table of compatibility degrees.
struct DegreeTable {
  int ncat = 0;
  std::vector<int> deg;  // row-major

  int at(int a, int b) const { return deg[static_cast<size_t>(a) * ncat + b]; }
  bool compatible(int a, int b) const { return at(a, b) == 0; }
};

/// Reference implementation: one transport per ordered pair.
DegreeTable build_degree_table_serial(const RootCatalog& cat);

/// Kernel: one transport per row, word replayed through the catalog
/// permutations; rows distributed over OpenMP threads (threads <= 0 picks
/// the configured default). Output is identical to the serial reference.
DegreeTable build_degree_table(const RootCatalog& cat, int threads = 0);

/// The two-element set E(alpha,alpha') of twisted sums: sum is
/// alpha+alpha', subsum the other element (alpha [+] alpha'). For n == 1
/// both are the zero vector.
struct ESet {
  RootVec sum;
  RootVec subsum;
};

/// Requires (alpha||alpha') = (alpha'||alpha) = 1, else PreconditionError.
RootVec subplus(const RootCatalog& cat, int alpha, int alpha_prime);
ESet e_set(const RootCatalog& cat, int alpha, int alpha_prime);

/// For every unordered pair with mutual degree 1 and every i: a positive
/// coordinate of alpha [+] alpha' forces a positive coordinate of
/// alpha + alpha'. Violations are reported with the witness pair.
Report check_second_term(const RootCatalog& cat, const DegreeTable& table,
                         int threads = 0);

}  // namespace genassoc
