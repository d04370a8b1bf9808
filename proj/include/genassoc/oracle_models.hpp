#pragma once

#include <cstdint>
#include <vector>

#include "genassoc/cartan.hpp"

namespace genassoc {

/// Chord of a regular polygon, endpoints 0-based counterclockwise, a < b,
/// non-adjacent on the boundary.
struct Diagonal {
  int a = 0, b = 0;
};

/// True when the two chords are distinct and share an interior point.
bool diagonals_cross(const Diagonal& d1, const Diagonal& d2);

/// Type A model on the (n+3)-gon: catalog index -> diagonal. The negative
/// simples land on the snake; the positive root alpha[i..j] lands on the
/// unique diagonal crossing exactly snake diagonals i..j.
struct PolygonModelA {
  int n = 0;
  int gon = 0;                     // n+3
  std::vector<Diagonal> snake;     // snake[i] represents -alpha_{i+1}
  std::vector<Diagonal> by_catalog;

  int degree(int a_idx, int b_idx) const;  // 0/1 crossing test
};
PolygonModelA snake_map_A(const RootCatalog& cat);

int crossing_degree_A(const Diagonal& d1, const Diagonal& d2);

/// Theta-orbit on the (2n+2)-gon: one diameter or a centrally symmetric
/// pair of diagonals.
struct ThetaOrbit {
  std::vector<Diagonal> diags;  // size 1 (diameter) or 2
  bool diameter() const { return diags.size() == 1; }
};

/// Types B/C model: catalog index -> Theta-orbit. Compatibility degree
/// counts crossings of one representative diagonal of the first argument
/// (type B) or of the second (type C) against all diagonals of the other
/// orbit. The positive-root identification goes through exactly those
/// counts against the snake, which pins the asymmetric rule to Eq. (3).
struct PolygonModelBC {
  char family = 'B';
  int n = 0;
  int gon = 0;                     // 2n+2
  std::vector<ThetaOrbit> by_catalog;

  int degree(int a_idx, int b_idx) const;
};
PolygonModelBC snake_map_BC(const RootCatalog& cat);

int crossing_degree_BC(char family, const ThetaOrbit& o1, const ThetaOrbit& o2);

/// Brute-force count of maximal sets of pairwise non-crossing diagonals
/// (type A: triangulations of the (n+3)-gon) or non-crossing Theta-orbits
/// (B/C: centrally symmetric triangulations of the (2n+2)-gon).
/// Independent of the clique search and of the catalog.
std::uint64_t count_maximal_noncrossing(CartanType t);

}  // namespace genassoc
