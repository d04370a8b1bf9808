#include "genassoc/oracle_models.hpp"

#include <algorithm>
#include <map>

#include "genassoc/errors.hpp"

namespace genassoc {

bool diagonals_cross(const Diagonal& d1, const Diagonal& d2) {
  if ((d1.a == d2.a && d1.b == d2.b) || d1.a == d2.a || d1.a == d2.b ||
      d1.b == d2.a || d1.b == d2.b)
    return false;
  bool c_in = d1.a < d2.a && d2.a < d1.b;
  bool d_in = d1.a < d2.b && d2.b < d1.b;
  return c_in != d_in;
}

int crossing_degree_A(const Diagonal& d1, const Diagonal& d2) {
  return diagonals_cross(d1, d2) ? 1 : 0;
}

namespace {

Diagonal make_diag(int a, int b) {
  if (a > b) std::swap(a, b);
  return Diagonal{a, b};
}

std::vector<Diagonal> all_diagonals(int gon) {
  std::vector<Diagonal> out;
  for (int a = 0; a < gon; ++a)
    for (int b = a + 2; b < gon; ++b) {
      if (a == 0 && b == gon - 1) continue;  // boundary edge
      out.push_back(Diagonal{a, b});
    }
  return out;
}

// Snake: a zig-zag between the two boundary arcs.
// 1-based snake position i gives the chord {floor(i/2), gon-1-ceil(i/2)}.
Diagonal snake_diag(int i, int gon) {
  return make_diag(i / 2, gon - 1 - (i + 1) / 2);
}

}  // namespace

PolygonModelA snake_map_A(const RootCatalog& cat) {
  if (cat.type.family != 'A')
    throw std::invalid_argument("type A polygon model needs an A_n catalog");
  PolygonModelA model;
  model.n = cat.rank;
  model.gon = cat.rank + 3;
  for (int i = 1; i <= model.n; ++i) model.snake.push_back(snake_diag(i, model.gon));

  model.by_catalog.resize(cat.size());
  for (int i = 0; i < model.n; ++i) model.by_catalog[i] = model.snake[i];

  // a positive root alpha[i..j] is the unique diagonal crossing exactly
  // snake diagonals i..j
  std::map<std::vector<int>, Diagonal> by_crossings;
  for (const Diagonal& d : all_diagonals(model.gon)) {
    std::vector<int> crossed;
    for (int i = 0; i < model.n; ++i)
      if (diagonals_cross(d, model.snake[i])) crossed.push_back(i);
    if (crossed.empty()) continue;  // the snake itself
    if (!by_crossings.emplace(crossed, d).second)
      throw ConsistencyError("two diagonals with the same snake crossings");
  }
  for (int r = model.n; r < cat.size(); ++r) {
    std::vector<int> interval;
    for (int i = 0; i < model.n; ++i)
      if (cat.roots[r][i] == 1) interval.push_back(i);
    auto it = by_crossings.find(interval);
    if (it == by_crossings.end())
      throw ConsistencyError("no diagonal for root " + cat.root_name(r));
    model.by_catalog[r] = it->second;
  }
  if (by_crossings.size() + model.n != static_cast<size_t>(cat.size()))
    throw ConsistencyError("diagonal count does not match the catalog");
  return model;
}

int PolygonModelA::degree(int a_idx, int b_idx) const {
  return crossing_degree_A(by_catalog[a_idx], by_catalog[b_idx]);
}

int crossing_degree_BC(char family, const ThetaOrbit& o1, const ThetaOrbit& o2) {
  // B: crossings of one diagonal representing the first argument by the
  // diagonals representing the second; C: the roles are swapped.
  const ThetaOrbit& rep_side = (family == 'B') ? o1 : o2;
  const ThetaOrbit& all_side = (family == 'B') ? o2 : o1;
  const Diagonal& rep = rep_side.diags.front();
  int count = 0;
  for (const Diagonal& d : all_side.diags)
    if (diagonals_cross(rep, d)) ++count;
  return count;
}

PolygonModelBC snake_map_BC(const RootCatalog& cat) {
  if (cat.type.family != 'B' && cat.type.family != 'C')
    throw std::invalid_argument("types B/C polygon model needs a B_n or C_n catalog");
  PolygonModelBC model;
  model.family = cat.type.family;
  model.n = cat.rank;
  model.gon = 2 * cat.rank + 2;
  int half = model.gon / 2;
  auto theta = [&](const Diagonal& d) {
    return make_diag((d.a + half) % model.gon, (d.b + half) % model.gon);
  };

  // Theta-orbits of all diagonals
  std::map<std::pair<int, int>, int> seen;
  std::vector<ThetaOrbit> orbits;
  for (const Diagonal& d : all_diagonals(model.gon)) {
    if (seen.count({d.a, d.b})) continue;
    Diagonal img = theta(d);
    ThetaOrbit o;
    if (img.a == d.a && img.b == d.b)
      o.diags = {d};
    else
      o.diags = {d, img};
    seen[{d.a, d.b}] = static_cast<int>(orbits.size());
    seen[{img.a, img.b}] = static_cast<int>(orbits.size());
    orbits.push_back(std::move(o));
  }

  model.by_catalog.resize(cat.size());
  std::vector<bool> used(orbits.size(), false);
  for (int i = 0; i < model.n; ++i) {
    int oi = seen.at({snake_diag(i + 1, model.gon).a, snake_diag(i + 1, model.gon).b});
    model.by_catalog[i] = orbits[oi];
    used[oi] = true;
  }
  if (!model.by_catalog[model.n - 1].diameter())
    throw ConsistencyError("-alpha_n is not the snake diameter");

  // identify positive roots through their crossing counts against the snake
  std::map<std::vector<int>, int> by_counts;
  for (size_t oi = 0; oi < orbits.size(); ++oi) {
    if (used[oi]) continue;
    std::vector<int> counts(model.n);
    for (int i = 0; i < model.n; ++i)
      counts[i] = crossing_degree_BC(model.family, model.by_catalog[i], orbits[oi]);
    if (!by_counts.emplace(counts, static_cast<int>(oi)).second)
      throw ConsistencyError("two Theta-orbits with the same snake crossings");
  }
  for (int r = model.n; r < cat.size(); ++r) {
    std::vector<int> want(model.n);
    for (int i = 0; i < model.n; ++i)
      want[i] = static_cast<int>(cat.roots[r][i]);
    auto it = by_counts.find(want);
    if (it == by_counts.end())
      throw ConsistencyError("no Theta-orbit for root " + cat.root_name(r));
    model.by_catalog[r] = orbits[it->second];
    used[it->second] = true;
  }
  for (bool u : used)
    if (!u) throw ConsistencyError("unused Theta-orbit after identification");
  return model;
}

int PolygonModelBC::degree(int a_idx, int b_idx) const {
  return crossing_degree_BC(family, by_catalog[a_idx], by_catalog[b_idx]);
}

namespace {

// Counts maximal sets of pairwise compatible items given a compatibility
// matrix, by increasing-index backtracking with a global maximality check
// at the leaves. Independent of the Bron-Kerbosch cluster search.
std::uint64_t count_maximal_sets(const std::vector<std::vector<bool>>& ok) {
  int n = static_cast<int>(ok.size());
  std::uint64_t count = 0;
  std::vector<int> chosen;
  auto feasible = [&](int cand) {
    for (int c : chosen)
      if (!ok[c][cand]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int start) -> void {
    bool extended = false;
    for (int v = start; v < n; ++v) {
      if (!feasible(v)) continue;
      extended = true;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
    if (!extended) {
      for (int v = 0; v < start; ++v)
        if (std::find(chosen.begin(), chosen.end(), v) == chosen.end() &&
            feasible(v))
          return;  // not maximal
      ++count;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

std::uint64_t count_maximal_noncrossing(CartanType t) {
  if (t.family == 'A') {
    auto diags = all_diagonals(t.rank + 3);
    int n = static_cast<int>(diags.size());
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ok[i][j] = i == j || !diagonals_cross(diags[i], diags[j]);
    return count_maximal_sets(ok);
  }
  if (t.family == 'B' || t.family == 'C') {
    int gon = 2 * t.rank + 2, half = gon / 2;
    auto theta = [&](const Diagonal& d) {
      return make_diag((d.a + half) % gon, (d.b + half) % gon);
    };
    std::map<std::pair<int, int>, int> seen;
    std::vector<ThetaOrbit> orbits;
    for (const Diagonal& d : all_diagonals(gon)) {
      if (seen.count({d.a, d.b})) continue;
      Diagonal img = theta(d);
      ThetaOrbit o;
      o.diags = (img.a == d.a && img.b == d.b) ? std::vector<Diagonal>{d}
                                               : std::vector<Diagonal>{d, img};
      seen[{d.a, d.b}] = static_cast<int>(orbits.size());
      seen[{img.a, img.b}] = static_cast<int>(orbits.size());
      orbits.push_back(std::move(o));
    }
    int n = static_cast<int>(orbits.size());
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, true));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (const Diagonal& d1 : orbits[i].diags)
          for (const Diagonal& d2 : orbits[j].diags)
            if (diagonals_cross(d1, d2)) ok[i][j] = false;
      }
    return count_maximal_sets(ok);
  }
  throw std::invalid_argument("polygon model exists for types A, B, C only");
}

}  // namespace genassoc
