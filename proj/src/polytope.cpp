#include "genassoc/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "genassoc/errors.hpp"
#include "genassoc/parallel.hpp"

#include <json.hpp>

namespace genassoc {

Int det_int(IntMatrix m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) { swap_row = r; break; }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

RatVec solve_linear(const IntMatrix& mat, const RatVec& rhs) {
  int n = static_cast<int>(mat.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(mat[i][j]);
    a[i][n] = rhs[i];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw ConsistencyError("singular linear system");
    std::swap(a[col], a[pivot]);
    Rat inv = Rat(1) / a[col][col];
    for (int j = col; j <= n; ++j) a[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<std::vector<Rat>> rat_inverse(const std::vector<std::vector<Rat>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw ConsistencyError("singular matrix");
    std::swap(a[col], a[pivot]);
    Rat inv = Rat(1) / a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

namespace {

void validate_support(const RootCatalog& cat, const OrbitPartition& orb,
                      SupportFunction& f, bool expect_unit) {
  // condition (5): constant on <-w0>-orbits of -Pi
  std::vector<int> bad5;
  for (int i = 0; i < cat.rank; ++i)
    if (f.full[i] != f.full[cat.minus_w0[i]]) bad5.push_back(i + 1);
  if (!bad5.empty())
    throw SupportConditionError("support values not constant on <-w0>-orbits",
                                bad5);
  // condition (6): sum_i a_ij F(-alpha_i) > 0 for all j
  std::vector<int> bad6;
  for (int j = 0; j < cat.rank; ++j) {
    Rat lhs = 0;
    for (int i = 0; i < cat.rank; ++i) lhs += Rat(cat.cartan[i][j]) * f.full[i];
    if (!(lhs > 0)) bad6.push_back(j + 1);
    if (expect_unit && lhs != 1)
      throw ConsistencyError("rho mode: condition (6) left side at j=" +
                             std::to_string(j + 1) + " is " + rat_str(lhs) +
                             ", expected 1");
  }
  if (!bad6.empty()) {
    std::string msg = "support values violate condition (6) at j =";
    for (int j : bad6) msg += " " + std::to_string(j);
    throw SupportConditionError(msg, bad6);
  }
  for (int i = 0; i < cat.rank; ++i)
    if (!(f.full[i] > 0))
      throw ConsistencyError("condition (6) holds but F(-a" +
                             std::to_string(i + 1) + ") <= 0");
  (void)orb;
}

void finish_support(const RootCatalog& cat, const OrbitPartition& orb,
                    SupportFunction& f, bool expect_unit) {
  f.full.assign(cat.size(), Rat(0));
  for (int i = 0; i < cat.size(); ++i)
    f.full[i] = f.orbit_values[orb.orbit_of[i]];
  validate_support(cat, orb, f, expect_unit);
  f.den = 1;
  for (const Rat& v : f.orbit_values)
    f.den = boost::multiprecision::lcm(f.den, rat_den(v));
  f.scaled.resize(cat.size());
  for (int i = 0; i < cat.size(); ++i) {
    Rat s = f.full[i] * Rat(f.den);
    if (rat_den(s) != 1) throw ConsistencyError("support scaling failed");
    f.scaled[i] = rat_num(s);
  }
}

}  // namespace

SupportFunction build_support_function(const RootCatalog& cat,
                                       const OrbitPartition& orb,
                                       const std::vector<Rat>& orbit_values) {
  if (static_cast<int>(orbit_values.size()) != orb.count())
    throw std::invalid_argument("expected " + std::to_string(orb.count()) +
                                " support values (one per orbit), got " +
                                std::to_string(orbit_values.size()));
  SupportFunction f;
  f.rho_mode = false;
  f.orbit_values = orbit_values;
  finish_support(cat, orb, f, false);
  return f;
}

SupportFunction build_support_function_rho(const RootCatalog& cat,
                                           const OrbitPartition& orb) {
  // F(-alpha_i) = [rho^vee : alpha_i^vee], half-sum of positive coroots
  RatVec values(cat.rank, Rat(0));
  for (int r = cat.rank; r < cat.size(); ++r)
    for (int i = 0; i < cat.rank; ++i) values[i] += Rat(cat.coroots[r][i]);
  for (int i = 0; i < cat.rank; ++i) values[i] /= 2;

  SupportFunction f;
  f.rho_mode = true;
  f.orbit_values.assign(orb.count(), Rat(0));
  for (int k = 0; k < orb.count(); ++k) {
    int rep = orb.negative_reps[k].front();
    f.orbit_values[k] = values[rep];
    for (int i : orb.negative_reps[k])
      if (values[i] != values[rep])
        throw ConsistencyError("rho values not constant on orbit");
  }
  finish_support(cat, orb, f, true);
  return f;
}

namespace {

std::vector<Int> vertex_scaled(const RootCatalog& cat, const Cluster& c,
                               const SupportFunction& F) {
  IntMatrix m(cat.rank);
  RatVec rhs(cat.rank);
  for (int k = 0; k < cat.rank; ++k) {
    m[k] = cat.roots[c.members[k]];
    rhs[k] = Rat(F.scaled[c.members[k]]);
  }
  RatVec x = solve_linear(m, rhs);
  std::vector<Int> out(cat.rank);
  for (int k = 0; k < cat.rank; ++k) {
    if (rat_den(x[k]) != 1)
      throw ConsistencyError("vertex solve of a unimodular system came out fractional");
    out[k] = rat_num(x[k]);
  }
  return out;
}

}  // namespace

RatVec vertex(const RootCatalog& cat, const Cluster& c, const SupportFunction& F) {
  std::vector<Int> num = vertex_scaled(cat, c, F);
  RatVec out(cat.rank);
  for (int k = 0; k < cat.rank; ++k) out[k] = Rat(num[k], F.den);
  return out;
}

std::vector<Facet> facets(const RootCatalog& cat, const SupportFunction& F) {
  std::vector<Facet> out(cat.size());
  for (int i = 0; i < cat.size(); ++i) out[i] = Facet{i, F.full[i]};
  return out;
}

RatVec PolytopeRealization::vertex_coords(int cluster_idx) const {
  RatVec out(cat->rank);
  for (int k = 0; k < cat->rank; ++k) out[k] = Rat(vertex_num[cluster_idx][k], den);
  return out;
}

PolytopeRealization realize(const RootCatalog& cat, const SupportFunction& F,
                            std::vector<Cluster> clusters, int threads) {
  PolytopeRealization real;
  real.cat = &cat;
  real.F = F;
  real.clusters = std::move(clusters);
  real.den = F.den;
  real.vertex_num.resize(real.clusters.size());
  int nthreads = resolve_threads(threads);
  std::vector<std::string> errors;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (size_t c = 0; c < real.clusters.size(); ++c) {
    try {
      real.vertex_num[c] = vertex_scaled(cat, real.clusters[c], F);
    } catch (const std::exception& e) {
#pragma omp critical
      errors.push_back("cluster " + std::to_string(c) + ": " + e.what());
    }
  }
  if (!errors.empty()) {
    std::sort(errors.begin(), errors.end());
    throw ConsistencyError(errors.front());
  }
  return real;
}

Report verify_realization(const PolytopeRealization& real,
                          const std::vector<ExchangePair>& pairs, int threads) {
  const RootCatalog& cat = *real.cat;
  int nthreads = resolve_threads(threads);
  Report rep;

  // (a) simplicity: equality exactly on the cluster's own facets
  {
    std::vector<std::string> bad;
#pragma omp parallel num_threads(nthreads)
    {
      std::vector<std::string> local;
#pragma omp for schedule(dynamic)
      for (size_t c = 0; c < real.clusters.size(); ++c) {
        const auto& mem = real.clusters[c].members;
        const auto& z = real.vertex_num[c];
        for (int f = 0; f < cat.size(); ++f) {
          Int dot = 0;
          for (int j = 0; j < cat.rank; ++j) dot += cat.roots[f][j] * z[j];
          bool member = std::binary_search(mem.begin(), mem.end(), f);
          bool tight = dot == real.F.scaled[f];
          bool inside = dot < real.F.scaled[f];
          if (member ? !tight : !inside)
            local.push_back("cluster " + std::to_string(c) + " vs facet " +
                            cat.root_name(f));
        }
      }
#pragma omp critical
      bad.insert(bad.end(), local.begin(), local.end());
    }
    std::sort(bad.begin(), bad.end());
    rep.add("vertex-simplicity", bad.empty(),
            bad.empty() ? std::to_string(real.clusters.size()) + " vertices x " +
                              std::to_string(cat.size()) + " facets"
                        : bad.front());
  }

  // (b) exchange convexity: F(a) + F(a') - sum m F(b) > 0
  {
    std::vector<std::string> bad;
#pragma omp parallel num_threads(nthreads)
    {
      std::vector<std::string> local;
#pragma omp for schedule(dynamic)
      for (size_t i = 0; i < pairs.size(); ++i) {
        const ExchangePair& p = pairs[i];
        Int lhs = real.F.scaled[p.alpha] + real.F.scaled[p.alpha_prime];
        for (const auto& [idx, m] : p.expansion.terms)
          lhs -= m * real.F.scaled[idx];
        if (!(lhs > 0))
          local.push_back("(" + cat.root_name(p.alpha) + ", " +
                          cat.root_name(p.alpha_prime) + ") slack " +
                          rat_str(Rat(lhs, real.F.den)));
      }
#pragma omp critical
      bad.insert(bad.end(), local.begin(), local.end());
    }
    std::sort(bad.begin(), bad.end());
    rep.add("exchange-convexity", bad.empty(),
            bad.empty() ? std::to_string(pairs.size()) + " exchange inequalities"
                        : bad.front());
  }

  // (c) vertex distinctness
  {
    auto sorted = real.vertex_num;
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    rep.add("vertex-distinctness", distinct,
            distinct ? std::to_string(sorted.size()) + " vertices" : "duplicate vertex");
  }
  return rep;
}

namespace {

std::vector<std::vector<Rat>> folded_condition_matrix(const RootCatalog& cat,
                                                      const OrbitPartition& orb) {
  int m = orb.count();
  // column variables: one per orbit; rows: condition (6) for the orbit's
  // representative j. Rows for j and P(j) must coincide after folding.
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m, Rat(0)));
  for (int r = 0; r < m; ++r) {
    int j = orb.negative_reps[r].front();
    for (int i = 0; i < cat.rank; ++i)
      M[r][orb.orbit_of[i]] += Rat(cat.cartan[i][j]);
    for (int other : orb.negative_reps[r]) {
      std::vector<Rat> row(m, Rat(0));
      for (int i = 0; i < cat.rank; ++i) row[orb.orbit_of[i]] += Rat(cat.cartan[i][other]);
      if (row != M[r])
        throw ConsistencyError("condition-(6) fold is inconsistent on orbit " +
                               std::to_string(r));
    }
  }
  return M;
}

std::vector<Rat> orbit_coefficients(const RootCatalog& cat, const OrbitPartition& orb,
                                    int alpha, int j) {
  std::vector<Rat> c(orb.count(), Rat(0));
  c[orb.orbit_of[j]] += 1;      // F(-alpha_j)
  c[orb.orbit_of[alpha]] += 1;  // F(alpha)
  RootVec gamma = cat.roots[alpha];
  gamma[j] -= 1;
  ClusterExpansion e = cluster_expansion(cat, gamma);
  for (const auto& [idx, m] : e.terms) c[orb.orbit_of[idx]] -= Rat(m);
  return c;
}

std::vector<Rat> mat_vec(const std::vector<std::vector<Rat>>& m,
                         const std::vector<Rat>& v) {
  std::vector<Rat> out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::vector<std::vector<Rat>> transpose(std::vector<std::vector<Rat>> m) {
  auto out = m;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) out[j][i] = m[i][j];
  return out;
}

}  // namespace

CertificateRow certificate_row(const RootCatalog& cat, const OrbitPartition& orb,
                               int alpha, int j) {
  auto M = folded_condition_matrix(cat, orb);
  auto Minv_t = transpose(rat_inverse(M));
  CertificateRow row;
  row.c = orbit_coefficients(cat, orb, alpha, j);
  row.lambda = mat_vec(Minv_t, row.c);
  return row;
}

Report certificate_check(const RootCatalog& cat, const OrbitPartition& orb,
                         int threads) {
  auto M = folded_condition_matrix(cat, orb);
  auto Minv_t = transpose(rat_inverse(M));

  std::vector<std::pair<int, int>> qualifying;
  for (int a = cat.rank; a < cat.size(); ++a)
    for (int j = 0; j < cat.rank; ++j)
      if (cat.roots[a][j] == 1 && cat.coroots[a][j] == 1)
        qualifying.emplace_back(a, j);

  int nthreads = resolve_threads(threads);
  std::vector<std::string> bad;
#pragma omp parallel num_threads(nthreads)
  {
    std::vector<std::string> local;
#pragma omp for schedule(dynamic)
    for (size_t q = 0; q < qualifying.size(); ++q) {
      auto [a, j] = qualifying[q];
      try {
        auto c = orbit_coefficients(cat, orb, a, j);
        auto lambda = mat_vec(Minv_t, c);
        bool nonneg = true, nonzero = false;
        for (const Rat& l : lambda) {
          if (l < 0) nonneg = false;
          if (l != 0) nonzero = true;
        }
        if (!nonneg || !nonzero)
          local.push_back("(" + cat.root_name(a) + ", j=" + std::to_string(j + 1) + ")");
      } catch (const std::exception& e) {
        local.push_back("(" + cat.root_name(a) + ", j=" + std::to_string(j + 1) +
                        ") " + e.what());
      }
    }
#pragma omp critical
    bad.insert(bad.end(), local.begin(), local.end());
  }
  std::sort(bad.begin(), bad.end());
  Report rep;
  rep.add("certificate-nonnegative", bad.empty(),
          bad.empty() ? std::to_string(qualifying.size()) + " qualifying pairs"
                      : std::to_string(bad.size()) + " failures, first: " + bad.front());
  return rep;
}

std::string export_json(const PolytopeRealization& real, const OrbitPartition& orb,
                        bool verified) {
  const RootCatalog& cat = *real.cat;
  nlohmann::ordered_json j;
  j["type"] = cat.type.str();
  nlohmann::ordered_json conv;
  std::vector<int> plus, minus;
  for (int i = 0; i < cat.rank; ++i)
    (cat.sign[i] > 0 ? plus : minus).push_back(i + 1);
  conv["bipartition"] = {{"plus", plus}, {"minus", minus}};
  conv["root_order"] = "negative simples, then positive roots by height then lex";
  conv["orbit_order"] = "by smallest negative-simple index";
  j["convention"] = conv;
  nlohmann::ordered_json support;
  support["mode"] = real.F.rho_mode ? "rho" : "custom";
  std::vector<std::string> ov;
  for (const Rat& v : real.F.orbit_values) ov.push_back(rat_str(v));
  support["orbit_values"] = ov;
  j["support"] = support;
  std::vector<std::vector<long long>> roots;
  for (const auto& r : cat.roots) {
    std::vector<long long> row;
    for (const Int& c : r) row.push_back(c.convert_to<long long>());
    roots.push_back(std::move(row));
  }
  j["roots"] = roots;
  std::vector<std::vector<int>> clusters;
  for (const auto& c : real.clusters) clusters.push_back(c.members);
  j["clusters"] = clusters;
  std::vector<std::vector<std::string>> vertices;
  for (int c = 0; c < real.vertex_count(); ++c) {
    std::vector<std::string> v;
    for (const Rat& x : real.vertex_coords(c)) v.push_back(rat_str(x));
    vertices.push_back(std::move(v));
  }
  j["vertices"] = vertices;
  nlohmann::ordered_json facet_list = nlohmann::ordered_json::array();
  for (int f = 0; f < cat.size(); ++f) {
    nlohmann::ordered_json fj;
    std::vector<long long> normal;
    for (const Int& c : cat.roots[f]) normal.push_back(c.convert_to<long long>());
    fj["normal"] = normal;
    fj["rhs"] = rat_str(real.F.full[f]);
    facet_list.push_back(std::move(fj));
  }
  j["facets"] = facet_list;
  j["verified"] = verified;
  return j.dump(2) + "\n";
}

namespace {

// Facet incidence is cluster membership; on a rank-3 facet two vertices are
// adjacent iff their clusters share two roots.
std::vector<int> facet_cycle(const PolytopeRealization& real, int facet) {
  std::vector<int> on_facet;
  for (size_t c = 0; c < real.clusters.size(); ++c)
    if (std::binary_search(real.clusters[c].members.begin(),
                           real.clusters[c].members.end(), facet))
      on_facet.push_back(static_cast<int>(c));
  auto shares_edge = [&](int a, int b) {
    const auto& ma = real.clusters[a].members;
    const auto& mb = real.clusters[b].members;
    int common = 0;
    for (int x : ma)
      if (std::binary_search(mb.begin(), mb.end(), x)) ++common;
    return common == 2;
  };
  std::vector<int> cycle{on_facet.front()};
  int prev = -1;
  while (cycle.size() < on_facet.size()) {
    int cur = cycle.back(), next = -1;
    for (int cand : on_facet) {
      if (cand == cur || cand == prev) continue;
      if (std::find(cycle.begin(), cycle.end(), cand) != cycle.end()) continue;
      if (shares_edge(cur, cand)) { next = cand; break; }
    }
    if (next < 0) throw ConsistencyError("facet cycle walk failed");
    prev = cur;
    cycle.push_back(next);
  }
  if (!shares_edge(cycle.back(), cycle.front()))
    throw ConsistencyError("facet vertices do not close a cycle");
  return cycle;
}

}  // namespace

std::string export_off(const PolytopeRealization& real) {
  const RootCatalog& cat = *real.cat;
  if (cat.rank != 3)
    throw std::invalid_argument("OFF export is only defined for rank 3");
  int V = real.vertex_count();
  int F = cat.size();
  int E = V + F - 2;  // closed convex surface

  // interior point for outward orientation
  RatVec center(3, Rat(0));
  for (int c = 0; c < V; ++c) {
    RatVec z = real.vertex_coords(c);
    for (int k = 0; k < 3; ++k) center[k] += z[k];
  }
  for (int k = 0; k < 3; ++k) center[k] /= V;

  std::string out = "OFF\n";
  out += std::to_string(V) + " " + std::to_string(F) + " " + std::to_string(E) + "\n";
  for (int c = 0; c < V; ++c) {
    RatVec z = real.vertex_coords(c);
    out += "# v" + std::to_string(c) + " exact " + rat_str(z[0]) + " " +
           rat_str(z[1]) + " " + rat_str(z[2]) + "\n";
    out += rat_decimal(z[0], 12) + " " + rat_decimal(z[1], 12) + " " +
           rat_decimal(z[2], 12) + "\n";
  }
  for (int f = 0; f < F; ++f) {
    std::vector<int> cycle = facet_cycle(real, f);
    // orient outward: the facet normal must see the cycle counterclockwise
    RatVec a = real.vertex_coords(cycle[0]);
    RatVec b = real.vertex_coords(cycle[1]);
    RatVec c = real.vertex_coords(cycle[2]);
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
    for (int k = 0; k < 3; ++k) {
      m[0][k] = b[k] - a[k];
      m[1][k] = c[k] - a[k];
      m[2][k] = a[k] - center[k];
    }
    Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det < 0) std::reverse(cycle.begin(), cycle.end());
    out += std::to_string(cycle.size());
    for (int v : cycle) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string export_txt(const PolytopeRealization& real) {
  const RootCatalog& cat = *real.cat;
  std::string out;
  for (int f = 0; f < cat.size(); ++f) {
    std::string lhs;
    for (int j = 0; j < cat.rank; ++j) {
      const Int& c = cat.roots[f][j];
      if (c == 0) continue;
      if (lhs.empty()) {
        if (c == -1) lhs += "-";
        else if (c != 1) lhs += c.str() + "*";
      } else {
        lhs += c > 0 ? " + " : " - ";
        Int abs_c = c > 0 ? c : Int(-c);
        if (abs_c != 1) lhs += abs_c.str() + "*";
      }
      lhs += "z" + std::to_string(j + 1);
    }
    out += lhs + " <= " + rat_str(real.F.full[f]) + "\n";
  }
  return out;
}

}  // namespace genassoc
