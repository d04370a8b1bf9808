#include "genassoc/clusters.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>

#include "genassoc/errors.hpp"
#include "genassoc/parallel.hpp"
#include "genassoc/polytope.hpp"

namespace genassoc {

namespace {

// Fixed-capacity bitset for the compatibility graph (catalog <= 256).
struct Bits {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits andnot(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  bool contains(const Bits& o) const {
    for (int i = 0; i < 4; ++i)
      if ((o.w[i] & ~w[i]) != 0) return false;
    return true;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (int b = 0; b < 4; ++b) {
      std::uint64_t x = w[b];
      while (x) {
        int i = __builtin_ctzll(x);
        f(b * 64 + i);
        x &= x - 1;
      }
    }
  }
};

std::vector<Bits> adjacency(const RootCatalog& cat, const DegreeTable& t) {
  if (cat.size() > 256)
    throw std::invalid_argument("cluster enumeration supports at most 256 catalog elements");
  std::vector<Bits> adj(cat.size());
  for (int a = 0; a < cat.size(); ++a)
    for (int b = 0; b < cat.size(); ++b)
      if (a != b && t.at(a, b) == 0) adj[a].set(b);
  return adj;
}

int pick_pivot(const std::vector<Bits>& adj, const Bits& p, const Bits& x) {
  int best = -1, best_count = -1;
  Bits both = p | x;
  both.for_each([&](int u) {
    int c = (p & adj[u]).count();
    if (c > best_count) {
      best_count = c;
      best = u;
    }
  });
  return best;
}

void bron_kerbosch(const std::vector<Bits>& adj, std::vector<int>& r, Bits p,
                   Bits x, std::vector<Cluster>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(Cluster{r});
    return;
  }
  int u = pick_pivot(adj, p, x);
  Bits cand = p.andnot(adj[u]);
  std::vector<int> order;
  cand.for_each([&](int v) { order.push_back(v); });
  for (int v : order) {
    r.push_back(v);
    bron_kerbosch(adj, r, p & adj[v], x & adj[v], out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

void validate_clusters(const RootCatalog& cat, std::vector<Cluster>& clusters) {
  std::sort(clusters.begin(), clusters.end());
  for (auto& c : clusters) {
    if (static_cast<int>(c.members.size()) != cat.rank)
      throw ConsistencyError(
          "purity violation: maximal compatible set of size " +
          std::to_string(c.members.size()) + " in " + cat.type.str());
    IntMatrix m(cat.rank, std::vector<Int>(cat.rank));
    for (int k = 0; k < cat.rank; ++k) m[k] = cat.roots[c.members[k]];
    Int d = det_int(std::move(m));
    if (d != 1 && d != -1)
      throw ConsistencyError("cluster determinant " + d.str() + " is not +-1");
  }
}

}  // namespace

std::vector<Cluster> enumerate_clusters_serial(const RootCatalog& cat,
                                               const DegreeTable& table) {
  auto adj = adjacency(cat, table);
  Bits p;
  for (int i = 0; i < cat.size(); ++i) p.set(i);
  std::vector<Cluster> out;
  std::vector<int> r;
  bron_kerbosch(adj, r, p, Bits{}, out);
  for (auto& c : out) std::sort(c.members.begin(), c.members.end());
  validate_clusters(cat, out);
  return out;
}

std::vector<Cluster> enumerate_clusters(const RootCatalog& cat,
                                        const DegreeTable& table, int threads) {
  auto adj = adjacency(cat, table);
  Bits p;
  for (int i = 0; i < cat.size(); ++i) p.set(i);
  // First level of the search unrolled; each branch runs serially. Branch i
  // sees P without the earlier candidates and X with them, reproducing the
  // sequential state.
  int u = pick_pivot(adj, p, Bits{});
  std::vector<int> order;
  p.andnot(adj[u]).for_each([&](int v) { order.push_back(v); });

  int nb = static_cast<int>(order.size());
  std::vector<std::vector<Cluster>> parts(nb);
  int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (int i = 0; i < nb; ++i) {
    Bits pi = p, xi;
    for (int k = 0; k < i; ++k) {
      pi.reset(order[k]);
      xi.set(order[k]);
    }
    int v = order[i];
    std::vector<int> r{v};
    bron_kerbosch(adj, r, pi & adj[v], xi & adj[v], parts[i]);
  }
  std::vector<Cluster> out;
  for (auto& part : parts)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  for (auto& c : out) std::sort(c.members.begin(), c.members.end());
  validate_clusters(cat, out);
  return out;
}

RootVec ClusterExpansion::reconstruct(const RootCatalog& cat) const {
  RootVec acc(cat.rank, 0);
  for (const auto& [idx, m] : terms)
    for (int j = 0; j < cat.rank; ++j) acc[j] += m * cat.roots[idx][j];
  return acc;
}

std::string ClusterExpansion::str(const RootCatalog& cat) const {
  if (terms.empty()) return "";
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    if (k) out += " + ";
    if (terms[k].second != 1) out += terms[k].second.str() + "*";
    out += vec_str(cat.roots[terms[k].first]);
  }
  return out;
}

namespace {

// Emission order matters for the E6 golden table: terms from deeper
// levels come first, and within one level the negative simples are emitted
// in descending diagram-chain position. In the E series the branch node
// (Bourbaki 2) sits at the far end of the chain, so it leads; everywhere
// else chain position is just the index.
int emission_priority(const CartanType& t, int i) {
  if (t.family != 'E') return i;
  if (i == 1) return t.rank;      // the branch node
  return i < 2 ? i : i - 1;
}

void k_recurse(const RootCatalog& cat, RootVec gamma, int eps, int depth,
               int& max_depth, std::vector<std::pair<int, Int>>& out) {
  if (depth > cat.coxeter_number + 2)
    throw ConsistencyError("cluster expansion exceeded h+2 descents");
  max_depth = std::max(max_depth, depth);

  std::vector<std::pair<int, Int>> negs;
  RootVec plus(cat.rank);
  bool any_positive = false;
  for (int i = 0; i < cat.rank; ++i) {
    if (gamma[i] < 0) negs.emplace_back(i, -gamma[i]);
    if (gamma[i] > 0) {
      plus[i] = gamma[i];
      any_positive = true;
    }
  }
  if (any_positive) {
    std::vector<std::pair<int, Int>> inner;
    k_recurse(cat, tau_apply(cat, eps, plus), -eps, depth + 1, max_depth, inner);
    for (auto& [idx, m] : inner) out.emplace_back(cat.tau_perm(eps)[idx], std::move(m));
  }
  std::sort(negs.begin(), negs.end(), [&](const auto& a, const auto& b) {
    return emission_priority(cat.type, a.first) > emission_priority(cat.type, b.first);
  });
  for (const auto& [i, m] : negs) out.emplace_back(i, m);
}

}  // namespace

ClusterExpansion cluster_expansion(const RootCatalog& cat, const RootVec& gamma) {
  if (static_cast<int>(gamma.size()) != cat.rank)
    throw std::invalid_argument("vector has wrong length");
  ClusterExpansion exp;
  int max_depth = 0;
  std::vector<std::pair<int, Int>> raw;
  k_recurse(cat, gamma, -1, 0, max_depth, raw);
  exp.depth = max_depth;
  // merge duplicate catalog indices, keeping first-occurrence order
  std::map<int, size_t> where;
  for (auto& [idx, m] : raw) {
    auto it = where.find(idx);
    if (it == where.end()) {
      where[idx] = exp.terms.size();
      exp.terms.emplace_back(idx, m);
    } else {
      exp.terms[it->second].second += m;
    }
  }
  for (auto& [idx, m] : exp.terms)
    if (m <= 0) throw ConsistencyError("non-positive expansion coefficient");
  if (exp.reconstruct(cat) != gamma)
    throw ConsistencyError("cluster expansion does not reproduce " + vec_str(gamma));
  return exp;
}

std::vector<ExchangePair> exchange_pairs(const RootCatalog& cat,
                                         const DegreeTable& table,
                                         const std::vector<Cluster>& clusters,
                                         int threads) {
  // group (cluster, dropped member) records by the shared (n-1)-subset
  struct Rec {
    std::vector<int> facet;
    int cluster;
    int dropped;
    bool operator<(const Rec& o) const {
      if (facet != o.facet) return facet < o.facet;
      return cluster < o.cluster;
    }
  };
  std::vector<Rec> recs;
  recs.reserve(clusters.size() * cat.rank);
  for (int ci = 0; ci < static_cast<int>(clusters.size()); ++ci) {
    const auto& mem = clusters[ci].members;
    for (int k = 0; k < cat.rank; ++k) {
      Rec r;
      r.facet.reserve(cat.rank - 1);
      for (int t = 0; t < cat.rank; ++t)
        if (t != k) r.facet.push_back(mem[t]);
      r.cluster = ci;
      r.dropped = mem[k];
      recs.push_back(std::move(r));
    }
  }
  std::sort(recs.begin(), recs.end());

  std::vector<ExchangePair> pairs;
  for (size_t i = 0; i < recs.size(); i += 2) {
    if (i + 1 >= recs.size() || recs[i].facet != recs[i + 1].facet ||
        (i + 2 < recs.size() && recs[i + 2].facet == recs[i].facet))
      throw ConsistencyError("facet not shared by exactly two clusters");
    ExchangePair p;
    p.c1 = recs[i].cluster;
    p.c2 = recs[i + 1].cluster;
    p.alpha = recs[i].dropped;
    p.alpha_prime = recs[i + 1].dropped;
    pairs.push_back(std::move(p));
  }
  std::sort(pairs.begin(), pairs.end(), [](const ExchangePair& a, const ExchangePair& b) {
    if (a.c1 != b.c1) return a.c1 < b.c1;
    return a.c2 < b.c2;
  });

  int nthreads = resolve_threads(threads);
  std::vector<std::string> errors;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (size_t i = 0; i < pairs.size(); ++i) {
    ExchangePair& p = pairs[i];
    std::string err;
    try {
      if (table.at(p.alpha, p.alpha_prime) != 1 ||
          table.at(p.alpha_prime, p.alpha) != 1)
        err = "exchanged roots do not have mutual degree 1";
      RootVec sum(cat.rank);
      for (int j = 0; j < cat.rank; ++j)
        sum[j] = cat.roots[p.alpha][j] + cat.roots[p.alpha_prime][j];
      p.expansion = cluster_expansion(cat, sum);
      const auto& m1 = clusters[p.c1].members;
      for (const auto& [idx, m] : p.expansion.terms) {
        bool in_c1 = std::binary_search(m1.begin(), m1.end(), idx);
        bool in_c2 = std::binary_search(clusters[p.c2].members.begin(),
                                        clusters[p.c2].members.end(), idx);
        if (!in_c1 || !in_c2 || idx == p.alpha || idx == p.alpha_prime)
          err = "expansion support leaves the cluster intersection";
        if (m <= 0) err = "non-positive expansion coefficient";
      }
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
#pragma omp critical
      errors.push_back(err + " at pair (" + cat.root_name(p.alpha) + ", " +
                       cat.root_name(p.alpha_prime) + ")");
    }
  }
  if (!errors.empty()) {
    std::sort(errors.begin(), errors.end());
    throw ConsistencyError(errors.front());
  }
  return pairs;
}

Report expansion_uniqueness_check(const RootCatalog& cat,
                                  const DegreeTable& table,
                                  const std::vector<Cluster>& clusters,
                                  std::uint64_t seed, int threads) {
  std::vector<RootVec> sample;
  if (cat.rank <= 4) {
    // exhaustive box [-2,2]^n
    int total = 1;
    for (int i = 0; i < cat.rank; ++i) total *= 5;
    for (int code = 0; code < total; ++code) {
      RootVec v(cat.rank);
      int c = code;
      for (int i = 0; i < cat.rank; ++i) {
        v[i] = c % 5 - 2;
        c /= 5;
      }
      sample.push_back(std::move(v));
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int k = 0; k < 512; ++k) {
      RootVec v(cat.rank);
      for (int i = 0; i < cat.rank; ++i) v[i] = coord(rng);
      sample.push_back(std::move(v));
    }
  }

  std::vector<Bits> cluster_bits(clusters.size());
  for (size_t c = 0; c < clusters.size(); ++c)
    for (int m : clusters[c].members) cluster_bits[c].set(m);

  int nthreads = resolve_threads(threads);
  std::vector<std::string> failures;
  int max_depth = 0;
#pragma omp parallel num_threads(nthreads)
  {
    std::vector<std::string> local;
    int local_depth = 0;
#pragma omp for schedule(dynamic)
    for (size_t s = 0; s < sample.size(); ++s) {
      const RootVec& gamma = sample[s];
      try {
        ClusterExpansion e = cluster_expansion(cat, gamma);
        local_depth = std::max(local_depth, e.depth);
        for (size_t a = 0; a < e.terms.size(); ++a)
          for (size_t b = a + 1; b < e.terms.size(); ++b)
            if (table.at(e.terms[a].first, e.terms[b].first) != 0 ||
                table.at(e.terms[b].first, e.terms[a].first) != 0)
              local.push_back("incompatible support for " + vec_str(gamma));
        Bits support;
        for (const auto& [idx, m] : e.terms) support.set(idx);
        bool inside = e.terms.empty();
        for (const auto& cb : cluster_bits)
          if (cb.contains(support)) {
            inside = true;
            break;
          }
        if (!inside) local.push_back("support of " + vec_str(gamma) + " not in any cluster");
      } catch (const ConsistencyError& e) {
        local.push_back(std::string(e.what()) + " for " + vec_str(gamma));
      }
    }
#pragma omp critical
    {
      failures.insert(failures.end(), local.begin(), local.end());
      max_depth = std::max(max_depth, local_depth);
    }
  }
  std::sort(failures.begin(), failures.end());
  Report rep;
  rep.add("expansion-uniqueness", failures.empty(),
          failures.empty()
              ? std::to_string(sample.size()) + " vectors, max depth " +
                    std::to_string(max_depth)
              : failures.front());
  rep.add("expansion-depth-bound", max_depth <= cat.coxeter_number,
          "max " + std::to_string(max_depth) + " of h=" +
              std::to_string(cat.coxeter_number));
  return rep;
}

std::string full_support_expansion_table(const RootCatalog& cat) {
  std::vector<int> alphas;
  for (int i = cat.rank; i < cat.size(); ++i) {
    bool full = true;
    for (const Int& c : cat.roots[i])
      if (c == 0) { full = false; break; }
    if (full) alphas.push_back(i);
  }
  std::sort(alphas.begin(), alphas.end(), [&](int x, int y) {
    Int hx = vec_height(cat.roots[x]), hy = vec_height(cat.roots[y]);
    if (hx != hy) return hx < hy;
    return cat.roots[x] > cat.roots[y];
  });
  std::string out;
  for (int a : alphas) {
    for (int j = 0; j < cat.rank; ++j) {
      if (cat.roots[a][j] != 1 || cat.coroots[a][j] != 1) continue;
      RootVec gamma = cat.roots[a];
      gamma[j] -= 1;
      ClusterExpansion e = cluster_expansion(cat, gamma);
      out += vec_str(cat.roots[a]) + "  " + std::to_string(j + 1) + "  " +
             e.str(cat) + "\n";
    }
  }
  return out;
}

}  // namespace genassoc
