#include "genassoc/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

#include "genassoc/errors.hpp"
#include "genassoc/tau.hpp"

namespace genassoc {

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad Cartan type: '" + s + "'");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string num = s.substr(1);
  for (char c : num)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad Cartan type: '" + s + "'");
  int rank = std::stoi(num);
  auto fail = [&] {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) +
                                " for family " + std::string(1, fam));
  };
  switch (fam) {
    case 'A': if (rank < 1) fail(); break;
    case 'B': if (rank < 2) fail(); break;
    case 'C': if (rank < 2) fail(); break;
    case 'D': if (rank < 4) fail(); break;
    case 'E': if (rank < 6 || rank > 8) fail(); break;
    case 'F': if (rank != 4) fail(); break;
    case 'G': if (rank != 2) fail(); break;
    default:
      throw std::invalid_argument("unknown family in Cartan type: '" + s + "'");
  }
  return CartanType{fam, rank};
}

namespace {

IntMatrix cartan_matrix(CartanType t) {
  int n = t.rank;
  IntMatrix a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
    case 'C':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      // a_{n-1,n} = -d, a_{n,n-1} = -2/d with d = 1 (B), 2 (C)
      if (t.family == 'B') { a[n - 2][n - 1] = -1; a[n - 1][n - 2] = -2; }
      else                 { a[n - 2][n - 1] = -2; a[n - 1][n - 2] = -1; }
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6[-7[-8]] chain, 2 attached to 4
      edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case 'F':
      edge(0, 1);
      a[1][2] = -1; a[2][1] = -2;
      edge(2, 3);
      break;
    case 'G':
      a[0][1] = -3; a[1][0] = -1;
      break;
  }
  return a;
}

// Positive roots by reflection closure: repeatedly apply the simple
// reflections s_i(g) = g - <alpha_i^vee, g> alpha_i to the simple roots,
// keep the vectors with all coordinates >= 0, iterate to a fixpoint.
std::vector<RootVec> positive_roots(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  std::set<RootVec> seen;
  std::deque<RootVec> work;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    RootVec g = work.front();
    work.pop_front();
    for (int i = 0; i < n; ++i) {
      Int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += a[i][j] * g[j];
      RootVec d = g;
      d[i] -= pairing;
      bool nonneg = true;
      for (const Int& c : d)
        if (c < 0) { nonneg = false; break; }
      if (!nonneg) continue;
      if (seen.insert(d).second) work.push_back(d);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Int> compute_symmetrizer(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<Rat> d(n, Rat(0));
  d[0] = 1;
  std::deque<int> work{0};
  std::vector<bool> done(n, false);
  done[0] = true;
  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    for (int j = 0; j < n; ++j) {
      if (done[j] || a[i][j] >= 0) continue;
      d[j] = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
      done[j] = true;
      work.push_back(j);
    }
  }
  for (int i = 0; i < n; ++i)
    if (!done[i]) throw ConsistencyError("Coxeter graph not connected");
  Int lcm_den = 1;
  for (const Rat& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(x));
  std::vector<Int> out(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    out[i] = rat_num(d[i]) * (lcm_den / rat_den(d[i]));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  for (Int& x : out) x /= g;
  return out;
}

}  // namespace

std::vector<int> bipartition(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<int> color(n, 0);
  // BFS from the smallest index of each component; even distance gets +.
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    color[start] = +1;
    std::deque<int> work{start};
    while (!work.empty()) {
      int i = work.front();
      work.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] >= 0) continue;
        if (color[j] == 0) {
          color[j] = -color[i];
          work.push_back(j);
        } else if (color[j] == color[i]) {
          throw ConsistencyError("Coxeter graph is not bipartite");
        }
      }
    }
  }
  return color;
}

int coxeter_number(const RootCatalog& cat) { return cat.coxeter_number; }

std::vector<int> minus_w0(const RootCatalog& cat) {
  // (alternating word, h+2 factors) restricted to -Pi
  int h2 = cat.coxeter_number + 2;
  std::vector<int> perm(cat.rank, -1);
  for (int i = 0; i < cat.rank; ++i) {
    int idx = i, eps = -1;
    for (int step = 0; step < h2; ++step) {
      idx = cat.tau_perm(eps)[idx];
      eps = -eps;
    }
    if (!cat.is_negative_simple(idx))
      throw ConsistencyError("h+2 word does not permute -Pi (internal)");
    perm[i] = idx;
  }
  for (int i = 0; i < cat.rank; ++i)
    if (perm[perm[i]] != i)
      throw ConsistencyError("-w0 permutation is not an involution");
  for (int i = 0; i < cat.rank; ++i)
    for (int j = 0; j < cat.rank; ++j)
      if (cat.cartan[perm[i]][perm[j]] != cat.cartan[i][j])
        throw ConsistencyError("-w0 permutation is not a Cartan automorphism");
  return perm;
}

std::string RootCatalog::root_name(int i) const {
  const RootVec& v = roots[i];
  if (is_negative_simple(i)) return "-a" + std::to_string(i + 1);
  std::string out;
  for (int j = 0; j < rank; ++j) {
    if (v[j] == 0) continue;
    if (!out.empty()) out += "+";
    if (v[j] != 1) out += v[j].str() + "*";
    out += "a" + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

RootCatalog build_root_system(CartanType t) {
  RootCatalog cat;
  cat.type = t;
  cat.rank = t.rank;
  cat.cartan = cartan_matrix(t);
  cat.sign = bipartition(cat.cartan);

  std::vector<RootVec> pos = positive_roots(cat.cartan);
  std::sort(pos.begin(), pos.end(), [](const RootVec& x, const RootVec& y) {
    Int hx = vec_height(x), hy = vec_height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  cat.num_positive = static_cast<int>(pos.size());

  cat.roots.reserve(cat.rank + pos.size());
  for (int i = 0; i < cat.rank; ++i) {
    RootVec e(cat.rank, 0);
    e[i] = -1;
    cat.roots.push_back(std::move(e));
  }
  for (auto& p : pos) cat.roots.push_back(std::move(p));
  for (int i = 0; i < cat.size(); ++i) cat.index_of[cat.roots[i]] = i;

  if ((2 * cat.num_positive) % cat.rank != 0)
    throw ConsistencyError("2|Phi>0| not divisible by rank");
  cat.coxeter_number = 2 * cat.num_positive / cat.rank;

  cat.symmetrizer = compute_symmetrizer(cat.cartan);
  cat.coroots.reserve(cat.size());
  for (int i = 0; i < cat.size(); ++i) {
    const RootVec& v = cat.roots[i];
    // (alpha,alpha)/2 with (alpha_i,alpha_j) = d_i a_ij
    Int len2x2 = 0;
    for (int p = 0; p < cat.rank; ++p)
      for (int q = 0; q < cat.rank; ++q)
        len2x2 += v[p] * v[q] * cat.symmetrizer[p] * cat.cartan[p][q];
    if (len2x2 <= 0 || len2x2 % 2 != 0)
      throw ConsistencyError("bad squared length for " + vec_str(v));
    Int d_alpha = len2x2 / 2;
    RootVec cv(cat.rank);
    for (int j = 0; j < cat.rank; ++j) {
      Int num = v[j] * cat.symmetrizer[j];
      if (num % d_alpha != 0)
        throw ConsistencyError("non-integral coroot for " + vec_str(v));
      cv[j] = num / d_alpha;
    }
    cat.coroots.push_back(std::move(cv));
  }

  cat.tau_plus_perm = tau_catalog_permutation(cat, +1);
  cat.tau_minus_perm = tau_catalog_permutation(cat, -1);
  cat.minus_w0 = minus_w0(cat);
  return cat;
}

}  // namespace genassoc
