#include "genassoc/tau.hpp"

#include <algorithm>
#include <numeric>

#include "genassoc/errors.hpp"

namespace genassoc {

void TauWord::normalize() {
  std::vector<int> out;
  for (int s : signs) {
    if (!out.empty() && out.back() == s)
      out.pop_back();  // tau_eps tau_eps = id
    else
      out.push_back(s);
  }
  signs = std::move(out);
}

bool TauWord::alternating() const {
  for (size_t i = 1; i < signs.size(); ++i)
    if (signs[i] == signs[i - 1]) return false;
  return true;
}

std::string TauWord::str() const {
  // display in product order: rightmost factor acts first
  std::string out = "(";
  for (size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ",";
    out += signs[signs.size() - 1 - i] > 0 ? "+" : "-";
  }
  return out + ")";
}

TauWord sigma_inverse(TauWord w) {
  std::reverse(w.signs.begin(), w.signs.end());
  return w;
}

RootVec tau_apply(const RootCatalog& cat, int eps, const RootVec& v) {
  RootVec out = v;
  for (int i = 0; i < cat.rank; ++i) {
    if (cat.sign[i] != eps) continue;
    Int acc = -v[i];
    for (int j = 0; j < cat.rank; ++j) {
      if (j == i || v[j] <= 0) continue;
      acc -= cat.cartan[i][j] * v[j];
    }
    out[i] = acc;
  }
  return out;
}

int tau_on_catalog(const RootCatalog& cat, int eps, int idx) {
  if (!cat.tau_perm(eps).empty()) return cat.tau_perm(eps)[idx];
  RootVec img = tau_apply(cat, eps, cat.roots[idx]);
  int out = cat.idx(img);
  if (out < 0)
    throw ConsistencyError("tau image " + vec_str(img) + " of " +
                           cat.root_name(idx) + " is not in the catalog");
  return out;
}

RootVec sigma_apply(const RootCatalog& cat, const TauWord& w, RootVec v) {
  for (int s : w.signs) v = tau_apply(cat, s, v);
  return v;
}

int sigma_apply_idx(const RootCatalog& cat, const TauWord& w, int idx) {
  for (int s : w.signs) idx = cat.tau_perm(s)[idx];
  return idx;
}

std::vector<int> tau_catalog_permutation(const RootCatalog& cat, int eps) {
  std::vector<int> perm(cat.size());
  for (int i = 0; i < cat.size(); ++i) {
    RootVec img = tau_apply(cat, eps, cat.roots[i]);
    int out = cat.idx(img);
    if (out < 0)
      throw ConsistencyError("tau image " + vec_str(img) + " of " +
                             vec_str(cat.roots[i]) + " is not in the catalog");
    perm[i] = out;
  }
  // involution on the whole catalog
  for (int i = 0; i < cat.size(); ++i)
    if (perm[perm[i]] != i)
      throw ConsistencyError("tau is not an involution on the catalog");
  return perm;
}

OrbitPartition orbits(const RootCatalog& cat) {
  OrbitPartition out;
  out.orbit_of.assign(cat.size(), -1);
  for (int start = 0; start < cat.size(); ++start) {
    if (out.orbit_of[start] >= 0) continue;
    int id = out.count();
    std::vector<int> orbit;
    std::vector<int> work{start};
    out.orbit_of[start] = id;
    while (!work.empty()) {
      int i = work.back();
      work.pop_back();
      orbit.push_back(i);
      for (int eps : {+1, -1}) {
        int j = cat.tau_perm(eps)[i];
        if (out.orbit_of[j] < 0) {
          out.orbit_of[j] = id;
          work.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<int> reps;
    for (int i : orbit)
      if (cat.is_negative_simple(i)) reps.push_back(i);
    out.orbits.push_back(std::move(orbit));
    out.negative_reps.push_back(std::move(reps));
  }
  return out;
}

Report check_periodicity(const RootCatalog& cat) {
  Report rep;
  int h = cat.coxeter_number;

  // (i) both (h+2)-factor alternating words equal the linear map -w0
  for (int lead : {-1, +1}) {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < cat.size() && ok; ++i) {
      int idx = i, eps = lead;
      for (int step = 0; step < h + 2; ++step) {
        idx = cat.tau_perm(eps)[idx];
        eps = -eps;
      }
      // -w0 permutes coordinates by P
      const RootVec& v = cat.roots[i];
      RootVec expect(cat.rank);
      for (int j = 0; j < cat.rank; ++j) expect[cat.minus_w0[j]] = v[j];
      if (cat.roots[idx] != expect) {
        ok = false;
        witness = cat.root_name(i) + " -> " + cat.root_name(idx) +
                  ", expected " + vec_str(expect);
      }
    }
    rep.add(std::string("tau-word-h+2-equals-minus-w0(lead ") +
                (lead > 0 ? "+" : "-") + ")",
            ok, witness);
  }

  // (ii) positive-root counts per orbit
  OrbitPartition orb = orbits(cat);
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < cat.rank && ok; ++i) {
      const auto& orbit = orb.orbits[orb.orbit_of[i]];
      int positives = 0;
      for (int m : orbit)
        if (!cat.is_negative_simple(m)) ++positives;
      int expect = (cat.minus_w0[i] != i) ? h : h / 2;
      if (positives != expect) {
        ok = false;
        witness = "orbit of -a" + std::to_string(i + 1) + " has " +
                  std::to_string(positives) + " positive roots, expected " +
                  std::to_string(expect);
      }
    }
    rep.add("orbit-positive-root-counts", ok, witness);
  }

  // (iii) orbit count equals the number of <-w0>-orbits on I
  {
    int p_orbits = 0;
    for (int i = 0; i < cat.rank; ++i)
      if (cat.minus_w0[i] >= i) ++p_orbits;
    bool ok = orb.count() == p_orbits;
    rep.add("orbit-count-matches-minus-w0-orbits", ok,
            ok ? "" : std::to_string(orb.count()) + " vs " + std::to_string(p_orbits));
  }

  // every orbit meets -Pi
  {
    bool ok = true;
    std::string witness;
    for (int k = 0; k < orb.count(); ++k)
      if (orb.negative_reps[k].empty()) {
        ok = false;
        witness = "orbit " + std::to_string(k);
        break;
      }
    rep.add("orbits-meet-negative-simples", ok, witness);
  }
  return rep;
}

}  // namespace genassoc
