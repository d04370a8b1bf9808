#include "genassoc/compat.hpp"

#include <algorithm>

#include "genassoc/errors.hpp"
#include "genassoc/parallel.hpp"

namespace genassoc {

Transport transport_to_negative(const RootCatalog& cat, int alpha) {
  if (cat.is_negative_simple(alpha)) return {TauWord{}, alpha};
  // Walk both alternating sequences in lockstep; shortest hit wins, a tie
  // goes to the walk whose first factor is tau_+.
  int wp = alpha, wm = alpha;
  int limit = cat.coxeter_number + 2;
  for (int len = 1; len <= limit; ++len) {
    int sp = (len % 2 == 1) ? +1 : -1;  // lead +
    wp = cat.tau_perm(sp)[wp];
    wm = cat.tau_perm(-sp)[wm];
    for (auto [walker, lead] : {std::pair{wp, +1}, std::pair{wm, -1}}) {
      if (!cat.is_negative_simple(walker)) continue;
      TauWord w;
      for (int k = 1; k <= len; ++k)
        w.signs.push_back((k % 2 == 1) ? lead : -lead);
      return {std::move(w), walker};
    }
  }
  throw ConsistencyError("no transport word of length <= h+2 for " +
                         cat.root_name(alpha));
}

int compatibility_degree(const RootCatalog& cat, int alpha, int beta) {
  Transport t = transport_to_negative(cat, alpha);
  int moved = sigma_apply_idx(cat, t.word, beta);
  const Int& c = cat.roots[moved][t.j];
  return c > 0 ? static_cast<int>(c) : 0;
}

bool compatible(const RootCatalog& cat, int alpha, int beta) {
  return compatibility_degree(cat, alpha, beta) == 0;
}

DegreeTable build_degree_table_serial(const RootCatalog& cat) {
  DegreeTable t;
  t.ncat = cat.size();
  t.deg.resize(static_cast<size_t>(t.ncat) * t.ncat);
  for (int a = 0; a < t.ncat; ++a)
    for (int b = 0; b < t.ncat; ++b)
      t.deg[static_cast<size_t>(a) * t.ncat + b] = compatibility_degree(cat, a, b);
  return t;
}

DegreeTable build_degree_table(const RootCatalog& cat, int threads) {
  DegreeTable t;
  t.ncat = cat.size();
  t.deg.resize(static_cast<size_t>(t.ncat) * t.ncat);
  int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (int a = 0; a < t.ncat; ++a) {
    Transport tr = transport_to_negative(cat, a);
    for (int b = 0; b < t.ncat; ++b) {
      int moved = b;
      for (int s : tr.word.signs) moved = cat.tau_perm(s)[moved];
      const Int& c = cat.roots[moved][tr.j];
      t.deg[static_cast<size_t>(a) * t.ncat + b] = c > 0 ? static_cast<int>(c) : 0;
    }
  }
  return t;
}

namespace {

RootVec add_vec(const RootVec& a, const RootVec& b) {
  RootVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

ESet e_set(const RootCatalog& cat, int alpha, int alpha_prime) {
  if (compatibility_degree(cat, alpha, alpha_prime) != 1 ||
      compatibility_degree(cat, alpha_prime, alpha) != 1)
    throw PreconditionError("e_set requires mutual compatibility degree 1 (" +
                            cat.root_name(alpha) + ", " +
                            cat.root_name(alpha_prime) + ")");
  ESet out;
  out.sum = add_vec(cat.roots[alpha], cat.roots[alpha_prime]);
  if (cat.rank == 1) {
    // single element alpha + alpha' = 0; alpha [+] alpha' = 0 as well
    out.subsum = RootVec(1, 0);
    return out;
  }
  Transport t = transport_to_negative(cat, alpha_prime);
  int moved_alpha = sigma_apply_idx(cat, t.word, alpha);
  int j = t.j;
  // (-alpha_j) [+] alpha = alpha - alpha_j + sum_{i != j} a_ij alpha_i
  RootVec special = cat.roots[moved_alpha];
  special[j] -= 1;
  for (int i = 0; i < cat.rank; ++i)
    if (i != j) special[i] += cat.cartan[i][j];
  RootVec plain = cat.roots[moved_alpha];
  plain[j] -= 1;

  TauWord back = sigma_inverse(t.word);
  RootVec cand1 = sigma_apply(cat, back, plain);
  RootVec cand2 = sigma_apply(cat, back, special);
  if (cand1 == out.sum)
    out.subsum = std::move(cand2);
  else if (cand2 == out.sum)
    out.subsum = std::move(cand1);
  else
    throw ConsistencyError("E-set of (" + cat.root_name(alpha) + ", " +
                           cat.root_name(alpha_prime) +
                           ") does not contain the plain sum");
  if (out.subsum == out.sum)
    throw ConsistencyError("E-set of (" + cat.root_name(alpha) + ", " +
                           cat.root_name(alpha_prime) + ") collapsed");
  return out;
}

RootVec subplus(const RootCatalog& cat, int alpha, int alpha_prime) {
  return e_set(cat, alpha, alpha_prime).subsum;
}

Report check_second_term(const RootCatalog& cat, const DegreeTable& table,
                         int threads) {
  int ncat = cat.size();
  int nthreads = resolve_threads(threads);
  std::vector<std::string> violations;
  long checked = 0;
#pragma omp parallel num_threads(nthreads)
  {
    std::vector<std::string> local;
    long local_checked = 0;
#pragma omp for schedule(dynamic)
    for (int a = 0; a < ncat; ++a) {
      for (int b = a + 1; b < ncat; ++b) {
        if (table.at(a, b) != 1 || table.at(b, a) != 1) continue;
        ++local_checked;
        try {
          ESet es = e_set(cat, a, b);
          for (int i = 0; i < cat.rank; ++i) {
            if (es.subsum[i] > 0 && es.sum[i] <= 0)
              local.push_back("(" + cat.root_name(a) + ", " + cat.root_name(b) +
                              ") coordinate " + std::to_string(i + 1));
          }
        } catch (const std::exception& e) {
          local.push_back("(" + cat.root_name(a) + ", " + cat.root_name(b) +
                          ") " + e.what());
        }
      }
    }
#pragma omp critical
    {
      violations.insert(violations.end(), local.begin(), local.end());
      checked += local_checked;
    }
  }
  std::sort(violations.begin(), violations.end());
  Report rep;
  rep.add("second-term-coefficient-sign", violations.empty(),
          violations.empty()
              ? std::to_string(checked) + " pairs"
              : std::to_string(violations.size()) + " violations, first: " +
                    violations.front());
  return rep;
}

}  // namespace genassoc
