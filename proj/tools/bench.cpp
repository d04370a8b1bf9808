// Compares the serial reference kernels against the OpenMP ones and reports
// thread scaling on the verification-heavy path.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "genassoc/clusters.hpp"
#include "genassoc/compat.hpp"
#include "genassoc/parallel.hpp"
#include "genassoc/polytope.hpp"

using namespace genassoc;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench_type(const std::string& type, int threads) {
  RootCatalog cat = build_root_system(CartanType::parse(type));
  std::printf("== %s  (catalog %d, h %d)\n", type.c_str(), cat.size(),
              cat.coxeter_number);

  auto t0 = Clock::now();
  DegreeTable ref = build_degree_table_serial(cat);
  double serial_table = ms_since(t0);
  t0 = Clock::now();
  DegreeTable par = build_degree_table(cat, threads);
  double parallel_table = ms_since(t0);
  std::printf("  degree table      serial %8.1f ms   parallel %8.1f ms   %s\n",
              serial_table, parallel_table,
              ref.deg == par.deg ? "match" : "MISMATCH");

  t0 = Clock::now();
  auto ref_clusters = enumerate_clusters_serial(cat, par);
  double serial_enum = ms_since(t0);
  t0 = Clock::now();
  auto par_clusters = enumerate_clusters(cat, par, threads);
  double parallel_enum = ms_since(t0);
  std::printf("  cluster search    serial %8.1f ms   parallel %8.1f ms   %s (%zu clusters)\n",
              serial_enum, parallel_enum,
              ref_clusters == par_clusters ? "match" : "MISMATCH",
              par_clusters.size());

  OrbitPartition orb = orbits(cat);
  SupportFunction F = build_support_function_rho(cat, orb);
  auto pairs = exchange_pairs(cat, par, par_clusters, threads);

  t0 = Clock::now();
  PolytopeRealization real1 = realize(cat, F, par_clusters, 1);
  Report rep1 = verify_realization(real1, pairs, 1);
  double serial_verify = ms_since(t0);
  t0 = Clock::now();
  PolytopeRealization realn = realize(cat, F, par_clusters, threads);
  Report repn = verify_realization(realn, pairs, threads);
  double parallel_verify = ms_since(t0);
  std::printf("  realize + verify  1 thread %7.1f ms   %d threads %6.1f ms   %s\n",
              serial_verify, resolve_threads(threads), parallel_verify,
              (rep1.all_passed() && repn.all_passed() &&
               real1.vertex_num == realn.vertex_num)
                  ? "match"
                  : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> types = {"C6", "E6", "E7"};
  int threads = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--threads" && i + 1 < argc)
      threads = std::atoi(argv[++i]);
    else if (arg == "--types" && i + 1 < argc) {
      types.clear();
      std::string list = argv[++i];
      size_t pos = 0;
      while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        types.push_back(list.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else {
      std::fprintf(stderr, "usage: genassoc_bench [--types E6,E7] [--threads N]\n");
      return 2;
    }
  }
  for (const auto& t : types) bench_type(t, threads);
  return 0;
}
