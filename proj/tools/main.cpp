#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "genassoc/cartan.hpp"
#include "genassoc/clusters.hpp"
#include "genassoc/compat.hpp"
#include "genassoc/errors.hpp"
#include "genassoc/oracle_models.hpp"
#include "genassoc/polytope.hpp"
#include "genassoc/tau.hpp"

using namespace genassoc;

namespace {

struct Options {
  std::string type;
  std::string vec;
  int minus_simple = 0;  // 1-based, 0 = none
  bool rho = false;
  std::string support;
  std::string format = "json";
  bool full = false;
  bool skip_verify = false;
  std::uint64_t seed = 12345;
  int threads = 0;
};

std::vector<Rat> parse_support(const std::string& s) {
  std::vector<Rat> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok =
        s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(parse_rat(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

SupportFunction make_support(const RootCatalog& cat, const OrbitPartition& orb,
                             const Options& opt) {
  if (!opt.support.empty())
    return build_support_function(cat, orb, parse_support(opt.support));
  return build_support_function_rho(cat, orb);
}

int cmd_roots(const Options& opt) {
  RootCatalog cat = build_root_system(CartanType::parse(opt.type));
  OrbitPartition orb = orbits(cat);
  std::cout << "type " << cat.type.str() << "  rank " << cat.rank << "  h "
            << cat.coxeter_number << "  positive roots " << cat.num_positive
            << "  orbits " << orb.count() << "\n";
  std::cout << "bipartition I+ = {";
  bool first = true;
  for (int i = 0; i < cat.rank; ++i)
    if (cat.sign[i] > 0) {
      if (!first) std::cout << ",";
      std::cout << i + 1;
      first = false;
    }
  std::cout << "}  I- = {";
  first = true;
  for (int i = 0; i < cat.rank; ++i)
    if (cat.sign[i] < 0) {
      if (!first) std::cout << ",";
      std::cout << i + 1;
      first = false;
    }
  std::cout << "}\n";
  for (int i = 0; i < cat.size(); ++i)
    std::cout << i << "  " << vec_str(cat.roots[i]) << "  " << cat.root_name(i)
              << "  orbit " << orb.orbit_of[i] << "\n";
  for (int k = 0; k < orb.count(); ++k) {
    std::cout << "orbit " << k << " (size " << orb.orbits[k].size() << "):";
    for (int m : orb.orbits[k]) std::cout << " " << cat.root_name(m);
    std::cout << "\n";
  }
  return 0;
}

int cmd_clusters(const Options& opt) {
  RootCatalog cat = build_root_system(CartanType::parse(opt.type));
  DegreeTable table = build_degree_table(cat, opt.threads);
  auto clusters = enumerate_clusters(cat, table, opt.threads);
  std::cout << clusters.size() << " clusters\n";
  for (const auto& c : clusters) {
    for (size_t k = 0; k < c.members.size(); ++k)
      std::cout << (k ? " " : "") << c.members[k];
    std::cout << "\n";
  }
  return 0;
}

int cmd_expand(const Options& opt) {
  RootCatalog cat = build_root_system(CartanType::parse(opt.type));
  RootVec gamma = parse_vec(opt.vec, cat.rank);
  if (opt.minus_simple != 0) {
    if (opt.minus_simple < 1 || opt.minus_simple > cat.rank)
      throw std::invalid_argument("--minus-simple out of range");
    gamma[opt.minus_simple - 1] -= 1;
  }
  ClusterExpansion e = cluster_expansion(cat, gamma);
  std::string s = e.str(cat);
  if (!s.empty()) std::cout << s << "\n";
  return 0;
}

int cmd_table(const Options& opt) {
  RootCatalog cat = build_root_system(CartanType::parse(opt.type));
  std::cout << full_support_expansion_table(cat);
  return 0;
}

int cmd_polytope(const Options& opt) {
  RootCatalog cat = build_root_system(CartanType::parse(opt.type));
  OrbitPartition orb = orbits(cat);
  SupportFunction F = make_support(cat, orb, opt);
  DegreeTable table = build_degree_table(cat, opt.threads);
  auto clusters = enumerate_clusters(cat, table, opt.threads);
  PolytopeRealization real = realize(cat, F, std::move(clusters), opt.threads);

  bool verified = false;
  int rc = 0;
  if (!opt.skip_verify) {
    auto pairs = exchange_pairs(cat, table, real.clusters, opt.threads);
    Report rep = verify_realization(real, pairs, opt.threads);
    std::cerr << rep.summary();
    verified = rep.all_passed();
    if (!verified) rc = 1;
  }
  if (opt.format == "json")
    std::cout << export_json(real, orb, verified);
  else if (opt.format == "off")
    std::cout << export_off(real);
  else if (opt.format == "txt")
    std::cout << export_txt(real);
  else
    throw std::invalid_argument("unknown format '" + opt.format + "'");
  return rc;
}

int cmd_verify(const Options& opt) {
  RootCatalog cat = build_root_system(CartanType::parse(opt.type));
  OrbitPartition orb = orbits(cat);
  SupportFunction F = make_support(cat, orb, opt);
  Report rep = check_periodicity(cat);
  DegreeTable table = build_degree_table(cat, opt.threads);
  auto clusters = enumerate_clusters(cat, table, opt.threads);
  rep.add("cluster-purity-and-unimodularity", true,
          std::to_string(clusters.size()) + " clusters");
  auto pairs = exchange_pairs(cat, table, clusters, opt.threads);
  rep.add("exchange-pair-invariants", true, std::to_string(pairs.size()) + " pairs");
  PolytopeRealization real = realize(cat, F, clusters, opt.threads);
  rep.merge(verify_realization(real, pairs, opt.threads));
  if (opt.full) {
    rep.merge(check_second_term(cat, table, opt.threads));
    rep.merge(certificate_check(cat, orb, opt.threads));
    rep.merge(expansion_uniqueness_check(cat, table, clusters, opt.seed, opt.threads));
  }
  std::cout << rep.summary();
  if (!rep.all_passed()) {
    std::cout << "FAILURES in " << cat.type.str() << "\n";
    return 1;
  }
  std::cout << "OK " << cat.type.str() << "\n";
  return 0;
}

int cmd_oracle(const Options& opt) {
  RootCatalog cat = build_root_system(CartanType::parse(opt.type));
  DegreeTable table = build_degree_table(cat, opt.threads);
  auto clusters = enumerate_clusters(cat, table, opt.threads);
  bool deg_ok = true;
  long mismatches = 0;
  if (cat.type.family == 'A') {
    PolygonModelA model = snake_map_A(cat);
    for (int a = 0; a < cat.size(); ++a)
      for (int b = 0; b < cat.size(); ++b)
        if (model.degree(a, b) != table.at(a, b)) ++mismatches;
  } else if (cat.type.family == 'B' || cat.type.family == 'C') {
    PolygonModelBC model = snake_map_BC(cat);
    for (int a = 0; a < cat.size(); ++a)
      for (int b = 0; b < cat.size(); ++b)
        if (model.degree(a, b) != table.at(a, b)) ++mismatches;
  } else {
    throw std::invalid_argument("polygon oracle exists for types A, B, C only");
  }
  deg_ok = mismatches == 0;
  std::uint64_t model_count = count_maximal_noncrossing(cat.type);
  bool count_ok = model_count == clusters.size();
  std::cout << (deg_ok ? "PASS" : "FAIL") << "  degree-table-equivalence ("
            << cat.size() << "x" << cat.size() << ")\n";
  std::cout << (count_ok ? "PASS" : "FAIL") << "  maximal-noncrossing-count ("
            << model_count << " vs " << clusters.size() << ")\n";
  return (deg_ok && count_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized associahedra: clusters, expansions, polytopes"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", opt.threads, "worker threads (default: GENASSOC_THREADS or all cores)");
  };
  auto add_support = [&](CLI::App* sub) {
    sub->add_flag("--rho", opt.rho, "half-sum-of-positive-coroots support values (default)");
    sub->add_option("--support", opt.support, "comma-separated rationals, one per orbit");
  };

  CLI::App* roots = app.add_subcommand("roots", "list the almost positive roots with orbit ids");
  roots->add_option("type", opt.type, "Cartan type, e.g. A3")->required();

  CLI::App* clusters = app.add_subcommand("clusters", "enumerate all clusters");
  clusters->add_option("type", opt.type)->required();
  add_common(clusters);

  CLI::App* expand = app.add_subcommand("expand", "cluster expansion of a lattice vector");
  expand->add_option("type", opt.type)->required();
  expand->add_option("vector", opt.vec, "e.g. [1,1,1,1,1,1]")->required();
  expand->add_option("--minus-simple", opt.minus_simple, "subtract alpha_j first (1-based j)");

  CLI::App* polytope = app.add_subcommand("polytope", "realize the generalized associahedron");
  polytope->add_option("type", opt.type)->required();
  polytope->add_option("--format", opt.format, "json|off|txt (default json)");
  polytope->add_flag("--skip-verify", opt.skip_verify, "skip realization verification");
  add_support(polytope);
  add_common(polytope);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("type", opt.type)->required();
  verify->add_flag("--full", opt.full, "include second-term, certificate and expansion checks");
  verify->add_option("--seed", opt.seed, "seed for sampled checks");
  add_support(verify);
  add_common(verify);

  CLI::App* table = app.add_subcommand("table", "full-support cluster expansion table");
  table->add_option("type", opt.type)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "polygon-model cross-checks (types A, B, C)");
  oracle->add_option("type", opt.type)->required();
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(opt);
    if (clusters->parsed()) return cmd_clusters(opt);
    if (expand->parsed()) return cmd_expand(opt);
    if (polytope->parsed()) return cmd_polytope(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (table->parsed()) return cmd_table(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
  } catch (const SupportConditionError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
