#include "kmcat/config.hpp"
#include "kmcat/crystal.hpp"
#include "kmcat/cyclo.hpp"
#include "kmcat/error.hpp"
#include "kmcat/klr.hpp"
#include "kmcat/liealg.hpp"
#include "kmcat/random.hpp"
#include "kmcat/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace kmcat;

namespace {

constexpr int kInputError = 3;

struct Options {
  std::string cartan;
  std::string kappa, kappa_prime;
  int n = 3;
  int depth = 0;
  std::uint64_t seed = SplitMix64::kDefaultSeed;
  std::string json_out, dot_out;
};

IntVector parse_vector(const std::string& text, const char* what) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("bad entry '") + item + "' in " + what);
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is empty");
  return out;
}

KLRParams params_of(const Options& o) {
  if (o.cartan.empty()) throw Error(ErrorCode::InvalidArgument, "--cartan is required");
  return load_config(std::filesystem::absolute(o.cartan).string());
}

std::string label_of(const Options& o) { return std::filesystem::path(o.cartan).stem().string(); }

IntVector kappa_of(const Options& o, int rank) {
  if (o.kappa.empty()) throw Error(ErrorCode::InvalidArgument, "--kappa is required");
  IntVector k = parse_vector(o.kappa, "--kappa");
  if (static_cast<int>(k.size()) != rank)
    throw Error(ErrorCode::SizeMismatch, "--kappa needs " + std::to_string(rank) + " entries");
  return k;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << body;
}

// smallest doubling depth at which L(kappa) is complete
int auto_depth(const CartanDatum& d, const IntVector& kappa) {
  if (!d.finite_type()) throw Error(ErrorCode::InvalidArgument, "--depth is required outside finite type");
  for (int depth = 4;; depth *= 2) {
    if (build_highest_weight(d, kappa, depth).complete()) return depth;
    if (depth > 1024) throw Error(ErrorCode::CapExceeded, "module too deep");
  }
}

int finish(Report rep, const Options& o, double seconds, const Json& extra = Json::object()) {
  rep.set_seconds(seconds);
  std::cout << rep.summary();
  const int code = rep.exit_code();
  std::cout << (code == 0 ? "all checks passed" : code == 1 ? "FAILED" : "inconclusive") << "\n";
  if (!o.json_out.empty()) {
    Json j = rep.to_json(false);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    j["timing"] = {{"seconds", seconds}};
    write_file(o.json_out, j.dump(2) + "\n");
  }
  return code;
}

Report verify(const std::string& suite, const Options& o) {
  if (suite == "nilhecke") {
    Report rep("verify nilhecke");
    for (int n = 1; n <= o.n; ++n) rep.append(nilhecke_suite(n, o.seed), "n=" + std::to_string(n) + " ");
    rep.input() = Json{{"n", o.n}, {"seed", o.seed}};
    return rep;
  }
  const KLRParams p = params_of(o);
  const Json cfg = config_json(p);
  if (suite == "cartan") {
    Report rep = cartan_suite(p.datum());
    rep.input() = Json{{"config", cfg}};
    return rep;
  }
  if (suite == "klr") {
    Report rep("verify klr");
    rep.input() = Json{{"config", cfg}, {"n", o.n}, {"seed", o.seed}};
    for (int n = 1; n <= o.n; ++n) rep.append(klr_relation_suite(p, n, o.seed), "n=" + std::to_string(n) + " ");
    if (p.rank() == 1)
      for (int n = 1; n <= o.n; ++n) rep.append(klr_nilhecke_comparison(n, o.seed), "n=" + std::to_string(n) + " ");
    return rep;
  }
  const IntVector kappa = kappa_of(o, p.rank());
  if (suite == "crystal") {
    Report rep = crystal_suite(p.datum(), kappa, o.depth);
    rep.input()["config"] = cfg;
    return rep;
  }
  if (suite == "liealg") {
    const int depth = o.depth > 0 ? o.depth : auto_depth(p.datum(), kappa);
    Report rep = module_suite(p.datum(), kappa, depth);
    rep.input()["config"] = cfg;
    if (!o.kappa_prime.empty()) {
      const IntVector kp = parse_vector(o.kappa_prime, "--kappa-prime");
      rep.input()["kappa_prime"] = kp;
      rep.append(tensor_character_check(p.datum(), kp, kappa, depth), "tensor ");
    }
    return rep;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with quiver Hecke algebras, crystals and integrable modules"};
  app.set_version_flag("--version", std::string(KMCAT_VERSION));
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--cartan", o.cartan, "Cartan datum config (JSON)");
    sub->add_option("--kappa", o.kappa, "dominant weight as pairings a,b,...");
    sub->add_option("--n", o.n, "number of strands (upper bound)");
    sub->add_option("--depth", o.depth, "truncation depth (0 = complete)");
    sub->add_option("--seed", o.seed, "seed for random cases");
    sub->add_option("--json", o.json_out, "write the report as JSON");
  };
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  verify_cmd->add_option("suite", suite, "cartan | nilhecke | klr | crystal | liealg")
      ->required()
      ->check(CLI::IsMember({"cartan", "nilhecke", "klr", "crystal", "liealg"}));
  common(verify_cmd);
  verify_cmd->add_option("--kappa-prime", o.kappa_prime, "antidominant weight for the tensor check (liealg)");
  auto* cyclo_cmd = app.add_subcommand("cyclo", "cyclotomic quotients against the crystal");
  common(cyclo_cmd);
  auto* export_cmd = app.add_subcommand("crystal-export", "write B(kappa) as DOT and its character as JSON");
  common(export_cmd);
  export_cmd->add_option("--dot", o.dot_out, "DOT output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    if (verify_cmd->parsed()) {
      Report rep = verify(suite, o);
      return finish(std::move(rep), o, elapsed());
    }
    const KLRParams p = params_of(o);
    const IntVector kappa = kappa_of(o, p.rank());
    if (cyclo_cmd->parsed()) {
      Report rep = theorem_t_check(p, kappa, o.n, label_of(o));
      rep.input()["config"] = config_json(p);
      Json records = Json::array();
      for (int n = 0; n <= o.n; ++n) {
        try {
          const CycloAlgebra alg = cyclo_build(p, kappa, n);
          rep.append(cyclo_invariants(alg, o.seed), "n=" + std::to_string(n) + " ");
          for (const Json& r : cyclo_records(alg, label_of(o))) records.push_back(r);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::CapExceeded) throw;
          records.push_back(Json{{"cartan", label_of(o)}, {"kappa", kappa}, {"n", n}, {"status", "inconclusive"},
                                 {"reason", e.what()}});
        }
      }
      return finish(std::move(rep), o, elapsed(), Json{{"records", records}});
    }
    // crystal-export
    const Crystal c = highest_weight_crystal(p.datum(), kappa, o.depth);
    Report rep("crystal-export");
    rep.input() = Json{{"config", config_json(p)}, {"kappa", kappa}, {"depth", o.depth}};
    rep.append(verify_normal_axioms(c));
    if (!o.dot_out.empty()) write_file(o.dot_out, export_dot(c));
    const Json ch = character_json(character(c), &c);
    if (!o.json_out.empty()) {
      write_file(o.json_out, ch.dump(2) + "\n");
      std::cout << rep.summary();
      return rep.exit_code();
    }
    std::cout << ch.dump(2) << "\n";
    return rep.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? 1 : kInputError;
  }
}
