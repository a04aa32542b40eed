#include "kmcat/crystal.hpp"
#include "kmcat/cyclo.hpp"
#include "kmcat/error.hpp"
#include "kmcat/parallel.hpp"

namespace kmcat {

namespace {

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

struct Level {
  std::vector<Check> checks;
};

}  // namespace

Report theorem_t_check(const KLRParams& params, const IntVector& kappa, int n_max, const std::string& cartan_label) {
  Report rep("theorem_t");
  rep.input() = Json{{"cartan", cartan_label}, {"kappa", kappa}, {"n_max", n_max}};
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "negative n_max");
  const Crystal crystal = highest_weight_crystal(params.datum(), kappa, n_max);
  const Character ch = character(crystal);

  const auto levels = parallel_map<Level>(static_cast<std::size_t>(n_max + 1), [&](std::size_t level) {
    const int n = static_cast<int>(level);
    Level out;
    auto inconclusive = [&](const std::string& name, const Error& e) {
      Check c;
      c.name = name;
      c.status = Status::Inconclusive;
      c.detail = e.what();
      out.checks.push_back(std::move(c));
    };
    std::optional<CycloAlgebra> alg;
    try {
      alg = cyclo_build(params, kappa, n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      inconclusive("n=" + std::to_string(n), e);
      return out;
    }
    for (const IntVector& beta : alg->block_contents()) {
      const std::string name = "n=" + std::to_string(n) + " beta=" + vec_str(beta);
      if (!crystal.complete_weight(beta)) {
        Check c;
        c.name = name;
        c.status = Status::Untested;
        c.detail = "crystal weight space incomplete";
        out.checks.push_back(std::move(c));
        continue;
      }
      const auto it = ch.mult.find(beta);
      const long expect = it == ch.mult.end() ? 0 : it->second;
      try {
        const int got = count_simples(*alg, beta);
        Check c;
        c.name = name;
        c.status = got == expect ? Status::Pass : Status::Fail;
        c.detail = "simples " + std::to_string(got) + ", |B(kappa)_{kappa-beta}| " + std::to_string(expect) +
                   ", block dim " + std::to_string(alg->block(beta).size());
        c.payload = Json{{"simples", got}, {"crystal", expect}, {"dim", alg->block(beta).size()}};
        out.checks.push_back(std::move(c));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NonSplit) throw;
        inconclusive(name, e);
      }
    }
    return out;
  });
  for (const Level& l : levels)
    for (const Check& c : l.checks) rep.add(c);
  return rep;
}

}  // namespace kmcat
