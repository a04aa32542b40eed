#include "kmcat/liealg.hpp"

#include "kmcat/error.hpp"

#include <algorithm>
#include <set>

namespace kmcat {

namespace {

IntVector shifted(IntVector v, int i, int by) {
  v[static_cast<std::size_t>(i)] += by;
  return v;
}

bool nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

IntVector negated(IntVector v) {
  for (int& x : v) x = -x;
  return v;
}

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

MatrixQ zeros(int r, int c) { return MatrixQ::Zero(r, c); }

}  // namespace

int IntegrableModule::dim(const IntVector& offset) const {
  auto it = dims_.find(offset);
  return it == dims_.end() ? 0 : it->second;
}

int IntegrableModule::total_dim() const {
  int s = 0;
  for (const auto& [o, d] : dims_) s += d;
  return s;
}

std::optional<MatrixQ> IntegrableModule::E(int i, const IntVector& offset) const {
  const IntVector target = shifted(offset, i, -1);
  if (!within(target)) return std::nullopt;
  if (auto it = e_.find({i, offset}); it != e_.end()) return it->second;
  return zeros(dim(target), dim(offset));
}

std::optional<MatrixQ> IntegrableModule::F(int i, const IntVector& offset) const {
  const IntVector target = shifted(offset, i, 1);
  if (!within(target)) return std::nullopt;
  if (auto it = f_.find({i, offset}); it != f_.end()) return it->second;
  return zeros(dim(target), dim(offset));
}

MatrixQ IntegrableModule::gram(const IntVector& offset) const {
  auto it = gram_.find(offset);
  return it == gram_.end() ? zeros(0, 0) : it->second;
}

Character IntegrableModule::character() const {
  Character ch;
  ch.anchor = anchor_;
  for (const auto& [o, d] : dims_) ch.mult[o] = d;
  return ch;
}

IntegrableModule build_highest_weight(const CartanDatum& datum, const IntVector& kappa, int depth_bound) {
  if (static_cast<int>(kappa.size()) != datum.rank()) throw Error(ErrorCode::SizeMismatch, "kappa has the wrong length");
  if (!is_dominant(kappa)) throw Error(ErrorCode::NotDominant, "kappa must be dominant");
  if (depth_bound < 0) throw Error(ErrorCode::InvalidArgument, "negative depth");
  const int r = datum.rank();
  IntegrableModule m;
  m.datum_ = datum;
  m.anchor_ = kappa;
  m.depth_ = depth_bound;
  const IntVector zero(static_cast<std::size_t>(r), 0);
  m.dims_[zero] = 1;
  m.gram_[zero] = MatrixQ::Identity(1, 1);

  std::set<IntVector> level{zero};
  for (int l = 1; l <= depth_bound && !level.empty(); ++l) {
    std::set<IntVector> next;
    for (const IntVector& b : level)
      for (int i = 0; i < r; ++i) next.insert(shifted(b, i, 1));
    std::set<IntVector> alive;
    for (const IntVector& beta : next) {
      struct Cand {
        int j, w;
      };
      std::vector<Cand> cands;
      for (int j = 0; j < r; ++j) {
        const IntVector below = shifted(beta, j, -1);
        if (!nonnegative(below)) continue;
        for (int w = 0; w < m.dim(below); ++w) cands.push_back({j, w});
      }
      if (cands.empty()) continue;
      const int nc = static_cast<int>(cands.size());
      // v[i][c] = e_i f_j w in L_{beta - e_i}
      std::vector<std::vector<VectorQ>> v(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) {
        const IntVector bi = shifted(beta, i, -1);
        const int di = nonnegative(bi) ? m.dim(bi) : 0;
        if (di == 0) continue;
        for (const Cand& c : cands) {
          VectorQ x = VectorQ::Zero(di);
          const IntVector bj = shifted(beta, c.j, -1);
          const IntVector bij = shifted(bi, c.j, -1);
          if (nonnegative(bij) && m.dim(bij) > 0) {
            const MatrixQ& Ei = m.e_.at({i, bj});
            const MatrixQ& Fj = m.f_.at({c.j, bij});
            x += Fj * Ei.col(c.w);
          }
          if (i == c.j) x(c.w) += Rational(pairing(datum, i, kappa, bj));
          v[static_cast<std::size_t>(i)].push_back(std::move(x));
        }
      }
      MatrixQ G = zeros(nc, nc);
      for (int a = 0; a < nc; ++a) {
        const Cand& ca = cands[static_cast<std::size_t>(a)];
        const MatrixQ& g = m.gram_.at(shifted(beta, ca.j, -1));
        for (int c = 0; c < nc; ++c)
          G(a, c) = (g.row(ca.w) * v[static_cast<std::size_t>(ca.j)][static_cast<std::size_t>(c)])(0, 0);
      }
      m.candidate_gram_[beta] = G;
      const auto ech = rref(G);
      const int d = ech.rank();
      if (d == 0) continue;
      alive.insert(beta);
      m.dims_[beta] = d;
      MatrixQ gb(d, d);
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) gb(x, y) = G(ech.pivots[static_cast<std::size_t>(x)], ech.pivots[static_cast<std::size_t>(y)]);
      const auto inv = inverse(gb);
      if (!inv) throw Error(ErrorCode::InternalInconsistency, "degenerate form on chosen basis");
      m.gram_[beta] = gb;
      for (int i = 0; i < r; ++i) {
        const IntVector bi = shifted(beta, i, -1);
        if (!nonnegative(bi) || m.dim(bi) == 0) continue;
        // F_i: columns are the candidates (i, u)
        MatrixQ rhs(d, m.dim(bi));
        int col = 0;
        for (int c = 0; c < nc; ++c) {
          if (cands[static_cast<std::size_t>(c)].j != i) continue;
          for (int x = 0; x < d; ++x) rhs(x, col) = G(ech.pivots[static_cast<std::size_t>(x)], c);
          ++col;
        }
        m.f_[{i, bi}] = (*inv) * rhs;
        MatrixQ Ei(m.dim(bi), d);
        for (int x = 0; x < d; ++x) Ei.col(x) = v[static_cast<std::size_t>(i)][static_cast<std::size_t>(ech.pivots[static_cast<std::size_t>(x)])];
        m.e_[{i, beta}] = Ei;
      }
    }
    level = alive;
  }
  m.complete_ = level.empty();
  return m;
}

IntegrableModule build_lowest_weight(const CartanDatum& datum, const IntVector& kappa_prime, int depth_bound) {
  const IntegrableModule hi = build_highest_weight(datum, negated(kappa_prime), depth_bound);
  IntegrableModule m;
  m.datum_ = datum;
  m.anchor_ = kappa_prime;
  m.depth_ = depth_bound;
  m.lowest_ = true;
  m.complete_ = hi.complete_;
  for (const auto& [o, d] : hi.dims_) m.dims_[negated(o)] = d;
  for (const auto& [o, g] : hi.gram_) m.gram_[negated(o)] = g;
  for (const auto& [o, g] : hi.candidate_gram_) m.candidate_gram_[negated(o)] = g;
  for (const auto& [key, mat] : hi.f_) m.e_[{key.first, negated(key.second)}] = mat;
  for (const auto& [key, mat] : hi.e_) m.f_[{key.first, negated(key.second)}] = mat;
  return m;
}

// ---------------------------------------------------------------- checks

namespace {

struct Tally {
  int passed = 0, failed = 0, untested = 0;
  std::string first;
  void fail(const std::string& why) {
    if (!failed) first = why;
    ++failed;
  }
};

void record(Report& rep, const std::string& name, const Tally& t, const std::string& extra = {}) {
  Check c;
  c.name = name;
  if (t.failed) c.status = Status::Fail;
  else if (t.passed) c.status = Status::Pass;
  else c.status = Status::Untested;
  c.detail = std::to_string(t.passed) + " passed, " + std::to_string(t.failed) + " failed, " +
             std::to_string(t.untested) + " untested";
  if (t.failed) c.detail += "; first: " + t.first;
  if (!extra.empty()) c.detail += "; " + extra;
  c.payload = Json{{"passed", t.passed}, {"failed", t.failed}, {"untested", t.untested}};
  rep.add(std::move(c));
}

// Applies letters (first applied first): +i+1 for F_i, -(i+1) for E_i.
std::optional<MatrixQ> chain(const IntegrableModule& m, const std::vector<int>& letters, IntVector src) {
  MatrixQ acc = MatrixQ::Identity(m.dim(src), m.dim(src));
  for (int l : letters) {
    const int i = std::abs(l) - 1;
    const auto op = l > 0 ? m.F(i, src) : m.E(i, src);
    if (!op) return std::nullopt;
    acc = (*op * acc).eval();
    src = shifted(src, i, l > 0 ? 1 : -1);
  }
  return acc;
}

// all offsets within the truncation adjacent to the support, so that maps out
// of zero spaces are covered by the checks too
std::set<IntVector> sources(const IntegrableModule& m) {
  std::set<IntVector> out;
  for (const auto& [o, d] : m.dims()) out.insert(o);
  return out;
}

mpz_class binom(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

Report module_construction_checks(const IntegrableModule& m) {
  Report rep("module_construction");
  Tally sym, adj, rad;
  for (const auto& [o, G] : m.candidate_gram_) {
    if (G == G.transpose()) ++sym.passed;
    else sym.fail("candidate form at " + vec_str(o));
  }
  for (const auto& [o, d] : m.dims_) {
    const MatrixQ& g = m.gram_.at(o);
    if (!(g == g.transpose())) sym.fail("form at " + vec_str(o));
    for (int i = 0; i < m.rank(); ++i) {
      // <E_i x, y> = <x, F_i y> for x in o, y in o - e_i
      const IntVector t = shifted(o, i, -1);
      if (m.dim(t) == 0) continue;
      const auto E = m.E(i, o);
      const auto F = m.F(i, t);
      if (!E || !F) {
        ++adj.untested;
        continue;
      }
      if (MatrixQ(E->transpose() * m.gram_.at(t)) == MatrixQ(g * (*F))) ++adj.passed;
      else adj.fail("E_" + std::to_string(i + 1) + " at " + vec_str(o));
    }
  }
  // radical vectors among the spanning monomials have zero coordinates, and
  // so do their images
  for (const auto& [o, G] : m.candidate_gram_) {
    const MatrixQ null = nullspace(G);
    if (null.cols() == 0 || m.dim(o) == 0) continue;
    const auto ech = rref(G);
    MatrixQ rows(m.dim(o), G.cols());
    for (int x = 0; x < m.dim(o); ++x) rows.row(x) = G.row(ech.pivots[static_cast<std::size_t>(x)]);
    const MatrixQ coords = (*inverse(m.gram_.at(o))) * rows * null;
    bool ok = is_zero(coords);
    for (int i = 0; i < m.rank() && ok; ++i)
      if (const auto F = m.F(i, o)) ok = is_zero(MatrixQ(*F * coords));
    if (ok) ++rad.passed;
    else rad.fail("radical at " + vec_str(o));
  }
  record(rep, "forms_symmetric", sym);
  record(rep, "E_F_adjoint", adj);
  record(rep, "radical_stable", rad);
  return rep;
}

Report verify_serre(const IntegrableModule& m) {
  Report rep("serre");
  const CartanDatum& c = m.datum();
  Tally te, tf;
  int nontrivial_e = 0, nontrivial_f = 0;
  const bool trivial = m.rank() < 2;
  for (const IntVector& src : sources(m))
    for (int i = 0; i < m.rank(); ++i)
      for (int j = 0; j < m.rank(); ++j) {
        if (i == j) continue;
        const int N = 1 + c.d_ij(i, j);
        for (int sign : {-1, 1}) {
          Tally& t = sign < 0 ? te : tf;
          std::optional<MatrixQ> total;
          bool untested = false;
          for (int k = 0; k <= N && !untested; ++k) {
            std::vector<int> letters(static_cast<std::size_t>(k), sign * (i + 1));
            letters.push_back(sign * (j + 1));
            letters.insert(letters.end(), static_cast<std::size_t>(N - k), sign * (i + 1));
            const auto op = chain(m, letters, src);
            if (!op) {
              untested = true;
              break;
            }
            MatrixQ term = *op * Rational(mpz_class(binom(N, k) * ((k % 2) ? -1 : 1)));
            total = total ? MatrixQ(*total + term) : term;
          }
          if (untested) {
            ++t.untested;
            continue;
          }
          if (total->size() > 0) (sign < 0 ? nontrivial_e : nontrivial_f)++;
          if (is_zero(*total)) ++t.passed;
          else t.fail((sign < 0 ? "E" : "F") + std::to_string(i + 1) + std::to_string(j + 1) + " at " + vec_str(src));
        }
      }
  if (trivial) {
    Check ok;
    ok.name = "serre";
    ok.status = Status::Pass;
    ok.detail = "no pair i != j";
    rep.add(std::move(ok));
    return rep;
  }
  record(rep, "serre_E", te, std::to_string(nontrivial_e) + " with nonzero source and target");
  record(rep, "serre_F", tf, std::to_string(nontrivial_f) + " with nonzero source and target");
  return rep;
}

Report verify_commutators(const IntegrableModule& m) {
  Report rep("commutators");
  Tally t;
  for (const IntVector& src : sources(m))
    for (int i = 0; i < m.rank(); ++i)
      for (int j = 0; j < m.rank(); ++j) {
        const auto ef = chain(m, {j + 1, -(i + 1)}, src);
        const auto fe = chain(m, {-(i + 1), j + 1}, src);
        if (!ef || !fe) {
          ++t.untested;
          continue;
        }
        MatrixQ expect = zeros(static_cast<int>(ef->rows()), static_cast<int>(ef->cols()));
        if (i == j) expect = MatrixQ::Identity(m.dim(src), m.dim(src)) * Rational(pairing(m.datum(), i, m.anchor(), src));
        if (MatrixQ(*ef - *fe) == expect) ++t.passed;
        else t.fail("[E" + std::to_string(i + 1) + ",F" + std::to_string(j + 1) + "] at " + vec_str(src));
      }
  record(rep, "commutator", t);
  return rep;
}

Report divided_power_span_check(const IntegrableModule& m) {
  Report rep("divided_powers");
  Tally t;
  // generating direction: F for highest weight, E for lowest weight modules
  const int dir = m.lowest() ? -1 : 1;
  std::vector<std::pair<IntVector, int>> order;
  for (const auto& [o, d] : m.dims()) order.emplace_back(o, depth(o));
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  std::map<IntVector, MatrixQ> span;  // columns span the reached vectors
  bool integral = true;
  for (const auto& [o, level] : order) {
    const int d = m.dim(o);
    if (level == 0) {
      span[o] = MatrixQ::Identity(1, 1);
      ++t.passed;
      continue;
    }
    std::vector<MatrixQ> parts;
    for (int i = 0; i < m.rank(); ++i) {
      const int have = dir * o[static_cast<std::size_t>(i)];
      for (int r = 1; r <= have; ++r) {
        const IntVector from = shifted(o, i, -dir * r);
        auto it = span.find(from);
        if (it == span.end()) continue;
        const auto op = chain(m, std::vector<int>(static_cast<std::size_t>(r), dir * (i + 1)), from);
        if (!op) continue;
        mpz_class fact = 1;
        for (int k = 2; k <= r; ++k) fact *= k;
        const MatrixQ img = (*op * it->second) * Rational(1) / Rational(mpq_class(fact));
        for (Eigen::Index x = 0; x < img.rows(); ++x)
          for (Eigen::Index y = 0; y < img.cols(); ++y) integral = integral && img(x, y).is_integer();
        parts.push_back(img);
      }
    }
    Eigen::Index cols = 0;
    for (const auto& p : parts) cols += p.cols();
    MatrixQ all(d, cols);
    cols = 0;
    for (const auto& p : parts) {
      all.middleCols(cols, p.cols()) = p;
      cols += p.cols();
    }
    const auto ech = rref(MatrixQ(all.transpose()));
    if (ech.rank() == d) {
      ++t.passed;
      MatrixQ basis(d, d);
      for (int k = 0; k < d; ++k) basis.col(k) = ech.reduced.row(k).transpose();
      span[o] = basis;
    } else {
      t.fail("rank " + std::to_string(ech.rank()) + " < " + std::to_string(d) + " at " + vec_str(o));
    }
  }
  record(rep, "divided_power_span", t,
         std::string("coordinates ") + (integral ? "all integral" : "not all integral") + " in the form basis");
  return rep;
}

Report verify_integrability(const IntegrableModule& m) {
  Report rep("integrability");
  Tally t;
  for (const IntVector& src : sources(m))
    for (int i = 0; i < m.rank(); ++i)
      for (int sign : {-1, 1}) {
        IntVector cur = src;
        MatrixQ acc = MatrixQ::Identity(m.dim(src), m.dim(src));
        bool done = false;
        for (int step = 0; step <= 2 * m.depth() + 2; ++step) {
          if (acc.size() == 0 || is_zero(acc)) {
            done = true;
            break;
          }
          const auto op = sign > 0 ? m.F(i, cur) : m.E(i, cur);
          if (!op) break;
          acc = (*op * acc).eval();
          cur = shifted(cur, i, sign);
        }
        if (done) ++t.passed;
        else ++t.untested;
      }
  record(rep, "locally_nilpotent", t);
  return rep;
}

std::optional<std::vector<std::pair<IntVector, long>>> weyl_decompose(const CartanDatum& datum, const Character& ch) {
  if (!datum.finite_type()) throw Error(ErrorCode::NotFiniteType, "Weyl decomposition needs finite type");
  std::map<IntVector, long> rest = ch.mult;
  std::vector<std::pair<IntVector, long>> out;
  while (true) {
    for (auto it = rest.begin(); it != rest.end();) {
      if (it->second < 0) return std::nullopt;
      it = it->second == 0 ? rest.erase(it) : std::next(it);
    }
    if (rest.empty()) return out;
    // the entries of least height include a maximal weight
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      int h = 0, ht = 0;
      for (int x : it->first) h += x;
      for (int x : top->first) ht += x;
      if (h < ht) top = it;
    }
    const IntVector off = top->first;
    const long mult = top->second;
    IntVector lambda;
    for (int i = 0; i < datum.rank(); ++i) lambda.push_back(pairing(datum, i, ch.anchor, off));
    if (!is_dominant(lambda)) return std::nullopt;
    std::optional<IntegrableModule> irr;
    for (int d = 4;; d *= 2) {
      irr = build_highest_weight(datum, lambda, d);
      if (irr->complete()) break;
      if (d > 1024) throw Error(ErrorCode::CapExceeded, "irreducible character too deep");
    }
    for (const auto& [o, d] : irr->dims()) {
      IntVector at = off;
      for (std::size_t k = 0; k < at.size(); ++k) at[k] += o[k];
      rest[at] -= mult * d;
    }
    out.emplace_back(lambda, mult);
  }
}

Report tensor_character_check(const CartanDatum& datum, const IntVector& kappa_prime, const IntVector& kappa, int depth_bound) {
  Report rep("tensor_character");
  rep.input() = Json{{"kappa_prime", kappa_prime}, {"kappa", kappa}, {"depth", depth_bound}};
  const IntegrableModule lo = build_lowest_weight(datum, kappa_prime, depth_bound);
  const IntegrableModule hi = build_highest_weight(datum, kappa, depth_bound);
  const Character conv = convolve(lo.character(), hi.character());
  const Character crys = character(tensor(lowest_weight_crystal(datum, kappa_prime, depth_bound),
                                          highest_weight_crystal(datum, kappa, depth_bound)));
  auto complete = [&](const IntVector& g) {
    if (lo.complete() && hi.complete()) return true;
    const IntegrableModule* full = lo.complete() ? &lo : hi.complete() ? &hi : nullptr;
    const IntegrableModule* part = full == &lo ? &hi : &lo;
    if (!full) return false;
    for (const auto& [o, d] : full->dims()) {
      IntVector rest = g;
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= o[k];
      if (!part->within(rest)) return false;
    }
    return true;
  };
  std::set<IntVector> weights;
  for (const auto& [o, m] : conv.mult) weights.insert(o);
  for (const auto& [o, m] : crys.mult) weights.insert(o);
  Tally t;
  int incomplete = 0;
  for (const IntVector& g : weights) {
    if (!complete(g)) {
      ++incomplete;
      continue;
    }
    const long a = conv.mult.count(g) ? conv.mult.at(g) : 0;
    const long b = crys.mult.count(g) ? crys.mult.at(g) : 0;
    if (a == b) ++t.passed;
    else t.fail(vec_str(g) + ": modules " + std::to_string(a) + ", crystal " + std::to_string(b));
  }
  if (t.passed + t.failed == 0) throw Error(ErrorCode::IncompleteDepth, "no complete weights at this depth");
  t.untested = incomplete;
  record(rep, "multiplicities", t);

  if (datum.finite_type() && lo.complete() && hi.complete()) {
    const auto dec = weyl_decompose(datum, conv);
    Check c;
    c.name = "weyl_decomposition";
    if (!dec) {
      c.status = Status::Fail;
      c.detail = "negative or non-dominant remainder";
    } else {
      c.status = Status::Pass;
      Json parts = Json::array();
      std::vector<std::string> dims;
      for (const auto& [lambda, mult] : *dec) {
        const mpz_class w = weyl_dim(datum, lambda);
        parts.push_back(Json{{"highest", lambda}, {"mult", mult}, {"dim", w.get_str()}});
        for (long k = 0; k < mult; ++k) dims.push_back(w.get_str());
      }
      for (std::size_t k = 0; k < dims.size(); ++k) c.detail += (k ? " + " : "") + dims[k];
      c.payload = Json{{"constituents", parts}};
    }
    rep.add(std::move(c));
  } else {
    Check c;
    c.name = "weyl_decomposition";
    c.status = Status::Untested;
    c.detail = datum.finite_type() ? "truncation incomplete" : "not of finite type";
    rep.add(std::move(c));
  }
  return rep;
}

Report module_suite(const CartanDatum& datum, const IntVector& kappa, int depth_bound) {
  Report rep("liealg");
  rep.input() = Json{{"kappa", kappa}, {"depth", depth_bound}};
  const IntegrableModule m = build_highest_weight(datum, kappa, depth_bound);
  rep.append(module_construction_checks(m));
  rep.append(verify_serre(m));
  rep.append(verify_commutators(m));
  rep.append(divided_power_span_check(m));
  rep.append(verify_integrability(m));

  const Crystal b = highest_weight_crystal(datum, kappa, depth_bound);
  const Character cb = character(b);
  Tally t;
  std::set<IntVector> weights;
  for (const auto& [o, d] : m.dims()) weights.insert(o);
  for (const auto& [o, d] : cb.mult)
    if (m.within(o)) weights.insert(o);
  for (const IntVector& o : weights) {
    if (!b.complete_weight(o)) {
      ++t.untested;
      continue;
    }
    const long x = m.dim(o), y = cb.mult.count(o) ? cb.mult.at(o) : 0;
    if (x == y) ++t.passed;
    else t.fail(vec_str(o) + ": module " + std::to_string(x) + ", crystal " + std::to_string(y));
  }
  record(rep, "multiplicities_vs_crystal", t);
  if (datum.finite_type() && m.complete()) {
    const mpz_class w = weyl_dim(datum, kappa);
    rep.expect("weyl_dimension", mpz_class(m.total_dim()) == w,
               "dim " + std::to_string(m.total_dim()) + ", weyl_dim " + w.get_str());
  }
  return rep;
}

}  // namespace kmcat
