#include "kmcat/cyclo.hpp"

#include "kmcat/error.hpp"
#include "kmcat/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace kmcat {

// Lazily computed pieces e(top) J e(bottom) of the cyclotomic ideal.
//
// J is spanned by b * y over basis elements b and the generators
// y = x_1^{k_c} psi_w e(i), c the top colour on strand 1. When the parameters
// are homogeneous the pieces are graded and finite, so every piece is exact.
// Otherwise a piece consists of the elements with at most `cap` dots, and
// products leaving the truncation are discarded.
class CycloBuilder {
 public:
  using CompKey = std::tuple<Word, Word, int>;
  struct Comp {
    std::vector<KLRKey> columns;
    std::map<KLRKey, int> index;
    SparseEchelon ideal;
  };

  CycloBuilder(const KLRParams& params, const IntVector& kappa, int n, int cap)
      : A_(std::make_shared<KLRAlgebra>(params, n)), kappa_(kappa), n_(n), cap_(cap),
        graded_(params.homogeneous()) {
    const SymmetricGroup& g = A_->group();
    for (const Word& i : A_->words())
      for (int w = 0; w < g.order(); ++w) {
        const KLRKey key{w, Mono{}, i};
        const Word top = A_->top_word(key);
        const int c = top[0];
        const int k = kappa_[static_cast<std::size_t>(c)];
        Gen gen;
        gen.y = A_->left_word(std::vector<int>(static_cast<std::size_t>(k), -1), A_->basis(w, Mono{}, i));
        gen.top = top;
        gen.bottom = i;
        gen.degree = graded_ ? A_->degree(key) + 2 * params.datum().d(c) * k : 0;
        gens_.push_back(std::move(gen));
      }
  }

  [[nodiscard]] const std::shared_ptr<KLRAlgebra>& engine() const { return A_; }
  [[nodiscard]] bool graded() const { return graded_; }
  [[nodiscard]] int grade(const KLRKey& k) const { return graded_ ? A_->degree(k) : 0; }

  // Monomials in n variables with sum weight[k] * a_k == target (graded), or
  // total degree <= cap.
  [[nodiscard]] std::vector<Mono> monomials(const Word& bottom, int target) const {
    std::vector<Mono> out;
    Mono m;
    const CartanDatum& c = A_->params().datum();
    auto rec = [&](auto&& self, int k, int left) -> void {
      if (k == n_) {
        if (!graded_ || left == 0) out.push_back(m);
        return;
      }
      const int step = graded_ ? 2 * c.d(bottom[static_cast<std::size_t>(k)]) : 1;
      for (int a = 0; a * step <= left; ++a) {
        m[k] = static_cast<std::uint8_t>(a);
        self(self, k + 1, left - a * step);
      }
      m[k] = 0;
    };
    if (!graded_) rec(rec, 0, cap_);
    else if (target >= 0) rec(rec, 0, target);
    return out;
  }

  [[nodiscard]] std::vector<KLRKey> enumerate(const Word& top, const Word& bottom, int grade) const {
    std::vector<KLRKey> out;
    const SymmetricGroup& g = A_->group();
    for (int w = 0; w < g.order(); ++w) {
      const KLRKey base{w, Mono{}, bottom};
      if (A_->top_word(base) != top) continue;
      const int rest = graded_ ? grade - A_->degree(base) : 0;
      if (graded_ && rest < 0) continue;
      for (const Mono& m : monomials(bottom, rest)) out.push_back(KLRKey{w, m, bottom});
    }
    // few dots last, so that they become the standard monomials
    std::stable_sort(out.begin(), out.end(), [](const KLRKey& a, const KLRKey& b) {
      const int da = a.dots.degree(), db = b.dots.degree();
      if (da != db) return da > db;
      return a < b;
    });
    return out;
  }

  Comp& component(const Word& top, const Word& bottom, int grade) {
    const CompKey key{top, bottom, grade};
    if (auto it = comps_.find(key); it != comps_.end()) return it->second;
    Comp& c = comps_[key];
    c.columns = enumerate(top, bottom, grade);
    for (std::size_t i = 0; i < c.columns.size(); ++i) c.index.emplace(c.columns[i], static_cast<int>(i));
    for (std::size_t gi = 0; gi < gens_.size() && c.ideal.rank() < static_cast<int>(c.columns.size()); ++gi) {
      const Gen& gen = gens_[gi];
      if (gen.bottom != bottom || gen.y.is_zero()) continue;
      for (const KLRKey& b : enumerate(top, gen.top, grade - gen.degree)) {
        const KLRElement prod = A_->left_word(A_->group().word(b.perm), xa_y(gi, b.dots));
        SparseVectorQ v;
        bool inside = true;
        for (const auto& [k, coef] : prod.terms()) {
          auto it = c.index.find(k);
          if (it == c.index.end()) {
            if (graded_) throw Error(ErrorCode::InternalInconsistency, "product left its graded piece");
            inside = false;
            break;
          }
          v.emplace(it->second, coef);
        }
        if (inside && !v.empty()) c.ideal.insert(std::move(v));
        if (c.ideal.rank() == static_cast<int>(c.columns.size())) break;
      }
    }
    return c;
  }

  // x_k^N e(i) in J for N = from..cap_limit
  std::optional<int> witness(int k, const Word& i, int from, int limit) {
    const CartanDatum& c = A_->params().datum();
    for (int N = from; N <= limit; ++N) {
      Mono m;
      m[k - 1] = static_cast<std::uint8_t>(N);
      const KLRKey key{0, m, i};
      Comp& comp = component(i, i, graded_ ? 2 * c.d(i[static_cast<std::size_t>(k - 1)]) * N : 0);
      auto it = comp.index.find(key);
      if (it == comp.index.end()) return std::nullopt;
      if (comp.ideal.contains(SparseVectorQ{{it->second, Rational(1)}})) return N;
    }
    return std::nullopt;
  }

  std::map<CompKey, Comp>& comps() { return comps_; }

 private:
  struct Gen {
    KLRElement y;
    Word top, bottom;
    int degree = 0;
  };

  const KLRElement& xa_y(std::size_t g, const Mono& a) {
    if (a.degree() == 0) return gens_[g].y;
    if (auto it = xa_cache_.find({g, a.e}); it != xa_cache_.end()) return it->second;
    int k = 0;
    while (a[k] == 0) ++k;
    Mono prev = a;
    --prev[k];
    KLRElement out = A_->left_x(k + 1, xa_y(g, prev));
    return xa_cache_.emplace(std::make_pair(g, a.e), std::move(out)).first->second;
  }

  std::shared_ptr<KLRAlgebra> A_;
  IntVector kappa_;
  int n_, cap_;
  bool graded_;
  std::vector<Gen> gens_;
  std::map<std::pair<std::size_t, decltype(Mono::e)>, KLRElement> xa_cache_;
  std::map<CompKey, Comp> comps_;
};

namespace {

using NilMap = std::map<std::pair<int, Word>, int>;

// Searches the witnesses with powers up to `limit`, resuming from earlier
// searches. Returns true once every (k, i) has one.
bool find_witnesses(CycloBuilder& b, int n, NilMap& nil, std::map<std::pair<int, Word>, int>& tried, int limit) {
  bool all = true;
  for (const Word& i : b.engine()->words())
    for (int k = 1; k <= n; ++k) {
      const auto key = std::make_pair(k, i);
      if (nil.count(key)) continue;
      const int from = tried.count(key) ? tried[key] + 1 : 0;
      if (auto w = b.witness(k, i, from, limit)) nil[key] = *w;
      else {
        tried[key] = limit;
        all = false;
      }
    }
  return all;
}

bool same_content(const Word& a, const Word& b, int n, int rank) { return content(a, n, rank) == content(b, n, rank); }

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class binomial(int k, int n) {
  if (n < 0 || n > k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  return out;
}

}  // namespace

SparseVectorQ CycloAlgebra::multiply(const SparseVectorQ& u, const SparseVectorQ& v) const {
  SparseVectorQ out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v)
      for (const auto& [c, cc] : product(a, b)) {
        Rational& slot = out[c];
        slot += ca * cb * cc;
        if (slot.is_zero()) out.erase(c);
      }
  return out;
}

std::vector<IntVector> CycloAlgebra::block_contents() const {
  std::set<IntVector> s;
  for (const Word& w : engine_->words()) s.insert(kmcat::content(w, n_, params_.rank()));
  return {s.begin(), s.end()};
}

std::vector<int> CycloAlgebra::block(const IntVector& beta) const {
  std::vector<int> out;
  for (int b = 0; b < dim(); ++b)
    if (contents_[static_cast<std::size_t>(b)] == beta) out.push_back(b);
  return out;
}

SparseVectorQ CycloAlgebra::reduce(const KLRElement& a) const {
  if (a.n() != n_) throw Error(ErrorCode::SizeMismatch, "element does not belong to H_n");
  SparseVectorQ out;
  if (n_ == 0) {
    for (const auto& [k, c] : a.terms()) out[0] += c;
    if (!out.empty() && out[0].is_zero()) out.clear();
    return out;
  }
  std::map<std::tuple<Word, Word, int>, SparseVectorQ> parts;
  for (const auto& [k, c] : a.terms()) {
    const bool graded = homogeneous();
    const int grade = graded ? engine_->degree(k) : 0;
    if (graded && grade > degree_bound_) continue;
    bool high = false;
    for (int p = 1; p <= n_; ++p) {
      auto it = nilpotency_.find({p, k.word});
      if (it != nilpotency_.end() && k.dots[p - 1] >= it->second) high = true;
    }
    if (high) continue;
    const auto key = std::make_tuple(engine_->top_word(k), k.word, grade);
    auto comp = components_.find(key);
    if (comp == components_.end() || !comp->second.index.count(k)) {
      if (graded) throw Error(ErrorCode::InternalInconsistency, "term outside the computed pieces");
      throw Error(ErrorCode::CapExceeded, "term outside the dot truncation");
    }
    parts[key].emplace(comp->second.index.at(k), c);
  }
  for (auto& [key, v] : parts) {
    const Component& comp = components_.at(key);
    comp.ideal.reduce(v);
    for (const auto& [col, c] : v) out[comp.basis_of_column.at(col)] = c;
  }
  return out;
}

CycloAlgebra cyclo_build(const KLRParams& params, const IntVector& kappa, int n, const std::vector<int>& dot_caps) {
  const int rank = params.rank();
  if (n < 0 || n > kMaxVars) throw Error(ErrorCode::InvalidArgument, "n out of range");
  if (static_cast<int>(kappa.size()) != rank) throw Error(ErrorCode::SizeMismatch, "kappa has the wrong length");
  if (!is_dominant(kappa)) throw Error(ErrorCode::NotDominant, "kappa must be dominant");

  CycloAlgebra alg;
  alg.params_ = params;
  alg.kappa_ = kappa;
  alg.n_ = n;
  alg.engine_ = std::make_shared<KLRAlgebra>(params, n);
  if (n == 0) {
    alg.basis_.push_back(KLRKey{});
    alg.degrees_.push_back(0);
    alg.contents_.push_back(IntVector(static_cast<std::size_t>(rank), 0));
    alg.table_ = {{SparseVectorQ{{0, Rational(1)}}}};
    alg.unit_ = {{0, Rational(1)}};
    alg.diagnostics_["mode"] = "trivial";
    return alg;
  }

  const int k_max = *std::max_element(kappa.begin(), kappa.end());
  std::vector<int> caps = dot_caps;
  if (caps.empty()) caps = {n * k_max, 2 * n * k_max, 3 * n * k_max};
  const CartanDatum& datum = params.datum();
  int d_max = 0;
  for (int i = 0; i < rank; ++i) d_max = std::max(d_max, datum.d(i));

  std::unique_ptr<CycloBuilder> builder;
  NilMap nil;
  Json caps_json = Json::array();
  for (int c : caps) caps_json.push_back(c);
  alg.diagnostics_["schedule"] = caps_json;

  // pieces kept for the quotient: (top, bottom) -> grades
  std::vector<std::tuple<Word, Word, int>> pieces;

  if (params.homogeneous()) {
    builder = std::make_unique<CycloBuilder>(params, kappa, n, 0);
    std::map<std::pair<int, Word>, int> tried;
    bool found = false;
    int used = -1;
    for (int c : caps) {
      if (find_witnesses(*builder, n, nil, tried, c)) {
        found = true;
        used = c;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::CapExceeded, "no nilpotency witness within the dot schedule");

    // quotient spanned by psi_w x^a e(i) with a_k < N(k, i)
    const auto& words = builder->engine()->words();
    const SymmetricGroup& g = builder->engine()->group();
    int bound = std::numeric_limits<int>::min(), low = std::numeric_limits<int>::max();
    for (const Word& i : words) {
      bool dead = false;
      int top_dots = 0;
      for (int k = 1; k <= n; ++k) {
        const int N = nil.at({k, i});
        if (N == 0) dead = true;
        top_dots += 2 * datum.d(i[static_cast<std::size_t>(k - 1)]) * (N - 1);
      }
      for (int w = 0; w < g.order(); ++w) {
        const int d = builder->engine()->degree(KLRKey{w, Mono{}, i});
        low = std::min(low, d);
        if (!dead) bound = std::max(bound, d + top_dots);
      }
    }
    if (bound == std::numeric_limits<int>::min()) bound = low - 1;  // everything dies
    alg.degree_bound_ = bound;
    const int margin = 2 * d_max;
    bool margin_zero = true;
    for (const Word& j : words)
      for (const Word& i : words) {
        if (!same_content(j, i, n, rank)) continue;
        for (int d = low; d <= bound + margin; ++d) {
          auto& comp = builder->component(j, i, d);
          if (comp.columns.empty()) continue;
          if (d <= bound) pieces.emplace_back(j, i, d);
          else if (comp.ideal.rank() != static_cast<int>(comp.columns.size())) margin_zero = false;
        }
      }
    alg.diagnostics_["mode"] = "graded";
    alg.diagnostics_["witness_cap"] = used;
    alg.diagnostics_["degree_bound"] = bound;
    alg.diagnostics_["bound_margin_zero"] = margin_zero;
  } else {
    std::optional<std::map<std::tuple<Word, Word, int>, int>> previous;
    bool stable = false;
    Json history = Json::array();
    for (int c : caps) {
      auto b = std::make_unique<CycloBuilder>(params, kappa, n, c);
      NilMap found_nil;
      std::map<std::pair<int, Word>, int> tried;
      const bool all = find_witnesses(*b, n, found_nil, tried, c);
      bool covered = all;
      if (all)
        for (const Word& i : b->engine()->words()) {
          int s = 0;
          for (int k = 1; k <= n; ++k) s += std::max(0, found_nil.at({k, i}) - 1);
          if (s > c) covered = false;
        }
      if (!covered) {
        history.push_back(Json{{"cap", c}, {"witnesses", all}, {"dim", nullptr}});
        previous.reset();
        continue;
      }
      std::map<std::tuple<Word, Word, int>, int> dims;
      int total = 0;
      for (const Word& j : b->engine()->words())
        for (const Word& i : b->engine()->words()) {
          if (!same_content(j, i, n, rank)) continue;
          auto& comp = b->component(j, i, 0);
          if (comp.columns.empty()) continue;
          for (std::size_t col = 0; col < comp.columns.size(); ++col) {
            const KLRKey& k = comp.columns[col];
            for (int p = 1; p <= n; ++p)
              if (k.dots[p - 1] >= found_nil.at({p, i})) {
                comp.ideal.insert(SparseVectorQ{{static_cast<int>(col), Rational(1)}});
                break;
              }
          }
          const int dim = static_cast<int>(comp.columns.size()) - comp.ideal.rank();
          dims[{j, i, 0}] = dim;
          total += dim;
        }
      history.push_back(Json{{"cap", c}, {"witnesses", true}, {"dim", total}});
      builder = std::move(b);
      nil = found_nil;
      if (previous && *previous == dims) {
        stable = true;
        break;
      }
      previous = dims;
    }
    alg.diagnostics_["mode"] = "dot-truncation";
    alg.diagnostics_["history"] = history;
    if (!stable) throw Error(ErrorCode::CapExceeded, "quotient dimension not stable along the dot schedule");
    for (auto& [key, comp] : builder->comps())
      if (std::get<2>(key) == 0 && !comp.columns.empty() &&
          same_content(std::get<0>(key), std::get<1>(key), n, rank))
        pieces.push_back(key);
  }

  alg.nilpotency_ = nil;
  alg.engine_ = builder->engine();
  Json nil_json = Json::array();
  for (const auto& [key, N] : nil) nil_json.push_back(Json{{"k", key.first}, {"word", word_str(key.second, n)}, {"N", N}});
  alg.diagnostics_["nilpotency"] = nil_json;

  for (const auto& key : pieces) {
    auto& comp = builder->comps().at(key);
    CycloAlgebra::Component out;
    out.index = comp.index;
    out.ideal = comp.ideal;
    for (std::size_t col = 0; col < comp.columns.size(); ++col) {
      if (comp.ideal.is_pivot(static_cast<int>(col))) continue;
      out.basis_of_column.emplace(static_cast<int>(col), alg.dim());
      const KLRKey& k = comp.columns[col];
      alg.basis_.push_back(k);
      alg.degrees_.push_back(alg.engine_->degree(k));
      alg.contents_.push_back(kmcat::content(k.word, n, rank));
    }
    alg.components_.emplace(key, std::move(out));
  }

  const KLRAlgebra& A = *alg.engine_;
  const auto m = static_cast<std::size_t>(alg.dim());
  alg.table_.assign(m, std::vector<SparseVectorQ>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const KLRKey& ka = alg.basis_[a];
      const KLRKey& kb = alg.basis_[b];
      if (ka.word != A.top_word(kb)) continue;
      alg.table_[a][b] = alg.reduce(A.mul(A.basis(ka.perm, ka.dots, ka.word), A.basis(kb.perm, kb.dots, kb.word)));
    }
  alg.unit_ = alg.reduce(A.one());
  return alg;
}

std::vector<BlockDims> cyclo_dims(const CycloAlgebra& algebra) {
  std::vector<BlockDims> out;
  for (const IntVector& beta : algebra.block_contents()) {
    BlockDims bd;
    bd.content = beta;
    for (int b : algebra.block(beta)) {
      ++bd.dim;
      if (algebra.homogeneous()) ++bd.graded[algebra.degree(b)];
    }
    out.push_back(std::move(bd));
  }
  return out;
}

// ---------------------------------------------------------------- simple modules

namespace {

// Distinct rational roots of a monic polynomial (coefficients constant first).
std::vector<Rational> rational_roots(std::vector<Rational> f) {
  std::vector<Rational> roots;
  while (f.size() > 1 && f.front().is_zero()) {
    f.erase(f.begin());
    if (roots.empty() || !roots.front().is_zero()) roots.insert(roots.begin(), Rational(0));
  }
  if (f.size() <= 1) return roots;
  // clear denominators
  mpz_class l = 1;
  for (const Rational& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> z;
  for (const Rational& c : f) z.push_back(mpz_class(c.gmp() * l));
  auto divisors = [](mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    return out;
  };
  auto eval = [&](const Rational& r) {
    Rational acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * r + *it;
    return acc;
  };
  for (const mpz_class& p : divisors(z.front()))
    for (const mpz_class& q : divisors(z.back()))
      for (int sign : {1, -1}) {
        const Rational r(mpq_class(sign * p, q));
        if (eval(r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  return roots;
}

class BlockQuotient {
 public:
  BlockQuotient(const CycloAlgebra& alg, const std::vector<int>& idx) : m_(static_cast<int>(idx.size())) {
    std::map<int, int> local;
    for (int i = 0; i < m_; ++i) local.emplace(idx[static_cast<std::size_t>(i)], i);
    table_.assign(static_cast<std::size_t>(m_), std::vector<SparseVectorQ>(static_cast<std::size_t>(m_)));
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b)
        for (const auto& [c, v] : alg.product(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)])) {
          auto it = local.find(c);
          if (it == local.end()) throw Error(ErrorCode::InternalInconsistency, "block is not closed");
          table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].emplace(it->second, v);
        }
    for (const auto& [c, v] : alg.unit())
      if (auto it = local.find(c); it != local.end()) unit_.emplace(it->second, v);

    // trace form
    std::vector<Rational> tau(static_cast<std::size_t>(m_));
    for (int c = 0; c < m_; ++c)
      for (int b = 0; b < m_; ++b) {
        const auto& p = at(c, b);
        if (auto it = p.find(b); it != p.end()) tau[static_cast<std::size_t>(c)] += it->second;
      }
    MatrixQ gram = MatrixQ::Zero(m_, m_);
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b)
        for (const auto& [c, v] : at(a, b)) gram(a, b) += v * tau[static_cast<std::size_t>(c)];
    const MatrixQ rad = nullspace(gram);
    for (Eigen::Index k = 0; k < rad.cols(); ++k) rad_.insert(column(rad, k));
  }

  [[nodiscard]] int dim() const { return m_; }
  [[nodiscard]] int rad_dim() const { return rad_.rank(); }
  [[nodiscard]] const SparseVectorQ& unit() const { return unit_; }

  [[nodiscard]] SparseVectorQ reduce(SparseVectorQ v) const {
    rad_.reduce(v);
    return v;
  }

  [[nodiscard]] SparseVectorQ mul(const SparseVectorQ& u, const SparseVectorQ& v) const {
    SparseVectorQ out;
    for (const auto& [a, ca] : u)
      for (const auto& [b, cb] : v)
        for (const auto& [c, cc] : at(a, b)) add(out, c, ca * cb * cc);
    return reduce(std::move(out));
  }

  // Basis of Z(B/rad), as reduced representatives.
  [[nodiscard]] std::vector<SparseVectorQ> centre() const {
    std::map<std::pair<int, int>, int> row_of;
    std::vector<std::vector<std::pair<int, Rational>>> entries(static_cast<std::size_t>(m_));
    for (int c = 0; c < m_; ++c)
      for (int a = 0; a < m_; ++a) {
        SparseVectorQ comm = at(c, a);
        for (const auto& [k, v] : at(a, c)) add(comm, k, -v);
        for (const auto& [k, v] : reduce(std::move(comm))) {
          auto [it, _] = row_of.try_emplace({a, k}, static_cast<int>(row_of.size()));
          entries[static_cast<std::size_t>(c)].emplace_back(it->second, v);
        }
      }
    MatrixQ M = MatrixQ::Zero(static_cast<Eigen::Index>(row_of.size()), m_);
    for (int c = 0; c < m_; ++c)
      for (const auto& [r, v] : entries[static_cast<std::size_t>(c)]) M(r, c) += v;
    const MatrixQ sol = nullspace(M);
    SparseEchelon seen;
    std::vector<SparseVectorQ> out;
    for (Eigen::Index k = 0; k < sol.cols(); ++k) {
      SparseVectorQ z = reduce(column(sol, k));
      if (z.empty()) continue;
      SparseVectorQ probe = z;
      if (seen.insert(probe)) out.push_back(std::move(z));
    }
    return out;
  }

 private:
  [[nodiscard]] const SparseVectorQ& at(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  static void add(SparseVectorQ& v, int k, const Rational& c) {
    Rational& slot = v[k];
    slot += c;
    if (slot.is_zero()) v.erase(k);
  }
  static SparseVectorQ column(const MatrixQ& m, Eigen::Index k) {
    SparseVectorQ v;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, k).is_zero()) v.emplace(static_cast<int>(r), m(r, k));
    return v;
  }

  int m_;
  std::vector<std::vector<SparseVectorQ>> table_;
  SparseVectorQ unit_;
  SparseEchelon rad_;
};

SparseVectorQ axpy(SparseVectorQ v, const Rational& c, const SparseVectorQ& w) {
  for (const auto& [k, x] : w) {
    Rational& slot = v[k];
    slot += c * x;
    if (slot.is_zero()) v.erase(k);
  }
  return v;
}

SparseVectorQ scale(const Rational& c, SparseVectorQ v) {
  if (c.is_zero()) return {};
  for (auto& [k, x] : v) x *= c;
  return v;
}

// Minimal polynomial of a inside the corner algebra with unit e, constant first.
std::vector<Rational> min_poly(const BlockQuotient& q, const SparseVectorQ& a, const SparseVectorQ& e) {
  std::vector<SparseVectorQ> powers{e};
  while (true) {
    SparseVectorQ next = q.mul(powers.back(), a);
    // solve next = sum c_j powers[j]
    std::set<int> support;
    for (const auto& p : powers)
      for (const auto& [k, _] : p) support.insert(k);
    for (const auto& [k, _] : next) support.insert(k);
    std::map<int, int> row;
    for (int k : support) row.emplace(k, static_cast<int>(row.size()));
    MatrixQ A = MatrixQ::Zero(static_cast<Eigen::Index>(row.size()), static_cast<Eigen::Index>(powers.size()));
    VectorQ rhs = VectorQ::Zero(static_cast<Eigen::Index>(row.size()));
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (const auto& [k, v] : powers[j]) A(row.at(k), static_cast<Eigen::Index>(j)) = v;
    for (const auto& [k, v] : next) rhs(row.at(k)) = v;
    if (auto x = solve(A, rhs)) {
      std::vector<Rational> f;
      for (Eigen::Index j = 0; j < x->size(); ++j) f.push_back(-(*x)(j));
      f.push_back(Rational(1));
      return f;
    }
    if (static_cast<int>(powers.size()) > q.dim() + 1)
      throw Error(ErrorCode::InternalInconsistency, "minimal polynomial search diverged");
    powers.push_back(std::move(next));
  }
}

}  // namespace

int count_simples(const CycloAlgebra& algebra, const IntVector& beta) {
  const auto idx = algebra.block(beta);
  if (idx.empty()) return 0;
  const BlockQuotient q(algebra, idx);
  if (q.rad_dim() == q.dim()) throw Error(ErrorCode::InternalInconsistency, "block is nilpotent");
  const auto centre = q.centre();
  const int dim_z = static_cast<int>(centre.size());

  std::vector<SparseVectorQ> idem{q.reduce(q.unit())};
  bool split = true;
  while (split) {
    split = false;
    for (std::size_t ei = 0; ei < idem.size() && !split; ++ei) {
      const SparseVectorQ e = idem[ei];
      for (const SparseVectorQ& z : centre) {
        const SparseVectorQ ze = q.mul(z, e);
        const auto f = min_poly(q, ze, e);
        if (f.size() <= 2) continue;
        const auto roots = rational_roots(f);
        if (roots.size() + 1 < f.size())
          throw Error(ErrorCode::NonSplit, "central element with an irreducible factor over Q");
        std::vector<SparseVectorQ> parts;
        for (const Rational& r : roots) {
          SparseVectorQ p = e;
          for (const Rational& s : roots) {
            if (s == r) continue;
            p = scale(Rational(1) / (r - s), q.mul(p, axpy(ze, -s, e)));
          }
          parts.push_back(std::move(p));
        }
        idem.erase(idem.begin() + static_cast<std::ptrdiff_t>(ei));
        idem.insert(idem.end(), parts.begin(), parts.end());
        split = true;
        break;
      }
    }
  }
  if (static_cast<int>(idem.size()) < dim_z)
    throw Error(ErrorCode::NonSplit, "centre larger than the rational central idempotents");
  if (static_cast<int>(idem.size()) > dim_z) throw Error(ErrorCode::InternalInconsistency, "too many central idempotents");
  return dim_z;
}

// ---------------------------------------------------------------- invariants

Report cyclo_invariants(const CycloAlgebra& alg, std::uint64_t seed) {
  Report rep("cyclo_invariants");
  rep.input() = Json{{"kappa", alg.kappa()}, {"n", alg.n()}, {"seed", seed}};
  const int m = alg.dim();
  SplitMix64 rng(seed);
  auto basis_vec = [](int b) { return SparseVectorQ{{b, Rational(1)}}; };

  {
    const long long triples = static_cast<long long>(m) * m * m;
    const bool full = triples <= 60000;
    bool ok = true;
    std::string bad;
    auto check = [&](int a, int b, int c) {
      const auto lhs = alg.multiply(alg.product(a, b), basis_vec(c));
      const auto rhs = alg.multiply(basis_vec(a), alg.product(b, c));
      if (lhs != rhs && ok) {
        ok = false;
        bad = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
      }
    };
    if (m > 0) {
      if (full) {
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) check(a, b, c);
      } else {
        for (int t = 0; t < 20000; ++t)
          check(static_cast<int>(rng.uniform(0, m - 1)), static_cast<int>(rng.uniform(0, m - 1)),
                static_cast<int>(rng.uniform(0, m - 1)));
      }
    }
    rep.expect("associativity", ok, full ? "all triples" : "20000 random triples" + (bad.empty() ? "" : "; " + bad));
  }

  {
    bool ok = true;
    for (int b = 0; b < m && ok; ++b)
      ok = alg.multiply(alg.unit(), basis_vec(b)) == basis_vec(b) && alg.multiply(basis_vec(b), alg.unit()) == basis_vec(b);
    rep.expect("unit", ok, "sum of e(i) images");
  }

  {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = 0; b < m && ok; ++b) {
        const auto& p = alg.product(a, b);
        if (alg.content(a) != alg.content(b)) ok = p.empty();
        else
          for (const auto& [c, v] : p)
            if (alg.content(c) != alg.content(a)) ok = false;
      }
    rep.expect("block_orthogonality", ok);
  }

  {
    KLRAlgebra A(alg.params(), alg.n());
    bool ok = true;
    std::string detail;
    for (const auto& [key, N] : alg.nilpotency()) {
      const auto& [k, word] = key;
      Mono top, below;
      top[k - 1] = static_cast<std::uint8_t>(N);
      const bool vanishes = alg.reduce(A.basis(0, top, word)).empty();
      bool minimal = true;
      if (N > 0) {
        below[k - 1] = static_cast<std::uint8_t>(N - 1);
        minimal = !alg.reduce(A.basis(0, below, word)).empty();
      }
      if (!(vanishes && minimal)) {
        ok = false;
        detail = "x_" + std::to_string(k) + " on " + word_str(word, alg.n());
      }
    }
    const bool complete = static_cast<int>(alg.nilpotency().size()) ==
                          alg.n() * static_cast<int>(A.words().size());
    rep.expect("dot_nilpotency", ok && complete, detail);
  }

  if (alg.homogeneous() && alg.n() > 0)
    rep.expect("degree_bound", alg.diagnostics().value("bound_margin_zero", false),
               "pieces beyond the bound vanish");

  {
    // g * b computed in H_n and reduced agrees with the table
    KLRAlgebra A(alg.params(), alg.n());
    bool ok = true;
    std::string detail;
    try {
      for (int b = 0; b < m && ok; ++b) {
        const KLRKey& kb = alg.basis()[static_cast<std::size_t>(b)];
        const KLRElement eb = A.basis(kb.perm, kb.dots, kb.word);
        std::vector<KLRElement> gens;
        for (int k = 1; k <= alg.n(); ++k) {
          gens.push_back(A.x(k));
          if (k < alg.n()) gens.push_back(A.psi(k));
        }
        for (const KLRElement& g : gens) {
          const SparseVectorQ rg = alg.reduce(g);
          if (alg.reduce(A.mul(g, eb)) != alg.multiply(rg, basis_vec(b)) ||
              alg.reduce(A.mul(eb, g)) != alg.multiply(basis_vec(b), rg)) {
            ok = false;
            detail = "basis element " + std::to_string(b);
            break;
          }
        }
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    rep.expect("stabilization_soundness", ok, detail);
  }

  if (alg.params().rank() == 1) {
    const mpz_class expect = factorial(alg.n()) * factorial(alg.n()) * binomial(alg.kappa()[0], alg.n());
    rep.expect("one_vertex_dimension", mpz_class(m) == expect,
               "dim " + std::to_string(m) + ", expected " + expect.get_str());
  }
  return rep;
}

Json cyclo_records(const CycloAlgebra& alg, const std::string& cartan_label) {
  Json out = Json::array();
  for (const BlockDims& bd : cyclo_dims(alg)) {
    Json rec;
    rec["cartan"] = cartan_label;
    rec["kappa"] = alg.kappa();
    rec["n"] = alg.n();
    rec["content"] = bd.content;
    rec["dim"] = bd.dim;
    if (alg.homogeneous()) {
      Json g = Json::array();
      for (const auto& [d, c] : bd.graded) g.push_back(Json::array({d, c}));
      rec["graded_dim"] = g;
    } else {
      rec["graded_dim"] = nullptr;
    }
    try {
      rec["simples"] = count_simples(alg, bd.content);
      rec["status"] = "ok";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonSplit) throw;
      rec["simples"] = nullptr;
      rec["status"] = "inconclusive";
      rec["reason"] = e.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace kmcat
