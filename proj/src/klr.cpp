#include "kmcat/klr.hpp"

#include "kmcat/error.hpp"

#include <algorithm>
#include <sstream>

namespace kmcat {

// ---------------------------------------------------------------- parameters

KLRParams::KLRParams(CartanDatum datum, const std::map<std::pair<int, int>, Rational>& t,
                     const std::vector<SEntry>& s)
    : datum_(std::move(datum)) {
  const int r = datum_.rank();
  auto in_range = [r](int i) { return i >= 0 && i < r; };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) t_[{i, j}] = Rational(1);
  for (const auto& [ij, value] : t) {
    const auto [i, j] = ij;
    if (!in_range(i) || !in_range(j)) throw Error(ErrorCode::ParamMismatch, "t index out of range");
    if (value.is_zero()) throw Error(ErrorCode::ParamMismatch, "t_ij must be nonzero");
    if (i == j && value != Rational(1)) throw Error(ErrorCode::ParamMismatch, "t_ii must be 1");
    t_[{i, j}] = value;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && datum_.d_ij(i, j) == 0 && t_.at({i, j}) != t_.at({j, i}))
        throw Error(ErrorCode::ParamMismatch, "t_ij must equal t_ji when d_ij = 0 (i=" +
                                                  std::to_string(i) + ", j=" + std::to_string(j) + ")");

  std::map<std::array<int, 4>, Rational> table;
  auto put = [&](int i, int j, int p, int q, const Rational& v) {
    auto [it, inserted] = table.try_emplace({i, j, p, q}, v);
    if (!inserted && it->second != v)
      throw Error(ErrorCode::ParamMismatch, "conflicting values for s_ij^pq and s_ji^qp");
  };
  for (const auto& e : s) {
    if (!in_range(e.i) || !in_range(e.j) || e.i == e.j)
      throw Error(ErrorCode::ParamMismatch, "s index out of range");
    if (e.p <= 0 || e.p >= datum_.d_ij(e.i, e.j) || e.q <= 0 || e.q >= datum_.d_ij(e.j, e.i))
      throw Error(ErrorCode::ParamMismatch, "s_ij^pq needs 0 < p < d_ij and 0 < q < d_ji");
    put(e.i, e.j, e.p, e.q, e.value);
    put(e.j, e.i, e.q, e.p, e.value);
  }
  for (const auto& [k, v] : table) {
    if (v.is_zero()) continue;
    s_.push_back(SEntry{k[0], k[1], k[2], k[3], v});
    const int dij = datum_.d_ij(k[0], k[1]), dji = datum_.d_ij(k[1], k[0]);
    if (k[2] * dji + k[3] * dij != dij * dji) homogeneous_ = false;
  }
}

const Rational& KLRParams::t(int i, int j) const { return t_.at({i, j}); }

Rational KLRParams::s(int i, int j, int p, int q) const {
  for (const auto& e : s_)
    if (e.i == i && e.j == j && e.p == p && e.q == q) return e.value;
  return Rational(0);
}

std::vector<KLRParams::QTerm> KLRParams::Q(int i, int j) const {
  std::vector<QTerm> out;
  if (i == j) return out;
  const int dij = datum_.d_ij(i, j), dji = datum_.d_ij(j, i);
  if (dij == 0) {
    out.push_back({t(i, j), 0, 0});
    return out;
  }
  out.push_back({t(i, j), dij, 0});
  out.push_back({t(j, i), 0, dji});
  for (const auto& e : s_)
    if (e.i == i && e.j == j) out.push_back({e.value, e.p, e.q});
  return out;
}

bool operator==(const KLRParams& a, const KLRParams& b) {
  if (!(a.datum_ == b.datum_) || a.t_ != b.t_ || a.s_.size() != b.s_.size()) return false;
  for (std::size_t k = 0; k < a.s_.size(); ++k) {
    const auto &x = a.s_[k], &y = b.s_[k];
    if (x.i != y.i || x.j != y.j || x.p != y.p || x.q != y.q || x.value != y.value) return false;
  }
  return true;
}

// ---------------------------------------------------------------- elements

std::string word_str(const Word& w, int n) {
  std::string s;
  for (int p = 0; p < n; ++p) {
    if (p) s += ",";
    s += std::to_string(w[static_cast<std::size_t>(p)] + 1);
  }
  return s;
}

IntVector content(const Word& w, int n, int rank) {
  IntVector c(static_cast<std::size_t>(rank), 0);
  for (int p = 0; p < n; ++p) ++c[static_cast<std::size_t>(w[static_cast<std::size_t>(p)])];
  return c;
}

void KLRElement::add(const KLRKey& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void KLRElement::add(const KLRElement& o, const Rational& c) {
  if (o.n_ != n_) throw Error(ErrorCode::SizeMismatch, "quiver Hecke elements of different n");
  if (c.is_zero()) return;
  for (const auto& [k, v] : o.terms_) add(k, v * c);
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
  add(o, Rational(1));
  return *this;
}

KLRElement& KLRElement::operator-=(const KLRElement& o) {
  add(o, Rational(-1));
  return *this;
}

KLRElement operator*(const Rational& c, const KLRElement& a) {
  KLRElement out(a.n_);
  out.add(a, c);
  return out;
}

// ---------------------------------------------------------------- engine

namespace {

std::vector<Word> all_words(int n, int rank) {
  std::vector<Word> out;
  Word w{};
  while (true) {
    out.push_back(w);
    int p = n - 1;
    while (p >= 0 && w[static_cast<std::size_t>(p)] == rank - 1) w[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
    ++w[static_cast<std::size_t>(p)];
  }
  return out;
}

void swap_letters(Word& u, int k) {
  std::swap(u[static_cast<std::size_t>(k - 1)], u[static_cast<std::size_t>(k)]);
}

}  // namespace

KLRAlgebra::KLRAlgebra(KLRParams params, int n)
    : params_(std::move(params)), n_(n), group_(std::max(n, 1)) {
  if (n < 0 || n > kMaxVars) throw Error(ErrorCode::InvalidArgument, "n out of range");
  words_ = all_words(n, params_.rank());
}

KLRElement KLRAlgebra::basis(int perm, const Mono& dots, const Word& word) const {
  KLRElement e(n_);
  e.add(KLRKey{perm, dots, word}, Rational(1));
  return e;
}

KLRElement KLRAlgebra::e(const Word& word) const { return basis(0, Mono{}, word); }

KLRElement KLRAlgebra::one() const {
  KLRElement out(n_);
  for (const Word& w : words_) out += e(w);
  return out;
}

KLRElement KLRAlgebra::x(int k, const Word& word) const {
  Mono m;
  m[k - 1] = 1;
  return basis(0, m, word);
}

KLRElement KLRAlgebra::psi(int k, const Word& word) const {
  return basis(group_.left_mul(k, group_.identity()), Mono{}, word);
}

KLRElement KLRAlgebra::x(int k) const {
  KLRElement out(n_);
  for (const Word& w : words_) out += x(k, w);
  return out;
}

KLRElement KLRAlgebra::psi(int k) const {
  KLRElement out(n_);
  for (const Word& w : words_) out += psi(k, w);
  return out;
}

Word KLRAlgebra::top_word(const KLRKey& key) const {
  const Perm& w = group_.perm(key.perm);
  Word top = key.word;
  for (int p = 1; p <= n_; ++p) top[static_cast<std::size_t>(w(p) - 1)] = key.word[static_cast<std::size_t>(p - 1)];
  return top;
}

int KLRAlgebra::degree(const KLRKey& key) const {
  const CartanDatum& c = params_.datum();
  int deg = 0;
  for (int k = 0; k < n_; ++k) deg += 2 * c.d(key.word[static_cast<std::size_t>(k)]) * key.dots[k];
  Word u = key.word;
  const auto& letters = group_.word(key.perm);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int a = u[static_cast<std::size_t>(*it - 1)], b = u[static_cast<std::size_t>(*it)];
    deg -= c.d(a) * c.a(a, b);
    swap_letters(u, *it);
  }
  return deg;
}

KLRElement KLRAlgebra::left_e(const Word& word, const KLRElement& a) const {
  KLRElement out(n_);
  for (const auto& [k, c] : a.terms())
    if (top_word(k) == word) out.add(k, c);
  return out;
}

KLRElement KLRAlgebra::left_x(int k, const KLRElement& a) const {
  KLRElement out(n_);
  for (const auto& [key, c] : a.terms()) out.add(left_x_basis(k, key), c);
  return out;
}

KLRElement KLRAlgebra::left_psi(int k, const KLRElement& a) const {
  KLRElement out(n_);
  for (const auto& [key, c] : a.terms()) out.add(left_psi_basis(k, key), c);
  return out;
}

KLRElement KLRAlgebra::left_word(const std::vector<int>& letters, const KLRElement& a) const {
  KLRElement cur = a;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) cur = *it > 0 ? left_psi(*it, cur) : left_x(-*it, cur);
  return cur;
}

const KLRElement& KLRAlgebra::left_x_basis(int k, const KLRKey& key) const {
  if (auto it = x_cache_.find({k, key}); it != x_cache_.end()) return it->second;
  KLRElement out(n_);
  if (key.perm == group_.identity()) {
    KLRKey bumped = key;
    ++bumped.dots[k - 1];
    out.add(bumped, Rational(1));
  } else {
    // psi_w = psi_r psi_rest with r the first letter of the canonical word
    const int r = group_.word(key.perm).front();
    const KLRKey rest{group_.left_mul(r, key.perm), key.dots, key.word};
    const Word u = top_word(rest);
    const bool same = u[static_cast<std::size_t>(r - 1)] == u[static_cast<std::size_t>(r)];
    if (k != r && k != r + 1) {
      out = left_psi(r, left_x_basis(k, rest));
    } else if (k == r) {
      // x_r psi_r = psi_r x_{r+1} - delta
      out = left_psi(r, left_x_basis(r + 1, rest));
      if (same) out.add(rest, Rational(-1));
    } else {
      // x_{r+1} psi_r = psi_r x_r + delta
      out = left_psi(r, left_x_basis(r, rest));
      if (same) out.add(rest, Rational(1));
    }
  }
  return x_cache_.emplace(std::make_pair(k, key), std::move(out)).first->second;
}

const KLRElement& KLRAlgebra::left_psi_basis(int k, const KLRKey& key) const {
  if (auto it = psi_cache_.find({k, key}); it != psi_cache_.end()) return it->second;
  KLRElement out = group_.perm(key.perm).has_left_descent(k) ? psi_down(k, key) : psi_up(k, key);
  return psi_cache_.emplace(std::make_pair(k, key), std::move(out)).first->second;
}

KLRElement KLRAlgebra::evaluate_word(const std::vector<int>& letters, const Mono& dots, const Word& word) const {
  return left_word(letters, basis(group_.identity(), dots, word));
}

KLRElement KLRAlgebra::braid_correction(int j, const Word& u) const {
  KLRElement out(n_);
  const int a = u[static_cast<std::size_t>(j - 1)], b = u[static_cast<std::size_t>(j)];
  if (a != u[static_cast<std::size_t>(j + 1)] || a == b) return out;
  // (Q_ab(x_j, x_{j+1}) - Q_ab(x_{j+2}, x_{j+1})) / (x_j - x_{j+2})
  const int d = params_.datum().d_ij(a, b);
  for (int r = 0; r < d; ++r) {
    Mono m;
    m[j + 1] = static_cast<std::uint8_t>(r);
    m[j - 1] = static_cast<std::uint8_t>(d - 1 - r);
    out.add(KLRKey{group_.identity(), m, u}, params_.t(a, b));
  }
  for (const auto& e : params_.s_entries()) {
    if (e.i != a || e.j != b) continue;
    for (int r = 0; r < e.p; ++r) {
      Mono m;
      m[j + 1] = static_cast<std::uint8_t>(r);
      m[j] = static_cast<std::uint8_t>(e.q);
      m[j - 1] = static_cast<std::uint8_t>(e.p - 1 - r);
      out.add(KLRKey{group_.identity(), m, u}, e.value);
    }
  }
  return out;
}

KLRElement KLRAlgebra::path_corrections(std::vector<int> from, const std::vector<int>& to, const Mono& dots,
                                        const Word& word) const {
  KLRElement corrections(n_);
  const std::vector<BraidMove> path = braid_path(from, to);
  for (const BraidMove& move : path) {
    if (move.braid) {
      const auto p = static_cast<std::size_t>(move.pos);
      const int a = from[p], b = from[p + 1];
      const int j = std::min(a, b);
      // psi_{j+1} psi_j psi_{j+1} = psi_j psi_{j+1} psi_j + C
      const Rational sign(a == j + 1 ? 1 : -1);
      const std::vector<int> prefix(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(p));
      const std::vector<int> suffix(from.begin() + static_cast<std::ptrdiff_t>(p + 3), from.end());
      Word u = word;
      for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) swap_letters(u, *it);
      const KLRElement c = braid_correction(j, u);
      if (!c.is_zero()) {
        const KLRElement middle = mul(c, evaluate_word(suffix, dots, word));
        corrections.add(left_word(prefix, middle), sign);
      }
    }
    apply_move(from, move);
  }
  return corrections;
}

KLRElement KLRAlgebra::psi_up(int k, const KLRKey& key) const {
  const int target = group_.left_mul(k, key.perm);
  std::vector<int> from{k};
  const auto& rest = group_.word(key.perm);
  from.insert(from.end(), rest.begin(), rest.end());
  KLRElement out = path_corrections(from, group_.word(target), key.dots, key.word);
  out.add(KLRKey{target, key.dots, key.word}, Rational(1));
  return out;
}

KLRElement KLRAlgebra::psi_down(int k, const KLRKey& key) const {
  const int shorter = group_.left_mul(k, key.perm);
  std::vector<int> to{k};
  const auto& rest = group_.word(shorter);
  to.insert(to.end(), rest.begin(), rest.end());
  // psi_w x^a e(i) = psi_k psi_v x^a e(i) + corrections
  const KLRElement corrections = path_corrections(group_.word(key.perm), to, key.dots, key.word);
  const KLRKey v{shorter, key.dots, key.word};
  const Word u = top_word(v);
  KLRElement q(n_);
  for (const auto& term : params_.Q(u[static_cast<std::size_t>(k - 1)], u[static_cast<std::size_t>(k)])) {
    Mono m;
    m[k - 1] = static_cast<std::uint8_t>(term.u);
    m[k] = static_cast<std::uint8_t>(term.v);
    q.add(KLRKey{group_.identity(), m, u}, term.c);
  }
  KLRElement out = mul(q, basis(v.perm, v.dots, v.word));
  out += left_psi(k, corrections);
  return out;
}

KLRElement KLRAlgebra::mul(const KLRElement& a, const KLRElement& b) const {
  if (a.n() != n_ || b.n() != n_) throw Error(ErrorCode::SizeMismatch, "element does not belong to H_n");
  KLRElement out(n_);
  for (const auto& [key, c] : a.terms()) {
    KLRElement t = left_e(key.word, b);
    for (int k = 1; k <= n_ && !t.is_zero(); ++k)
      for (int r = 0; r < key.dots[k - 1]; ++r) t = left_x(k, t);
    const auto& letters = group_.word(key.perm);
    for (auto it = letters.rbegin(); it != letters.rend() && !t.is_zero(); ++it) t = left_psi(*it, t);
    out.add(t, c);
  }
  return out;
}

// ---------------------------------------------------------------- polynomial representation

PolyVector KLRAlgebra::rep_x(int k, const PolyVector& v) const {
  PolyVector out;
  const Poly xk = Poly::variable(n_, k);
  for (const auto& [u, f] : v) {
    Poly g = xk * f;
    if (!g.is_zero()) out.emplace(u, std::move(g));
  }
  return out;
}

PolyVector KLRAlgebra::rep_psi(int k, const PolyVector& v) const {
  PolyVector out;
  auto add = [&](const Word& u, const Poly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = out.try_emplace(u, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [u, f] : v) {
    const int a = u[static_cast<std::size_t>(k - 1)], b = u[static_cast<std::size_t>(k)];
    Word su = u;
    swap_letters(su, k);
    if (a == b) {
      add(u, demazure(k, f));
    } else if (a < b) {
      add(su, act_simple(k, f));
    } else {
      Poly q(n_);
      for (const auto& term : params_.Q(a, b)) {
        Mono m;
        m[k] = static_cast<std::uint8_t>(term.u);
        m[k - 1] = static_cast<std::uint8_t>(term.v);
        q.add_term(m, term.c);
      }
      add(su, q * act_simple(k, f));
    }
  }
  return out;
}

PolyVector KLRAlgebra::rep(const KLRElement& a, const PolyVector& v) const {
  PolyVector out;
  for (const auto& [key, c] : a.terms()) {
    auto it = v.find(key.word);
    if (it == v.end()) continue;
    PolyVector cur{{key.word, Poly::monomial(n_, key.dots) * it->second}};
    const auto& letters = group_.word(key.perm);
    for (auto l = letters.rbegin(); l != letters.rend(); ++l) cur = rep_psi(*l, cur);
    for (const auto& [u, f] : cur) {
      auto [slot, inserted] = out.try_emplace(u, f * c);
      if (!inserted) {
        slot->second += f * c;
        if (slot->second.is_zero()) out.erase(slot);
      }
    }
  }
  return out;
}

std::string KLRAlgebra::str(const KLRElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    const auto& w = group_.word(k.perm);
    if (!w.empty()) {
      os << "*psi";
      for (int r : w) os << r;
    }
    for (int i = 0; i < n_; ++i)
      if (k.dots[i]) os << "*x" << (i + 1) << (k.dots[i] > 1 ? "^" + std::to_string(k.dots[i]) : "");
    os << "*e(" << word_str(k.word, n_) << ")";
  }
  return os.str();
}

KLRElement klr_mul(const KLRAlgebra& algebra, const KLRElement& a, const KLRElement& b) {
  return algebra.mul(a, b);
}

PolyVector klr_poly_rep(const KLRAlgebra& algebra, const KLRElement& a, const PolyVector& v) {
  for (const auto& [u, f] : v)
    if (f.nvars() != algebra.n()) throw Error(ErrorCode::SizeMismatch, "polynomial ring differs from n");
  return algebra.rep(a, v);
}

std::optional<int> klr_degree(const KLRAlgebra& algebra, const KLRElement& a) {
  if (!algebra.params().homogeneous())
    throw Error(ErrorCode::ParamsNotHomogeneous, "parameters violate the homogeneity condition");
  std::optional<int> deg;
  for (const auto& [k, c] : a.terms()) {
    const int d = algebra.degree(k);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

}  // namespace kmcat
