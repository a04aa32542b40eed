#include "kmcat/nilhecke.hpp"

#include "kmcat/error.hpp"
#include "kmcat/linalg.hpp"

#include <mutex>
#include <sstream>

namespace kmcat {

NHElement NHElement::one(int n) { return poly(Poly(n, Rational(1))); }

NHElement NHElement::poly(const Poly& f) {
  NHElement e(f.nvars());
  e.add(Perm::identity(f.nvars()), f);
  return e;
}

NHElement NHElement::T(int n, int i) { return T(Perm::simple(n, i)); }

NHElement NHElement::T(const Perm& w) {
  NHElement e(w.size());
  e.add(w, Poly(w.size(), Rational(1)));
  return e;
}

Poly NHElement::coeff(const Perm& w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? Poly(n_) : it->second;
}

void NHElement::add(const Perm& w, const Poly& f) {
  if (f.is_zero()) return;
  if (w.size() != n_ || f.nvars() != n_) throw Error(ErrorCode::SizeMismatch, "nil Hecke term of wrong size");
  auto [it, inserted] = coords_.try_emplace(w, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

NHElement& NHElement::operator+=(const NHElement& o) {
  if (o.n_ != n_) throw Error(ErrorCode::SizeMismatch, "nil Hecke elements of different n");
  for (const auto& [w, f] : o.coords_) add(w, f);
  return *this;
}

NHElement& NHElement::operator-=(const NHElement& o) {
  if (o.n_ != n_) throw Error(ErrorCode::SizeMismatch, "nil Hecke elements of different n");
  for (const auto& [w, f] : o.coords_) add(w, -f);
  return *this;
}

NHElement operator*(Rational c, NHElement a) {
  if (c.is_zero()) return NHElement(a.n_);
  for (auto& [w, f] : a.coords_) f *= c;
  return a;
}

std::string NHElement::str() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, f] : coords_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str() << ")";
    if (!w.is_identity()) os << "*T" << w.str();
  }
  return os.str();
}

namespace {

// T_v g = sum_u h_u T_u.
std::map<Perm, Poly> push_through(const Perm& v, const Poly& g) {
  std::map<Perm, Poly> out;
  if (v.is_identity()) {
    out.emplace(v, g);
    return out;
  }
  const int n = v.size();
  const int r = v.reduced_word().front();
  const Perm rest = Perm::simple(n, r) * v;
  auto add = [&](const Perm& w, const Poly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = out.try_emplace(w, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [u, h] : push_through(rest, g)) {
    // T_r h T_u = s_r(h) T_r T_u + d_r(h) T_u
    if (!u.has_left_descent(r)) add(Perm::simple(n, r) * u, act_simple(r, h));
    add(u, demazure(r, h));
  }
  return out;
}

}  // namespace

NHElement nh_mul(const NHElement& a, const NHElement& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::SizeMismatch, "nil Hecke elements of different n");
  NHElement out(a.n());
  for (const auto& [v, f] : a.coords())
    for (const auto& [w, g] : b.coords())
      for (const auto& [u, h] : push_through(v, g)) {
        const Perm uw = u * w;
        if (uw.length() == u.length() + w.length()) out.add(uw, f * h);
      }
  return out;
}

NHElement operator*(const NHElement& a, const NHElement& b) { return nh_mul(a, b); }

Poly nh_act(const NHElement& a, const Poly& f) {
  if (a.n() != f.nvars()) throw Error(ErrorCode::SizeMismatch, "element and polynomial of different n");
  Poly out(a.n());
  for (const auto& [w, c] : a.coords()) out += c * demazure_word(w, f);
  return out;
}

NHElement pi(int n) {
  const Perm w0 = Perm::longest(n);
  NHElement e(n);
  Poly c = staircase(n);
  if (w0.length() % 2) c = -c;
  e.add(w0, c);
  return e;
}

PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b.front().size();
  if (!a.empty() && a.front().size() != inner) throw Error(ErrorCode::SizeMismatch, "matrix shapes differ");
  const int nvars = inner ? b.front().front().nvars() : 0;
  PolyMatrix c(rows, std::vector<Poly>(cols, Poly(nvars)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

PolyMatrix nh_to_matrix(const NHElement& a) {
  const int n = a.n();
  const auto perms = all_perms(n);
  std::map<Perm, std::size_t> row;
  for (std::size_t i = 0; i < perms.size(); ++i) row.emplace(perms[i], i);
  PolyMatrix m(perms.size(), std::vector<Poly>(perms.size(), Poly(n)));
  for (std::size_t u = 0; u < perms.size(); ++u) {
    const Poly image = nh_act(a, schubert_b(perms[u], n));
    for (const auto& [w, c] : sym_decompose(image, n)) {
      if (!is_symmetric(c))
        throw Error(ErrorCode::InternalInconsistency, "non-symmetric matrix entry for " + w.str());
      m[row.at(w)][u] = c;
    }
  }
  return m;
}

std::vector<Poly> dual_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Poly>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const auto perms = all_perms(n);
  const Perm w0 = Perm::longest(n);
  std::vector<Poly> b;
  for (const Perm& u : perms) b.push_back(schubert_b(u, n));

  std::vector<Poly> out;
  for (std::size_t wi = 0; wi < perms.size(); ++wi) {
    const Perm& w = perms[wi];
    const int d = w.length();
    std::vector<Mono> unknowns;
    const Poly all_monomials = complete_symmetric(n, d);
    for (const auto& [m, c] : all_monomials.terms()) unknowns.push_back(m);
    // images[k][u] = d_{w0}(b_u X^{m_k})
    std::vector<std::vector<Poly>> images(unknowns.size());
    std::map<std::pair<std::size_t, decltype(Mono::e)>, int> row_of;
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      for (std::size_t u = 0; u < perms.size(); ++u) {
        images[k].push_back(demazure_word(w0, b[u] * Poly::monomial(n, unknowns[k])));
        for (const auto& [m, c] : images[k].back().terms()) row_of.try_emplace({u, m.e}, 0);
      }
    for (std::size_t u = 0; u < perms.size(); ++u) row_of.try_emplace({u, Mono{}.e}, 0);
    int r = 0;
    for (auto& [key, idx] : row_of) idx = r++;
    MatrixQ a = MatrixQ::Zero(r, static_cast<Eigen::Index>(unknowns.size()));
    VectorQ rhs = VectorQ::Zero(r);
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      for (std::size_t u = 0; u < perms.size(); ++u)
        for (const auto& [m, c] : images[k][u].terms()) a(row_of.at({u, m.e}), static_cast<Eigen::Index>(k)) = c;
    rhs(row_of.at({wi, Mono{}.e})) = Rational(1);
    const auto x = solve(a, rhs);
    if (!x) throw Error(ErrorCode::InternalInconsistency, "no dual basis element for " + w.str());
    Poly dual(n);
    for (std::size_t k = 0; k < unknowns.size(); ++k) dual.add_term(unknowns[k], (*x)(static_cast<Eigen::Index>(k)));
    out.push_back(std::move(dual));
  }
  cache.emplace(n, out);
  return out;
}

namespace {

// f T_{w_n} g
NHElement sandwich(const Poly& f, const Poly& g) {
  const int n = f.nvars();
  return NHElement::poly(f) * NHElement::T(Perm::longest(n)) * NHElement::poly(g);
}

}  // namespace

std::vector<NHElement> decompose_identity(int n) {
  const auto perms = all_perms(n);
  const auto dual = dual_basis(n);
  std::vector<NHElement> out;
  for (std::size_t w = 0; w < perms.size(); ++w) out.push_back(sandwich(schubert_b(perms[w], n), dual[w]));
  return out;
}

std::vector<std::pair<NHElement, NHElement>> idempotent_conjugators(int n) {
  const auto perms = all_perms(n);
  const auto dual = dual_basis(n);
  const Poly b_id = schubert_b(perms.front(), n);
  std::vector<std::pair<NHElement, NHElement>> out;
  for (std::size_t w = 0; w < perms.size(); ++w)
    out.emplace_back(sandwich(schubert_b(perms[w], n), dual.front()), sandwich(b_id, dual[w]));
  return out;
}

bool truncation_identity_check(int n, const std::vector<Rational>& f) {
  if (n < 1 || static_cast<int>(f.size()) != n + 1 || f.back() != Rational(1))
    throw Error(ErrorCode::InvalidArgument, "expected a monic polynomial of degree n");
  const int m = n + 1;
  const Perm w0 = Perm::longest(m);
  Mono tail;
  for (int i = 2; i <= n; ++i) tail[i - 1] = static_cast<std::uint8_t>(n + 1 - i);
  const Poly x_tail = Poly::monomial(m, tail);

  NHElement lhs = pi(m) * NHElement::poly(univariate(m, 1, f) * x_tail) * NHElement::T(w0);
  if (w0.length() % 2) lhs = Rational(-1) * lhs;
  if (!(lhs == pi(m))) return false;

  for (int k = 0; k < n; ++k) {
    Mono x1;
    x1[0] = static_cast<std::uint8_t>(k);
    const NHElement t = NHElement::T(w0) * NHElement::poly(Poly::monomial(m, x1) * x_tail) * NHElement::T(w0);
    if (!t.is_zero()) return false;
  }
  return true;
}

}  // namespace kmcat
