#include "kmcat/poly.hpp"

#include "kmcat/error.hpp"
#include "kmcat/linalg.hpp"

#include <functional>
#include <mutex>
#include <sstream>

namespace kmcat {

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw Error(ErrorCode::InvalidArgument, "polynomial variable count out of range");
}

Poly::Poly(int nvars, const Rational& constant) : Poly(nvars) {
  if (!constant.is_zero()) terms_.emplace(Mono{}, constant);
}

Poly Poly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Mono m;
  m[i - 1] = 1;
  return monomial(nvars, m);
}

Poly Poly::monomial(int nvars, const Mono& m, const Rational& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::homogeneous_part(int d) const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) p.terms_.emplace_hint(p.terms_.end(), m, c);
  return p;
}

void Poly::add_term(const Mono& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::SizeMismatch, "polynomials in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::SizeMismatch, "polynomials in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::SizeMismatch, "polynomials in different rings");
  Poly p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma + mb, ca * cb);
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, v] : p.terms_) v = -v;
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(nvars_, Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t *= kmcat::pow(point[static_cast<std::size_t>(i)], m[i]);
    sum += t;
  }
  return sum;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
  const int target = values.empty() ? nvars_ : values.front().nvars();
  Poly sum(target);
  for (const auto& [m, c] : terms_) {
    Poly t(target, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t = t * values[static_cast<std::size_t>(i)].pow(m[i]);
    sum += t;
  }
  return sum;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool constant = m.degree() == 0;
    if (constant || mag != Rational(1)) os << mag.str() << (constant ? "" : "*");
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "X" << (i + 1);
      if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
    }
  }
  return os.str();
}

Poly act_perm(const Perm& w, const Poly& f) {
  if (w.size() != f.nvars()) throw Error(ErrorCode::SizeMismatch, "permutation degree differs from variable count");
  Poly p(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Mono r;
    for (int j = 1; j <= f.nvars(); ++j) r[w(j) - 1] = m[j - 1];
    p.add_term(r, c);
  }
  return p;
}

Poly act_simple(int i, const Poly& f) {
  Poly p(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Mono r = m;
    std::swap(r[i - 1], r[i]);
    p.add_term(r, c);
  }
  return p;
}

Poly demazure(int i, const Poly& f) {
  if (i < 1 || i >= f.nvars()) throw Error(ErrorCode::InvalidArgument, "Demazure index out of range");
  // For X_i^a X_{i+1}^b: (X_i^b X_{i+1}^a - X_i^a X_{i+1}^b) / (X_i - X_{i+1})
  //   = sign * (X_i X_{i+1})^min(a,b) * sum_{p+q=|a-b|-1} X_i^p X_{i+1}^q
  // with sign = -1 if a > b and +1 if a < b.
  Poly p(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const int a = m[i - 1], b = m[i];
    if (a == b) continue;
    const int lo = std::min(a, b), gap = std::abs(a - b);
    const Rational coeff = a > b ? -c : c;
    for (int q = 0; q < gap; ++q) {
      Mono r = m;
      r[i - 1] = static_cast<std::uint8_t>(lo + (gap - 1 - q));
      r[i] = static_cast<std::uint8_t>(lo + q);
      p.add_term(r, coeff);
    }
  }
  return p;
}

Poly demazure_word(const Perm& w, const Poly& f) {
  Poly p = f;
  const auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = demazure(*it, p);
  return p;
}

bool is_symmetric(const Poly& f) {
  for (int i = 1; i < f.nvars(); ++i)
    if (!(act_simple(i, f) == f)) return false;
  return true;
}

Poly elementary_symmetric(int nvars, int r) {
  Poly p(nvars);
  if (r < 0 || r > nvars) return p;
  // all r-subsets of the variables
  for (unsigned mask = 0; mask < (1U << nvars); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    Mono m;
    for (int i = 0; i < nvars; ++i)
      if (mask & (1U << i)) m[i] = 1;
    p.add_term(m, Rational(1));
  }
  return p;
}

Poly complete_symmetric(int nvars, int r) {
  Poly p(nvars);
  if (r < 0) return p;
  Mono m;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1 || nvars == 0) {
      if (nvars) m[var] = static_cast<std::uint8_t>(left);
      if (nvars || left == 0) p.add_term(m, Rational(1));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      m[var] = static_cast<std::uint8_t>(k);
      rec(var + 1, left - k);
    }
    m[var] = 0;
  };
  rec(0, r);
  return p;
}

Poly univariate(int nvars, int var, const std::vector<Rational>& coeffs) {
  Poly p(nvars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Mono m;
    m[var - 1] = static_cast<std::uint8_t>(k);
    p.add_term(m, coeffs[k]);
  }
  return p;
}

Poly staircase(int n) {
  Mono m;
  for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>(n - 1 - i);
  return Poly::monomial(n, m);
}

Poly schubert_b(const Perm& w, int n) {
  if (w.size() != n) throw Error(ErrorCode::SizeMismatch, "permutation degree differs from n");
  Poly b = demazure_word(w, staircase(n));
  if (w.length() % 2) b = -b;
  return b;
}

std::vector<Poly> monomial_symmetric_basis(int n, int d) {
  std::vector<Poly> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      // orbit sum of the exponent vector (parts padded with zeros)
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (std::size_t k = 0; k < parts.size(); ++k) e[k] = parts[k];
      std::sort(e.begin(), e.end());
      Poly p(n);
      do {
        Mono m;
        for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(i)]);
        p.add_term(m, Rational(1));
      } while (std::next_permutation(e.begin(), e.end()));
      out.push_back(std::move(p));
      return;
    }
    if (static_cast<int>(parts.size()) == n) return;
    for (int k = std::min(left, max_part); k >= 1; --k) {
      parts.push_back(k);
      rec(left - k, k);
      parts.pop_back();
    }
  };
  if (d == 0) {
    out.emplace_back(n, Rational(1));
    return out;
  }
  rec(d, d);
  return out;
}

namespace {

struct DecompositionSystem {
  std::map<Mono, int, GrLex> row_of;
  std::vector<std::pair<int, Poly>> columns;  // (perm index, symmetric basis element)
  MatrixQ inverse;
};

const DecompositionSystem& decomposition_system(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, DecompositionSystem> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find({n, d}); it != cache.end()) return it->second;

  DecompositionSystem sys;
  const auto perms = all_perms(n);
  const int top = n * (n - 1) / 2;
  std::vector<Poly> column_polys;
  for (std::size_t w = 0; w < perms.size(); ++w) {
    const int m = d - (top - perms[w].length());
    if (m < 0) continue;
    const Poly b = schubert_b(perms[w], n);
    for (const Poly& sym : monomial_symmetric_basis(n, m)) {
      sys.columns.emplace_back(static_cast<int>(w), sym);
      column_polys.push_back(sym * b);
    }
  }
  for (const Poly& p : column_polys)
    for (const auto& [m, c] : p.terms()) sys.row_of.try_emplace(m, 0);
  int r = 0;
  for (auto& [m, idx] : sys.row_of) idx = r++;
  const auto rows = static_cast<Eigen::Index>(sys.row_of.size());
  const auto cols = static_cast<Eigen::Index>(column_polys.size());
  if (rows != cols)
    throw Error(ErrorCode::InternalInconsistency,
                "b_w basis system is not square in degree " + std::to_string(d));
  MatrixQ a = MatrixQ::Zero(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (const auto& [m, v] : column_polys[static_cast<std::size_t>(c)].terms()) a(sys.row_of.at(m), c) = v;
  auto inv = inverse(a);
  if (!inv)
    throw Error(ErrorCode::InternalInconsistency, "b_w basis system is singular in degree " + std::to_string(d));
  sys.inverse = std::move(*inv);
  return cache.emplace(std::make_pair(n, d), std::move(sys)).first->second;
}

}  // namespace

std::map<Perm, Poly> sym_decompose(const Poly& f, int n) {
  if (f.nvars() != n) throw Error(ErrorCode::SizeMismatch, "polynomial ring differs from n");
  const auto perms = all_perms(n);
  std::map<Perm, Poly> out;
  for (int d = 0; d <= f.degree(); ++d) {
    const Poly part = f.homogeneous_part(d);
    if (part.is_zero()) continue;
    const auto& sys = decomposition_system(n, d);
    VectorQ rhs = VectorQ::Zero(static_cast<Eigen::Index>(sys.row_of.size()));
    for (const auto& [m, c] : part.terms()) {
      auto it = sys.row_of.find(m);
      if (it == sys.row_of.end())
        throw Error(ErrorCode::InternalInconsistency, "monomial outside the b_w span");
      rhs(it->second) = c;
    }
    const VectorQ x = sys.inverse * rhs;
    for (std::size_t c = 0; c < sys.columns.size(); ++c) {
      if (x(static_cast<Eigen::Index>(c)).is_zero()) continue;
      const auto& [w, sym] = sys.columns[c];
      auto [it, inserted] = out.try_emplace(perms[static_cast<std::size_t>(w)], Poly(n));
      it->second += sym * x(static_cast<Eigen::Index>(c));
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace kmcat
