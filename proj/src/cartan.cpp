#include "kmcat/cartan.hpp"

#include "kmcat/error.hpp"
#include "kmcat/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace kmcat {

long CartanDatum::root_form(const IntVector& x, const IntVector& y) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      s += static_cast<long>(x[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(j)] *
           d(i) * a(i, j);
  return s;
}

namespace {

void check_gcm_shape(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorCode::NotGCM, "matrix must be square and non-empty");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 2) throw Error(ErrorCode::NotGCM, "diagonal entry a_" + std::to_string(i + 1) +
                                                         std::to_string(i + 1) + " is not 2");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j) continue;
      if (m(i, j) > 0)
        throw Error(ErrorCode::NotGCM, "positive off-diagonal entry at (" + std::to_string(i + 1) +
                                           "," + std::to_string(j + 1) + ")");
      if ((m(i, j) == 0) != (m(j, i) == 0))
        throw Error(ErrorCode::NotGCM, "zero pattern is not symmetric at (" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
}

}  // namespace

CartanDatum validate_gcm(const Eigen::MatrixXi& matrix) {
  check_gcm_shape(matrix);
  const int n = static_cast<int>(matrix.rows());

  // d_j = d_i a_ij / a_ji along a spanning forest, then check every edge.
  std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (component[static_cast<std::size_t>(root)] >= 0) continue;
    std::queue<int> todo;
    todo.push(root);
    component[static_cast<std::size_t>(root)] = components;
    d[static_cast<std::size_t>(root)] = Rational(1);
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || matrix(i, j) == 0) continue;
        const Rational dj = d[static_cast<std::size_t>(i)] * Rational(matrix(i, j)) /
                            Rational(matrix(j, i));
        if (component[static_cast<std::size_t>(j)] < 0) {
          component[static_cast<std::size_t>(j)] = components;
          d[static_cast<std::size_t>(j)] = dj;
          todo.push(j);
        } else if (d[static_cast<std::size_t>(j)] != dj) {
          throw Error(ErrorCode::NotSymmetrizable,
                      "no positive symmetrizer: inconsistent cycle through indices " +
                          std::to_string(i + 1) + " and " + std::to_string(j + 1));
        }
      }
    }
    ++components;
  }

  // Clear denominators and make each connected component coprime.
  CartanDatum out;
  out.gcm_ = matrix;
  out.symmetrizer_.assign(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < components; ++c) {
    mpz_class den_lcm = 1;
    for (int i = 0; i < n; ++i)
      if (component[static_cast<std::size_t>(i)] == c)
        den_lcm = lcm(den_lcm, d[static_cast<std::size_t>(i)].denominator());
    mpz_class g = 0;
    std::vector<mpz_class> ints(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (component[static_cast<std::size_t>(i)] != c) continue;
      ints[static_cast<std::size_t>(i)] = (d[static_cast<std::size_t>(i)] * Rational(den_lcm)).numerator();
      g = gcd(g, ints[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < n; ++i)
      if (component[static_cast<std::size_t>(i)] == c)
        out.symmetrizer_[static_cast<std::size_t>(i)] =
            static_cast<int>(mpz_class(ints[static_cast<std::size_t>(i)] / g).get_si());
  }

  // Positive definiteness of (d_i a_ij) by leading principal minors.
  MatrixQ sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sym(i, j) = Rational(static_cast<long>(out.symmetrizer_[static_cast<std::size_t>(i)]) * matrix(i, j));
  out.finite_type_ = true;
  for (int k = 1; k <= n && out.finite_type_; ++k)
    if (determinant(sym.topLeftCorner(k, k)).sign() <= 0) out.finite_type_ = false;
  return out;
}

CartanDatum validate_gcm(const std::vector<std::vector<int>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXi m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw Error(ErrorCode::NotGCM, "matrix must be square");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return validate_gcm(m);
}

bool cycle_products_consistent(const Eigen::MatrixXi& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  bool ok = true;
  // enumerate simple cycles starting at their smallest vertex
  std::function<void(int, int, mpz_class, mpz_class)> walk = [&](int start, int v, mpz_class fwd,
                                                                 mpz_class back) {
    for (int w = start; w < n && ok; ++w) {
      if (w == v || m(v, w) == 0) continue;
      mpz_class f = fwd * m(v, w), b = back * m(w, v);
      if (w == start) {
        if (path.size() >= 3 && f != b) ok = false;
        continue;
      }
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      walk(start, w, f, b);
      path.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n && ok; ++s) {
    used[static_cast<std::size_t>(s)] = true;
    path = {s};
    walk(s, s, 1, 1);
    used[static_cast<std::size_t>(s)] = false;
  }
  return ok;
}

Weight anchored(const IntVector& anchor) { return Weight{anchor, IntVector(anchor.size(), 0)}; }

int pairing(const CartanDatum& datum, int i, const IntVector& anchor, const IntVector& offset) {
  int value = anchor[static_cast<std::size_t>(i)];
  for (int j = 0; j < datum.rank(); ++j) value -= offset[static_cast<std::size_t>(j)] * datum.a(i, j);
  return value;
}

int pairing(const CartanDatum& datum, int i, const Weight& lambda) {
  return pairing(datum, i, lambda.anchor, lambda.offset);
}

bool dominance_leq(const Weight& lambda, const Weight& mu) {
  if (lambda.anchor != mu.anchor)
    throw Error(ErrorCode::AnchorMismatch, "weights with different anchors are not comparable");
  for (std::size_t j = 0; j < lambda.offset.size(); ++j)
    if (lambda.offset[j] < mu.offset[j]) return false;
  return true;
}

int depth(const IntVector& offset) {
  int s = 0;
  for (int b : offset) s += b < 0 ? -b : b;
  return s;
}

bool is_dominant(const IntVector& anchor) {
  return std::all_of(anchor.begin(), anchor.end(), [](int k) { return k >= 0; });
}

std::vector<IntVector> positive_roots(const CartanDatum& datum, std::size_t cap) {
  const int n = datum.rank();
  std::set<IntVector> seen;
  std::vector<IntVector> order;
  std::queue<IntVector> todo;
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    order.push_back(e);
    todo.push(e);
  }
  while (!todo.empty()) {
    IntVector beta = todo.front();
    todo.pop();
    for (int i = 0; i < n; ++i) {
      // s_i(beta) = beta - <h_i, beta> alpha_i
      int h = 0;
      for (int j = 0; j < n; ++j) h += beta[static_cast<std::size_t>(j)] * datum.a(i, j);
      IntVector r = beta;
      r[static_cast<std::size_t>(i)] -= h;
      if (std::any_of(r.begin(), r.end(), [](int c) { return c < 0; })) continue;
      if (seen.insert(r).second) {
        if (seen.size() > cap)
          throw Error(ErrorCode::NotFiniteType, "positive root enumeration exceeded " +
                                                    std::to_string(cap) + " roots");
        order.push_back(r);
        todo.push(std::move(r));
      }
    }
  }
  return order;
}

mpz_class weyl_dim(const CartanDatum& datum, const IntVector& anchor) {
  if (!datum.finite_type()) throw Error(ErrorCode::NotFiniteType, "Weyl dimension needs finite type");
  if (!is_dominant(anchor)) throw Error(ErrorCode::NotDominant, "weight is not dominant");
  Rational dim(1);
  for (const IntVector& alpha : positive_roots(datum)) {
    // (lambda + rho, alpha) / (rho, alpha) with (Lambda_j, alpha_i) = d_i delta_ij
    long num = 0, den = 0;
    for (int j = 0; j < datum.rank(); ++j) {
      const long c = alpha[static_cast<std::size_t>(j)] * static_cast<long>(datum.d(j));
      num += c * (anchor[static_cast<std::size_t>(j)] + 1);
      den += c;
    }
    dim *= Rational(num, den);
  }
  if (!dim.is_integer()) throw Error(ErrorCode::InternalInconsistency, "non-integral Weyl dimension");
  return dim.numerator();
}

Eigen::MatrixXi standard_gcm(std::string_view name) {
  Eigen::MatrixXi m;
  if (name == "A1") {
    m.resize(1, 1);
    m << 2;
  } else if (name == "A2") {
    m.resize(2, 2);
    m << 2, -1, -1, 2;
  } else if (name == "B2") {
    m.resize(2, 2);
    m << 2, -2, -1, 2;
  } else if (name == "G2") {
    m.resize(2, 2);
    m << 2, -3, -1, 2;
  } else if (name == "A1xA1") {
    m.resize(2, 2);
    m << 2, 0, 0, 2;
  } else if (name == "affA1") {
    m.resize(2, 2);
    m << 2, -2, -2, 2;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown standard Cartan matrix '" + std::string(name) + "'");
  }
  return m;
}

}  // namespace kmcat
