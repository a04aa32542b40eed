#include "kmcat/suites.hpp"

#include "kmcat/linalg.hpp"
#include "kmcat/nilhecke.hpp"
#include "kmcat/random.hpp"

#include <numeric>

namespace kmcat {

Report cartan_suite(const CartanDatum& datum) {
  Report rep("cartan");
  const int r = datum.rank();
  const auto& a = datum.gcm();
  bool axioms = true;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) axioms = axioms && a(i, j) == 2;
      else axioms = axioms && a(i, j) <= 0 && ((a(i, j) == 0) == (a(j, i) == 0));
    }
  rep.expect("gcm_axioms", axioms);

  bool sym = true;
  for (int i = 0; i < r; ++i) {
    sym = sym && datum.d(i) > 0;
    for (int j = 0; j < r; ++j) sym = sym && datum.d(i) * a(i, j) == datum.d(j) * a(j, i);
  }
  rep.expect("symmetrizer", sym, "d = " + [&] {
    std::string s;
    for (int i = 0; i < r; ++i) s += (i ? "," : "") + std::to_string(datum.d(i));
    return s;
  }());
  if (r <= 8) rep.expect("cycle_criterion", cycle_products_consistent(a));

  bool form = true;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      IntVector x(static_cast<std::size_t>(r), 0), y = x;
      x[static_cast<std::size_t>(i)] = 1;
      y[static_cast<std::size_t>(j)] = 1;
      form = form && datum.root_form(x, y) == datum.root_form(y, x) &&
             datum.root_form(x, y) == static_cast<long>(datum.d(i)) * a(i, j);
    }
  rep.expect("root_form_symmetric", form);

  if (datum.finite_type()) {
    const auto roots = positive_roots(datum);
    const mpz_class w = weyl_dim(datum, IntVector(static_cast<std::size_t>(r), 1));
    mpz_class expect = 1;
    expect <<= static_cast<mp_bitcnt_t>(roots.size());
    rep.expect("weyl_dim_rho", w == expect,
               std::to_string(roots.size()) + " positive roots, dim L(rho) = " + w.get_str());
  } else {
    Check c;
    c.name = "weyl_dim_rho";
    c.status = Status::Untested;
    c.detail = "not of finite type";
    rep.add(std::move(c));
  }
  return rep;
}

namespace {

Poly random_poly(SplitMix64& rng, int n, int max_deg, int terms) {
  Poly p(n);
  for (int t = 0; t < terms; ++t) {
    Mono m;
    for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>(rng.uniform(0, max_deg));
    p.add_term(m, Rational(rng.uniform(-3, 3)));
  }
  return p;
}

NHElement random_element(SplitMix64& rng, int n) {
  const auto perms = all_perms(n);
  NHElement a(n);
  for (int t = 0; t < 3; ++t)
    a.add(perms[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(perms.size()) - 1))], random_poly(rng, n, 1, 2));
  return a;
}

}  // namespace

Report nilhecke_suite(int n, std::uint64_t seed, int random_triples, int random_pairs) {
  Report rep("nilhecke");
  rep.input() = Json{{"n", n}, {"seed", seed}};
  SplitMix64 rng(seed);
  const auto perms = all_perms(n);

  int bad = 0;
  for (int t = 0; t < random_triples; ++t) {
    const auto a = random_element(rng, n), b = random_element(rng, n);
    const Poly f = random_poly(rng, n, 2, 3);
    if (!(nh_act(a * b, f) == nh_act(a, nh_act(b, f)))) ++bad;
  }
  rep.expect("N1_action_compatibility", bad == 0,
             std::to_string(random_triples) + " random triples, " + std::to_string(bad) + " failures");

  bad = 0;
  std::vector<NHElement> T;
  for (const Perm& w : perms) T.push_back(NHElement::T(w));
  for (const auto& u : T)
    for (const auto& v : T) {
      const NHElement uv = u * v;
      for (const auto& w : T)
        if (!((uv * w) == (u * (v * w)))) ++bad;
    }
  int bad_mixed = 0;
  for (int t = 0; t < random_pairs; ++t) {
    const auto a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    if (!((a * b) * c == a * (b * c))) ++bad_mixed;
  }
  rep.expect("N2_associativity", bad == 0 && bad_mixed == 0,
             "all basis triples and " + std::to_string(random_pairs) + " random triples");

  bad = 0;
  for (int t = 0; t < 50; ++t) {
    const Poly f = random_poly(rng, n, 3, 5);
    Poly back(n);
    for (const auto& [w, c] : sym_decompose(f, n)) {
      if (!is_symmetric(c)) ++bad;
      back += c * schubert_b(w, n);
    }
    if (!(back == f)) ++bad;
  }
  rep.expect("N3_b_longest", schubert_b(Perm::longest(n), n) == Poly(n, Rational(1)));
  rep.expect("N3_sym_decompose_round_trip", bad == 0, "50 random polynomials");

  bad = 0;
  for (int t = 0; t < random_pairs; ++t) {
    const auto a = random_element(rng, n), b = random_element(rng, n);
    if (!(nh_to_matrix(a * b) == poly_matmul(nh_to_matrix(a), nh_to_matrix(b)))) ++bad;
  }
  rep.expect("N4_matrix_multiplicative", bad == 0, std::to_string(random_pairs) + " random pairs");
  // images of T_w independent after specializing the entries at a point
  {
    std::vector<Rational> point;
    for (int i = 0; i < n; ++i) point.emplace_back(3 * i * i + 2 * i + 1);
    const auto N = static_cast<Eigen::Index>(perms.size());
    MatrixQ rows(N, N * N);
    for (Eigen::Index k = 0; k < N; ++k) {
      const auto m = nh_to_matrix(T[static_cast<std::size_t>(k)]);
      for (Eigen::Index x = 0; x < N; ++x)
        for (Eigen::Index y = 0; y < N; ++y)
          rows(k, x * N + y) = m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].evaluate(point);
    }
    const int rk = rank(rows);
    rep.expect("N4_injective_on_basis", rk == N, "rank " + std::to_string(rk) + " of " + std::to_string(N));
  }

  const NHElement p = pi(n);
  rep.expect("N5_pi_idempotent", p * p == p);
  bad = 0;
  for (const Perm& w : perms) {
    const Poly b = schubert_b(w, n);
    const Poly img = nh_act(p, b);
    if (!(img == (w.is_identity() ? b : Poly(n)))) ++bad;
  }
  rep.expect("N5_pi_on_b_basis", bad == 0);
  return rep;
}

}  // namespace kmcat
