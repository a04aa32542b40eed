#include "kmcat/error.hpp"
#include "kmcat/klr.hpp"
#include "kmcat/nilhecke.hpp"
#include "kmcat/random.hpp"

#include <set>

namespace kmcat {

namespace {

// Monomial in the generators applied to e(word): letters k > 0 are psi_k and
// k < 0 are x_{-k}, read right to left.
struct GenTerm {
  Rational c;
  std::vector<int> letters;
};

struct Relation {
  std::string family;
  std::string label;
  Word word;
  std::vector<GenTerm> terms;  // sum is zero
};

std::vector<Relation> defining_relations(const KLRAlgebra& A) {
  const int n = A.n();
  const KLRParams& params = A.params();
  std::vector<Relation> out;
  for (const Word& i : A.words()) {
    const std::string w = "e(" + word_str(i, n) + ")";
    auto at = [&](int k) { return static_cast<int>(i[static_cast<std::size_t>(k - 1)]); };
    for (int k = 1; k < n; ++k) {
      const Rational delta(at(k) == at(k + 1) ? 1 : 0);
      const std::string kk = std::to_string(k), k1 = std::to_string(k + 1);
      out.push_back({"dot_slide", "psi" + kk + "x" + k1 + " - x" + kk + "psi" + kk + " = delta on " + w, i,
                     {{Rational(1), {k, -(k + 1)}}, {Rational(-1), {-k, k}}, {-delta, {}}}});
      out.push_back({"dot_slide", "x" + k1 + "psi" + kk + " - psi" + kk + "x" + kk + " = delta on " + w, i,
                     {{Rational(1), {-(k + 1), k}}, {Rational(-1), {k, -k}}, {-delta, {}}}});
      Relation q{"quadratic", "psi" + kk + "^2 = Q(x" + kk + ", x" + k1 + ") on " + w, i, {{Rational(1), {k, k}}}};
      for (const auto& t : params.Q(at(k), at(k + 1))) {
        std::vector<int> letters(static_cast<std::size_t>(t.u), -k);
        letters.insert(letters.end(), static_cast<std::size_t>(t.v), -(k + 1));
        q.terms.push_back({-t.c, letters});
      }
      out.push_back(std::move(q));
      for (int l = 1; l <= n; ++l) {
        if (l == k || l == k + 1) continue;
        out.push_back({"distant", "x" + std::to_string(l) + " commutes with psi" + kk + " on " + w, i,
                       {{Rational(1), {-l, k}}, {Rational(-1), {k, -l}}}});
      }
      for (int l = k + 2; l < n; ++l)
        out.push_back({"distant", "psi" + kk + " commutes with psi" + std::to_string(l) + " on " + w, i,
                       {{Rational(1), {k, l}}, {Rational(-1), {l, k}}}});
    }
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l)
        out.push_back({"distant", "x" + std::to_string(k) + " commutes with x" + std::to_string(l) + " on " + w, i,
                       {{Rational(1), {-k, -l}}, {Rational(-1), {-l, -k}}}});
    for (int j = 1; j + 2 <= n; ++j) {
      const std::string jj = std::to_string(j), j1 = std::to_string(j + 1);
      Relation b{"braid", "psi" + j1 + "psi" + jj + "psi" + j1 + " - psi" + jj + "psi" + j1 + "psi" + jj + " on " + w, i,
                 {{Rational(1), {j + 1, j, j + 1}}, {Rational(-1), {j, j + 1, j}}}};
      const int a = at(j), bb = at(j + 1);
      if (a == at(j + 2) && a != bb) {
        const int d = params.datum().d_ij(a, bb);
        for (int r = 0; r < d; ++r) {
          std::vector<int> letters(static_cast<std::size_t>(r), -(j + 2));
          letters.insert(letters.end(), static_cast<std::size_t>(d - 1 - r), -j);
          b.terms.push_back({-params.t(a, bb), letters});
        }
        for (const auto& e : params.s_entries()) {
          if (e.i != a || e.j != bb) continue;
          for (int r = 0; r < e.p; ++r) {
            std::vector<int> letters(static_cast<std::size_t>(r), -(j + 2));
            letters.insert(letters.end(), static_cast<std::size_t>(e.q), -(j + 1));
            letters.insert(letters.end(), static_cast<std::size_t>(e.p - 1 - r), -j);
            b.terms.push_back({-e.value, letters});
          }
        }
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

Poly random_poly(SplitMix64& rng, int n, int max_deg, int terms) {
  Poly p(n);
  for (int t = 0; t < terms; ++t) {
    Mono m;
    for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint8_t>(rng.uniform(0, max_deg));
    p.add_term(m, Rational(rng.uniform(-3, 3)));
  }
  return p;
}

KLRKey random_key(SplitMix64& rng, const KLRAlgebra& A, int max_dots) {
  KLRKey k;
  k.perm = rng.uniform(0, A.group().order() - 1);
  for (int i = 0; i < A.n(); ++i) k.dots[i] = static_cast<std::uint8_t>(rng.uniform(0, max_dots));
  k.word = A.words()[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(A.words().size()) - 1))];
  return k;
}

KLRElement random_element(SplitMix64& rng, const KLRAlgebra& A, int max_terms, int max_dots) {
  KLRElement a(A.n());
  const int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    int c = rng.uniform(-3, 3);
    a.add(random_key(rng, A, max_dots), Rational(c == 0 ? 1 : c));
  }
  return a;
}

// Random element whose bottom words mostly match top words of `below`, so
// that products with `below` are rarely zero.
KLRElement random_above(SplitMix64& rng, const KLRAlgebra& A, const KLRElement& below, int max_terms, int max_dots) {
  KLRElement a = random_element(rng, A, max_terms, max_dots);
  if (below.is_zero()) return a;
  std::vector<Word> tops;
  for (const auto& [k, c] : below.terms()) tops.push_back(A.top_word(k));
  KLRElement out(A.n());
  for (const auto& [key, c] : a.terms()) {
    KLRKey k = key;
    if (rng.uniform(0, 3) != 0) k.word = tops[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(tops.size()) - 1))];
    out.add(k, c);
  }
  return out;
}

PolyVector random_vector(SplitMix64& rng, const KLRAlgebra& A) {
  PolyVector v;
  for (const Word& w : A.words()) {
    Poly f = random_poly(rng, A.n(), 2, 3);
    if (!f.is_zero()) v.emplace(w, std::move(f));
  }
  return v;
}

PolyVector rep_word(const KLRAlgebra& A, const std::vector<int>& letters, PolyVector v) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = *it > 0 ? A.rep_psi(*it, v) : A.rep_x(-*it, v);
  return v;
}

void accumulate(PolyVector& acc, const PolyVector& v, const Rational& c) {
  for (const auto& [u, f] : v) {
    auto [it, inserted] = acc.try_emplace(u, f * c);
    if (!inserted) {
      it->second += f * c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second.is_zero() ? acc.erase(it) : std::next(it);
}

int word_degree(const KLRAlgebra& A, const std::vector<int>& letters, Word u) {
  const CartanDatum& c = A.params().datum();
  int deg = 0;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (*it < 0) {
      deg += 2 * c.d(u[static_cast<std::size_t>(-*it - 1)]);
    } else {
      const int a = u[static_cast<std::size_t>(*it - 1)], b = u[static_cast<std::size_t>(*it)];
      deg -= c.d(a) * c.a(a, b);
      std::swap(u[static_cast<std::size_t>(*it - 1)], u[static_cast<std::size_t>(*it)]);
    }
  }
  return deg;
}

struct Tally {
  int checked = 0;
  int failed = 0;
  Json first;
  void fail(Json counterexample) {
    if (failed++ == 0) first = std::move(counterexample);
  }
  Check to_check(const std::string& name) const {
    Check c{name, failed ? Status::Fail : Status::Pass,
            std::to_string(checked - failed) + "/" + std::to_string(checked) + " hold", Json::object()};
    c.payload["checked"] = checked;
    if (failed) c.payload["counterexample"] = first;
    return c;
  }
};

std::string vec_str(const KLRAlgebra& A, const PolyVector& v) {
  std::string s;
  for (const auto& [u, f] : v) s += "[" + word_str(u, A.n()) + "] " + f.str() + "; ";
  return s.empty() ? "0" : s;
}

}  // namespace

Report klr_relation_suite(const KLRParams& params, int n, std::uint64_t seed, int random_pairs) {
  if (n < 1 || n > 4) throw Error(ErrorCode::InvalidArgument, "relation suite needs 1 <= n <= 4");
  Report report("klr");
  report.input()["n"] = n;
  report.input()["seed"] = seed;
  report.input()["homogeneous"] = params.homogeneous();
  report.input()["poly_rep_index_order"] = "datum order of I";

  KLRAlgebra A(params, n);
  SplitMix64 rng(seed);

  {
    Tally t;
    for (const Word& i : A.words())
      for (const Word& j : A.words()) {
        ++t.checked;
        const KLRElement p = A.mul(A.e(i), A.e(j));
        if (!(p == (i == j ? A.e(i) : KLRElement(n))))
          t.fail({{"i", word_str(i, n)}, {"j", word_str(j, n)}, {"product", A.str(p)}});
      }
    report.add(t.to_check("idempotents orthogonal"));
  }

  const auto relations = defining_relations(A);
  std::map<std::string, Tally> engine, oracle;
  Tally homog;
  bool all_homogeneous = true;
  for (const Relation& r : relations) {
    KLRElement sum(n);
    for (const auto& term : r.terms) sum.add(A.left_word(term.letters, A.e(r.word)), term.c);
    Tally& te = engine[r.family];
    ++te.checked;
    if (!sum.is_zero()) te.fail({{"relation", r.label}, {"residue", A.str(sum)}});

    Tally& to = oracle[r.family];
    for (int trial = 0; trial < 2; ++trial) {
      PolyVector v{{r.word, random_poly(rng, n, 3, 4)}};
      PolyVector acc;
      for (const auto& term : r.terms) accumulate(acc, rep_word(A, term.letters, v), term.c);
      ++to.checked;
      if (!acc.empty()) to.fail({{"relation", r.label}, {"input", vec_str(A, v)}, {"residue", vec_str(A, acc)}});
    }

    std::set<int> degrees;
    for (const auto& term : r.terms)
      if (!term.c.is_zero()) degrees.insert(word_degree(A, term.letters, r.word));
    if (degrees.size() > 1) all_homogeneous = false;
  }
  for (const auto& [family, t] : engine) report.add(t.to_check("rewriting satisfies " + family + " relations"));
  for (const auto& [family, t] : oracle)
    report.add(t.to_check("polynomial representation satisfies " + family + " relations"));
  {
    Check c{"relations homogeneous exactly when (p d_ji + q d_ij = d_ij d_ji) holds",
            all_homogeneous == params.homogeneous() ? Status::Pass : Status::Fail, "", Json::object()};
    c.payload["params_homogeneous"] = params.homogeneous();
    c.payload["relations_homogeneous"] = all_homogeneous;
    report.add(std::move(c));
  }

  {
    Tally t;
    for (int trial = 0; trial < random_pairs; ++trial) {
      const KLRElement b = random_element(rng, A, 3, 1), a = random_above(rng, A, b, 3, 1);
      const PolyVector v = random_vector(rng, A);
      ++t.checked;
      const PolyVector lhs = A.rep(A.mul(a, b), v), rhs = A.rep(a, A.rep(b, v));
      if (lhs != rhs)
        t.fail({{"a", A.str(a)}, {"b", A.str(b)}, {"lhs", vec_str(A, lhs)}, {"rhs", vec_str(A, rhs)}});
    }
    report.add(t.to_check("rep(ab) = rep(a) rep(b) on random pairs"));
  }
  {
    Tally t;
    const int triples = n <= 3 ? std::max(random_pairs, 200) : random_pairs / 4;
    for (int trial = 0; trial < triples; ++trial) {
      const KLRElement c = random_element(rng, A, 2, 1), b = random_above(rng, A, c, 2, 1),
                       a = random_above(rng, A, b, 2, 1);
      ++t.checked;
      const KLRElement l = A.mul(A.mul(a, b), c), r = A.mul(a, A.mul(b, c));
      if (!(l == r)) t.fail({{"a", A.str(a)}, {"b", A.str(b)}, {"c", A.str(c)}});
    }
    report.add(t.to_check("associativity on random triples"));
  }
  {
    Tally t;
    const KLRElement one = A.one();
    for (int trial = 0; trial < random_pairs; ++trial) {
      const KLRElement a = random_element(rng, A, 3, 2);
      ++t.checked;
      if (!(A.mul(one, a) == a) || !(A.mul(a, one) == a)) t.fail({{"a", A.str(a)}});
    }
    report.add(t.to_check("normal forms are fixed by renormalisation"));
  }
  if (params.homogeneous()) {
    Tally t;
    for (int trial = 0; trial < random_pairs; ++trial) {
      const KLRKey kb = random_key(rng, A, 1);
      KLRKey ka = random_key(rng, A, 1);
      ka.word = A.top_word(kb);
      const KLRElement p = A.mul(A.basis(ka.perm, ka.dots, ka.word), A.basis(kb.perm, kb.dots, kb.word));
      ++t.checked;
      const auto d = klr_degree(A, p);
      if (!d || (!p.is_zero() && *d != A.degree(ka) + A.degree(kb))) t.fail({{"product", A.str(p)}});
    }
    report.add(t.to_check("products of basis elements are homogeneous of the summed degree"));
  } else {
    report.add(Check{"products of basis elements are homogeneous of the summed degree", Status::Untested,
                     "parameters are not homogeneous", Json::object()});
  }
  return report;
}

Report klr_nilhecke_comparison(int n, std::uint64_t seed, int random_pairs) {
  Report report("klr_nilhecke");
  report.input()["n"] = n;
  report.input()["seed"] = seed;
  const KLRAlgebra A(KLRParams(validate_gcm(standard_gcm("A1"))), n);
  auto to_nh = [&](const KLRElement& a) {
    NHElement out(n);
    for (const auto& [k, c] : a.terms())
      out += c * (NHElement::T(A.group().perm(k.perm)) * NHElement::poly(Poly::monomial(n, k.dots)));
    return out;
  };
  SplitMix64 rng(seed);
  Tally mul, act;
  const Word w{};
  for (int trial = 0; trial < random_pairs; ++trial) {
    const KLRElement a = random_element(rng, A, 3, 2), b = random_element(rng, A, 3, 2);
    ++mul.checked;
    if (!(to_nh(A.mul(a, b)) == nh_mul(to_nh(a), to_nh(b)))) mul.fail({{"a", A.str(a)}, {"b", A.str(b)}});
    const Poly f = random_poly(rng, n, 3, 4);
    ++act.checked;
    const PolyVector image = A.rep(a, {{w, f}});
    const Poly lhs = image.count(w) ? image.at(w) : Poly(n);
    if (!(lhs == nh_act(to_nh(a), f))) act.fail({{"a", A.str(a)}, {"f", f.str()}});
  }
  report.add(mul.to_check("one-vertex structure constants agree with the nil Hecke algebra"));
  report.add(act.to_check("one-vertex polynomial representation agrees with the Demazure action"));
  return report;
}

}  // namespace kmcat
