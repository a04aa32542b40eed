#include "kmcat/crystal.hpp"

#include "kmcat/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace kmcat {

int Crystal::add(Weight wt) {
  Element el;
  el.wt = std::move(wt);
  const auto r = static_cast<std::size_t>(rank());
  el.f.assign(r, -1);
  el.e.assign(r, -1);
  el.eps.assign(r, 0);
  el.phi.assign(r, 0);
  elements_.push_back(std::move(el));
  return size() - 1;
}

void Crystal::link(int i, int b, int c) {
  set_f(i, b, c);
  set_e(i, c, b);
}

void Crystal::set_strings(int i, int b, int eps, int phi) {
  auto& el = elements_[static_cast<std::size_t>(b)];
  el.eps[static_cast<std::size_t>(i)] = eps;
  el.phi[static_cast<std::size_t>(i)] = phi;
}

bool Crystal::complete_weight(const IntVector& offset) const {
  if (!truncation_) return true;
  if (*truncation_ < 0) return false;
  return depth(offset) <= *truncation_;
}

void Crystal::recompute_strings() {
  for (int b = 0; b < size(); ++b)
    for (int i = 0; i < rank(); ++i) {
      int eps = 0, phi = 0;
      for (int c = e(i, b); c >= 0 && eps <= size(); c = e(i, c)) ++eps;
      for (int c = f(i, b); c >= 0 && phi <= size(); c = f(i, c)) ++phi;
      set_strings(i, b, eps, phi);
    }
}

// ---------------------------------------------------------------- axioms

namespace {

struct Violations {
  std::vector<int> ids;
  std::string first;
  void add(int b, const std::string& why) {
    if (ids.empty()) first = why;
    ids.push_back(b);
  }
};

void record(Report& rep, const std::string& name, const Violations& v, const std::string& ok_detail = {}) {
  Check c;
  c.name = name;
  c.status = v.ids.empty() ? Status::Pass : Status::Fail;
  if (v.ids.empty()) {
    c.detail = ok_detail;
  } else {
    c.detail = std::to_string(v.ids.size()) + " violations; first: " + v.first;
    Json ids = Json::array();
    for (std::size_t k = 0; k < v.ids.size() && k < 50; ++k) ids.push_back(v.ids[k]);
    c.payload = Json{{"elements", ids}};
  }
  rep.add(std::move(c));
}

IntVector unit_vector(int rank, int i, int sign) {
  IntVector v(static_cast<std::size_t>(rank), 0);
  v[static_cast<std::size_t>(i)] = sign;
  return v;
}

IntVector added(IntVector a, const IntVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

}  // namespace

Report verify_normal_axioms(const Crystal& c) {
  Report rep("crystal_axioms");
  rep.input() = Json{{"elements", c.size()}};
  const int r = c.rank();
  Violations c1, c2, c3, c4, strings;
  int skipped = 0;
  for (int b = 0; b < c.size(); ++b) {
    const Weight& w = c.wt(b);
    for (int i = 0; i < r; ++i) {
      const std::string tag = "b" + std::to_string(b) + " i=" + std::to_string(i + 1);
      if (const int up = c.e(i, b); up >= 0) {
        if (up >= c.size()) {
          c1.add(b, tag + " e out of range");
          continue;
        }
        if (c.wt(up).anchor != w.anchor || c.wt(up).offset != added(w.offset, unit_vector(r, i, -1)))
          c1.add(b, tag + " e does not raise by alpha_i");
        if (c.f(i, up) != b) c2.add(b, tag + " f(e(b)) != b");
      }
      if (const int down = c.f(i, b); down >= 0) {
        if (down >= c.size()) {
          c1.add(b, tag + " f out of range");
          continue;
        }
        if (c.wt(down).anchor != w.anchor || c.wt(down).offset != added(w.offset, unit_vector(r, i, 1)))
          c1.add(b, tag + " f does not lower by alpha_i");
        if (c.e(i, down) != b) c2.add(b, tag + " e(f(b)) != b");
      }
    }
    if (c.frontier(b)) {
      ++skipped;
      continue;
    }
    for (int i = 0; i < r; ++i) {
      const std::string tag = "b" + std::to_string(b) + " i=" + std::to_string(i + 1);
      int eps = 0, phi = 0;
      bool finite = true, reaches_frontier = false;
      for (int x = c.e(i, b); x >= 0 && x < c.size(); x = c.e(i, x))
        if (++eps > c.size()) {
          finite = false;
          break;
        }
      for (int x = c.f(i, b); x >= 0 && x < c.size(); x = c.f(i, x)) {
        if (c.frontier(x)) reaches_frontier = true;
        if (++phi > c.size()) {
          finite = false;
          break;
        }
      }
      if (!finite) {
        c3.add(b, tag + " infinite string");
        continue;
      }
      // a string running into the frontier may continue past the truncation
      if (eps != c.eps(i, b) || (!reaches_frontier && phi != c.phi(i, b)))
        c3.add(b, tag + " cached eps/phi disagree with the string");
      if (c.phi(i, b) - c.eps(i, b) != pairing(c.datum(), i, w))
        c4.add(b, tag + " phi - eps != <h_i, wt>");
      if (const int down = c.f(i, b); down >= 0 && down < c.size() && !c.frontier(down))
        if (c.eps(i, down) != c.eps(i, b) + 1 || c.phi(i, down) != c.phi(i, b) - 1)
          strings.add(b, tag + " string arithmetic");
    }
  }
  record(rep, "C1_weights", c1);
  record(rep, "C2_inverse", c2);
  const std::string skip = skipped ? std::to_string(skipped) + " frontier elements excluded" : "";
  record(rep, "C3_finite_strings", c3, skip);
  record(rep, "C4_pairing", c4, skip);
  record(rep, "string_arithmetic", strings, skip);
  return rep;
}

// ---------------------------------------------------------------- Littelmann paths

namespace {

// Segment in direction kappa - sum dir_j alpha_j for time `len`.
struct Segment {
  IntVector dir;
  Rational len;
  friend bool operator==(const Segment&, const Segment&) = default;
  friend bool operator<(const Segment& a, const Segment& b) {
    if (a.dir != b.dir) return a.dir < b.dir;
    return a.len < b.len;
  }
};
using Path = std::vector<Segment>;

class PathModel {
 public:
  PathModel(const CartanDatum& datum, IntVector kappa) : datum_(datum), kappa_(std::move(kappa)) {}

  [[nodiscard]] int slope(int i, const Segment& s) const { return pairing(datum_, i, kappa_, s.dir); }

  [[nodiscard]] IntVector endpoint(const Path& p) const {
    std::vector<Rational> acc(kappa_.size());
    for (const Segment& s : p)
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += s.len * Rational(s.dir[j]);
    IntVector out;
    for (const Rational& x : acc) {
      if (!x.is_integer()) throw Error(ErrorCode::InternalInconsistency, "path endpoint off the lattice");
      out.push_back(static_cast<int>(x.to_long()));
    }
    return out;
  }

  // h values at breakpoints, and breakpoint times
  void profile(int i, const Path& p, std::vector<Rational>& h, std::vector<Rational>& t) const {
    h.assign(1, Rational(0));
    t.assign(1, Rational(0));
    for (const Segment& s : p) {
      h.push_back(h.back() + s.len * Rational(slope(i, s)));
      t.push_back(t.back() + s.len);
    }
  }

  [[nodiscard]] std::pair<int, int> strings(int i, const Path& p) const {
    std::vector<Rational> h, t;
    profile(i, p, h, t);
    const Rational m = *std::min_element(h.begin(), h.end());
    if (!m.is_integer() || !h.back().is_integer())
      throw Error(ErrorCode::InternalInconsistency, "non-integral path");
    return {static_cast<int>((-m).to_long()), static_cast<int>((h.back() - m).to_long())};
  }

  [[nodiscard]] std::optional<Path> f(int i, const Path& p) const {
    std::vector<Rational> h, t;
    profile(i, p, h, t);
    const Rational m = *std::min_element(h.begin(), h.end());
    if (h.back() - m < Rational(1)) return std::nullopt;
    std::size_t s0 = 0;
    for (std::size_t s = 0; s < h.size(); ++s)
      if (h[s] == m) s0 = s;
    const Rational level = m + Rational(1);
    Rational t1;
    for (std::size_t s = s0; s < p.size(); ++s)
      if (h[s + 1] >= level) {
        t1 = t[s] + (level - h[s]) / Rational(slope(i, p[s]));
        break;
      }
    return reflect(i, p, t[s0], t1);
  }

  [[nodiscard]] std::optional<Path> e(int i, const Path& p) const {
    std::vector<Rational> h, t;
    profile(i, p, h, t);
    const Rational m = *std::min_element(h.begin(), h.end());
    if (m > Rational(-1)) return std::nullopt;
    std::size_t s1 = 0;
    while (h[s1] != m) ++s1;
    const Rational level = m + Rational(1);
    Rational t0;
    for (std::size_t s = s1; s-- > 0;)
      if (h[s] >= level) {
        t0 = t[s] + (level - h[s]) / Rational(slope(i, p[s]));
        break;
      }
    return reflect(i, p, t0, t[s1]);
  }

 private:
  // s_i applied to the directions on [a, b]
  [[nodiscard]] Path reflect(int i, const Path& p, const Rational& a, const Rational& b) const {
    Path out;
    Rational start(0);
    auto push = [&](IntVector dir, const Rational& len) {
      if (len.is_zero()) return;
      if (!out.empty() && out.back().dir == dir) out.back().len += len;
      else out.push_back(Segment{std::move(dir), len});
    };
    for (const Segment& s : p) {
      const Rational end = start + s.len;
      const Rational lo = std::max(start, a), hi = std::min(end, b);
      const int pr = slope(i, s);
      IntVector mirrored = s.dir;
      mirrored[static_cast<std::size_t>(i)] += pr;
      if (lo < hi) {
        push(s.dir, lo - start);
        push(mirrored, hi - lo);
        push(s.dir, end - hi);
      } else {
        push(s.dir, s.len);
      }
      start = end;
    }
    return out;
  }

  const CartanDatum& datum_;
  IntVector kappa_;
};

}  // namespace

Crystal highest_weight_crystal(const CartanDatum& datum, const IntVector& kappa, int depth_bound) {
  if (static_cast<int>(kappa.size()) != datum.rank()) throw Error(ErrorCode::SizeMismatch, "kappa has the wrong length");
  if (!is_dominant(kappa)) throw Error(ErrorCode::NotDominant, "kappa must be dominant");
  const bool complete = datum.finite_type();
  if (!complete && depth_bound < 0) throw Error(ErrorCode::InvalidArgument, "negative depth");
  constexpr int kMaxElements = 1000000;

  const int r = datum.rank();
  const PathModel model(datum, kappa);
  Crystal c(datum);
  if (!complete) c.set_truncation(depth_bound);
  std::map<Path, int> index;
  std::vector<Path> paths;
  auto intern = [&](Path p) {
    if (auto it = index.find(p); it != index.end()) return it->second;
    const int b = c.add(Weight{kappa, model.endpoint(p)});
    index.emplace(p, b);
    paths.push_back(std::move(p));
    if (c.size() > kMaxElements) throw Error(ErrorCode::CapExceeded, "crystal too large");
    return b;
  };
  intern(Path{Segment{IntVector(static_cast<std::size_t>(r), 0), Rational(1)}});
  for (int b = 0; b < c.size(); ++b) {
    const Path p = paths[static_cast<std::size_t>(b)];
    const bool at_edge = !complete && depth(c.wt(b).offset) >= depth_bound;
    for (int i = 0; i < r; ++i) {
      const auto [eps, phi] = model.strings(i, p);
      c.set_strings(i, b, eps, phi);
      if (phi == 0) continue;
      if (at_edge) {
        c.set_frontier(b, true);
        continue;
      }
      c.link(i, b, intern(*model.f(i, p)));
    }
  }
  // the e operators on paths must reproduce the generated edges
  for (int b = 0; b < c.size(); ++b)
    for (int i = 0; i < r; ++i) {
      const auto up = model.e(i, paths[static_cast<std::size_t>(b)]);
      const int expect = up ? (index.count(*up) ? index.at(*up) : -2) : -1;
      if (expect != c.e(i, b)) throw Error(ErrorCode::InternalInconsistency, "path e_i disagrees with f_i closure");
    }
  return c;
}

Crystal lowest_weight_crystal(const CartanDatum& datum, const IntVector& kappa_prime, int depth_bound) {
  IntVector neg;
  for (int k : kappa_prime) neg.push_back(-k);
  const Crystal hi = highest_weight_crystal(datum, neg, depth_bound);
  Crystal c(datum);
  c.set_truncation(hi.truncation());
  for (int b = 0; b < hi.size(); ++b) {
    IntVector off;
    for (int x : hi.wt(b).offset) off.push_back(-x);
    c.add(Weight{kappa_prime, off});
  }
  for (int b = 0; b < hi.size(); ++b) {
    c.set_frontier(b, hi.frontier(b));
    for (int i = 0; i < hi.rank(); ++i) {
      c.set_f(i, b, hi.e(i, b));
      c.set_e(i, b, hi.f(i, b));
      c.set_strings(i, b, hi.phi(i, b), hi.eps(i, b));
    }
  }
  return c;
}

Crystal tensor(const Crystal& c1, const Crystal& c2) {
  if (!(c1.datum() == c2.datum())) throw Error(ErrorCode::DatumMismatch, "tensor factors over different data");
  const int r = c1.rank();
  Crystal c(c1.datum());
  const int n2 = c2.size();
  for (int b1 = 0; b1 < c1.size(); ++b1)
    for (int b2 = 0; b2 < n2; ++b2)
      c.add(Weight{added(c1.wt(b1).anchor, c2.wt(b2).anchor), added(c1.wt(b1).offset, c2.wt(b2).offset)});
  // both factors truncated from the same side keep depth completeness
  if (c1.truncation() || c2.truncation()) {
    int d = std::numeric_limits<int>::max();
    if (c1.truncation()) d = std::min(d, *c1.truncation());
    if (c2.truncation()) d = std::min(d, *c2.truncation());
    auto sign = [](const Crystal& x) {
      int s = 0;
      for (int b = 0; b < x.size(); ++b)
        for (int v : x.wt(b).offset) s = v > 0 ? s | 1 : v < 0 ? s | 2 : s;
      return s;
    };
    c.set_truncation((sign(c1) | sign(c2)) == 3 ? -1 : d);
  }
  for (int b1 = 0; b1 < c1.size(); ++b1)
    for (int b2 = 0; b2 < n2; ++b2) {
      const int b = b1 * n2 + b2;
      const bool fr = c1.frontier(b1) || c2.frontier(b2);
      c.set_frontier(b, fr);
      for (int i = 0; i < r; ++i) {
        const int e1 = c1.eps(i, b1), p1 = c1.phi(i, b1), e2 = c2.eps(i, b2), p2 = c2.phi(i, b2);
        c.set_strings(i, b, std::max(e1, e1 + e2 - p1), std::max(p2, p1 + p2 - e2));
        if (p1 > e2) {
          if (const int t = c1.f(i, b1); t >= 0) c.set_f(i, b, t * n2 + b2);
        } else if (const int t = c2.f(i, b2); t >= 0) {
          c.set_f(i, b, b1 * n2 + t);
        }
        if (p1 >= e2) {
          if (const int t = c1.e(i, b1); t >= 0) c.set_e(i, b, t * n2 + b2);
        } else if (const int t = c2.e(i, b2); t >= 0) {
          c.set_e(i, b, b1 * n2 + t);
        }
      }
    }
  return c;
}

Character character(const Crystal& c) {
  Character ch;
  for (int b = 0; b < c.size(); ++b) {
    if (b == 0) ch.anchor = c.wt(b).anchor;
    else if (c.wt(b).anchor != ch.anchor) throw Error(ErrorCode::AnchorMismatch, "elements with different anchors");
    ++ch.mult[c.wt(b).offset];
  }
  return ch;
}

Character convolve(const Character& a, const Character& b) {
  Character out;
  out.anchor = added(a.anchor, b.anchor);
  for (const auto& [x, m] : a.mult)
    for (const auto& [y, n] : b.mult) out.mult[added(x, y)] += m * n;
  return out;
}

Json character_json(const Character& ch, const Crystal* completeness) {
  Json weights = Json::array();
  for (const auto& [off, m] : ch.mult) {
    Json w{{"offset", off}, {"mult", m}};
    if (completeness) w["complete"] = completeness->complete_weight(off);
    weights.push_back(std::move(w));
  }
  return Json{{"anchor", ch.anchor}, {"weights", weights}};
}

std::vector<std::vector<int>> components(const Crystal& c) {
  std::vector<int> parent(static_cast<std::size_t>(c.size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int b = 0; b < c.size(); ++b)
    for (int i = 0; i < c.rank(); ++i)
      if (const int t = c.f(i, b); t >= 0) {
        const int x = find(b), y = find(t);
        if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
      }
  std::map<int, std::vector<int>> groups;
  for (int b = 0; b < c.size(); ++b) groups[find(b)].push_back(b);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::string export_dot(const Crystal& c) {
  auto vec = [](const IntVector& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  node [shape=box];\n";
  for (int b = 0; b < c.size(); ++b) {
    os << "  b" << b << " [label=\"" << b << " " << vec(c.wt(b).anchor) << " - " << vec(c.wt(b).offset) << "\"";
    if (c.frontier(b)) os << ", style=dashed";
    os << "];\n";
  }
  for (int b = 0; b < c.size(); ++b)
    for (int i = 0; i < c.rank(); ++i)
      if (const int t = c.f(i, b); t >= 0) os << "  b" << b << " -> b" << t << " [label=\"" << i + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

Report crystal_suite(const CartanDatum& datum, const IntVector& kappa, int depth_bound) {
  Report rep("crystal");
  rep.input() = Json{{"kappa", kappa}, {"depth", depth_bound}};
  const Crystal c = highest_weight_crystal(datum, kappa, depth_bound);
  rep.append(verify_normal_axioms(c));
  int highest = 0, at_top = 0;
  for (int b = 0; b < c.size(); ++b) {
    bool top = true;
    for (int i = 0; i < c.rank(); ++i) top = top && c.e(i, b) < 0;
    highest += top;
    at_top += depth(c.wt(b).offset) == 0;
  }
  rep.expect("unique_highest_element", highest == 1 && at_top == 1 && c.size() > 0,
             std::to_string(highest) + " elements killed by every e_i");
  if (datum.finite_type()) {
    const mpz_class w = weyl_dim(datum, kappa);
    rep.expect("weyl_dimension", mpz_class(c.size()) == w,
               "|B| = " + std::to_string(c.size()) + ", weyl_dim = " + w.get_str());
  } else {
    Check skip;
    skip.name = "weyl_dimension";
    skip.status = Status::Untested;
    skip.detail = "not of finite type; " + std::to_string(c.size()) + " elements to depth " + std::to_string(depth_bound);
    rep.add(std::move(skip));
  }
  return rep;
}

}  // namespace kmcat
