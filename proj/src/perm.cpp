#include "kmcat/perm.hpp"

#include "kmcat/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>

namespace kmcat {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<int> sorted = img_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw Error(ErrorCode::InvalidArgument, "not a permutation of 1..n");
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) throw Error(ErrorCode::InvalidArgument, "simple reflection index out of range");
  Perm p = identity(n);
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
  return p;
}

Perm Perm::longest(int n) {
  Perm p = identity(n);
  std::reverse(p.img_.begin(), p.img_.end());
  return p;
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
  Perm p = identity(n);
  for (int r : word) p = p * simple(n, r);
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img_.assign(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
  return p;
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool Perm::has_left_descent(int i) const {
  // s_i w swaps the values i and i+1; it shortens w iff i+1 precedes i
  const auto pos_i = std::find(img_.begin(), img_.end(), i);
  const auto pos_next = std::find(img_.begin(), img_.end(), i + 1);
  return pos_next < pos_i;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm w = *this;
  const int n = size();
  while (!w.is_identity()) {
    for (int i = 1; i < n; ++i) {
      if (w.has_left_descent(i)) {
        word.push_back(i);
        w = simple(n, i) * w;
        break;
      }
    }
  }
  return word;
}

std::string Perm::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

Perm operator*(const Perm& v, const Perm& w) {
  if (v.size() != w.size()) throw Error(ErrorCode::SizeMismatch, "permutations of different degree");
  Perm p;
  p.img_.resize(w.img_.size());
  for (std::size_t i = 0; i < w.img_.size(); ++i) p.img_[i] = v(w.img_[i]);
  return p;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const Perm& a, const Perm& b) { return a.length() < b.length(); });
  return out;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n), perms_(all_perms(n)) {
  for (std::size_t i = 0; i < perms_.size(); ++i) index_.emplace(perms_[i], static_cast<int>(i));
  for (const Perm& w : perms_) {
    lengths_.push_back(w.length());
    words_.push_back(w.reduced_word());
    std::vector<int> row;
    for (int k = 1; k < n; ++k) row.push_back(index_.at(Perm::simple(n, k) * w));
    left_.push_back(std::move(row));
  }
}

void apply_move(std::vector<int>& word, const BraidMove& move) {
  auto p = static_cast<std::size_t>(move.pos);
  if (move.braid) {
    std::swap(word[p], word[p + 1]);
    word[p + 2] = word[p];
  } else {
    std::swap(word[p], word[p + 1]);
  }
}

namespace {

std::vector<std::pair<BraidMove, std::vector<int>>> neighbours(const std::vector<int>& w) {
  std::vector<std::pair<BraidMove, std::vector<int>>> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (std::abs(w[p] - w[p + 1]) > 1) {
      BraidMove m{false, static_cast<int>(p)};
      std::vector<int> v = w;
      apply_move(v, m);
      out.emplace_back(m, std::move(v));
    }
    if (p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
      BraidMove m{true, static_cast<int>(p)};
      std::vector<int> v = w;
      apply_move(v, m);
      out.emplace_back(m, std::move(v));
    }
  }
  return out;
}

}  // namespace

const std::vector<BraidMove>& braid_path(const std::vector<int>& from, const std::vector<int>& to) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<BraidMove>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(from, to);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::map<std::vector<int>, std::pair<std::vector<int>, BraidMove>> parent;
  std::queue<std::vector<int>> todo;
  todo.push(from);
  parent.emplace(from, std::make_pair(from, BraidMove{false, -1}));
  while (!todo.empty() && !parent.count(to)) {
    auto w = todo.front();
    todo.pop();
    for (auto& [move, v] : neighbours(w)) {
      if (parent.count(v)) continue;
      parent.emplace(v, std::make_pair(w, move));
      todo.push(std::move(v));
    }
  }
  if (!parent.count(to))
    throw Error(ErrorCode::InternalInconsistency, "reduced words are not braid-equivalent");
  std::vector<BraidMove> path;
  for (auto cur = to; cur != from;) {
    const auto& [prev, move] = parent.at(cur);
    path.push_back(move);
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  return cache.emplace(std::move(key), std::move(path)).first->second;
}

}  // namespace kmcat
