#pragma once

// Permutations of {1..n} and the symmetric group tables shared by the nil Hecke
// and quiver Hecke engines.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kmcat {

/// Permutation w of {1..n} in one-line form. Products compose right to left:
/// (v * w)(p) = v(w(p)). Simple reflections s_1..s_{n-1} are 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);  // values 1..n

  static Perm identity(int n);
  static Perm simple(int n, int i);
  static Perm longest(int n);
  /// s_{r_1} s_{r_2} ... s_{r_m}
  static Perm from_word(int n, const std::vector<int>& word);

  [[nodiscard]] int size() const { return static_cast<int>(img_.size()); }
  /// w(p) for 1-based p.
  [[nodiscard]] int operator()(int p) const { return img_[static_cast<std::size_t>(p - 1)]; }
  [[nodiscard]] const std::vector<int>& one_line() const { return img_; }

  [[nodiscard]] Perm inverse() const;
  [[nodiscard]] int length() const;  // number of inversions
  [[nodiscard]] bool is_identity() const;
  /// l(s_i w) < l(w)
  [[nodiscard]] bool has_left_descent(int i) const;
  /// Lexicographically smallest reduced expression (r_1, ..., r_m) with
  /// w = s_{r_1} ... s_{r_m}.
  [[nodiscard]] std::vector<int> reduced_word() const;
  [[nodiscard]] std::string str() const;

  friend Perm operator*(const Perm& v, const Perm& w);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

/// All of S_n ordered by length, then lexicographically by one-line form.
/// The identity comes first.
std::vector<Perm> all_perms(int n);

/// Indexed view of S_n with cached lengths, canonical words and the left
/// action of simple reflections. Elements are addressed by their position in
/// all_perms(n).
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int order() const { return static_cast<int>(perms_.size()); }
  [[nodiscard]] const Perm& perm(int idx) const { return perms_[static_cast<std::size_t>(idx)]; }
  [[nodiscard]] int index(const Perm& w) const { return index_.at(w); }
  [[nodiscard]] int length(int idx) const { return lengths_[static_cast<std::size_t>(idx)]; }
  [[nodiscard]] const std::vector<int>& word(int idx) const { return words_[static_cast<std::size_t>(idx)]; }
  /// index of s_k w (k is 1-based)
  [[nodiscard]] int left_mul(int k, int idx) const {
    return left_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(k - 1)];
  }
  [[nodiscard]] int identity() const { return 0; }
  [[nodiscard]] int longest() const { return order() - 1; }

 private:
  int n_;
  std::vector<Perm> perms_;
  std::map<Perm, int> index_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> left_;
};

/// Move turning one reduced word into another: a commutation
/// s_a s_b -> s_b s_a (|a-b| > 1) or a braid move s_a s_b s_a -> s_b s_a s_b
/// at letter position `pos` (0-based).
struct BraidMove {
  bool braid;
  int pos;
};

/// Shortest sequence of moves from `from` to `to` (both reduced words for the
/// same permutation). Results are cached per pair.
const std::vector<BraidMove>& braid_path(const std::vector<int>& from, const std::vector<int>& to);

/// Applies a move to a word in place.
void apply_move(std::vector<int>& word, const BraidMove& move);

}  // namespace kmcat
