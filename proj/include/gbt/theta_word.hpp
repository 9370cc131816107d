#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gbt {

/// Reduced word in the free group on x_1..x_rank. Letter +i is x_i and -i is
/// x_i^{-1}. Always stored freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces `letters`; throws gbt::Error if a letter is out of range.
  FreeWord(int rank, std::span<const int> letters);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// "x1 x2^-1 ..."; the identity prints as "1".
  std::string to_string() const;

 private:
  int rank_ = 1;
  std::vector<int> letters_;
};

/// Stack-based free reduction of a raw letter sequence.
FreeWord reduce(int rank, std::span<const int> letters);
inline FreeWord reduce(const FreeWord& w) { return w; }

/// gamma(i, j)^{+-1}: the loop in the theta graph that runs out along arm i
/// to the vertex at infinity and back in along arm j.
struct ThetaLetter {
  int from = 1;
  int to = 2;
  bool inverse = false;

  friend bool operator==(const ThetaLetter&, const ThetaLetter&) = default;
};

/// Element of the fundamental group of the theta graph with n arms, based at
/// the vertex at infinity, written in the loops gamma(i, j).
class ThetaWord {
 public:
  ThetaWord() = default;
  explicit ThetaWord(int n) : n_(n) { check_arms(n); }
  ThetaWord(int n, std::vector<ThetaLetter> letters);

  static ThetaWord gamma(int n, int i, int j);

  int arms() const { return n_; }
  const std::vector<ThetaLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends gamma(i, j)^{+-1}; gamma(i, i) is the identity and is dropped.
  void append(int i, int j, bool inverse = false);

  ThetaWord inverse() const;
  /// Same word read in the theta graph with more arms.
  ThetaWord widened(int n) const;
  friend ThetaWord operator*(const ThetaWord& a, const ThetaWord& b);
  friend bool operator==(const ThetaWord&, const ThetaWord&) = default;

  /// "g12 g23^-1 ..." (indices above 9 print as "g(10,11)"); identity is "1".
  std::string to_string() const;

 private:
  static void check_arms(int n);

  int n_ = 3;
  std::vector<ThetaLetter> letters_;
};

/// Accepts the to_string forms with arbitrary whitespace. Throws gbt::Error.
ThetaWord parse_theta_word(int n, std::string_view text);

/// gamma(i, j) -> x_i x_j^{-1} in the free group of rank n. Faithful, so the
/// image is empty exactly when the word is the identity.
FreeWord encode(const ThetaWord& w);

/// Triviality in the free group; invariant under conjugation.
bool is_trivial(const ThetaWord& w);
inline bool is_conjugate_trivial(const ThetaWord& w) { return is_trivial(w); }

/// Exponent sums of encode(w) over x_1..x_n. The entries always sum to zero.
std::vector<long> abelianize(const ThetaWord& w);

/// Rewrites w in the free basis gamma(i, i+1), 1 <= i < n, using
/// gamma(i, k) = gamma(i, i+1) ... gamma(k-1, k) for i < k and inverses for
/// i > k. The result is freely reduced in that basis.
ThetaWord free_generator_decomposition(const ThetaWord& w);

/// Element of a product of theta-graph fundamental groups, one factor per
/// vertex name.
struct ProductWord {
  std::map<std::string, ThetaWord> components;

  bool is_trivial() const;
};

}  // namespace gbt
