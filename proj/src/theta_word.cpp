#include "gbt/theta_word.hpp"

#include <cctype>
#include <cstdlib>

#include "gbt/error.hpp"

namespace gbt {

FreeWord::FreeWord(int rank, std::span<const int> letters) : rank_(rank) {
  if (rank < 1) throw Error("free group rank must be positive");
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0 || std::abs(x) > rank)
      throw Error("free letter " + std::to_string(x) + " out of range for rank " +
                  std::to_string(rank));
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

FreeWord reduce(int rank, std::span<const int> letters) { return FreeWord(rank, letters); }

FreeWord FreeWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& x : inv) x = -x;
  return FreeWord(rank_, inv);
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_) throw Error("free words of different rank");
  std::vector<int> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(a.rank_, joined);
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

void ThetaWord::check_arms(int n) {
  if (n < 2) throw Error("theta graph needs at least 2 arms");
}

ThetaWord::ThetaWord(int n, std::vector<ThetaLetter> letters) : n_(n) {
  check_arms(n);
  for (const ThetaLetter& l : letters) append(l.from, l.to, l.inverse);
}

ThetaWord ThetaWord::gamma(int n, int i, int j) {
  ThetaWord w(n);
  w.append(i, j);
  return w;
}

void ThetaWord::append(int i, int j, bool inverse) {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw Error("theta letter g(" + std::to_string(i) + "," + std::to_string(j) +
                ") out of range for " + std::to_string(n_) + " arms");
  if (i == j) return;
  letters_.push_back({i, j, inverse});
}

ThetaWord ThetaWord::inverse() const {
  ThetaWord out(n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->from, it->to, !it->inverse});
  return out;
}

ThetaWord ThetaWord::widened(int n) const {
  if (n < n_) throw Error("cannot narrow a theta word");
  return ThetaWord(n, letters_);
}

ThetaWord operator*(const ThetaWord& a, const ThetaWord& b) {
  if (a.n_ != b.n_) throw Error("theta words over different theta graphs");
  ThetaWord out = a;
  out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
  return out;
}

std::string ThetaWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const ThetaLetter& l : letters_) {
    if (!out.empty()) out += ' ';
    if (l.from <= 9 && l.to <= 9)
      out += 'g' + std::to_string(l.from) + std::to_string(l.to);
    else
      out += "g(" + std::to_string(l.from) + ',' + std::to_string(l.to) + ')';
    if (l.inverse) out += "^-1";
  }
  return out;
}

ThetaWord parse_theta_word(int n, std::string_view text) {
  ThetaWord w(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error("cannot parse theta word at offset " + std::to_string(pos) + ": " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected a number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto expect = [&](char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  bool saw_identity = false;
  for (skip_space(); pos < text.size(); skip_space()) {
    if (text[pos] == '1') {
      ++pos;
      saw_identity = true;
      continue;
    }
    if (text[pos] != 'g') throw fail("expected 'g'");
    ++pos;
    int i = 0, j = 0;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      i = read_int();
      expect(',');
      j = read_int();
      expect(')');
    } else {
      if (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])) ||
          !std::isdigit(static_cast<unsigned char>(text[pos + 1])))
        throw fail("expected two digits after 'g'");
      i = text[pos] - '0';
      j = text[pos + 1] - '0';
      pos += 2;
    }
    bool inverse = false;
    if (text.substr(pos, 3) == "^-1") {
      inverse = true;
      pos += 3;
    }
    w.append(i, j, inverse);
  }
  if (saw_identity && !w.empty()) throw Error("identity marker '1' mixed with letters");
  return w;
}

FreeWord encode(const ThetaWord& w) {
  std::vector<int> raw;
  raw.reserve(2 * w.length());
  for (const ThetaLetter& l : w.letters()) {
    if (l.inverse) {
      raw.push_back(l.to);
      raw.push_back(-l.from);
    } else {
      raw.push_back(l.from);
      raw.push_back(-l.to);
    }
  }
  return FreeWord(w.arms(), raw);
}

bool is_trivial(const ThetaWord& w) { return encode(w).empty(); }

std::vector<long> abelianize(const ThetaWord& w) {
  std::vector<long> sums(static_cast<std::size_t>(w.arms()), 0);
  const FreeWord free = encode(w);
  for (int x : free.letters()) sums[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  return sums;
}

ThetaWord free_generator_decomposition(const ThetaWord& w) {
  // Basis letter +i stands for gamma(i, i+1), -i for its inverse.
  std::vector<int> raw;
  for (const ThetaLetter& l : w.letters()) {
    std::vector<int> piece;
    if (l.from < l.to) {
      for (int i = l.from; i < l.to; ++i) piece.push_back(i);
    } else {
      for (int i = l.from - 1; i >= l.to; --i) piece.push_back(-i);
    }
    if (l.inverse) {
      std::vector<int> inv(piece.rbegin(), piece.rend());
      for (int& x : inv) x = -x;
      piece = std::move(inv);
    }
    raw.insert(raw.end(), piece.begin(), piece.end());
  }
  FreeWord reduced(std::max(1, w.arms() - 1), raw);
  ThetaWord out(w.arms());
  for (int x : reduced.letters()) {
    int i = std::abs(x);
    out.append(i, i + 1, x < 0);
  }
  return out;
}

bool ProductWord::is_trivial() const {
  for (const auto& [vertex, word] : components)
    if (!gbt::is_trivial(word)) return false;
  return true;
}

}  // namespace gbt
