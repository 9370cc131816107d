#include "gbt/sparse_rank.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include <boost/multiprecision/cpp_int.hpp>

#include "gbt/error.hpp"

namespace gbt {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

namespace {

struct Overflow {};

using BigInt = boost::multiprecision::cpp_int;

// Integer arithmetic policies. Integers combine fraction-free; the modular
// policy treats every nonzero value as a unit.
struct CheckedInt64 {
  using Value = std::int64_t;
  static Value from(int x) { return x; }
  static bool is_unit(Value v) { return v == 1 || v == -1; }
  static Value mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Value gcd(Value a, Value b) {
    if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
    return std::gcd(a, b);
  }
  static Value abs(Value a) { return a < 0 ? -a : a; }
  static Value div(Value a, Value b) { return a / b; }
};

struct BigIntegers {
  using Value = BigInt;
  static Value from(int x) { return Value(x); }
  static bool is_unit(const Value& v) { return v == 1 || v == -1; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value gcd(const Value& a, const Value& b) { return boost::multiprecision::gcd(a, b); }
  static Value abs(const Value& a) { return boost::multiprecision::abs(a); }
  static Value div(const Value& a, const Value& b) { return a / b; }
};

struct ModP {
  using Value = std::uint32_t;
  std::uint32_t p;
};

template <class Value>
struct Entry {
  std::uint32_t key;
  Value val;
};

// Structured elimination over the row indices of the matrix ("keys"). The
// working vectors are the columns.
template <class Value, class Combine>
std::size_t eliminate(std::vector<std::vector<Entry<Value>>> vecs, std::size_t keys,
                      Combine&& combine, bool (*prefer)(const Value&)) {
  const std::uint32_t n = static_cast<std::uint32_t>(vecs.size());
  std::vector<std::vector<std::uint32_t>> holders(keys);
  std::vector<std::uint32_t> count(keys, 0);
  std::vector<bool> done(keys, false);
  std::vector<bool> alive(n, true);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;

  for (std::uint32_t j = 0; j < n; ++j) {
    if (vecs[j].empty()) alive[j] = false;
    for (const auto& e : vecs[j]) {
      holders[e.key].push_back(j);
      ++count[e.key];
    }
  }
  using Item = std::pair<std::uint32_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::uint32_t k = 0; k < keys; ++k) heap.push({count[k], k});

  auto find = [](const std::vector<Entry<Value>>& v, std::uint32_t key) {
    auto it = std::lower_bound(v.begin(), v.end(), key,
                               [](const Entry<Value>& e, std::uint32_t k) { return e.key < k; });
    return (it != v.end() && it->key == key) ? it : v.end();
  };

  std::size_t rank = 0;
  std::vector<std::uint32_t> candidates;
  std::vector<std::uint32_t> added, removed;
  while (!heap.empty()) {
    auto [c, key] = heap.top();
    heap.pop();
    if (done[key] || c != count[key]) continue;
    done[key] = true;
    if (c == 0) continue;

    ++epoch;
    candidates.clear();
    for (std::uint32_t j : holders[key]) {
      if (!alive[j] || stamp[j] == epoch) continue;
      if (find(vecs[j], key) == vecs[j].end()) continue;
      stamp[j] = epoch;
      candidates.push_back(j);
    }
    holders[key].clear();

    std::uint32_t pivot = candidates.front();
    for (std::uint32_t j : candidates) {
      const bool pu = prefer(find(vecs[pivot], key)->val);
      const bool ju = prefer(find(vecs[j], key)->val);
      if ((ju && !pu) || (ju == pu && vecs[j].size() < vecs[pivot].size())) pivot = j;
    }
    ++rank;

    for (std::uint32_t j : candidates) {
      if (j == pivot) continue;
      added.clear();
      removed.clear();
      vecs[j] = combine(vecs[j], vecs[pivot], key, added, removed);
      for (std::uint32_t k : removed) {
        --count[k];
        if (!done[k]) heap.push({count[k], k});
      }
      for (std::uint32_t k : added) {
        ++count[k];
        holders[k].push_back(j);
        if (!done[k]) heap.push({count[k], k});
      }
      if (vecs[j].empty()) alive[j] = false;
    }
    for (const auto& e : vecs[pivot]) {
      --count[e.key];
      if (!done[e.key]) heap.push({count[e.key], e.key});
    }
    alive[pivot] = false;
    vecs[pivot].clear();
    vecs[pivot].shrink_to_fit();
  }
  return rank;
}

// target := p * target - a * pivot (scaled down by gcd(a, p)), then divided
// by its content when any entry left {-1, 0, 1}.
template <class A>
struct IntegerCombine {
  using Value = typename A::Value;
  std::vector<Entry<Value>> operator()(const std::vector<Entry<Value>>& target,
                                       const std::vector<Entry<Value>>& pivot, std::uint32_t key,
                                       std::vector<std::uint32_t>& added,
                                       std::vector<std::uint32_t>& removed) const {
    Value a{}, p{};
    for (const auto& e : target)
      if (e.key == key) a = e.val;
    for (const auto& e : pivot)
      if (e.key == key) p = e.val;
    Value st, sp;  // target scale, pivot scale
    if (A::is_unit(p)) {
      st = A::from(1);
      sp = A::mul(a, p);
    } else {
      Value g = A::gcd(a, p);
      st = A::div(p, g);
      sp = A::div(a, g);
    }
    std::vector<Entry<Value>> out;
    out.reserve(target.size() + pivot.size());
    bool large = false;
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].key < pivot[j].key)) {
        Value v = A::mul(st, target[i].val);
        large = large || !A::is_unit(v);
        out.push_back({target[i].key, std::move(v)});
        ++i;
      } else if (i == target.size() || pivot[j].key < target[i].key) {
        Value v = A::sub(Value{0}, A::mul(sp, pivot[j].val));
        large = large || !A::is_unit(v);
        added.push_back(pivot[j].key);
        out.push_back({pivot[j].key, std::move(v)});
        ++j;
      } else {
        Value v = A::sub(A::mul(st, target[i].val), A::mul(sp, pivot[j].val));
        if (v == 0) {
          removed.push_back(target[i].key);
        } else {
          large = large || !A::is_unit(v);
          out.push_back({target[i].key, std::move(v)});
        }
        ++i;
        ++j;
      }
    }
    if (large && !out.empty()) {
      Value g = A::abs(out.front().val);
      for (const auto& e : out) {
        if (A::is_unit(g)) break;
        g = A::gcd(g, e.val);
      }
      g = A::abs(g);
      if (!A::is_unit(g))
        for (auto& e : out) e.val = A::div(e.val, g);
    }
    return out;
  }
};

template <class A>
std::size_t integer_rank(const SparseMatrix& m) {
  using Value = typename A::Value;
  std::vector<std::vector<Entry<Value>>> vecs(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) vecs[c].push_back({r, A::from(v)});
  return eliminate<Value>(std::move(vecs), m.rows, IntegerCombine<A>{},
                          +[](const Value& v) { return A::is_unit(v); });
}

std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

RankResult exact_rank(const SparseMatrix& m) {
  if (m.columns.size() != m.cols) throw Error("sparse matrix column count mismatch");
  try {
    return {integer_rank<CheckedInt64>(m), false};
  } catch (const Overflow&) {
    return {integer_rank<BigIntegers>(m), true};
  }
}

std::size_t exact_rank_bigint(const SparseMatrix& m) { return integer_rank<BigIntegers>(m); }

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  if (p < 2) throw Error("rank_mod_p: modulus must be prime");
  using Value = std::uint32_t;
  std::vector<std::vector<Entry<Value>>> vecs(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.columns[c]) {
      long long x = v % static_cast<long long>(p);
      if (x < 0) x += p;
      if (x != 0) vecs[c].push_back({r, static_cast<Value>(x)});
    }
  }
  auto combine = [p](const std::vector<Entry<Value>>& target, const std::vector<Entry<Value>>& pivot,
                     std::uint32_t key, std::vector<std::uint32_t>& added,
                     std::vector<std::uint32_t>& removed) {
    std::uint64_t a = 0, q = 0;
    for (const auto& e : target)
      if (e.key == key) a = e.val;
    for (const auto& e : pivot)
      if (e.key == key) q = e.val;
    const std::uint64_t f = a * power_mod(q, p - 2, p) % p;  // target -= f * pivot
    std::vector<Entry<Value>> out;
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].key < pivot[j].key)) {
        out.push_back(target[i++]);
      } else if (i == target.size() || pivot[j].key < target[i].key) {
        added.push_back(pivot[j].key);
        out.push_back({pivot[j].key, static_cast<Value>((p - f * pivot[j].val % p) % p)});
        ++j;
      } else {
        std::uint64_t v = (target[i].val + p - f * pivot[j].val % p) % p;
        if (v == 0)
          removed.push_back(target[i].key);
        else
          out.push_back({target[i].key, static_cast<Value>(v)});
        ++i;
        ++j;
      }
    }
    return out;
  };
  return eliminate<Value>(std::move(vecs), m.rows, combine, +[](const Value&) { return true; });
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw Error("multiply: dimension mismatch");
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.columns.resize(b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) {
    std::map<std::uint32_t, long long> acc;
    for (const auto& [k, bv] : b.columns[c])
      for (const auto& [r, av] : a.columns[k]) acc[r] += static_cast<long long>(av) * bv;
    for (const auto& [r, v] : acc)
      if (v != 0) out.columns[c].push_back({r, static_cast<int>(v)});
  }
  return out;
}

}  // namespace gbt
