#include "gbt/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gbt/error.hpp"

namespace gbt {

namespace {

void check_size(int k, const std::vector<std::string>& W) {
  if (k < 2 || k != 2 * static_cast<int>(W.size()))
    throw Error("binary W-partition needs k = 2|W| >= 2 (k = " + std::to_string(k) +
                ", |W| = " + std::to_string(W.size()) + ")");
  std::set<std::string> distinct(W.begin(), W.end());
  if (distinct.size() != W.size()) throw Error("W lists a vertex twice");
}

void check_compatible(const BinaryWPartition& a, const BinaryWPartition& b) {
  auto va = a.vertices();
  auto vb = b.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (a.k() != b.k() || va != vb) throw Error("partitions over different k or W");
}

}  // namespace

BinaryWPartition::BinaryWPartition(int k, std::vector<Block> blocks)
    : k_(k), blocks_(std::move(blocks)) {
  if (k_ != 2 * static_cast<int>(blocks_.size()) || k_ < 2)
    throw Error("binary W-partition of {1.." + std::to_string(k_) + "} needs exactly " +
                std::to_string(k_ / 2) + " blocks covering every index");
  std::vector<bool> used(static_cast<std::size_t>(k_) + 1, false);
  std::set<std::string> vertices;
  for (Block& b : blocks_) {
    if (!vertices.insert(b.vertex).second) throw Error("vertex '" + b.vertex + "' has two blocks");
    if (b.pair[0] > b.pair[1]) std::swap(b.pair[0], b.pair[1]);
    for (int i : b.pair) {
      if (i < 1 || i > k_) throw Error("index " + std::to_string(i) + " outside 1.." + std::to_string(k_));
      if (used[static_cast<std::size_t>(i)])
        throw Error("index " + std::to_string(i) + " appears in two blocks");
      used[static_cast<std::size_t>(i)] = true;
    }
  }
}

std::vector<std::string> BinaryWPartition::vertices() const {
  std::vector<std::string> out;
  for (const Block& b : blocks_) out.push_back(b.vertex);
  return out;
}

const IndexPair& BinaryWPartition::at(std::string_view vertex) const {
  for (const Block& b : blocks_)
    if (b.vertex == vertex) return b.pair;
  throw Error("vertex '" + std::string(vertex) + "' is not in W");
}

std::string BinaryWPartition::to_string() const {
  std::string out;
  for (const Block& b : blocks_) {
    if (!out.empty()) out += ' ';
    out += b.vertex + ":{" + std::to_string(b.pair[0]) + "," + std::to_string(b.pair[1]) + "}";
  }
  return out;
}

bool operator==(const BinaryWPartition& a, const BinaryWPartition& b) {
  if (a.k_ != b.k_ || a.blocks_.size() != b.blocks_.size()) return false;
  for (const auto& block : a.blocks_) {
    auto it = std::find_if(b.blocks_.begin(), b.blocks_.end(),
                           [&](const auto& other) { return other.vertex == block.vertex; });
    if (it == b.blocks_.end() || it->pair != block.pair) return false;
  }
  return true;
}

BinaryWPartition parse_partition(std::string_view text) {
  std::vector<BinaryWPartition::Block> blocks;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    return Error("cannot parse partition at offset " + std::to_string(pos) + ": " + why);
  };
  auto number = [&] {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected an index");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  for (skip(); pos < text.size(); skip()) {
    std::size_t colon = text.find(':', pos);
    if (colon == std::string_view::npos) throw fail("expected 'vertex:{i,j}'");
    std::string vertex(text.substr(pos, colon - pos));
    while (!vertex.empty() && std::isspace(static_cast<unsigned char>(vertex.back()))) vertex.pop_back();
    if (vertex.empty()) throw fail("empty vertex name");
    pos = colon + 1;
    expect('{');
    int i = number();
    expect(',');
    int j = number();
    expect('}');
    blocks.push_back({vertex, {i, j}});
  }
  const int k = 2 * static_cast<int>(blocks.size());
  return BinaryWPartition(k, std::move(blocks));
}

std::vector<BinaryWPartition> enumerate_partitions(int k, const std::vector<std::string>& W) {
  check_size(k, W);
  std::vector<BinaryWPartition> out;
  std::vector<BinaryWPartition::Block> current;
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == W.size()) {
      out.emplace_back(k, current);
      return;
    }
    for (int i = 1; i <= k; ++i) {
      if (used[i]) continue;
      for (int j = i + 1; j <= k; ++j) {
        if (used[j]) continue;
        used[i] = used[j] = true;
        current.push_back({W[depth], {i, j}});
        self(self, depth + 1);
        current.pop_back();
        used[i] = used[j] = false;
      }
    }
  };
  recurse(recurse, 0);
  return out;
}

bool disjoint(const BinaryWPartition& lambda, const BinaryWPartition& mu) {
  check_compatible(lambda, mu);
  for (const auto& a : lambda.blocks())
    for (const auto& b : mu.blocks())
      if (a.pair == b.pair) return false;
  return true;
}

int overlap(const BinaryWPartition& lambda, const BinaryWPartition& mu, std::string_view v,
            std::string_view w) {
  const IndexPair& a = lambda.at(v);
  const IndexPair& b = mu.at(w);
  int count = 0;
  for (int x : a)
    if (x == b[0] || x == b[1]) ++count;
  return count;
}

std::optional<std::pair<BinaryWPartition, BinaryWPartition>> witness_disjoint_pair(
    int k, const std::vector<std::string>& W) {
  check_size(k, W);
  const int d = static_cast<int>(W.size());
  if (d < 2) return std::nullopt;
  std::vector<BinaryWPartition::Block> lambda, mu;
  for (int i = 0; i < d; ++i) {
    lambda.push_back({W[i], {2 * i + 1, 2 * i + 2}});
    mu.push_back({W[i], {2 * i + 2, i + 1 < d ? 2 * i + 3 : 1}});
  }
  return std::make_pair(BinaryWPartition(k, std::move(lambda)), BinaryWPartition(k, std::move(mu)));
}

}  // namespace gbt
