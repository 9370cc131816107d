#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gbt {

/// Unordered pair of particle indices, stored ascending.
using IndexPair = std::array<int, 2>;

/// Assignment of disjoint 2-element subsets of {1..k} to the vertices of W
/// whose union is {1..k}. Blocks keep the order of W.
class BinaryWPartition {
 public:
  struct Block {
    std::string vertex;
    IndexPair pair;

    friend bool operator==(const Block&, const Block&) = default;
  };

  BinaryWPartition() = default;
  /// Validates the invariants; throws gbt::Error.
  BinaryWPartition(int k, std::vector<Block> blocks);

  int k() const { return k_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<std::string> vertices() const;
  /// lambda(v); throws for vertices outside W.
  const IndexPair& at(std::string_view vertex) const;

  /// "u:{1,2} w:{3,4}".
  std::string to_string() const;

  /// Equal as assignments (block order is irrelevant).
  friend bool operator==(const BinaryWPartition& a, const BinaryWPartition& b);

 private:
  int k_ = 0;
  std::vector<Block> blocks_;
};

/// Parses "u:{1,2} w:{3,4}"; k is inferred as twice the block count.
BinaryWPartition parse_partition(std::string_view text);

/// All binary W-partitions of {1..k}: the first vertex of W takes each
/// available pair in lexicographic order, recursively. Count (2d)!/2^d.
std::vector<BinaryWPartition> enumerate_partitions(int k, const std::vector<std::string>& W);

/// No pair occurs in both collections: lambda(v) != mu(w) for all v, w.
bool disjoint(const BinaryWPartition& lambda, const BinaryWPartition& mu);

/// Size of lambda(v) intersected with mu(w).
int overlap(const BinaryWPartition& lambda, const BinaryWPartition& mu, std::string_view v,
            std::string_view w);

/// lambda = {1,2},{3,4},...; mu = {2,3},{4,5},...,{2d,1}. nullopt when |W| = 1.
std::optional<std::pair<BinaryWPartition, BinaryWPartition>> witness_disjoint_pair(
    int k, const std::vector<std::string>& W);

}  // namespace gbt
