#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

enum class SourceTag { kGeneratedTrees, kGeneratedGraphs, kGeneratedUnicyclic, kFile };

std::string_view to_string(SourceTag tag);

struct StreamItem {
  Graph graph;
  // 1-based source line for file streams, 0 otherwise.
  int line = 0;
};

// Pull-based lazy sequence of graphs.
class InstanceStream {
 public:
  using Pull = std::function<std::optional<StreamItem>()>;

  InstanceStream(SourceTag tag, int min_order, int max_order, Pull pull)
      : tag_(tag), min_order_(min_order), max_order_(max_order), pull_(std::move(pull)) {}

  SourceTag tag() const { return tag_; }
  int min_order() const { return min_order_; }
  int max_order() const { return max_order_; }

  std::optional<StreamItem> next() { return pull_(); }

  // Drains the rest of the stream.
  std::vector<Graph> collect();

 private:
  SourceTag tag_;
  int min_order_;
  int max_order_;
  Pull pull_;
};

inline constexpr int kMaxTreeOrder = 16;
inline constexpr int kMaxGraphOrder = 7;
inline constexpr int kMinUnicyclicOrder = 3;
inline constexpr int kMaxUnicyclicOrder = 10;

// Every free tree on n vertices once (1 <= n <= 16). Trees come from
// canonical rooted level sequences whose root is a centroid; vertex ids
// follow the level sequence (preorder).
InstanceStream free_trees(int n);

// Every graph on n vertices once up to isomorphism, connected or not
// (0 <= n <= 7).
std::vector<Graph> all_graphs(int n);

// Every connected graph on n vertices once (1 <= n <= 7).
InstanceStream connected_graphs(int n);

// Every connected graph with |E| = |V| on n vertices once (3 <= n <= 10).
InstanceStream unicyclic_graphs(int n);

// graph6 lines in file order. Blank lines and lines starting with '>' are
// skipped; ">>graph6<<" in front of a graph is stripped. Malformed lines
// raise Graph6Error carrying the line number when pulled.
InstanceStream read_graph6_stream(const std::string& path);
InstanceStream read_graph6_stream(std::shared_ptr<std::istream> in);

}  // namespace rdom
