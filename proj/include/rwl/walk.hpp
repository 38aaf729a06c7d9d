#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "rwl/exact.hpp"
#include "rwl/graph.hpp"

namespace rwl {

// seq[i] is the vertex that received label i+1.
struct LabelingOrder {
  std::vector<Vertex> seq;

  friend auto operator<=>(const LabelingOrder&, const LabelingOrder&) = default;
};

// labels[v] is the label (1..n) of vertex v. Throws Error{invalid_spec} unless
// labels is a bijection onto 1..n.
LabelingOrder order_from_labels(std::span<const unsigned> labels);
std::vector<unsigned> labels_from_order(const LabelingOrder& order);

// True iff order is a permutation of g's vertices and every prefix induces a
// connected subgraph.
bool has_connected_prefixes(const Graph& g, const LabelingOrder& order);

inline constexpr std::size_t kMaxWalkOrder = 10;

// Every labeling the walk process can produce, sorted. The walker stands on
// a vertex and repeatedly steps to a neighbor, labeling it if unlabeled.
// Moves among labeled vertices are closed over per labeled sequence, so the
// search terminates even though walks themselves are unbounded.
// Throws Error{too_large} when g has more than kMaxWalkOrder vertices.
std::vector<LabelingOrder> enumerate_labelings_walk(const Graph& g);

// Membership test against enumerate_labelings_walk.
bool is_walk_obtainable(const Graph& g, const LabelingOrder& order);

enum class DpMode {
  automatic,  // dense up to kDenseDpLimit vertices, layered beyond
  dense,      // one counter per subset
  layered,    // two popcount layers of connected subsets only
};

inline constexpr std::size_t kDenseDpLimit = 22;
inline constexpr std::size_t kDenseDpHardLimit = 28;

struct DpOptions {
  DpMode mode = DpMode::automatic;
  unsigned threads = 1;
};

// Number of vertex orderings whose every prefix is connected; zero for
// disconnected graphs. Throws Error{too_large} past kMaxDpOrder vertices, or
// past kDenseDpHardLimit in dense mode.
Natural count_labelings_dp(const Graph& g, const DpOptions& opts = {});

// Same count restricted to orderings that start at v.
Natural count_labelings_started_at(const Graph& g, Vertex v, const DpOptions& opts = {});

}  // namespace rwl
