#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwl/error.hpp"

namespace rwl {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Widest graph the subset DP accepts: one machine word per vertex set.
inline constexpr std::size_t kMaxDpOrder = 64;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
  // Throws Error{loop_rejected} on self-loops and Error{vertex_out_of_range}
  // on endpoints >= n. Duplicate edges collapse.
  Graph(std::size_t n, std::span<const Edge> edges, std::string name = {});

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::string& name() const noexcept { return name_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Canonical edge list, u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool dp_eligible() const noexcept { return order() <= kMaxDpOrder; }
  // Bitset of neighbors of v; only valid when dp_eligible().
  std::uint64_t neighbor_mask(Vertex v) const { return masks_.at(v); }

  // Structural equality; the name tag is ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> masks_;
  std::size_t edge_count_ = 0;
  std::string name_;
};

enum class FamilyKind { complete, path, cycle, king, grid };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view text);

struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::size_t m = 1;  // rows; only meaningful for king and grid
  std::size_t n = 1;

  static FamilySpec complete(std::size_t n) { return {FamilyKind::complete, 1, n}; }
  static FamilySpec path(std::size_t n) { return {FamilyKind::path, 1, n}; }
  static FamilySpec cycle(std::size_t n) { return {FamilyKind::cycle, 1, n}; }
  static FamilySpec king(std::size_t m, std::size_t n) { return {FamilyKind::king, m, n}; }
  static FamilySpec grid(std::size_t m, std::size_t n) { return {FamilyKind::grid, m, n}; }

  // Throws Error{invalid_spec}.
  void validate() const;
  std::size_t vertex_count() const;
  std::string label() const;
};

// Every path, cycle, complete, king and grid spec with 1..max_order vertices
// (boards in both orientations).
std::vector<FamilySpec> family_specs_up_to(std::size_t max_order);

// Board vertex (i, j) of an m x n board is i*n + j.
Graph build_family(const FamilySpec& spec);

// Edge-list document: "n m" header, then m lines "u v". Blank lines are
// skipped and '#' starts a comment that runs to the end of the line.
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);

bool is_connected(const Graph& g);

// Returns g with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Random recursive tree over a shuffled vertex order, plus every remaining
// pair independently with probability extra_edge_prob.
Graph random_connected_graph(std::size_t n, double extra_edge_prob, std::mt19937_64& rng);

}  // namespace rwl
