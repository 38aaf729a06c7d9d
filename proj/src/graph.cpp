#include "rwl/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace rwl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::loop_rejected: return "loop-rejected";
    case ErrorKind::vertex_out_of_range: return "vertex-out-of-range";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::order_mismatch: return "order-mismatch";
    case ErrorKind::zero_constant_term: return "zero-constant-term";
    case ErrorKind::constant_term_not_one: return "constant-term-not-one";
    case ErrorKind::nonzero_inner_constant: return "nonzero-inner-constant";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::invalid_n: return "invalid-n";
    case ErrorKind::non_integral: return "non-integral";
  }
  return "unknown";
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::string name)
    : adj_(n), name_(std::move(name)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::vertex_out_of_range,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw Error(ErrorKind::loop_rejected, "self-loop at vertex " + std::to_string(u));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
  if (n <= kMaxDpOrder) {
    masks_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex w : adj_[v]) masks_[v] |= std::uint64_t{1} << w;
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::king: return "king";
    case FamilyKind::grid: return "grid";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (auto k : {FamilyKind::complete, FamilyKind::path, FamilyKind::cycle, FamilyKind::king,
                 FamilyKind::grid}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

void FamilySpec::validate() const {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::invalid_spec, label() + ": " + why);
  };
  if (n < 1) fail("n must be at least 1");
  switch (kind) {
    case FamilyKind::cycle:
      if (n < 3) fail("a cycle needs at least 3 vertices");
      break;
    case FamilyKind::king:
    case FamilyKind::grid:
      if (m < 1) fail("m must be at least 1");
      break;
    default:
      break;
  }
}

std::size_t FamilySpec::vertex_count() const {
  return (kind == FamilyKind::king || kind == FamilyKind::grid) ? m * n : n;
}

std::string FamilySpec::label() const {
  std::string out(to_string(kind));
  if (kind == FamilyKind::king || kind == FamilyKind::grid) {
    out += "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  } else {
    out += "(" + std::to_string(n) + ")";
  }
  return out;
}

std::vector<FamilySpec> family_specs_up_to(std::size_t max_order) {
  std::vector<FamilySpec> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    out.push_back(FamilySpec::path(n));
    if (n >= 3) out.push_back(FamilySpec::cycle(n));
    out.push_back(FamilySpec::complete(n));
  }
  for (std::size_t m = 1; m <= max_order; ++m) {
    for (std::size_t n = 1; m * n <= max_order; ++n) {
      out.push_back(FamilySpec::king(m, n));
      out.push_back(FamilySpec::grid(m, n));
    }
  }
  return out;
}

Graph build_family(const FamilySpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(spec.n);
  switch (spec.kind) {
    case FamilyKind::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::path:
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case FamilyKind::cycle:
      for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case FamilyKind::king:
    case FamilyKind::grid: {
      const auto m = static_cast<Vertex>(spec.m);
      const bool king = spec.kind == FamilyKind::king;
      auto id = [n](Vertex i, Vertex j) { return i * n + j; };
      for (Vertex i = 0; i < m; ++i) {
        for (Vertex j = 0; j < n; ++j) {
          if (j + 1 < n) edges.emplace_back(id(i, j), id(i, j + 1));
          if (i + 1 < m) edges.emplace_back(id(i, j), id(i + 1, j));
          if (king && i + 1 < m && j + 1 < n) edges.emplace_back(id(i, j), id(i + 1, j + 1));
          if (king && i + 1 < m && j > 0) edges.emplace_back(id(i, j), id(i + 1, j - 1));
        }
      }
      break;
    }
  }
  return Graph(spec.vertex_count(), edges, spec.label());
}

namespace {

// Splits a line into unsigned integer tokens; '#' ends the line.
std::vector<std::size_t> tokens(std::string_view line, int lineno) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    std::size_t value = 0;
    auto tok = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(lineno) + ": expected a nonnegative integer, got '" +
                      std::string(tok) + "'",
                  lineno);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  int lineno = 0;
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    auto tok = tokens(line, lineno);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = lineno;
    if (tok.size() != 2) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(lineno) + ": expected two integers, got " +
                      std::to_string(tok.size()),
                  lineno);
    }
    if (!header) {
      header.emplace(tok[0], tok[1]);
      continue;
    }
    if (edges.size() == header->second) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(lineno) + ": more edge lines than the declared " +
                      std::to_string(header->second),
                  lineno);
    }
    if (tok[0] >= header->first || tok[1] >= header->first) {
      throw Error(ErrorKind::vertex_out_of_range,
                  "line " + std::to_string(lineno) + ": vertex out of range 0.." +
                      std::to_string(header->first == 0 ? 0 : header->first - 1),
                  lineno);
    }
    if (tok[0] == tok[1]) {
      throw Error(ErrorKind::loop_rejected,
                  "line " + std::to_string(lineno) + ": self-loop at vertex " +
                      std::to_string(tok[0]),
                  lineno);
    }
    edges.emplace_back(static_cast<Vertex>(tok[0]), static_cast<Vertex>(tok[1]));
    if (end == text.size()) break;
  }
  if (!header) throw Error(ErrorKind::parse_error, "missing 'n m' header line", lineno);
  if (header->first < 1) throw Error(ErrorKind::parse_error, "graph must have at least one vertex", 1);
  if (edges.size() != header->second) {
    throw Error(ErrorKind::parse_error,
                "declared " + std::to_string(header->second) + " edges but found " +
                    std::to_string(edges.size()),
                last_line);
  }
  return Graph(header->first, edges);
}

std::string render_graph(const Graph& g) {
  std::ostringstream os;
  auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw Error(ErrorKind::invalid_spec, "relabel: permutation size does not match graph order");
  }
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p >= perm.size() || hit[p]) throw Error(ErrorKind::invalid_spec, "relabel: not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges, g.name());
}

Graph random_connected_graph(std::size_t n, double extra_edge_prob, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorKind::invalid_spec, "random graph needs at least one vertex");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.emplace_back(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(extra_edge_prob);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges, "random(" + std::to_string(n) + ")");
}

}  // namespace rwl
