#include "rwl/walk.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_map>

namespace rwl {

LabelingOrder order_from_labels(std::span<const unsigned> labels) {
  const std::size_t n = labels.size();
  LabelingOrder out;
  out.seq.assign(n, 0);
  std::vector<char> used(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    unsigned l = labels[v];
    if (l < 1 || l > n || used[l - 1]) {
      throw Error(ErrorKind::invalid_spec, "labels must be a bijection onto 1.." + std::to_string(n));
    }
    used[l - 1] = 1;
    out.seq[l - 1] = static_cast<Vertex>(v);
  }
  return out;
}

std::vector<unsigned> labels_from_order(const LabelingOrder& order) {
  std::vector<unsigned> labels(order.seq.size(), 0);
  for (std::size_t i = 0; i < order.seq.size(); ++i) {
    labels.at(order.seq[i]) = static_cast<unsigned>(i + 1);
  }
  return labels;
}

bool has_connected_prefixes(const Graph& g, const LabelingOrder& order) {
  if (order.seq.size() != g.order()) return false;
  std::vector<char> in(g.order(), 0);
  for (std::size_t i = 0; i < order.seq.size(); ++i) {
    Vertex v = order.seq[i];
    if (v >= g.order() || in[v]) return false;
    if (i > 0) {
      auto nb = g.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) return false;
    }
    in[v] = 1;
  }
  return true;
}

namespace {

class WalkExplorer {
public:
  explicit WalkExplorer(const Graph& g) : g_(g), labeled_(g.order(), 0) {}

  std::vector<LabelingOrder> run() {
    for (Vertex start = 0; start < g_.order(); ++start) {
      label(start);
      explore();
      unlabel();
    }
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

private:
  void label(Vertex v) {
    seq_.push_back(v);
    labeled_[v] = 1;
  }
  void unlabel() {
    labeled_[seq_.back()] = 0;
    seq_.pop_back();
  }

  // The walker has just labeled seq_.back() and stands there.
  void explore() {
    if (seq_.size() == g_.order()) {
      out_.push_back(LabelingOrder{seq_});
      return;
    }
    // Positions reachable by stepping only onto labeled vertices, and the
    // unlabeled vertices one step beyond them.
    std::vector<char> reached(g_.order(), 0);
    std::vector<Vertex> stack{seq_.back()};
    reached[seq_.back()] = 1;
    std::vector<Vertex> next;
    while (!stack.empty()) {
      Vertex at = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(at)) {
        if (reached[w]) continue;
        reached[w] = 1;
        if (labeled_[w]) {
          stack.push_back(w);
        } else {
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (Vertex w : next) {
      label(w);
      explore();
      unlabel();
    }
  }

  const Graph& g_;
  std::vector<char> labeled_;
  std::vector<Vertex> seq_;
  std::vector<LabelingOrder> out_;
};

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void check_dp_size(const Graph& g, DpMode mode) {
  if (!g.dp_eligible()) {
    throw Error(ErrorKind::too_large, "subset DP supports at most " + std::to_string(kMaxDpOrder) +
                                          " vertices, graph has " + std::to_string(g.order()));
  }
  if (mode == DpMode::dense && g.order() > kDenseDpHardLimit) {
    throw Error(ErrorKind::too_large, "dense subset DP supports at most " +
                                          std::to_string(kDenseDpHardLimit) + " vertices");
  }
}

unsigned worker_count(const DpOptions& opts) { return std::max(1u, opts.threads); }

template <class Fn>
void run_workers(unsigned workers, Fn&& fn) {
  if (workers == 1) {
    fn(0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back([&fn, t] { fn(t); });
}

// f(S) = sum of f(S \ {v}) over v in S adjacent to S \ {v}; layers of equal
// popcount are independent, so each worker owns a stride of every layer.
Natural dense_dp(const Graph& g, std::uint64_t start_mask, unsigned workers) {
  const std::size_t n = g.order();
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (bit(static_cast<Vertex>(n)) - 1);
  std::vector<mpz_class> f(std::size_t{1} << n);
  for (Vertex v = 0; v < n; ++v)
    if (start_mask & bit(v)) f[bit(v)] = 1;

  for (std::size_t k = 2; k <= n; ++k) {
    run_workers(workers, [&](unsigned t) {
      std::uint64_t s = (std::uint64_t{1} << k) - 1;
      for (std::size_t idx = 0; s <= full; ++idx) {
        if (idx % workers == t) {
          mpz_class& acc = f[s];
          for (std::uint64_t rest = s; rest;) {
            auto v = static_cast<Vertex>(std::countr_zero(rest));
            rest &= rest - 1;
            std::uint64_t prev = s ^ bit(v);
            if ((g.neighbor_mask(v) & prev) && sgn(f[prev]) != 0) acc += f[prev];
          }
        }
        // Next mask with the same popcount.
        std::uint64_t c = s & -s;
        std::uint64_t r = s + c;
        if (r == 0) break;
        s = (((r ^ s) >> 2) / c) | r;
      }
    });
  }
  return Natural(f[full]);
}

// Forward DP keeping only connected subsets of the current and next popcount.
Natural layered_dp(const Graph& g, std::uint64_t start_mask, unsigned workers) {
  using Layer = std::unordered_map<std::uint64_t, mpz_class>;
  const std::size_t n = g.order();
  Layer cur;
  for (Vertex v = 0; v < n; ++v)
    if (start_mask & bit(v)) cur.emplace(bit(v), 1);

  for (std::size_t k = 1; k < n && !cur.empty(); ++k) {
    std::vector<std::pair<std::uint64_t, const mpz_class*>> items;
    items.reserve(cur.size());
    for (const auto& [s, val] : cur) items.emplace_back(s, &val);
    // Deterministic order so the merge below does not depend on hashing.
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Layer> partial(workers);
    run_workers(workers, [&](unsigned t) {
      Layer& out = partial[t];
      for (std::size_t i = t; i < items.size(); i += workers) {
        auto [s, val] = items[i];
        std::uint64_t frontier = 0;
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
          frontier |= g.neighbor_mask(static_cast<Vertex>(std::countr_zero(rest)));
        }
        frontier &= ~s;
        for (; frontier; frontier &= frontier - 1) {
          out[s | bit(static_cast<Vertex>(std::countr_zero(frontier)))] += *val;
        }
      }
    });
    Layer next = std::move(partial[0]);
    for (unsigned t = 1; t < workers; ++t) {
      for (auto& [s, val] : partial[t]) next[s] += val;
    }
    cur = std::move(next);
  }
  mpz_class total;
  for (const auto& [s, val] : cur) total += val;
  return Natural(total);
}

Natural run_dp(const Graph& g, std::uint64_t start_mask, const DpOptions& opts) {
  check_dp_size(g, opts.mode);
  if (!is_connected(g)) return Natural(0);
  DpMode mode = opts.mode;
  if (mode == DpMode::automatic) {
    mode = g.order() <= kDenseDpLimit ? DpMode::dense : DpMode::layered;
  }
  const unsigned workers = worker_count(opts);
  return mode == DpMode::dense ? dense_dp(g, start_mask, workers)
                               : layered_dp(g, start_mask, workers);
}

}  // namespace

std::vector<LabelingOrder> enumerate_labelings_walk(const Graph& g) {
  if (g.order() > kMaxWalkOrder) {
    throw Error(ErrorKind::too_large, "walk enumerator supports at most " +
                                          std::to_string(kMaxWalkOrder) + " vertices, graph has " +
                                          std::to_string(g.order()));
  }
  return WalkExplorer(g).run();
}

bool is_walk_obtainable(const Graph& g, const LabelingOrder& order) {
  auto all = enumerate_labelings_walk(g);
  return std::binary_search(all.begin(), all.end(), order);
}

Natural count_labelings_dp(const Graph& g, const DpOptions& opts) {
  check_dp_size(g, opts.mode);
  const std::size_t n = g.order();
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (bit(static_cast<Vertex>(n)) - 1);
  return run_dp(g, all, opts);
}

Natural count_labelings_started_at(const Graph& g, Vertex v, const DpOptions& opts) {
  check_dp_size(g, opts.mode);
  if (v >= g.order()) {
    throw Error(ErrorKind::vertex_out_of_range, "start vertex " + std::to_string(v) + " out of range");
  }
  return run_dp(g, bit(v), opts);
}

}  // namespace rwl
