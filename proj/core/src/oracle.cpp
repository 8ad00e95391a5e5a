#include "twostar/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "twostar/parallel.hpp"
#include "twostar/error.hpp"

namespace twostar {

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};
constexpr int kG = 0;  // slot and edge kinds
constexpr int kX = 1;

struct Found {
  std::size_t order;
  std::vector<Elem> flat;
  Elem x, g;
};

// Depth-first completion of a right-regular action of C2 * Z.
class Search {
 public:
  Search(std::size_t limit, std::size_t min_accept)
      : limit_(limit),
        min_accept_(min_accept),
        act_g_(limit, kNone),
        inv_g_(limit, kNone),
        act_x_(limit, kNone),
        phi_(limit * limit, kNone),
        phi_inv_(limit * limit, kNone) {
    used_ = 1;
  }

  // Enumerates completions below the current node. With a depth limit, nodes
  // reached after `depth` branchings are reported to `frontier` instead.
  template <typename OnFound, typename OnFrontier>
  void run(std::size_t depth, std::vector<unsigned>& path, OnFound&& found, OnFrontier&& frontier) {
    Slot slot;
    if (!next_slot(slot)) {
      accept(found);
      return;
    }
    if (depth == 0) {
      frontier(path);
      return;
    }
    const auto cands = candidates(slot);
    for (unsigned i = 0; i < cands.size(); ++i) {
      const std::size_t mark = trail_.size();
      const std::size_t used = used_;
      if (apply(slot, cands[i])) {
        path.push_back(i);
        run(depth - 1, path, found, frontier);
        path.pop_back();
      }
      undo(mark);
      used_ = used;
    }
  }

  // Replays a branch path from the root; false if it is infeasible.
  bool replay(const std::vector<unsigned>& path) {
    for (unsigned choice : path) {
      Slot slot;
      if (!next_slot(slot)) return false;
      const auto cands = candidates(slot);
      if (choice >= cands.size() || !apply(slot, cands[choice])) return false;
    }
    return true;
  }

 private:
  struct Slot {
    std::uint32_t elem;
    int kind;
  };
  struct Event {
    int kind;  // 0: g-edge from a, 1: x-edge from a, 2: map entry phi[a][b]
    std::uint32_t a, b;
  };
  enum class Cell : std::uint8_t { ActG, InvG, ActX, Phi, PhiInv };

  std::uint32_t& phi(std::uint32_t v, std::uint32_t u) { return phi_[v * limit_ + u]; }
  std::uint32_t& phi_inv(std::uint32_t v, std::uint32_t w) { return phi_inv_[v * limit_ + w]; }
  std::uint32_t act(int kind, std::uint32_t u) const { return kind == kG ? act_g_[u] : act_x_[u]; }
  std::uint32_t act_inv(int kind, std::uint32_t w) const { return kind == kG ? inv_g_[w] : act_x_[w]; }

  void store(Cell cell, std::size_t pos, std::uint32_t value) {
    switch (cell) {
      case Cell::ActG: act_g_[pos] = value; break;
      case Cell::InvG: inv_g_[pos] = value; break;
      case Cell::ActX: act_x_[pos] = value; break;
      case Cell::Phi: phi_[pos] = value; break;
      case Cell::PhiInv: phi_inv_[pos] = value; break;
    }
    trail_.push_back({cell, static_cast<std::uint32_t>(pos)});
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [cell, pos] = trail_.back();
      trail_.pop_back();
      switch (cell) {
        case Cell::ActG: act_g_[pos] = kNone; break;
        case Cell::InvG: inv_g_[pos] = kNone; break;
        case Cell::ActX: act_x_[pos] = kNone; break;
        case Cell::Phi: phi_[pos] = kNone; break;
        case Cell::PhiInv: phi_inv_[pos] = kNone; break;
      }
    }
    queue_.clear();
  }

  bool next_slot(Slot& slot) const {
    for (std::uint32_t e = 0; e < used_; ++e) {
      if (act_g_[e] == kNone) {
        slot = {e, kG};
        return true;
      }
      if (act_x_[e] == kNone) {
        slot = {e, kX};
        return true;
      }
    }
    return false;
  }

  // Existing labels that can receive the edge, then a fresh label.
  std::vector<std::uint32_t> candidates(const Slot& slot) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 0; t < used_; ++t) {
      if (slot.kind == kG ? inv_g_[t] == kNone : (t != slot.elem && act_x_[t] == kNone)) out.push_back(t);
    }
    if (used_ < limit_) out.push_back(static_cast<std::uint32_t>(used_));
    return out;
  }

  bool apply(const Slot& slot, std::uint32_t target) {
    if (target == used_) {
      ++used_;
      if (!set_phi(target, 0, target)) return false;
    }
    return set_edge(slot.elem, slot.kind, target) && propagate();
  }

  bool set_edge(std::uint32_t u, int kind, std::uint32_t w) {
    if (kind == kG) {
      if (act_g_[u] != kNone) return act_g_[u] == w;
      if (inv_g_[w] != kNone) return false;
      store(Cell::ActG, u, w);
      store(Cell::InvG, w, u);
    } else {
      if (u == w) return false;
      if (act_x_[u] != kNone) return act_x_[u] == w;
      if (act_x_[w] != kNone) return false;
      store(Cell::ActX, u, w);
      store(Cell::ActX, w, u);
    }
    queue_.push_back({kind, u, w});
    return true;
  }

  bool set_phi(std::uint32_t v, std::uint32_t u, std::uint32_t w) {
    if (phi(v, u) != kNone) return phi(v, u) == w;
    if (phi_inv(v, w) != kNone) return false;
    store(Cell::Phi, v * limit_ + u, w);
    store(Cell::PhiInv, v * limit_ + w, u);
    queue_.push_back({2, v, u});
    return true;
  }

  // Map entry of left multiplication by v, or of its inverse.
  std::uint32_t map_at(bool inverse, std::uint32_t v, std::uint32_t u) {
    return inverse ? phi_inv(v, u) : phi(v, u);
  }
  bool set_map(bool inverse, std::uint32_t v, std::uint32_t u, std::uint32_t w) {
    return inverse ? set_phi(v, w, u) : set_phi(v, u, w);
  }

  // Left multiplication by v (or its inverse) commutes with the edge u -> w.
  bool check(bool inverse, std::uint32_t v, std::uint32_t u, std::uint32_t w, int kind) {
    const std::uint32_t a = map_at(inverse, v, u);
    const std::uint32_t b = map_at(inverse, v, w);
    if (a != kNone) {
      const std::uint32_t t = act(kind, a);
      if (t != kNone) return set_map(inverse, v, w, t);
      if (b != kNone) return set_edge(a, kind, b);
      return true;
    }
    if (b != kNone) {
      const std::uint32_t t = act_inv(kind, b);
      if (t != kNone) return set_map(inverse, v, u, t);
    }
    return true;
  }

  bool check_edges_at(bool inverse, std::uint32_t v, std::uint32_t u) {
    if (act_g_[u] != kNone && !check(inverse, v, u, act_g_[u], kG)) return false;
    if (inv_g_[u] != kNone && !check(inverse, v, inv_g_[u], u, kG)) return false;
    return act_x_[u] == kNone || check(inverse, v, u, act_x_[u], kX);
  }

  // Every commutation constraint is rechecked whenever one of its four
  // entries (two edges, two map values) becomes known.
  bool propagate() {
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const Event ev = queue_[i];
      if (ev.kind == 2) {
        const std::uint32_t v = ev.a, u = ev.b;
        if (!check_edges_at(false, v, u) || !check_edges_at(true, v, phi(v, u))) return false;
      } else {
        for (std::uint32_t v = 1; v < used_; ++v) {
          if (!check(false, v, ev.a, ev.b, ev.kind) || !check(true, v, ev.a, ev.b, ev.kind)) return false;
        }
      }
    }
    queue_.clear();
    return true;
  }

  // Order of the permutation group generated by the two actions, or
  // limit+1 once it is known to exceed the label count.
  std::size_t closure_order() const {
    const std::size_t n = used_;
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> queue;
    std::vector<std::uint32_t> id(n);
    for (std::uint32_t i = 0; i < n; ++i) id[i] = i;
    seen.insert(id);
    queue.push_back(id);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto* gen : {&act_g_, &act_x_}) {
        std::vector<std::uint32_t> next(n);
        for (std::uint32_t k = 0; k < n; ++k) next[k] = (*gen)[queue[i][k]];
        if (seen.insert(next).second) {
          if (seen.size() > n) return n + 1;
          queue.push_back(std::move(next));
        }
      }
    }
    return seen.size();
  }

  template <typename OnFound>
  void accept(OnFound&& found) {
    const std::size_t n = used_;
    if (n < min_accept_ || closure_order() != n) return;
    Found f{n, std::vector<Elem>(n * n), act_x_[0], act_g_[0]};
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        const std::uint32_t v = a == 0 ? b : phi_[a * limit_ + b];
        if (v == kNone) return;
        f.flat[a * n + b] = v;
      }
    }
    found(std::move(f));
  }

  std::size_t limit_;
  std::size_t min_accept_;
  std::size_t used_ = 1;
  std::vector<std::uint32_t> act_g_, inv_g_, act_x_;
  std::vector<std::uint32_t> phi_, phi_inv_;
  std::vector<std::pair<Cell, std::uint32_t>> trail_;
  std::vector<Event> queue_;
};

void check_cap(std::size_t n, const OracleOptions& options) {
  if (options.cap > kOracleStretchCap) {
    throw Error(Errc::CapExceeded, "oracle cap may not exceed " + std::to_string(kOracleStretchCap));
  }
  if (n > options.cap) {
    throw Error(Errc::CapExceeded,
                "order " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(options.cap));
  }
}

constexpr std::size_t kSplitDepth = 2;

std::vector<Found> search_all(std::size_t limit, std::size_t min_accept, unsigned workers) {
  std::vector<Found> found;
  std::vector<std::vector<unsigned>> tasks;
  {
    Search root(limit, min_accept);
    std::vector<unsigned> path;
    root.run(kSplitDepth, path, [&](Found f) { found.push_back(std::move(f)); },
             [&](const std::vector<unsigned>& p) { tasks.push_back(p); });
  }
  std::vector<std::vector<Found>> results(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    Search s(limit, min_accept);
    if (!s.replay(tasks[i])) return;
    std::vector<unsigned> path = tasks[i];
    s.run(limit * 2 + 1, path, [&](Found f) { results[i].push_back(std::move(f)); },
          [](const std::vector<unsigned>&) {});
  });
  for (auto& r : results) {
    for (auto& f : r) found.push_back(std::move(f));
  }
  return found;
}

std::vector<std::vector<TwoStarTriple>> collect(std::vector<Found> found, std::size_t n_max,
                                                const OracleOptions& options) {
  std::vector<std::map<Certificate, TwoStarTriple>> buckets(n_max + 1);
  for (auto& f : found) {
    if (options.exclude_degenerate && f.g == 0) continue;
    auto group = share(GroupTable::from_flat(f.order, std::move(f.flat)));
    TwoStarTriple t = make_triple(group, f.x, f.g);
    buckets[f.order].emplace(triple_certificate(t), std::move(t));
  }
  std::vector<std::vector<TwoStarTriple>> out(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (auto& [cert, t] : buckets[n]) out[n].push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<std::vector<TwoStarTriple>> oracle_triples_by_order(std::size_t n_max,
                                                                const OracleOptions& options) {
  check_cap(n_max, options);
  if (n_max == 0) return {{}};
  return collect(search_all(n_max, 1, std::max(1U, options.workers)), n_max, options);
}

std::vector<TwoStarTriple> oracle_enumerate(std::size_t n, const OracleOptions& options) {
  check_cap(n, options);
  if (n == 0) return {};
  auto by_order = collect(search_all(n, n, std::max(1U, options.workers)), n, options);
  return std::move(by_order[n]);
}

std::vector<OracleRow> oracle_counts(std::size_t n_max, const OracleOptions& options) {
  const auto by_order = oracle_triples_by_order(n_max, options);
  std::vector<OracleRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::set<Certificate> groups;
    for (const auto& t : by_order[n]) {
      if (auto form = canonical_group_certificate(*t.group)) groups.insert(form->certificate);
    }
    rows.push_back({n, groups.size(), by_order[n].size()});
  }
  return rows;
}

}  // namespace twostar
