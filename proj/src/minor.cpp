#include "minorgrowth/minor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace minorgrowth {

namespace {

VertexSet neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = 0;
  for (; s; s &= s - 1) out |= g.neighbors(lowest(s));
  return out;
}

bool is_connected_set(const Graph& g, VertexSet s) {
  if (!s) return false;
  VertexSet reached = bit(lowest(s));
  while (true) {
    VertexSet next = (reached | neighborhood(g, reached)) & s;
    if (next == reached) return reached == s;
    reached = next;
  }
}

enum class Step { kContinue, kPrune, kStop };

// Backtracking over branch sets, restricted to the G-vertices in `allowed`.
class BranchSearch {
 public:
  BranchSearch(const Graph& h, const Graph& g, VertexSet allowed)
      : h_(h), g_(g), allowed_(allowed), branch_(static_cast<std::size_t>(h.order()), 0) {
    build_order();
  }

  std::optional<std::vector<VertexSet>> run() {
    if (h_.order() > popcount(allowed_)) return std::nullopt;
    used_ = ~allowed_;
    if (place(0)) return branch_;
    return std::nullopt;
  }

 private:
  void build_order() {
    const int n = h_.order();
    pos_.assign(static_cast<std::size_t>(n), -1);
    auto comps = component_sets(h_);
    std::stable_sort(comps.begin(), comps.end(),
                     [](VertexSet a, VertexSet b) { return popcount(a) > popcount(b); });
    for (VertexSet comp : comps) {
      int start = lowest(comp);
      for (VertexSet rest = comp; rest; rest &= rest - 1) {
        int v = lowest(rest);
        if (h_.degree(v) > h_.degree(start)) start = v;
      }
      std::vector<int> queue{start};
      VertexSet seen = bit(start);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        std::vector<int> next;
        for (VertexSet nb = h_.neighbors(u) & ~seen; nb; nb &= nb - 1) next.push_back(lowest(nb));
        std::stable_sort(next.begin(), next.end(),
                         [&](int a, int b) { return h_.degree(a) > h_.degree(b); });
        for (int w : next) {
          seen |= bit(w);
          queue.push_back(w);
        }
      }
      for (int v : queue) {
        pos_[v] = static_cast<int>(order_.size());
        order_.push_back(v);
      }
    }
  }

  VertexSet placed_mask(int idx) const {
    VertexSet out = 0;
    for (int i = 0; i < idx; ++i) out |= bit(order_[i]);
    return out;
  }

  // Every placed vertex that still waits for a neighbour needs a free G-vertex
  // next to its branch set.
  bool frontier_alive(int idx) const {
    VertexSet placed = placed_mask(idx);
    VertexSet free = g_.vertices() & ~used_;
    for (VertexSet p = placed; p; p &= p - 1) {
      int u = lowest(p);
      if ((h_.neighbors(u) & ~placed) && !(neighborhood(g_, branch_[u]) & free)) return false;
    }
    return true;
  }

  template <class Visit>
  bool grow(VertexSet cur, VertexSet ext, VertexSet blocked, int max_size, Visit& visit) {
    Step step = visit(cur);
    if (step == Step::kStop) return true;
    if (step == Step::kPrune || popcount(cur) >= max_size) return false;
    VertexSet b = blocked;
    for (VertexSet e = ext; e; e &= e - 1) {
      int w = lowest(e);
      VertexSet rest = e & (e - 1);
      VertexSet next_ext = (rest | g_.neighbors(w)) & ~cur & ~bit(w) & ~b;
      if (grow(cur | bit(w), next_ext, b, max_size, visit)) return true;
      b |= bit(w);
    }
    return false;
  }

  bool place(int idx) {
    const int n = h_.order();
    if (idx == n) return true;
    const int v = order_[idx];
    const int remaining = n - idx - 1;
    const VertexSet avail = g_.vertices() & ~used_;
    const int max_size = popcount(avail) - remaining;
    if (max_size < 1) return false;

    VertexSet placed = placed_mask(idx);
    VertexSet placed_nbrs = h_.neighbors(v) & placed;
    const bool has_future = (h_.neighbors(v) & ~placed) != 0;

    VertexSet seeds = avail;
    if (placed_nbrs) {
      seeds = neighborhood(g_, branch_[lowest(placed_nbrs)]) & avail;
      for (VertexSet p = placed_nbrs; p; p &= p - 1) {
        if (!(neighborhood(g_, branch_[lowest(p)]) & avail)) return false;
      }
    }

    auto visit = [&](VertexSet s) {
      VertexSet reach = neighborhood(g_, s);
      for (VertexSet p = placed_nbrs; p; p &= p - 1) {
        if (!(reach & branch_[lowest(p)])) return Step::kContinue;
      }
      branch_[v] = s;
      used_ |= s;
      if (frontier_alive(idx + 1) && place(idx + 1)) return Step::kStop;
      used_ &= ~s;
      branch_[v] = 0;
      // Any superset also satisfies v and leaves fewer free vertices.
      return has_future ? Step::kContinue : Step::kPrune;
    };

    VertexSet blocked = ~avail;
    for (VertexSet s = seeds; s; s &= s - 1) {
      int seed = lowest(s);
      VertexSet ext = g_.neighbors(seed) & ~blocked & ~bit(seed);
      if (grow(bit(seed), ext, blocked, max_size, visit)) return true;
      blocked |= bit(seed);
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  VertexSet allowed_;
  VertexSet used_ = 0;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<VertexSet> branch_;
};

// Packs the non-trivial components of H into the components of G, then places
// the isolated vertices of H on whatever is left.
class ComponentPacking {
 public:
  ComponentPacking(const Graph& h, const Graph& g) : h_(h), g_(g) {
    for (VertexSet c : component_sets(h)) {
      if (popcount(c) == 1) {
        isolated_.push_back(lowest(c));
      } else {
        hcomps_.push_back(c);
      }
    }
    std::stable_sort(hcomps_.begin(), hcomps_.end(),
                     [](VertexSet a, VertexSet b) { return popcount(a) > popcount(b); });
    for (VertexSet c : component_sets(g)) {
      if (popcount(c) == 1) {
        gsingles_ |= c;
      } else {
        gcomps_.push_back(c);
      }
    }
  }

  std::optional<MinorModel> run() {
    const std::uint64_t full = hcomps_.empty() ? 0 : first_n(static_cast<int>(hcomps_.size()));
    choice_.assign(gcomps_.size(), {0, 0});
    if (!pack(0, full, static_cast<int>(isolated_.size()))) return std::nullopt;

    MinorModel model;
    model.branch_sets.assign(static_cast<std::size_t>(h_.order()), 0);
    VertexSet used = 0;
    std::vector<int> free_singles;
    for (std::size_t i = 0; i < gcomps_.size(); ++i) {
      auto [sub, take] = choice_[i];
      if (sub == 0) continue;
      const Fit& fit = fits_.at({i, sub});
      for (std::size_t j = 0; j < fit.hvertices.size(); ++j) {
        model.branch_sets[fit.hvertices[j]] = fit.sets[j];
        used |= fit.sets[j];
      }
      for (std::size_t j = fit.hvertices.size(); j < fit.sets.size(); ++j) {
        free_singles.push_back(lowest(fit.sets[j]));
      }
    }
    // Extra singletons from models first, then anything untouched.
    VertexSet untouched = g_.vertices() & ~used;
    for (std::size_t i = 0; i < gcomps_.size(); ++i) {
      if (choice_[i].first != 0) untouched &= ~gcomps_[i];
    }
    for (; untouched; untouched &= untouched - 1) free_singles.push_back(lowest(untouched));
    for (std::size_t j = 0; j < isolated_.size(); ++j) {
      model.branch_sets[isolated_[j]] = bit(free_singles[j]);
    }
    return model;
  }

 private:
  struct Fit {
    int capacity = -1;  // isolated vertices that fit next to the components; -1: no fit
    std::vector<int> hvertices;
    std::vector<VertexSet> sets;  // hvertices' sets, then `capacity` singletons
  };

  VertexSet h_union(std::uint64_t sub) const {
    VertexSet out = 0;
    for (; sub; sub &= sub - 1) out |= hcomps_[lowest(sub)];
    return out;
  }

  std::optional<std::vector<VertexSet>> try_fit(VertexSet hverts, int extra, std::size_t gi) {
    Graph part = disjoint_union(h_.induced(hverts), Graph(extra));
    return BranchSearch(part, g_, gcomps_[gi]).run();
  }

  const Fit& fit(std::size_t gi, std::uint64_t sub) {
    auto key = std::make_pair(gi, sub);
    auto it = fits_.find(key);
    if (it != fits_.end()) return it->second;
    Fit out;
    VertexSet hverts = h_union(sub);
    const int room = popcount(gcomps_[gi]) - popcount(hverts);
    const int wanted = std::min<int>(room, static_cast<int>(isolated_.size()));
    if (room >= 0 && h_.induced(hverts).size() <= g_.induced(gcomps_[gi]).size()) {
      auto base = try_fit(hverts, 0, gi);
      if (base) {
        int lo = 0;
        auto best = *base;
        int hi = wanted;
        // Largest extra count that still fits (monotone in the count).
        while (lo < hi) {
          int mid = (lo + hi + 1) / 2;
          auto attempt = try_fit(hverts, mid, gi);
          if (attempt) {
            lo = mid;
            best = *attempt;
          } else {
            hi = mid - 1;
          }
        }
        out.capacity = lo;
        for (VertexSet r = hverts; r; r &= r - 1) out.hvertices.push_back(lowest(r));
        out.sets = std::move(best);
      }
    }
    return fits_.emplace(key, std::move(out)).first->second;
  }

  bool pack(std::size_t gi, std::uint64_t mask, int isolated_left) {
    if (gi == gcomps_.size()) return mask == 0 && isolated_left <= popcount(gsingles_);
    auto key = std::make_tuple(gi, mask, isolated_left);
    if (failed_.count(key)) return false;
    // Enumerate submasks of `mask`, including the empty one last.
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      int take = 0;
      bool ok = true;
      if (sub == 0) {
        take = std::min(isolated_left, popcount(gcomps_[gi]));
      } else {
        const Fit& f = fit(gi, sub);
        ok = f.capacity >= 0;
        if (ok) take = std::min(isolated_left, f.capacity);
      }
      if (ok && pack(gi + 1, mask & ~sub, isolated_left - take)) {
        choice_[gi] = {sub, take};
        return true;
      }
      if (sub == 0) break;
    }
    failed_.insert(key);
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  std::vector<VertexSet> hcomps_;
  std::vector<int> isolated_;
  std::vector<VertexSet> gcomps_;
  VertexSet gsingles_ = 0;
  std::map<std::pair<std::size_t, std::uint64_t>, Fit> fits_;
  std::set<std::tuple<std::size_t, std::uint64_t, int>> failed_;
  std::vector<std::pair<std::uint64_t, int>> choice_;
};

}  // namespace

bool is_valid_model(const Graph& h, const Graph& g, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != h.order()) return false;
  VertexSet seen = 0;
  for (VertexSet s : model.branch_sets) {
    if ((s & ~g.vertices()) || (s & seen) || !is_connected_set(g, s)) return false;
    seen |= s;
  }
  for (auto [a, b] : h.edges()) {
    if (!(neighborhood(g, model.branch_sets[a]) & model.branch_sets[b])) return false;
  }
  return true;
}

std::optional<MinorModel> find_minor_model(const Graph& h, const Graph& g) {
  if (h.order() == 0) return MinorModel{};
  if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
  if (h.size() == 0) {
    MinorModel model;
    for (int v = 0; v < h.order(); ++v) model.branch_sets.push_back(bit(v));
    return model;
  }
  if (is_connected(g)) {
    auto sets = BranchSearch(h, g, g.vertices()).run();
    if (!sets) return std::nullopt;
    return MinorModel{std::move(*sets)};
  }
  return ComponentPacking(h, g).run();
}

bool is_minor(const Graph& h, const Graph& g) { return find_minor_model(h, g).has_value(); }

bool is_path_forest(const Graph& h) {
  return is_forest(h) && h.max_degree() <= 2;
}

bool is_star_forest(const Graph& h) {
  if (!is_forest(h)) return false;
  for (VertexSet comp : component_sets(h)) {
    // A tree is a star iff one vertex sees every other vertex of the tree.
    bool star = false;
    for (VertexSet r = comp; r && !star; r &= r - 1) {
      int v = lowest(r);
      star = (h.neighbors(v) | bit(v)) == comp;
    }
    if (!star) return false;
  }
  return true;
}

bool is_matching_graph(const Graph& h) { return h.max_degree() <= 1; }

bool is_star_plus_isolated(const Graph& h) {
  if (!is_star_forest(h)) return false;
  int edged = 0;
  for (VertexSet comp : component_sets(h)) edged += popcount(comp) > 1 ? 1 : 0;
  return edged <= 1;
}

bool has_at_most_one_edge(const Graph& h) { return h.size() <= 1; }

bool is_caterpillar_forest(const Graph& h) {
  if (!is_forest(h)) return false;
  VertexSet spine = 0;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) >= 2) spine |= bit(v);
  }
  // Removing the leaves of every component must leave paths.
  return is_path_forest(h.induced(spine));
}

bool is_apex_path_forest(const Graph& h) {
  if (is_path_forest(h)) return true;
  for (int v = 0; v < h.order(); ++v) {
    if (is_path_forest(delete_vertex(h, v))) return true;
  }
  return false;
}

}  // namespace minorgrowth
