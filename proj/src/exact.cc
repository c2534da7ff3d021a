#include "ddom/exact.h"

#include <algorithm>
#include <numeric>

#include "ddom/errors.h"

namespace ddom {

Problem parse_problem(std::string_view name) {
  if (name == "ddp") return Problem::kDisjunctive;
  if (name == "dom") return Problem::kDomination;
  if (name == "2dom") return Problem::kTwoDomination;
  if (name == "vc") return Problem::kVertexCover;
  throw InputError("unknown problem '" + std::string(name) + "' (expected ddp, dom, 2dom or vc)");
}

std::string_view problem_name(Problem p) {
  switch (p) {
    case Problem::kDisjunctive: return "ddp";
    case Problem::kDomination: return "dom";
    case Problem::kTwoDomination: return "2dom";
    case Problem::kVertexCover: return "vc";
  }
  return "?";
}

bool verify_solution(const Graph& g, Problem p, const VertexSet& s, int b) {
  switch (p) {
    case Problem::kDisjunctive: return is_disjunctive_dominating(g, s, b);
    case Problem::kDomination: return is_dominating(g, s);
    case Problem::kTwoDomination: return is_two_dominating(g, s);
    case Problem::kVertexCover: return is_vertex_cover(g, s);
  }
  return false;
}

namespace {

/// Every problem here is a per-vertex covering constraint: v is satisfied by
/// any one of its strong candidates, or by `threshold` of its weak ones.
///   ddp(b): strong N[v], weak N2(v), threshold b
///   dom:    strong N[v]
///   2dom:   strong {v},  weak N(v),  threshold 2
///   vc:     strong {v},  weak N(v),  threshold deg(v)
struct CoverRequirement {
  std::vector<Vertex> strong;
  std::vector<Vertex> weak;
  std::size_t threshold = 0;
};

std::vector<CoverRequirement> build_requirements(const Graph& g, Problem p, int b) {
  std::vector<CoverRequirement> req(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    auto& r = req[v];
    switch (p) {
      case Problem::kDisjunctive:
        r.strong = neighbors_closed(g, v).members();
        r.weak = second_neighborhood(g, v).members();
        r.threshold = static_cast<std::size_t>(b);
        break;
      case Problem::kDomination:
        r.strong = neighbors_closed(g, v).members();
        r.threshold = static_cast<std::size_t>(-1);
        break;
      case Problem::kTwoDomination:
        r.strong = {v};
        r.weak.assign(nb.begin(), nb.end());
        r.threshold = 2;
        break;
      case Problem::kVertexCover:
        r.strong = {v};
        r.weak.assign(nb.begin(), nb.end());
        r.threshold = nb.size();
        break;
    }
  }
  return req;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, Problem p, int b, std::size_t budget, std::size_t* nodes)
      : n_(g.num_vertices()), req_(build_requirements(g, p, b)), budget_(budget), nodes_(nodes),
        in_(n_, false), excluded_(n_, false), used_(n_, 0) {}

  /// Best solution with fewer than `bound` vertices, if any.
  std::optional<std::vector<Vertex>> run(std::size_t bound) {
    best_size_ = bound;
    found_ = false;
    search();
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  struct Status {
    std::size_t options = 0;  // candidates that can still help
    std::size_t need = 0;     // picks still required from those candidates
    bool strong_open = false;
    bool weak_open = false;
  };

  // nullopt if v is already satisfied.
  std::optional<Status> status(Vertex v) const {
    const auto& r = req_[v];
    Status st;
    std::size_t strong_avail = 0;
    for (Vertex u : r.strong) {
      if (in_[u]) return std::nullopt;
      if (!excluded_[u]) ++strong_avail;
    }
    std::size_t credit = 0, weak_avail = 0;
    for (Vertex u : r.weak) {
      if (in_[u]) ++credit;
      else if (!excluded_[u]) ++weak_avail;
    }
    if (credit >= r.threshold) return std::nullopt;
    const std::size_t missing = r.threshold - credit;
    st.strong_open = strong_avail > 0;
    st.weak_open = weak_avail >= missing;
    st.options = strong_avail + (st.weak_open ? weak_avail : 0);
    st.need = st.strong_open ? 1 : missing;
    return st;
  }

  void search() {
    if (++*nodes_ > budget_) throw BudgetExceeded(*nodes_ - 1);

    pending_.clear();
    Vertex pick = 0;
    Status pick_st;
    bool any = false;
    for (Vertex v = 0; v < n_; ++v) {
      auto st = status(v);
      if (!st) continue;
      if (st->options == 0) return;
      pending_.push_back({st->options, v});
      if (!any || st->options < pick_st.options) {
        pick = v;
        pick_st = *st;
        any = true;
      }
    }
    if (!any) {
      if (size_ < best_size_) {
        best_size_ = size_;
        best_.clear();
        for (Vertex v = 0; v < n_; ++v) {
          if (in_[v]) best_.push_back(v);
        }
        found_ = true;
      }
      return;
    }
    if (size_ + packing_bound() >= best_size_) return;

    std::vector<Vertex> cands;
    const auto& r = req_[pick];
    for (Vertex u : r.strong) {
      if (!excluded_[u]) cands.push_back(u);
    }
    if (pick_st.weak_open) {
      for (Vertex u : r.weak) {
        if (!in_[u] && !excluded_[u]) cands.push_back(u);
      }
    }

    // Branch i takes cands[i] and forbids cands[0..i).
    std::size_t forbidden = 0;
    for (Vertex u : cands) {
      in_[u] = true;
      ++size_;
      search();
      --size_;
      in_[u] = false;
      excluded_[u] = true;
      ++forbidden;
      if (size_ + 1 >= best_size_) break;
    }
    for (std::size_t i = 0; i < forbidden; ++i) excluded_[cands[i]] = false;
  }

  // Greedy packing of unsatisfied vertices with pairwise disjoint candidate
  // sets; each needs its own picks, so the sum of needs is a lower bound.
  std::size_t packing_bound() {
    std::sort(pending_.begin(), pending_.end());
    ++stamp_;
    std::size_t bound = 0;
    for (auto [opts, v] : pending_) {
      (void)opts;
      auto st = status(v);
      const auto& r = req_[v];
      bool clash = false;
      auto visit = [&](auto&& fn) {
        for (Vertex u : r.strong) {
          if (!excluded_[u]) fn(u);
        }
        if (st->weak_open) {
          for (Vertex u : r.weak) {
            if (!in_[u] && !excluded_[u]) fn(u);
          }
        }
      };
      visit([&](Vertex u) { clash = clash || used_[u] == stamp_; });
      if (clash) continue;
      visit([&](Vertex u) { used_[u] = stamp_; });
      bound += st->need;
    }
    return bound;
  }

  std::size_t n_;
  std::vector<CoverRequirement> req_;
  std::size_t budget_;
  std::size_t* nodes_;
  std::vector<bool> in_, excluded_;
  std::vector<std::size_t> used_;
  std::size_t stamp_ = 0;
  std::vector<std::pair<std::size_t, Vertex>> pending_;
  std::size_t size_ = 0;
  std::size_t best_size_ = 0;
  bool found_ = false;
  std::vector<Vertex> best_;
};

bool next_combination(std::vector<Vertex>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<Vertex>> exhaustive(const Graph& g, Problem p, int b, std::size_t max_size,
                                              std::size_t budget, std::size_t* nodes) {
  const std::size_t n = g.num_vertices();
  for (std::size_t k = 0; k <= std::min(n, max_size); ++k) {
    std::vector<Vertex> c(k);
    std::iota(c.begin(), c.end(), Vertex{0});
    do {
      if (++*nodes > budget) throw BudgetExceeded(*nodes - 1);
      if (verify_solution(g, p, VertexSet(c), b)) return c;
    } while (next_combination(c, n));
  }
  return std::nullopt;
}

std::optional<VertexSet> solve_components(const Graph& g, Problem p, std::size_t max_size,
                                          const SearchConfig& cfg) {
  if (cfg.node_budget == 0) throw InputError("node budget must be positive");
  if (cfg.b < 1) throw InputError("disjunctive parameter b must be >= 1");
  std::size_t count = 0;
  const auto label = connected_components(g, &count);
  std::vector<std::vector<Vertex>> parts(count);
  for (Vertex v = 0; v < g.num_vertices(); ++v) parts[label[v]].push_back(v);

  std::size_t nodes = 0;
  std::size_t remaining = max_size;
  std::vector<Vertex> out;
  for (const auto& part : parts) {
    const Graph sub = induced_subgraph(g, part);
    std::optional<std::vector<Vertex>> local;
    if (cfg.strategy == Strategy::kExhaustive) {
      local = exhaustive(sub, p, cfg.b, remaining, cfg.node_budget, &nodes);
    } else {
      BranchAndBound bb(sub, p, cfg.b, cfg.node_budget, &nodes);
      // The whole component is always feasible, so n + 1 is a safe bound.
      local = bb.run(std::min(remaining, sub.num_vertices()) + 1);
    }
    if (!local) return std::nullopt;
    remaining -= local->size();
    for (Vertex v : *local) out.push_back(part[v]);
  }
  return VertexSet(std::move(out));
}

}  // namespace

std::optional<VertexSet> exact_solve_capped(const Graph& g, Problem p, std::size_t max_size,
                                            const SearchConfig& cfg) {
  return solve_components(g, p, max_size, cfg);
}

VertexSet exact_solve(const Graph& g, Problem p, const SearchConfig& cfg) {
  // Every problem is solved by the full vertex set, so this always succeeds.
  auto result = solve_components(g, p, g.num_vertices(), cfg);
  if (!result) throw std::logic_error("exact search found no solution");
  return *result;
}

VertexSet exact_disjunctive(const Graph& g, int b, SearchConfig cfg) {
  cfg.b = b;
  return exact_solve(g, Problem::kDisjunctive, cfg);
}

VertexSet exact_domination(const Graph& g, const SearchConfig& cfg) {
  return exact_solve(g, Problem::kDomination, cfg);
}

VertexSet exact_two_domination(const Graph& g, const SearchConfig& cfg) {
  return exact_solve(g, Problem::kTwoDomination, cfg);
}

VertexSet exact_vertex_cover(const Graph& g, const SearchConfig& cfg) {
  return exact_solve(g, Problem::kVertexCover, cfg);
}

}  // namespace ddom
