// Exact minimum-cost hyperedge cover.
//
// Let K be the "cover graph": the host in co-connected mode, its complement
// in connected mode. In both modes a hyperedge E is admissible iff K[E] is
// co-connected, and every required pair is an edge of K.
//
// Candidate reduction. Take an admissible E and split it into the connected
// components D_1..D_r of K[E]. Required pairs inside E are K-edges, so they
// sit inside single components. If r >= 2, replacing E by D_i (when K[D_i] is
// co-connected) or by D_i plus one vertex of another component (which is
// K-non-adjacent to D_i, hence K[D_i + w] is disconnected and co-connected)
// covers the same pairs at total cost at most |E| - 2. So it suffices to
// consider K-connected sets D, costed
//     |D| - 2  if K[D] is co-connected,
//     |D| - 1  if some "padding" vertex w in the universe is K-non-adjacent
//              to D and forms no forbidden pair with it,
// and inadmissible otherwise.
//
// Two exact prunings shrink the candidate list further:
//   * cut-vertex splits: if v is a cut vertex of K[D] and D = D1 u D2 with
//     D1 n D2 = {v} and no K-edge across, then D1 and D2 cover what D covers;
//     D is dropped when cost(D1) + cost(D2) <= cost(D).
//   * dominance: a candidate whose covered pairs are a subset of a cheaper (or
//     equally cheap and strictly larger) candidate's is dropped.
// Every removal points at candidates that are strictly smaller in
// (cost, -coverage, size), so some optimum survives.
//
// The remaining weighted set cover is solved by depth-first branch and bound:
// branch on the uncovered pair with the fewest candidates, bound with
//     sum over uncovered pairs e of  min_{C covers e} cost(C) / |C n uncovered|,
// and memoize the cheapest cost at which each covered set was reached.

#include "mcts/cover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace mcts {

std::string_view mode_name(CoverMode mode) {
  return mode == CoverMode::kConnected ? "connected" : "co_connected";
}

std::string_view status_name(CoverStatus status) {
  switch (status) {
    case CoverStatus::kOptimal: return "optimal";
    case CoverStatus::kBudgetExhausted: return "budget_exhausted";
    case CoverStatus::kInfeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

constexpr int kMaxUniverse = 64;
constexpr int kMaxRequired = 256;
constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

using VertexMask = std::uint64_t;

VertexMask bit(int i) { return VertexMask{1} << i; }

class PairMask {
 public:
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    return (words_[0] | words_[1] | words_[2] | words_[3]) == 0;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool subset_of(const PairMask& o) const {
    for (int i = 0; i < 4; ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  PairMask operator|(const PairMask& o) const {
    PairMask r;
    for (int i = 0; i < 4; ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  PairMask operator&(const PairMask& o) const {
    PairMask r;
    for (int i = 0; i < 4; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  PairMask without(const PairMask& o) const {
    PairMask r;
    for (int i = 0; i < 4; ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < 4; ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) f(i * 64 + std::countr_zero(w));
    }
  }
  friend bool operator==(const PairMask&, const PairMask&) = default;

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = (h ^ w) * 0x9E3779B97F4A7C15ULL + (h >> 29);
    return h;
  }

 private:
  std::array<std::uint64_t, 4> words_{};
};

struct PairMaskHash {
  std::size_t operator()(const PairMask& m) const { return m.hash(); }
};

struct Candidate {
  PairMask covers;
  int cost = 0;
  VertexMask vertices = 0;
};

void validate_instance(const CoverInstance& in) {
  const Graph& g = in.host;
  if (static_cast<int>(in.universe.size()) > kMaxUniverse) {
    throw std::invalid_argument("cover universe larger than 64 vertices");
  }
  if (static_cast<int>(in.required.size()) > kMaxRequired) {
    throw std::invalid_argument("more than 256 required pairs");
  }
  std::vector<char> in_universe(g.vertex_count(), 0);
  for (Vertex v : in.universe) {
    if (!g.contains(v)) throw std::invalid_argument("universe vertex out of range");
    if (in_universe[v]) throw std::invalid_argument("universe lists a vertex twice");
    in_universe[v] = 1;
  }
  auto check_pair = [&](const Edge& e, const char* what) {
    if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v) {
      throw std::invalid_argument(std::string(what) + " pair is not a pair of distinct vertices");
    }
  };
  std::vector<Edge> forbidden = in.forbidden;
  for (const Edge& e : forbidden) check_pair(e, "forbidden");
  std::sort(forbidden.begin(), forbidden.end());
  std::vector<Edge> required = in.required;
  for (const Edge& e : required) {
    check_pair(e, "required");
    if (!in_universe[e.u] || !in_universe[e.v]) {
      throw std::invalid_argument("required pair outside the universe");
    }
    const bool adjacent = g.adjacent(e.u, e.v);
    if ((in.mode == CoverMode::kConnected) == adjacent) {
      throw std::invalid_argument(
          in.mode == CoverMode::kConnected
              ? "connected mode: required pair " + std::to_string(e.u) + "," +
                    std::to_string(e.v) + " is an edge of the host"
              : "co-connected mode: required pair " + std::to_string(e.u) + "," +
                    std::to_string(e.v) + " is not an edge of the host");
    }
    if (std::binary_search(forbidden.begin(), forbidden.end(), e)) {
      throw std::invalid_argument("pair is both required and forbidden");
    }
  }
  std::sort(required.begin(), required.end());
  if (std::adjacent_find(required.begin(), required.end()) != required.end()) {
    throw std::invalid_argument("required pair listed twice");
  }
}

class Engine {
 public:
  Engine(const CoverInstance& instance, const SearchBudget& budget)
      : in_(instance), budget_(budget) {
    universe_ = in_.universe;
    std::sort(universe_.begin(), universe_.end());
    k_ = static_cast<int>(universe_.size());
    all_ = k_ == 64 ? ~VertexMask{0} : bit(k_) - 1;
    std::vector<int> local(in_.host.vertex_count(), -1);
    for (int i = 0; i < k_; ++i) local[universe_[i]] = i;

    kadj_.assign(k_, 0);
    forbid_.assign(k_, 0);
    req_adj_.assign(k_, 0);
    pair_id_.assign(static_cast<std::size_t>(k_) * k_, -1);
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        const bool adjacent = in_.host.adjacent(universe_[i], universe_[j]);
        if ((in_.mode == CoverMode::kCoConnected) == adjacent) {
          kadj_[i] |= bit(j);
          kadj_[j] |= bit(i);
        }
      }
    }
    for (const Edge& e : in_.forbidden) {
      const int a = local[e.u];
      const int b = local[e.v];
      if (a < 0 || b < 0) continue;
      forbid_[a] |= bit(b);
      forbid_[b] |= bit(a);
    }
    for (std::size_t idx = 0; idx < in_.required.size(); ++idx) {
      const int a = local[in_.required[idx].u];
      const int b = local[in_.required[idx].v];
      req_adj_[a] |= bit(b);
      req_adj_[b] |= bit(a);
      pair_id_[a * k_ + b] = pair_id_[b * k_ + a] = static_cast<int>(idx);
      full_.set(static_cast<int>(idx));
    }
  }

  CoverResult run() {
    CoverResult result;
    if (in_.required.empty()) {
      result.status = CoverStatus::kOptimal;
      result.cost = 0;
      return result;
    }
    generate_candidates();
    result.stats.enumerated = enumerated_;
    if (enumeration_cut_) {
      result.status = CoverStatus::kBudgetExhausted;
      result.message = "candidate enumeration exceeded its budget";
      return result;
    }
    prune_dominated();
    result.stats.candidates = candidates_.size();

    by_pair_.assign(in_.required.size(), {});
    for (int c = 0; c < static_cast<int>(candidates_.size()); ++c) {
      candidates_[c].covers.for_each([&](int e) { by_pair_[e].push_back(c); });
    }
    for (std::size_t e = 0; e < by_pair_.size(); ++e) {
      if (by_pair_[e].empty()) {
        const Edge& p = in_.required[e];
        result.status = CoverStatus::kInfeasible;
        result.message = "no admissible hyperedge covers the pair " + std::to_string(p.u) + "," +
                         std::to_string(p.v);
        return result;
      }
    }

    best_ = in_.upper_bound ? *in_.upper_bound + 1 : kInfinite;
    greedy();
    search(PairMask{}, 0);
    result.stats.nodes = nodes_;

    if (best_path_.empty() && !(full_.none())) {
      result.status = search_cut_ ? CoverStatus::kBudgetExhausted : CoverStatus::kInfeasible;
      result.message = search_cut_ ? "search budget exhausted before any cover was found"
                                   : "no cover within the upper bound";
      return result;
    }
    result.status = search_cut_ ? CoverStatus::kBudgetExhausted : CoverStatus::kOptimal;
    if (search_cut_) result.message = "search budget exhausted; reporting the best cover found";
    result.cost = best_;
    result.cover = witness();
    return result;
  }

 private:
  // ---- candidate generation ------------------------------------------------

  bool co_connected(VertexMask s) const {
    if (std::popcount(s) <= 1) return true;
    VertexMask seen = s & (~s + 1);
    VertexMask frontier = seen;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexMask next = s & ~kadj_[v] & ~seen & ~bit(v);
      seen |= next;
      frontier |= next;
    }
    return seen == s;
  }

  VertexMask padding_choices(VertexMask s) const {
    VertexMask choices = all_ & ~s;
    for (VertexMask x = s; x; x &= x - 1) {
      const int v = std::countr_zero(x);
      choices &= ~kadj_[v] & ~forbid_[v];
    }
    return choices;
  }

  // Cost of a K-connected, forbidden-free set, or kInfinite.
  int set_cost(VertexMask s) const {
    const int size = std::popcount(s);
    if (size < 2) return kInfinite;
    if (co_connected(s)) return size - 2;
    if (in_.require_dual_connectivity) return kInfinite;
    return padding_choices(s) ? size - 1 : kInfinite;
  }

  bool reducible(VertexMask d, int cost) const {
    for (VertexMask x = d; x; x &= x - 1) {
      const int v = std::countr_zero(x);
      const VertexMask rest = d & ~bit(v);
      std::vector<VertexMask> parts;
      for (VertexMask left = rest; left;) {
        VertexMask seen = left & (~left + 1);
        VertexMask frontier = seen;
        while (frontier) {
          const int w = std::countr_zero(frontier);
          frontier &= frontier - 1;
          const VertexMask next = kadj_[w] & left & ~seen;
          seen |= next;
          frontier |= next;
        }
        parts.push_back(seen);
        left &= ~seen;
      }
      const int t = static_cast<int>(parts.size());
      if (t < 2) continue;
      // All groupings for small t; one-part-versus-rest beyond that.
      const bool all_groupings = t <= 10;
      const int limit = all_groupings ? (1 << (t - 1)) : t;
      for (int g = 1; g < limit; ++g) {
        VertexMask a = bit(v);
        VertexMask b = bit(v);
        for (int i = 0; i < t; ++i) {
          const bool in_a = all_groupings ? ((g >> i) & 1) : (i == g);
          (in_a ? a : b) |= parts[i];
        }
        const int ca = set_cost(a);
        if (ca > cost) continue;
        const int cb = set_cost(b);
        if (cb < kInfinite && ca + cb <= cost) return true;
      }
    }
    return false;
  }

  void consider(VertexMask s, const PairMask& covers) {
    if (covers.none()) return;
    const int c = set_cost(s);
    if (c >= kInfinite) return;
    if (reducible(s, c)) return;
    auto [it, inserted] = index_.try_emplace(covers, static_cast<int>(candidates_.size()));
    if (inserted) {
      candidates_.push_back({covers, c, s});
    } else if (candidates_[it->second].cost > c) {
      candidates_[it->second] = {covers, c, s};
    }
  }

  void visit(VertexMask s, VertexMask ext, VertexMask banned, const PairMask& covers) {
    if (enumeration_cut_) return;
    if (++enumerated_ > budget_.max_enumerated) {
      enumeration_cut_ = true;
      return;
    }
    consider(s, covers);
    while (ext) {
      const int v = std::countr_zero(ext);
      ext &= ext - 1;
      if (forbid_[v] & s) {
        banned |= bit(v);
        continue;
      }
      PairMask grown = covers;
      for (VertexMask x = s & req_adj_[v]; x; x &= x - 1) {
        grown.set(pair_id_[v * k_ + std::countr_zero(x)]);
      }
      const VertexMask fresh = kadj_[v] & ~s & ~banned & ~ext & all_;
      visit(s | bit(v), ext | fresh, banned, grown);
      banned |= bit(v);
      if (enumeration_cut_) return;
    }
  }

  void generate_candidates() {
    VertexMask done = 0;
    for (int r = 0; r < k_ && !enumeration_cut_; ++r) {
      visit(bit(r), kadj_[r] & ~done & ~bit(r), done | bit(r), PairMask{});
      done |= bit(r);
    }
  }

  void prune_dominated() {
    std::sort(candidates_.begin(), candidates_.end(), [](const Candidate& a, const Candidate& b) {
      if (a.cost != b.cost) return a.cost < b.cost;
      return a.covers.count() > b.covers.count();
    });
    // Quadratic; skipped on very large lists, which only costs speed.
    if (candidates_.size() > 40'000) return;
    std::vector<Candidate> kept;
    for (const Candidate& c : candidates_) {
      const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Candidate& k) {
        return c.covers.subset_of(k.covers);
      });
      if (!dominated) kept.push_back(c);
    }
    candidates_ = std::move(kept);
  }

  // ---- set cover search ----------------------------------------------------

  int lower_bound(const PairMask& uncovered) const {
    double total = 0;
    uncovered.for_each([&](int e) {
      double cheapest = std::numeric_limits<double>::infinity();
      for (int c : by_pair_[e]) {
        const int gain = (candidates_[c].covers & uncovered).count();
        cheapest = std::min(cheapest, static_cast<double>(candidates_[c].cost) / gain);
      }
      total += cheapest;
    });
    return static_cast<int>(std::ceil(total - 1e-9));
  }

  void greedy() {
    PairMask covered;
    int cost = 0;
    std::vector<int> path;
    while (!full_.subset_of(covered)) {
      const PairMask uncovered = full_.without(covered);
      int pick = -1;
      double pick_ratio = 0;
      for (int c = 0; c < static_cast<int>(candidates_.size()); ++c) {
        const int gain = (candidates_[c].covers & uncovered).count();
        if (gain == 0) continue;
        const double ratio = static_cast<double>(candidates_[c].cost) / gain;
        if (pick < 0 || ratio < pick_ratio) {
          pick = c;
          pick_ratio = ratio;
        }
      }
      if (pick < 0) return;
      covered = covered | candidates_[pick].covers;
      cost += candidates_[pick].cost;
      path.push_back(pick);
    }
    if (cost < best_) {
      best_ = cost;
      best_path_ = std::move(path);
    }
  }

  void search(const PairMask& covered, int cost) {
    if (search_cut_) return;
    if (++nodes_ > budget_.max_nodes) {
      search_cut_ = true;
      return;
    }
    if (full_.subset_of(covered)) {
      if (cost < best_) {
        best_ = cost;
        best_path_ = path_;
      }
      return;
    }
    if (auto it = memo_.find(covered); it != memo_.end()) {
      if (it->second <= cost) return;
      it->second = cost;
    } else if (memo_.size() < kMemoLimit) {
      memo_.emplace(covered, cost);
    }
    const PairMask uncovered = full_.without(covered);
    if (cost + lower_bound(uncovered) >= best_) return;

    int branch = -1;
    uncovered.for_each([&](int e) {
      if (branch < 0 || by_pair_[e].size() < by_pair_[branch].size()) branch = e;
    });
    std::vector<std::pair<double, int>> options;
    options.reserve(by_pair_[branch].size());
    for (int c : by_pair_[branch]) {
      const int gain = (candidates_[c].covers & uncovered).count();
      options.emplace_back(static_cast<double>(candidates_[c].cost) / gain, c);
    }
    std::sort(options.begin(), options.end());
    for (const auto& [ratio, c] : options) {
      if (cost + candidates_[c].cost >= best_) continue;
      path_.push_back(c);
      search(covered | candidates_[c].covers, cost + candidates_[c].cost);
      path_.pop_back();
      if (search_cut_) return;
    }
  }

  Hypergraph witness() const {
    std::vector<std::vector<Vertex>> out;
    for (int c : best_path_) {
      const Candidate& cand = candidates_[c];
      std::vector<Vertex> e;
      for (VertexMask x = cand.vertices; x; x &= x - 1) e.push_back(universe_[std::countr_zero(x)]);
      if (!co_connected(cand.vertices)) {
        e.push_back(universe_[std::countr_zero(padding_choices(cand.vertices))]);
      }
      out.push_back(std::move(e));
    }
    return Hypergraph(std::move(out));
  }

  static constexpr std::size_t kMemoLimit = 2'000'000;

  const CoverInstance& in_;
  SearchBudget budget_;
  std::vector<Vertex> universe_;
  int k_ = 0;
  VertexMask all_ = 0;
  std::vector<VertexMask> kadj_;
  std::vector<VertexMask> forbid_;
  std::vector<VertexMask> req_adj_;
  std::vector<int> pair_id_;
  PairMask full_;

  std::uint64_t enumerated_ = 0;
  bool enumeration_cut_ = false;
  std::vector<Candidate> candidates_;
  std::unordered_map<PairMask, int, PairMaskHash> index_;
  std::vector<std::vector<int>> by_pair_;

  std::uint64_t nodes_ = 0;
  bool search_cut_ = false;
  int best_ = kInfinite;
  std::vector<int> best_path_;
  std::vector<int> path_;
  std::unordered_map<PairMask, int, PairMaskHash> memo_;
};

}  // namespace

void check_instance(const CoverInstance& instance) { validate_instance(instance); }

CoverInstance make_ochg_instance(const Graph& g) {
  CoverInstance instance;
  instance.host = g;
  instance.mode = CoverMode::kConnected;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    instance.universe.push_back(u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.adjacent(u, v)) instance.required.emplace_back(u, v);
    }
  }
  return instance;
}

ValidationReport validate_cover(const CoverInstance& instance, const Hypergraph& cover) {
  const Graph& g = instance.host;
  ValidationReport report;
  report.cost = mcts::cost(cover);
  std::vector<char> in_universe(g.vertex_count(), 0);
  for (Vertex v : instance.universe) {
    if (g.contains(v)) in_universe[v] = 1;
  }
  std::vector<Edge> forbidden = instance.forbidden;
  std::sort(forbidden.begin(), forbidden.end());

  for (const auto& e : cover) {
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return !g.contains(v); })) {
      report.violations.push_back({ViolationKind::kVertexOutOfRange, e});
      continue;
    }
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return !in_universe[v]; })) {
      report.violations.push_back({ViolationKind::kOutsideUniverse, e});
    }
    if (e.size() < 2) {
      report.violations.push_back({ViolationKind::kTooSmall, e});
      continue;
    }
    const bool connected = induces_connected(g, e);
    const bool co = induces_co_connected(g, e);
    const bool need_connected =
        instance.mode == CoverMode::kConnected || instance.require_dual_connectivity;
    const bool need_co =
        instance.mode == CoverMode::kCoConnected || instance.require_dual_connectivity;
    if (need_connected && !connected) report.violations.push_back({ViolationKind::kNotConnected, e});
    if (need_co && !co) report.violations.push_back({ViolationKind::kNotCoConnected, e});
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const Edge p(e[i], e[j]);
        if (std::binary_search(forbidden.begin(), forbidden.end(), p)) {
          Violation v{ViolationKind::kForbiddenPair, e};
          v.pair = {p.u, p.v};
          report.violations.push_back(std::move(v));
        }
      }
    }
  }
  for (const Edge& p : instance.required) {
    const bool covered = std::any_of(cover.begin(), cover.end(), [&](const auto& e) {
      return std::binary_search(e.begin(), e.end(), p.u) &&
             std::binary_search(e.begin(), e.end(), p.v);
    });
    if (!covered) {
      Violation v{ViolationKind::kUncoveredPair, {}};
      v.pair = {p.u, p.v};
      report.violations.push_back(std::move(v));
    }
  }
  report.valid = report.violations.empty();
  return report;
}

CoverResult min_cost_cover(const CoverInstance& instance, const SearchBudget& budget) {
  validate_instance(instance);
  Engine engine(instance, budget);
  return engine.run();
}

}  // namespace mcts
