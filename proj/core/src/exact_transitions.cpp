#include <stdexcept>
#include <vector>

#include "disjoint_sets.hpp"
#include "edge_index.hpp"
#include "mcts/solvers.hpp"

namespace mcts {

namespace {

// Depth-first enumeration of k-subsets of the transitions. A transition whose
// two edges already lie in one class of the chosen transitions cannot appear
// in a minimum set (dropping it changes no class), so it is skipped.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, std::uint64_t limit)
      : g_(g), all_(enumerate_transitions(g).items()), index_(g), limit_(limit) {
    for (const Transition& t : all_) {
      ends_.emplace_back(index_.at(t.a, t.middle), index_.at(t.middle, t.c));
    }
  }

  bool find(int k, std::vector<Transition>& out) {
    chosen_.clear();
    return extend(0, k, detail::DisjointSets(static_cast<int>(index_.size())), out);
  }

 private:
  bool extend(std::size_t from, int left, const detail::DisjointSets& classes,
              std::vector<Transition>& out) {
    if (left == 0) {
      if (++tested_ > limit_) {
        throw SearchLimitExceeded("exact_min_transitions: subset limit exceeded");
      }
      TransitionSet t(chosen_);
      if (!is_t_connected(g_, t)) return false;
      out = chosen_;
      return true;
    }
    for (std::size_t i = from; i + left <= all_.size(); ++i) {
      detail::DisjointSets next = classes;
      if (!next.unite(ends_[i].first, ends_[i].second)) continue;
      chosen_.push_back(all_[i]);
      if (extend(i + 1, left - 1, next, out)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Transition> all_;
  detail::EdgeIndex index_;
  std::vector<std::pair<int, int>> ends_;
  std::uint64_t limit_;
  std::uint64_t tested_ = 0;
  std::vector<Transition> chosen_;
};

}  // namespace

TransitionSet exact_min_transitions(const Graph& g, std::uint64_t max_subsets) {
  if (!is_connected(g)) throw std::invalid_argument("exact_min_transitions: graph is disconnected");
  SubsetSearch search(g, max_subsets);
  const int most = static_cast<int>(enumerate_transitions(g).size());
  std::vector<Transition> found;
  for (int k = 0; k <= most; ++k) {
    if (search.find(k, found)) return TransitionSet(std::move(found));
  }
  throw std::logic_error("exact_min_transitions: no connecting set among all transitions");
}

}  // namespace mcts
