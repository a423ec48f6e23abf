#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "mcts/sat_reduction.hpp"

namespace mcts {

namespace {

using Occ = OccurrenceGadget;

constexpr std::array<Symbol, 4> kSymbols = {Symbol::kB, Symbol::kU, Symbol::kS, Symbol::kN};

// Whether the configuration symbol asks for the T (or F) labelled edge of an
// occurrence with the given polarity.
bool designated(Symbol s, Polarity polarity, bool t_side) {
  const bool satisfying_side = t_side == (polarity == Polarity::kPositive);
  switch (s) {
    case Symbol::kB: return true;
    case Symbol::kN: return false;
    case Symbol::kS: return satisfying_side;
    case Symbol::kU: return !satisfying_side;
  }
  return false;
}

}  // namespace

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::kB: return 'B';
    case Symbol::kU: return 'U';
    case Symbol::kS: return 'S';
    case Symbol::kN: return 'N';
  }
  return '?';
}

Configuration Configuration::parse(std::string_view text) {
  if (text.size() != 3) {
    throw std::invalid_argument("a configuration is three symbols from B, U, S, N");
  }
  std::array<Symbol, 3> slots{};
  for (int i = 0; i < 3; ++i) {
    const auto it = std::find_if(kSymbols.begin(), kSymbols.end(),
                                 [&](Symbol s) { return symbol_char(s) == text[i]; });
    if (it == kSymbols.end()) {
      throw std::invalid_argument("unknown configuration symbol '" + std::string(1, text[i]) + "'");
    }
    slots[i] = *it;
  }
  return Configuration(slots);
}

Configuration Configuration::canonical() const {
  auto slots = slots_;
  std::sort(slots.begin(), slots.end());
  return Configuration(slots);
}

std::string Configuration::to_string() const {
  std::string s;
  for (Symbol x : slots_) s += symbol_char(x);
  return s;
}

std::vector<Configuration> all_configurations() {
  std::vector<Configuration> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      for (int c = b; c < 4; ++c) out.emplace_back(std::array{kSymbols[a], kSymbols[b], kSymbols[c]});
    }
  }
  return out;
}

CoverInstance configuration_instance(const Configuration& config,
                                     const ConfigurationOptions& options) {
  const ReferenceClause clause = build_reference_clause();
  CoverInstance instance;
  instance.host = clause.graph;
  instance.mode = CoverMode::kCoConnected;
  instance.require_dual_connectivity = options.require_dual_connectivity;
  for (Vertex v = 0; v < clause.graph.vertex_count(); ++v) instance.universe.push_back(v);

  std::vector<Edge> labelled;
  for (int slot = 0; slot < 3; ++slot) {
    const Polarity pol = ReferenceClause::kPolarity[slot];
    const Edge t(ReferenceClause::vertex(slot, Occ::kLeafT), ReferenceClause::vertex(slot, Occ::p(8)));
    const Edge f(ReferenceClause::vertex(slot, Occ::kLeafF), ReferenceClause::vertex(slot, Occ::p(1)));
    labelled.push_back(t);
    labelled.push_back(f);
    for (const auto& [edge, t_side] : {std::pair{t, true}, std::pair{f, false}}) {
      if (designated(config.slots()[slot], pol, t_side)) {
        instance.required.push_back(edge);
      } else if (options.semantics == Semantics::kExact) {
        instance.forbidden.push_back(edge);
      }
    }
  }
  std::sort(labelled.begin(), labelled.end());
  for (const Edge& e : clause.graph.edges()) {
    if (!std::binary_search(labelled.begin(), labelled.end(), e)) instance.required.push_back(e);
  }
  return instance;
}

CoverResult configuration_min_cost(const Configuration& config, const SearchBudget& budget,
                                   const ConfigurationOptions& options) {
  return min_cost_cover(configuration_instance(config, options), budget);
}

std::vector<TableEntry> configuration_table(const SearchBudget& budget,
                                            const ConfigurationOptions& options) {
  const auto configs = all_configurations();
  std::vector<TableEntry> table(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        table[i] = {configs[i], configuration_min_cost(configs[i], budget, options)};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, static_cast<unsigned>(configs.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return table;
}

}  // namespace mcts
