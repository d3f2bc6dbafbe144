#include "egp/cofactor.hpp"

#include <cstring>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace egp {

namespace {

class Calculus {
 public:
  Calculus(const WeightedState& s, EliminationOrder order)
      : table_(s.modulus, max_weight(s)), mod_(table_.mod()), order_(order), nv_(s.vertex_weights.size()) {
    edge_inc_.resize(s.edges.size());
    vertex_inc_.resize(nv_);
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
      for (const auto& [v, c] : s.edges[e].incidences) {
        if (v >= nv_) throw std::invalid_argument("cofactor_calculus: incidence vertex out of range");
        const Residue r = mod_.reduce(c);
        if (r == 0) continue;
        edge_inc_[e].push_back({v, r});
        vertex_inc_[v].push_back({e, r});
      }
    }
  }

  Residue run(const WeightedState& s, CofactorStats* stats) {
    std::uint64_t vsum = 0, esum = 0;
    std::vector<std::uint64_t> w;
    for (auto x : s.vertex_weights) {
      vsum += x;
      w.push_back(x);
    }
    for (const auto& e : s.edges) {
      esum += e.weight;
      w.push_back(e.weight);
    }
    if (vsum != esum) {
      throw std::invalid_argument("cofactor_calculus: vertex weights sum to " + std::to_string(vsum) +
                                  " but edge weights sum to " + std::to_string(esum));
    }
    const Residue r = solve(w);
    if (stats) {
      stats->memo_entries = memo_.size();
      stats->expansions = expansions_;
    }
    return r;
  }

 private:
  struct Inc {
    std::size_t id;
    Residue coef;
  };

  static std::uint64_t max_weight(const WeightedState& s) {
    std::uint64_t m = 1;
    for (auto x : s.vertex_weights) m = std::max(m, x);
    for (const auto& e : s.edges) m = std::max(m, e.weight);
    return m;
  }

  std::uint64_t& vw(std::vector<std::uint64_t>& w, std::size_t v) const { return w[v]; }
  std::uint64_t& ew(std::vector<std::uint64_t>& w, std::size_t e) const { return w[nv_ + e]; }

  // Applies forced-edge and leaf rules until none fire. Returns the product of
  // the factors taken out, or 0 if the state is infeasible.
  Residue simplify(std::vector<std::uint64_t>& w) const {
    Residue factor = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t e = 0; e < edge_inc_.size(); ++e) {
        const std::uint64_t we = ew(w, e);
        if (we == 0) continue;
        std::size_t live = 0, u = 0;
        Residue c = 0;
        for (const auto& inc : edge_inc_[e]) {
          if (vw(w, inc.id) > 0) {
            ++live;
            u = inc.id;
            c = inc.coef;
          }
        }
        if (live == 0) return 0;
        if (live == 1) {
          if (we > vw(w, u)) return 0;
          factor = mod_.mul(factor, mod_.mul(table_.falling(static_cast<std::int64_t>(vw(w, u)),
                                                            static_cast<std::int64_t>(we)),
                                             mod_.pow(c, we)));
          vw(w, u) -= we;
          ew(w, e) = 0;
          changed = true;
          if (factor == 0) return 0;
        }
      }
      for (std::size_t v = 0; v < nv_; ++v) {
        const std::uint64_t wv = vw(w, v);
        if (wv == 0) continue;
        std::size_t live = 0, e = 0;
        Residue c = 0;
        for (const auto& inc : vertex_inc_[v]) {
          if (ew(w, inc.id) > 0) {
            ++live;
            e = inc.id;
            c = inc.coef;
          }
        }
        if (live == 0) return 0;
        if (live == 1) {
          if (wv > ew(w, e)) return 0;
          factor = mod_.mul(factor, mod_.mul(table_.falling(static_cast<std::int64_t>(ew(w, e)),
                                                            static_cast<std::int64_t>(wv)),
                                             mod_.pow(c, wv)));
          ew(w, e) -= wv;
          vw(w, v) = 0;
          changed = true;
          if (factor == 0) return 0;
        }
      }
    }
    return factor;
  }

  std::size_t pick_vertex(const std::vector<std::uint64_t>& w) const {
    std::size_t best = nv_;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < nv_; ++v) {
      if (w[v] == 0) continue;
      if (order_ == EliminationOrder::index) return v;
      std::size_t deg = 0;
      for (const auto& inc : vertex_inc_[v])
        if (w[nv_ + inc.id] > 0) ++deg;
      if (best == nv_ || deg > best_deg || (deg == best_deg && w[v] < w[best])) {
        best = v;
        best_deg = deg;
      }
    }
    return best;
  }

  static std::string encode(const std::vector<std::uint64_t>& w) {
    std::string key(w.size() * sizeof(std::uint32_t), '\0');
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto x = static_cast<std::uint32_t>(w[i]);
      std::memcpy(key.data() + i * sizeof(x), &x, sizeof(x));
    }
    return key;
  }

  Residue solve(std::vector<std::uint64_t> w) {
    Residue factor = 1;
    if (order_ == EliminationOrder::heuristic) {
      factor = simplify(w);
      if (factor == 0) return 0;
    }
    const std::size_t v = pick_vertex(w);
    if (v == nv_) {
      for (std::size_t e = 0; e < edge_inc_.size(); ++e)
        if (ew(w, e) > 0) return 0;
      return factor;
    }
    const std::uint64_t wv = w[v];
    if (wv >= table_.prime()) return 0;

    const std::string key = encode(w);
    if (auto it = memo_.find(key); it != memo_.end()) return mod_.mul(factor, it->second);

    ++expansions_;
    std::vector<Inc> live;
    for (const auto& inc : vertex_inc_[v])
      if (ew(w, inc.id) > 0) live.push_back(inc);
    std::vector<std::uint64_t> suffix(live.size() + 1, 0);
    for (std::size_t i = live.size(); i-- > 0;) suffix[i] = suffix[i + 1] + ew(w, live[i].id);

    Residue total = 0;
    std::vector<std::uint64_t> child = w;
    child[v] = 0;
    // Distribute wv over the live edges: k_i <= weight_i, sum k_i = wv.
    auto recurse = [&](auto&& self, std::size_t i, std::uint64_t left, Residue acc) -> void {
      if (i == live.size()) {
        if (left == 0) total = mod_.add(total, mod_.mul(acc, solve(child)));
        return;
      }
      const std::uint64_t we = ew(w, live[i].id);
      const std::uint64_t hi = std::min(we, left);
      const std::uint64_t lo = left > suffix[i + 1] ? left - suffix[i + 1] : 0;
      Residue cpow = mod_.pow(live[i].coef, lo);
      for (std::uint64_t k = lo; k <= hi; ++k) {
        const Residue b = table_.binom(static_cast<std::int64_t>(we), static_cast<std::int64_t>(k));
        if (b != 0) {
          child[nv_ + live[i].id] = we - k;
          self(self, i + 1, left - k, mod_.mul(acc, mod_.mul(b, cpow)));
        }
        cpow = mod_.mul(cpow, live[i].coef);
      }
      child[nv_ + live[i].id] = we;
    };
    recurse(recurse, 0, wv, table_.fact(wv));
    memo_.emplace(key, total);
    return mod_.mul(factor, total);
  }

  FactorialTable table_;
  const Modulus& mod_;
  EliminationOrder order_;
  std::size_t nv_;
  std::vector<std::vector<Inc>> edge_inc_;
  std::vector<std::vector<Inc>> vertex_inc_;
  std::unordered_map<std::string, Residue> memo_;
  std::size_t expansions_ = 0;
};

}  // namespace

Residue cofactor_calculus(const WeightedState& state, EliminationOrder order, CofactorStats* stats) {
  if (!is_prime(state.modulus)) throw std::invalid_argument("cofactor_calculus needs a prime modulus");
  Calculus calc(state, order);
  return calc.run(state, stats);
}

WeightedState state_from_graph(const OrientedGraph& g, std::uint64_t row_reps, std::uint64_t col_reps,
                               std::uint64_t p) {
  WeightedState s;
  s.modulus = p;
  const std::size_t special = g.special_vertex();
  auto index = [special](std::size_t v) { return v > special ? v - 1 : v; };
  s.vertex_weights.assign(g.vertex_count() - 1, row_reps);
  for (const Edge& e : g.edges()) {
    WeightedState::HyperEdge he;
    he.weight = col_reps;
    if (!e.is_loop()) {
      if (e.head != special) he.incidences.push_back({index(e.head), 1});
      if (e.tail != special) he.incidences.push_back({index(e.tail), -1});
    }
    s.edges.push_back(std::move(he));
  }
  return s;
}

}  // namespace egp
