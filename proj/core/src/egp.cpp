#include "egp/egp.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "egp/block.hpp"
#include "egp/gperm.hpp"
#include "egp/ryser.hpp"

namespace egp {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "direct") return Algorithm::direct;
  if (name == "reduced") return Algorithm::reduced;
  if (name == "cofactor") return Algorithm::cofactor;
  if (name == "auto") return Algorithm::automatic;
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected direct|reduced|cofactor|auto)");
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::direct: return "direct";
    case Algorithm::reduced: return "reduced";
    case Algorithm::cofactor: return "cofactor";
    case Algorithm::automatic: return "auto";
  }
  return "?";
}

const EgpValue* EgpSequence::at_prime(std::uint64_t p) const {
  for (const auto& v : values)
    if (v.prime == p) return &v;
  return nullptr;
}

std::vector<std::uint64_t> admissible_primes(const BlockSpec& spec, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(bound)) {
    if ((p - 1) % spec.row_copies == 0 && p - 1 >= spec.row_copies) out.push_back(p);
  }
  return out;
}

Residue gperm(const OrientedGraph& g, std::uint64_t p, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::direct: return gperm_direct(g, p);
    case Algorithm::reduced: return gperm_reduced(g, p);
    case Algorithm::cofactor: return gperm_cofactor(g, p);
    case Algorithm::automatic: {
      // Small fundamental matrices go straight to Ryser; the calculus wins everywhere else.
      const BlockSpec spec = block_spec(g);
      const std::uint64_t n = require_prime_index(spec, p);
      if (n * spec.lcm <= 12) return gperm_direct(g, p);
      return gperm_cofactor(g, p);
    }
  }
  throw std::logic_error("unhandled algorithm");
}

EgpSequence egp(const OrientedGraph& input, std::uint64_t bound, const EgpOptions& options) {
  // the joined graph has fewer vertices, hence its own prime set
  if (options.join_components && !is_connected(input)) return egp(join_components_at_special(input), bound, options);
  const BlockSpec spec = block_spec(input);
  const auto primes = admissible_primes(spec, bound);
  if (primes.empty()) {
    throw std::invalid_argument("no admissible prime <= " + std::to_string(bound) + " (calV = " +
                                std::to_string(spec.row_copies) + ")");
  }
  EgpSequence seq;
  seq.graph_id = options.graph_id;
  seq.spec = spec;
  for (auto p : primes) {
    EgpValue v;
    v.prime = p;
    v.n = (p - 1) / spec.row_copies;
    v.variate = is_variate(spec, v.n);
    seq.values.push_back(v);
  }

  if (!is_connected(input)) {
    for (auto& v : seq.values) v.residue = 0;
    return seq;
  }
  const OrientedGraph& g = input;

  unsigned workers = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(seq.values.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < seq.values.size(); i = next++) {
      EgpValue& v = seq.values[i];
      try {
        v.residue = gperm(g, v.prime, options.algorithm);
      } catch (const CapExceeded& e) {
        v.absent_reason = e.what();
      } catch (const RankDeficient& e) {
        v.absent_reason = e.what();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return seq;
}

EgpSequence canonicalize_sign(EgpSequence s) {
  bool flip = false;
  for (const auto& v : s.values) {
    if (!v.variate || !v.residue || *v.residue == 0) continue;
    flip = *v.residue > v.prime - *v.residue;
    break;
  }
  if (flip) {
    for (auto& v : s.values) {
      if (v.variate && v.residue && *v.residue != 0) v.residue = v.prime - *v.residue;
    }
  }
  s.canonicalized = true;
  return s;
}

bool sequences_equal(const EgpSequence& a, const EgpSequence& b) {
  if (a.spec.row_copies != b.spec.row_copies) {
    throw std::invalid_argument("sequences live on different prime sets (calV " + std::to_string(a.spec.row_copies) +
                                " vs " + std::to_string(b.spec.row_copies) + ")");
  }
  const EgpSequence ca = a.canonicalized ? a : canonicalize_sign(a);
  const EgpSequence cb = b.canonicalized ? b : canonicalize_sign(b);
  for (const auto& va : ca.values) {
    const EgpValue* vb = cb.at_prime(va.prime);
    if (!vb || !va.residue || !vb->residue) continue;
    if (*va.residue != *vb->residue) return false;
  }
  return true;
}

bool equal_up_to_variate_sign(Residue a, Residue b, std::uint64_t p, bool variate) {
  if (a % p == b % p) return true;
  return variate && (a + b) % p == 0;
}

}  // namespace egp
