#include "egp/block.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "egp/ryser.hpp"

namespace egp {

RowReduction blockwise_row_reduce(const BlockMatrix& bm, std::uint64_t p) {
  const Modulus mod(p);
  const std::size_t r = bm.base.rows();
  const std::size_t c = bm.base.cols();
  std::vector<std::vector<Residue>> a(r, std::vector<Residue>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a[i][j] = mod.reduce(bm.base(i, j));

  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot_col(c, false);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < c && rank < r; ++j) {
    std::size_t pick = r;
    for (std::size_t i = rank; i < r; ++i) {
      if (a[i][j] == 1 || a[i][j] == p - 1) {
        pick = i;
        break;
      }
      if (a[i][j] != 0 && pick == r) pick = i;
    }
    if (pick == r) continue;
    std::swap(a[rank], a[pick]);
    const Residue scale = mod.inv(a[rank][j]);
    for (auto& x : a[rank]) x = mod.mul(x, scale);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == rank || a[i][j] == 0) continue;
      const Residue f = a[i][j];
      for (std::size_t k = 0; k < c; ++k) a[i][k] = mod.sub(a[i][k], mod.mul(f, a[rank][k]));
    }
    pivot_cols.push_back(j);
    is_pivot_col[j] = true;
    ++rank;
  }
  if (rank < r) {
    throw RankDeficient("base matrix has rank " + std::to_string(rank) + " < " + std::to_string(r) +
                        " mod " + std::to_string(p));
  }

  RowReduction out;
  out.rank = rank;
  out.column_order = pivot_cols;
  for (std::size_t j = 0; j < c; ++j)
    if (!is_pivot_col[j]) out.column_order.push_back(j);
  IntMatrix reduced(r, c);
  const auto half = static_cast<Residue>(p / 2);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < c; ++k) {
      const Residue v = a[i][out.column_order[k]];
      reduced(i, k) = v > half ? static_cast<std::int64_t>(v) - static_cast<std::int64_t>(p)
                               : static_cast<std::int64_t>(v);
    }
  }
  out.matrix = BlockMatrix{std::move(reduced), bm.row_reps, bm.col_reps};
  return out;
}

namespace {

using Key = unsigned __int128;

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    return mix(static_cast<std::uint64_t>(k) ^ mix(static_cast<std::uint64_t>(k >> 64)));
  }
};

// Greedy column order keeping the set of partially consumed rows small.
std::vector<std::size_t> frontier_order(const std::vector<std::vector<std::size_t>>& col_rows,
                                        std::size_t row_count) {
  const std::size_t c = col_rows.size();
  std::vector<std::size_t> remaining_cols_of_row(row_count, 0);
  for (const auto& rows : col_rows)
    for (auto i : rows) ++remaining_cols_of_row[i];
  std::vector<bool> active(row_count, false), used(c, false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < c; ++step) {
    std::size_t best = c;
    long best_score = 0;
    for (std::size_t j = 0; j < c; ++j) {
      if (used[j]) continue;
      long score = 0;
      for (auto i : col_rows[j]) {
        if (!active[i]) ++score;
        if (remaining_cols_of_row[i] == 1) --score;
      }
      if (best == c || score < best_score) {
        best = j;
        best_score = score;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (auto i : col_rows[best]) {
      active[i] = true;
      if (--remaining_cols_of_row[i] == 0) active[i] = false;
    }
  }
  return order;
}

}  // namespace

Residue perm_multiset_mod(const IntMatrix& base, const std::vector<std::uint64_t>& row_mult,
                          const std::vector<std::uint64_t>& col_mult, const FactorialTable& table) {
  const Modulus& mod = table.mod();
  const std::uint64_t p = table.prime();
  if (row_mult.size() != base.rows() || col_mult.size() != base.cols()) {
    throw std::invalid_argument("perm_multiset_mod: multiplicity size mismatch");
  }
  std::uint64_t row_total = 0, col_total = 0;
  for (auto v : row_mult) row_total += v;
  for (auto v : col_mult) col_total += v;
  if (row_total != col_total) {
    throw std::invalid_argument("perm_multiset_mod: matrix is not square (" + std::to_string(row_total) +
                                " rows, " + std::to_string(col_total) + " columns)");
  }
  if (row_total == 0) return 1 % p;

  Residue prefactor = 1;
  for (auto v : row_mult) {
    if (v >= p) return 0;
    prefactor = mod.mul(prefactor, table.fact(v));
  }

  const std::size_t r = base.rows();
  std::vector<std::vector<std::size_t>> col_rows(base.cols());
  std::vector<std::size_t> live_cols;
  for (std::size_t j = 0; j < base.cols(); ++j) {
    if (col_mult[j] == 0) continue;
    for (std::size_t i = 0; i < r; ++i)
      if (row_mult[i] > 0 && mod.reduce(base(i, j)) != 0) col_rows[j].push_back(i);
    if (col_rows[j].empty()) return 0;
    live_cols.push_back(j);
  }
  std::vector<std::vector<std::size_t>> live_col_rows;
  for (auto j : live_cols) live_col_rows.push_back(col_rows[j]);
  std::vector<std::size_t> order = frontier_order(live_col_rows, r);
  for (auto& o : order) o = live_cols[o];

  // Last column (in processing order) touching each row.
  std::vector<std::size_t> last_col(r, base.cols());
  std::vector<std::size_t> touched(r, 0);
  for (auto j : order)
    for (auto i : col_rows[j]) {
      last_col[i] = j;
      ++touched[i];
    }
  for (std::size_t i = 0; i < r; ++i)
    if (row_mult[i] > 0 && touched[i] == 0) return 0;

  // Slot layout: one field per simultaneously active row plus the column remainder.
  std::uint64_t max_value = 0;
  for (auto v : row_mult) max_value = std::max(max_value, v);
  for (auto v : col_mult) max_value = std::max(max_value, v);
  const unsigned bits = std::max(1, static_cast<int>(std::bit_width(max_value)));
  std::size_t max_active = 0;
  {
    std::vector<bool> act(r, false);
    std::size_t count = 0;
    for (auto j : order) {
      for (auto i : col_rows[j])
        if (!act[i]) {
          act[i] = true;
          ++count;
        }
      max_active = std::max(max_active, count);
      for (auto i : col_rows[j])
        if (last_col[i] == j && act[i]) {
          act[i] = false;
          --count;
        }
    }
  }
  if ((max_active + 1) * bits > 128) {
    throw CapExceeded("multiset DP state width (bits)", 128, (max_active + 1) * bits);
  }
  const Key field_mask = (Key{1} << bits) - 1;
  auto get = [&](Key k, std::size_t slot) { return static_cast<std::uint64_t>((k >> (bits * slot)) & field_mask); };
  auto set = [&](Key k, std::size_t slot, std::uint64_t v) {
    k &= ~(field_mask << (bits * slot));
    return k | (static_cast<Key>(v) << (bits * slot));
  };
  const std::size_t rem_slot = max_active;

  std::vector<std::size_t> slot_of(r, SIZE_MAX);
  std::vector<std::size_t> free_slots;
  for (std::size_t s = max_active; s-- > 0;) free_slots.push_back(s);

  std::unordered_map<Key, Residue, KeyHash> cur{{Key{0}, 1}}, next;
  for (auto j : order) {
    {
      next.clear();
      next.reserve(cur.size());
      for (const auto& [k, v] : cur) next.emplace(set(k, rem_slot, col_mult[j]), v);
      cur.swap(next);
    }
    const auto& rows = col_rows[j];
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
      const std::size_t i = rows[idx];
      const bool new_row = slot_of[i] == SIZE_MAX;
      if (new_row) {
        slot_of[i] = free_slots.back();
        free_slots.pop_back();
      }
      const std::size_t slot = slot_of[i];
      const bool row_ends = last_col[i] == j;
      const bool col_ends = idx + 1 == rows.size();
      const Residue entry = mod.reduce(base(i, j));
      std::vector<Residue> powers{1};

      next.clear();
      for (const auto& [k0, val] : cur) {
        const Key k = new_row ? set(k0, slot, row_mult[i]) : k0;
        const std::uint64_t res = get(k, slot);
        const std::uint64_t rem = get(k, rem_slot);
        std::uint64_t lo = 0, hi = std::min(res, rem);
        if (row_ends) lo = res;
        if (col_ends) lo = std::max(lo, rem);
        if (lo > hi) continue;
        while (powers.size() <= hi) powers.push_back(mod.mul(powers.back(), entry));
        for (std::uint64_t t = lo; t <= hi; ++t) {
          const Residue b = table.binom(static_cast<std::int64_t>(rem), static_cast<std::int64_t>(t));
          if (b == 0) continue;
          const Residue w = mod.mul(val, mod.mul(b, powers[t]));
          if (w == 0) continue;
          const Key nk = set(set(k, slot, res - t), rem_slot, rem - t);
          auto [it, inserted] = next.try_emplace(nk, w);
          if (!inserted) it->second = mod.add(it->second, w);
        }
      }
      cur.swap(next);
      if (row_ends) {
        free_slots.push_back(slot);
        slot_of[i] = SIZE_MAX;
      }
      if (cur.empty()) return 0;
    }
  }
  Residue total = 0;
  for (const auto& [k, v] : cur) {
    if (k == 0) total = mod.add(total, v);
  }
  return mod.mul(prefactor, total);
}

Residue perm_block_mod(const BlockMatrix& bm, const FactorialTable& table) {
  const IntMatrix& b = bm.base;
  // Merge identical rows, then identical columns.
  std::map<std::vector<std::int64_t>, std::uint64_t> row_groups;
  std::vector<std::vector<std::int64_t>> row_keys;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::vector<std::int64_t> row(b.row(i).begin(), b.row(i).end());
    auto [it, inserted] = row_groups.try_emplace(row, 0);
    if (inserted) row_keys.push_back(row);
    it->second += bm.row_reps;
  }
  std::map<std::vector<std::int64_t>, std::uint64_t> col_groups;
  std::vector<std::vector<std::int64_t>> col_keys;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::vector<std::int64_t> col;
    for (const auto& rk : row_keys) {
      // Column entries restricted to the distinct rows, in first-seen row order.
      std::size_t i = 0;
      while (!std::equal(b.row(i).begin(), b.row(i).end(), rk.begin(), rk.end())) ++i;
      col.push_back(b(i, j));
    }
    auto [it, inserted] = col_groups.try_emplace(col, 0);
    if (inserted) col_keys.push_back(col);
    it->second += bm.col_reps;
  }
  IntMatrix merged(row_keys.size(), col_keys.size());
  std::vector<std::uint64_t> rm, cm;
  for (std::size_t i = 0; i < row_keys.size(); ++i) rm.push_back(row_groups[row_keys[i]]);
  for (std::size_t j = 0; j < col_keys.size(); ++j) {
    cm.push_back(col_groups[col_keys[j]]);
    for (std::size_t i = 0; i < row_keys.size(); ++i) merged(i, j) = col_keys[j][i];
  }
  return perm_multiset_mod(merged, rm, cm, table);
}

BigInt perm_multiset_exact(const IntMatrix& base, const std::vector<std::uint64_t>& row_mult,
                           const std::vector<std::uint64_t>& col_mult) {
  if (row_mult.size() != base.rows() || col_mult.size() != base.cols()) {
    throw std::invalid_argument("perm_multiset_exact: multiplicity size mismatch");
  }
  std::uint64_t row_total = 0, col_total = 0;
  for (auto v : row_mult) row_total += v;
  for (auto v : col_mult) col_total += v;
  if (row_total != col_total) throw std::invalid_argument("perm_multiset_exact: matrix is not square");

  const std::size_t r = base.rows();
  auto factorial = [](std::uint64_t n) {
    BigInt f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  std::map<std::vector<std::uint64_t>, BigInt> cur{{row_mult, BigInt(1)}}, next;
  for (std::size_t j = 0; j < base.cols(); ++j) {
    next.clear();
    const BigInt cfact = factorial(col_mult[j]);
    for (const auto& [rem, val] : cur) {
      // distribute col_mult[j] over rows with k_i <= rem_i
      std::vector<std::uint64_t> k(r, 0);
      auto rec = [&](auto&& self, std::size_t i, std::uint64_t left, BigInt term, BigInt denom) -> void {
        if (i == r) {
          if (left != 0) return;
          auto nr = rem;
          for (std::size_t t = 0; t < r; ++t) nr[t] -= k[t];
          next[nr] += val * term * (cfact / denom);
          return;
        }
        const std::int64_t b = base(i, j);
        const std::uint64_t top = std::min(left, rem[i]);
        BigInt pw = 1, kf = 1;
        for (std::uint64_t c = 0; c <= top; ++c) {
          if (c > 0) {
            if (b == 0) break;
            pw *= b;
            kf *= c;
          }
          k[i] = c;
          self(self, i + 1, left - c, term * pw, denom * kf);
        }
        k[i] = 0;
      };
      rec(rec, 0, col_mult[j], BigInt(1), BigInt(1));
    }
    std::swap(cur, next);
    for (auto it = cur.begin(); it != cur.end();) it = it->second == 0 ? cur.erase(it) : std::next(it);
  }
  BigInt total = 0;
  for (const auto& [rem, val] : cur)
    if (std::all_of(rem.begin(), rem.end(), [](auto v) { return v == 0; })) total += val;
  for (auto v : row_mult) total *= factorial(v);
  return total;
}

BigInt perm_block_exact(const BlockMatrix& bm) {
  std::vector<std::uint64_t> rm(bm.base.rows(), bm.row_reps), cm(bm.base.cols(), bm.col_reps);
  return perm_multiset_exact(bm.base, rm, cm);
}

}  // namespace egp
