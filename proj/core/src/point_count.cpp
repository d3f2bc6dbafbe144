#include "egp/point_count.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "egp/egp.hpp"
#include "egp/gperm.hpp"

namespace egp {

std::string LinearFormProduct::to_string(bool tilde) const {
  std::ostringstream out;
  const char var = tilde ? 'y' : 'x';
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i) out << ' ';
    out << '(';
    bool first = true;
    for (std::size_t j = 0; j < forms[i].size(); ++j) {
      const std::int64_t c = forms[i][j];
      if (c == 0) continue;
      if (!first) out << (c < 0 ? " - " : " + ");
      else if (c < 0) out << '-';
      const std::int64_t a = c < 0 ? -c : c;
      if (a != 1) out << a;
      out << var << j + 1;
      if (tilde && tilde_exponent != 1) out << '^' << tilde_exponent;
      first = false;
    }
    if (first) out << '0';
    out << ')';
    if (!tilde && multiplicity != 1) out << '^' << multiplicity;
  }
  return out.str();
}

LinearFormProduct permanent_polynomial(const OrientedGraph& g) {
  LinearFormProduct f;
  f.spec = block_spec(g);
  const IntMatrix m = reduced_incidence(g).matrix;
  const std::size_t e = g.edge_count();
  const std::size_t copies = f.spec.column_copies;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::int64_t> form(e * copies, 0);
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t j = 0; j < e; ++j) form[c * e + j] = m(i, j);
    f.forms.push_back(std::move(form));
  }
  f.multiplicity = f.spec.row_copies;
  f.tilde_exponent = f.spec.row_copies;
  return f;
}

namespace {

std::size_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap, const char* what) {
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (size > cap / base) throw CapExceeded(what, cap, std::numeric_limits<std::size_t>::max());
    size *= base;
  }
  if (size > cap) throw CapExceeded(what, cap, size);
  return size;
}

// Coefficient of prod x_j^r in prod_i (row_i . x)^{times_i}, dense over exponents 0..r.
template <class T, class Reduce>
T top_coefficient(const std::vector<std::vector<std::int64_t>>& rows, std::size_t times, std::uint64_t r,
                  std::size_t cap, Reduce reduce) {
  const std::size_t vars = rows.empty() ? 0 : rows.front().size();
  const std::size_t size = checked_power(r + 1, vars, cap, "coefficient table cap");
  std::vector<std::size_t> stride(vars, 1);
  for (std::size_t j = 1; j < vars; ++j) stride[j] = stride[j - 1] * (r + 1);
  std::vector<T> cur(size, T(0)), next(size, T(0));
  cur[0] = T(1);
  for (const auto& row : rows) {
    for (std::size_t t = 0; t < times; ++t) {
      std::fill(next.begin(), next.end(), T(0));
      for (std::size_t idx = 0; idx < size; ++idx) {
        if (cur[idx] == T(0)) continue;
        for (std::size_t j = 0; j < vars; ++j) {
          if (row[j] == 0 || (idx / stride[j]) % (r + 1) == r) continue;
          next[idx + stride[j]] = reduce(next[idx + stride[j]] + T(row[j]) * cur[idx]);
        }
      }
      std::swap(cur, next);
    }
  }
  return cur[size - 1];
}

}  // namespace

Residue tilde_coefficient(const OrientedGraph& g, std::uint64_t p, std::size_t cap) {
  const LinearFormProduct f = permanent_polynomial(g);
  const std::uint64_t r = require_prime_index(f.spec, p);
  const auto sp = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::int64_t>> rows = f.forms;
  for (auto& row : rows)
    for (auto& a : row) a = ((a % sp) + sp) % sp;
  // In z = y^calV every factor f_i(z)^{p-1} has degree r calV and the target is prod z_j^r.
  const std::int64_t v = top_coefficient<std::int64_t>(rows, p - 1, r, cap, [sp](std::int64_t x) { return x % sp; });
  return static_cast<Residue>(((v % sp) + sp) % sp);
}

Residue coefficient_oracle(const OrientedGraph& g, std::uint64_t p, std::size_t cap) {
  const BlockSpec spec = block_spec(g);
  const std::uint64_t r = require_prime_index(spec, p);
  FactorialTable table(p, r);
  const Modulus& mod = table.mod();
  return mod.mul(mod.pow(table.fact(r), spec.lcm), tilde_coefficient(g, p, cap));
}

BigInt extension_coefficient(const IntMatrix& a, unsigned r) {
  if (!a.square()) throw std::invalid_argument("extension_coefficient: matrix must be square");
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.emplace_back(a.row(i).begin(), a.row(i).end());
  BigInt c = top_coefficient<BigInt>(rows, r, r, kCoefficientTableCap, [](const BigInt& x) { return x; });
  BigInt rf = 1;
  for (unsigned k = 2; k <= r; ++k) rf *= k;
  for (std::size_t i = 0; i < a.rows(); ++i) c *= rf;
  return c;
}

std::uint64_t point_count(const OrientedGraph& g, std::uint64_t p, unsigned threads, std::uint64_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("point_count: " + std::to_string(p) + " is not prime");
  const LinearFormProduct f = permanent_polynomial(g);
  const std::size_t vars = f.variable_count();
  const std::uint64_t total = checked_power(p, vars, cap, "point count cap");
  const Modulus mod(p);

  std::vector<Residue> pw(p);
  for (std::uint64_t y = 0; y < p; ++y) pw[y] = mod.pow(y, f.tilde_exponent);
  // Per variable: (form, coefficient mod p).
  std::vector<std::vector<std::pair<std::size_t, Residue>>> touch(vars);
  for (std::size_t i = 0; i < f.forms.size(); ++i)
    for (std::size_t j = 0; j < vars; ++j)
      if (f.forms[i][j] != 0) touch[j].push_back({i, mod.reduce(f.forms[i][j])});

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> digit(vars, 0);
    std::uint64_t x = begin;
    for (std::size_t j = 0; j < vars; ++j) {
      digit[j] = x % p;
      x /= p;
    }
    std::vector<Residue> val(f.forms.size(), 0);
    for (std::size_t j = 0; j < vars; ++j)
      for (auto [i, c] : touch[j]) val[i] = mod.add(val[i], mod.mul(c, pw[digit[j]]));
    std::size_t zeros = std::count(val.begin(), val.end(), Residue{0});
    auto shift = [&](std::size_t j, Residue delta) {
      for (auto [i, c] : touch[j]) {
        const Residue before = val[i];
        val[i] = mod.add(before, mod.mul(c, delta));
        zeros += (val[i] == 0) - (before == 0);
      }
    };
    std::uint64_t hits = 0;
    for (std::uint64_t pt = begin; pt < end; ++pt) {
      hits += zeros > 0;
      for (std::size_t j = 0; j < vars; ++j) {
        const std::uint64_t old = digit[j];
        if (old + 1 < p) {
          digit[j] = old + 1;
          shift(j, mod.sub(pw[old + 1], pw[old]));
          break;
        }
        digit[j] = 0;
        shift(j, mod.sub(pw[0], pw[old]));
      }
    }
    return hits;
  };

  unsigned workers = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 4096)));
  if (workers <= 1) return count_range(0, total);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t b = total * w / workers, e = total * (w + 1) / workers;
    pool.emplace_back([&, w, b, e] { partial[w] = count_range(b, e); });
  }
  for (auto& t : pool) t.join();
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

ReconcileReport reconcile(const OrientedGraph& g, std::uint64_t p, unsigned threads) {
  ReconcileReport rep;
  const BlockSpec spec = block_spec(g);
  const std::uint64_t r = require_prime_index(spec, p);
  FactorialTable table(p, r);
  const Modulus& mod = table.mod();
  rep.prime = p;
  rep.r = r;
  rep.lcm = spec.lcm;
  rep.variate = is_variate(spec, r);
  rep.phi4_ratio = is_phi4_ratio(g);
  rep.r_factorial_power = mod.pow(table.fact(r), spec.lcm);
  rep.expected_count_sign = spec.lcm % 2 == 0 ? -1 : 1;

  const bool direct = r * spec.lcm <= std::min<std::uint64_t>(kReconcileDirectDim, ryser_cap());
  rep.gperm = direct ? gperm_direct(g, p) : gperm(g, p, Algorithm::automatic);
  if (!direct) rep.notes.push_back("permanent side not computed directly; orientation sign not comparable");

  try {
    rep.coefficient = tilde_coefficient(g, p);
    const Residue chain = mod.mul(rep.r_factorial_power, *rep.coefficient);
    rep.coefficient_matches_gperm = direct ? chain == rep.gperm : (chain == rep.gperm || chain == mod.neg(rep.gperm));
  } catch (const CapExceeded& e) {
    rep.notes.push_back(e.what());
  }
  try {
    rep.count = point_count(g, p, threads);
    rep.count_mod_p = *rep.count % p;
  } catch (const CapExceeded& e) {
    rep.notes.push_back(e.what());
  }

  if (rep.count_mod_p && rep.coefficient) {
    const Residue c = *rep.coefficient, k = *rep.count_mod_p;
    if (c == 0 && k == 0) rep.count_sign = 0;
    else if (c == k) rep.count_sign = 1;
    else if (c == mod.neg(k)) rep.count_sign = -1;
    else rep.notes.push_back("coefficient and count differ by more than a sign");
  }
  if (rep.count_mod_p) {
    const Residue rc = mod.mul(rep.r_factorial_power, *rep.count_mod_p);
    rep.holds_up_to_sign = rep.gperm == rc || rep.gperm == mod.neg(rc);
    if (!rep.variate && !(rep.gperm == 0 && rc == 0)) {
      if (rep.gperm == rc) rep.empirical_sign = 1;
      else if (rep.gperm == mod.neg(rc)) rep.empirical_sign = -1;
    }
    if (rep.phi4_ratio) {
      rep.stated_sign = g.edge_count() % 4 == 0 ? 1 : -1;
      const Residue k = *rep.stated_sign == 1 ? *rep.count_mod_p : mod.neg(*rep.count_mod_p);
      rep.stated_relation_holds = rep.variate ? rep.holds_up_to_sign : rep.gperm == k;
    }
  }
  return rep;
}

std::optional<int> global_empirical_sign(const std::vector<ReconcileReport>& reports) {
  std::optional<int> sign;
  for (const auto& r : reports) {
    if (r.empirical_sign == 0) continue;
    if (sign && *sign != r.empirical_sign) return std::nullopt;
    sign = r.empirical_sign;
  }
  return sign;
}

}  // namespace egp
