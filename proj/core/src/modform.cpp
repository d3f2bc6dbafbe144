#include "egp/modform.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace egp {

std::int64_t EtaProduct::leading_power() const {
  std::int64_t total = 0;
  for (const auto& f : factors) total += static_cast<std::int64_t>(f.multiplier) * f.exponent;
  if (total <= 0 || total % 24 != 0) {
    throw std::invalid_argument("eta product: leading power " + std::to_string(total) + "/24 is not a positive integer");
  }
  return total / 24;
}

std::string EtaProduct::to_string() const {
  std::ostringstream out;
  if (sign < 0) out << "-1 * ";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " * ";
    out << "eta(" << factors[i].multiplier << ")";
    if (factors[i].exponent != 1) out << '^' << factors[i].exponent;
  }
  return out.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat(std::string_view w) {
    skip();
    if (s.substr(i, w.size()) == w) {
      i += w.size();
      return true;
    }
    return false;
  }
  std::optional<std::int64_t> number() {
    skip();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc()) return std::nullopt;
    i = static_cast<std::size_t>(p - s.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("eta product: " + what + " at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
  }
};

}  // namespace

EtaProduct parse_eta_product(std::string_view text) {
  Cursor c{text};
  EtaProduct e;
  if (c.eat('-')) e.sign = -1;
  else c.eat('+');
  c.skip();
  if (c.i < text.size() && std::isdigit(static_cast<unsigned char>(text[c.i]))) {
    auto k = c.number();
    if (!k || (*k != 1)) c.fail("only a unit coefficient is supported");
    if (!c.eat('*')) c.fail("expected '*' after the coefficient");
  }
  while (true) {
    if (!c.eat("eta")) c.fail("expected eta(...)");
    if (!c.eat('(')) c.fail("expected '('");
    EtaFactor f;
    c.skip();
    if (c.i < text.size() && std::isdigit(static_cast<unsigned char>(text[c.i]))) {
      auto m = c.number();
      if (!m || *m <= 0) c.fail("multiplier must be positive");
      f.multiplier = static_cast<std::uint64_t>(*m);
    }
    c.eat('z');
    if (!c.eat(')')) c.fail("expected ')'");
    if (c.eat('^')) {
      bool paren = c.eat('(');
      auto x = c.number();
      if (!x) c.fail("expected an exponent");
      if (paren && !c.eat(')')) c.fail("expected ')'");
      f.exponent = *x;
    }
    e.factors.push_back(f);
    c.skip();
    if (c.i == text.size()) break;
    c.eat('*');
  }
  e.leading_power();
  return e;
}

std::int64_t CoeffSeries::coefficient(std::size_t n) const {
  if (n == 0 || n > coefficients.size()) {
    throw std::out_of_range("coefficient series: a_" + std::to_string(n) + " not available (length " +
                            std::to_string(coefficients.size()) + ")");
  }
  return coefficients[n - 1];
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("eta expansion: coefficient overflow");
  return r;
}

}  // namespace

CoeffSeries eta_expand(const EtaProduct& e, std::size_t n) {
  const std::int64_t lead = e.leading_power();
  CoeffSeries out;
  out.source = e.to_string();
  out.coefficients.assign(n, 0);
  if (static_cast<std::size_t>(lead) > n) return out;
  const std::size_t deg = n - static_cast<std::size_t>(lead);  // need q^0..q^deg of the product
  std::vector<std::int64_t> s(deg + 1, 0);
  s[0] = 1;
  for (const auto& f : e.factors) {
    for (std::size_t k = 1; f.multiplier * k <= deg; ++k) {
      const std::size_t step = f.multiplier * k;
      if (f.exponent > 0) {
        for (std::int64_t t = 0; t < f.exponent; ++t)
          for (std::size_t i = deg; i >= step; --i) s[i] = checked_add(s[i], -s[i - step]);
      } else {
        for (std::int64_t t = 0; t < -f.exponent; ++t)
          for (std::size_t i = step; i <= deg; ++i) s[i] = checked_add(s[i], s[i - step]);
      }
    }
  }
  for (std::size_t i = 0; i <= deg; ++i) out.coefficients[i + static_cast<std::size_t>(lead) - 1] = e.sign * s[i];
  return out;
}

CoeffSeries parse_coefficient_csv(std::string_view text, std::string source) {
  std::map<std::size_t, std::int64_t> values;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    line = line.substr(a, line.find_last_not_of(" \t\r") - a + 1);
    const auto comma = line.find(',');
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument(source + ":" + std::to_string(lineno) + ": " + what);
    };
    if (comma == std::string::npos) fail("expected 'n,a_n'");
    std::string ns = line.substr(0, comma), vs = line.substr(comma + 1);
    auto trim = [](std::string& x) {
      x.erase(0, x.find_first_not_of(" \t"));
      x.erase(x.find_last_not_of(" \t") + 1);
    };
    trim(ns);
    trim(vs);
    std::size_t n = 0;
    std::int64_t v = 0;
    auto r1 = std::from_chars(ns.data(), ns.data() + ns.size(), n);
    auto r2 = std::from_chars(vs.data(), vs.data() + vs.size(), v);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != ns.data() + ns.size() ||
        r2.ptr != vs.data() + vs.size()) {
      if (values.empty() && lineno == 1 && r1.ec != std::errc()) continue;  // header
      fail("unparsable entry '" + line + "'");
    }
    if (n == 0) fail("indices start at 1");
    if (!values.emplace(n, v).second) fail("duplicate index " + std::to_string(n));
  }
  CoeffSeries out;
  out.source = std::move(source);
  for (const auto& [n, v] : values) {
    if (n != out.coefficients.size() + 1) {
      throw std::invalid_argument(out.source + ": missing a_" + std::to_string(out.coefficients.size() + 1));
    }
    out.coefficients.push_back(v);
  }
  if (out.coefficients.empty()) throw std::invalid_argument(out.source + ": no coefficients");
  return out;
}

CoeffSeries read_coefficient_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_coefficient_csv(buf.str(), path);
}

std::vector<Residue> residue_sequence(const CoeffSeries& c, const std::vector<std::uint64_t>& primes) {
  std::vector<Residue> out;
  for (auto p : primes) {
    if (p > c.size()) {
      throw std::out_of_range("coefficient series too short: need a_" + std::to_string(p) + ", have " +
                              std::to_string(c.size()));
    }
    out.push_back(Modulus(p).reduce(c.coefficient(p)));
  }
  return out;
}

ModformReport compare(const EgpSequence& s, const CoeffSeries& c, bool allow_overall_sign) {
  ModformReport best;
  bool first = true;
  for (int overall : {1, -1}) {
    if (overall < 0 && !allow_overall_sign) break;
    for (int orientation : {1, -1}) {
      ModformReport rep;
      rep.orientation = orientation;
      rep.overall_sign = overall;
      for (const auto& v : s.values) {
        ModformCell cell;
        cell.prime = v.prime;
        cell.egp = v.residue;
        cell.variate = v.variate;
        if (v.prime > c.size()) continue;
        const Modulus mod(v.prime);
        cell.form = mod.reduce(overall * c.coefficient(v.prime));
        if (v.variate && orientation < 0) cell.form = mod.neg(cell.form);
        if (v.residue) {
          cell.match = *v.residue == cell.form;
          ++rep.compared;
          rep.matched += cell.match;
          if (!cell.match && !rep.first_mismatch) rep.first_mismatch = v.prime;
        }
        rep.cells.push_back(cell);
      }
      if (first || rep.matched > best.matched) best = std::move(rep);
      first = false;
    }
  }
  best.all_match = best.compared > 0 && best.matched == best.compared;
  std::uint64_t top = 0;
  for (const auto& cell : best.cells)
    if (cell.egp) top = cell.prime;
  if (best.compared == 0) best.verdict = "no overlapping primes";
  else if (best.all_match) best.verdict = "matches up to p <= " + std::to_string(top);
  else best.verdict = "mismatch at p = " + std::to_string(*best.first_mismatch) + " (" + std::to_string(best.matched) +
                      "/" + std::to_string(best.compared) + " primes agree)";
  if (best.overall_sign < 0) best.verdict += " with the form negated";
  return best;
}

}  // namespace egp
