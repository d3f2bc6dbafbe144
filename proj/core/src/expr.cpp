#include "egp/expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace egp {

std::int64_t LinearForm::evaluate(std::int64_t n, const std::vector<std::int64_t>& xs) const {
  std::int64_t v = constant + n_coef * n;
  for (std::size_t i = 0; i < var_coef.size(); ++i) v += var_coef[i] * xs[i];
  return v;
}

int LinearForm::last_variable() const {
  for (std::size_t i = var_coef.size(); i-- > 0;)
    if (var_coef[i] != 0) return static_cast<int>(i);
  return -1;
}

namespace {

struct Token {
  enum Kind { number, ident, punct, end } kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t line = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  for (std::size_t i = 0; i < src.size();) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      Token t{Token::number, std::string(src.substr(i, j - i)), 0, line};
      t.value = std::stoll(t.text);
      out.push_back(t);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::ident, std::string(src.substr(i, j - i)), 0, line});
      i = j;
    } else if (std::string_view("(),;{}^*+-").find(c) != std::string_view::npos) {
      out.push_back({Token::punct, std::string(1, c), 0, line});
      ++i;
    } else {
      throw std::invalid_argument("expression line " + std::to_string(line) + ": unexpected character '" +
                                  std::string(1, c) + "'");
    }
  }
  out.push_back({Token::end, "", 0, line});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "EXPR" || s == "MOD" || s == "SUM" || s == "TO" || s == "SIGN" || s == "PREFACTOR" || s == "END" ||
         s == "BINOM" || s == "fact";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  std::vector<BinomialSumExpr> all() {
    std::vector<BinomialSumExpr> out;
    while (peek().kind != Token::end) out.push_back(one());
    return out;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  Token take() { return t_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression line " + std::to_string(peek().line) + ": " + what + " (at '" +
                                peek().text + "')");
  }
  bool at(const char* text) const { return peek().kind != Token::number && peek().text == text; }
  void expect(const char* text) {
    if (!at(text)) fail(std::string("expected '") + text + "'");
    ++pos_;
  }

  LinearForm linear(bool allow_vars) {
    LinearForm f;
    f.var_coef.assign(vars_.size(), 0);
    bool first = true;
    while (true) {
      std::int64_t sign = 1;
      if (at("+") || at("-")) {
        sign = take().text == "-" ? -1 : 1;
      } else if (!first) {
        break;
      }
      std::int64_t coef = 1;
      bool have_num = false;
      if (peek().kind == Token::number) {
        coef = take().value;
        have_num = true;
        if (at("*")) ++pos_;
      }
      if (peek().kind == Token::ident && !is_keyword(peek().text)) {
        const std::string name = take().text;
        if (name == "n") {
          f.n_coef += sign * coef;
        } else {
          std::size_t i = 0;
          while (i < vars_.size() && vars_[i] != name) ++i;
          if (i == vars_.size() || !allow_vars) fail("unknown symbol '" + name + "'");
          f.var_coef[i] += sign * coef;
        }
      } else if (have_num) {
        f.constant += sign * coef;
      } else {
        fail("expected a term");
      }
      first = false;
    }
    return f;
  }

  BinomialSumExpr one() {
    expect("EXPR");
    if (peek().kind != Token::ident) fail("expected an expression id");
    BinomialSumExpr e;
    e.id = take().text;
    vars_.clear();
    expect("MOD");
    const LinearForm mod = linear(false);
    e.modulus_a = mod.n_coef;
    e.modulus_b = mod.constant;
    if (e.modulus_a <= 0) fail("modulus must grow with n");
    e.upper.n_coef = 1;
    e.inner_sign.var_coef.clear();

    if (at("SUM")) {
      ++pos_;
      while (peek().kind == Token::ident && !is_keyword(peek().text)) {
        const std::string v = take().text;
        if (v == "n") fail("'n' cannot be a summation variable");
        vars_.push_back(v);
      }
      if (vars_.empty()) fail("SUM needs at least one variable");
      e.vars = vars_;
      if (at("TO")) {
        ++pos_;
        e.upper = linear(false);
      }
      e.upper.var_coef.assign(vars_.size(), 0);
      e.inner_sign.var_coef.assign(vars_.size(), 0);
      expect("{");
      if (at("SIGN")) {
        ++pos_;
        e.inner_sign = linear(true);
        expect(";");
      }
      while (true) {
        expect("BINOM");
        expect("(");
        BinomFactor b;
        b.top = linear(true);
        expect(",");
        b.bottom = linear(true);
        expect(")");
        if (at("^")) {
          ++pos_;
          if (peek().kind != Token::number) fail("expected an exponent");
          b.power = static_cast<unsigned>(take().value);
        }
        e.binoms.push_back(std::move(b));
        if (at("*")) {
          ++pos_;
          continue;
        }
        break;
      }
      expect("}");
    }
    e.outer_sign.var_coef.assign(vars_.size(), 0);

    expect("PREFACTOR");
    while (true) {
      expect("fact");
      expect("(");
      FactorialFactor f;
      f.arg = linear(false);
      f.arg.var_coef.assign(vars_.size(), 0);
      expect(")");
      if (at("^")) {
        ++pos_;
        std::int64_t s = 1;
        if (at("-")) {
          ++pos_;
          s = -1;
        }
        if (peek().kind != Token::number) fail("expected an exponent");
        f.power = static_cast<int>(s * take().value);
      }
      e.prefactor.push_back(std::move(f));
      if (at("*")) {
        ++pos_;
        continue;
      }
      break;
    }
    if (at("SIGN")) {
      ++pos_;
      e.outer_sign = linear(false);
      e.outer_sign.var_coef.assign(vars_.size(), 0);
    }
    expect("END");
    return e;
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

BigInt exact_binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt exact_fact(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Generic nested sum; Ring supplies one(), zero(), mul, add, neg and binom(top, bottom).
template <class T, class Binom, class Mul, class Add, class Neg>
T nested_sum(const BinomialSumExpr& e, std::int64_t n, T one, T zero, Binom binom, Mul mul, Add add, Neg neg) {
  const std::size_t k = e.vars.size();
  if (k > kExprVariableCap) throw CapExceeded("expression summation variables", kExprVariableCap, k);
  std::vector<std::vector<const BinomFactor*>> at_depth(k + 1);
  for (const auto& b : e.binoms) {
    const int d = std::max(b.top.last_variable(), b.bottom.last_variable());
    at_depth[static_cast<std::size_t>(d + 1)].push_back(&b);
  }
  std::vector<std::int64_t> xs(k, 0);
  const std::int64_t upper = e.upper.evaluate(n, xs);
  auto factors = [&](std::size_t depth, T acc) {
    for (const BinomFactor* b : at_depth[depth]) {
      const T c = binom(b->top.evaluate(n, xs), b->bottom.evaluate(n, xs));
      for (unsigned i = 0; i < b->power; ++i) acc = mul(acc, c);
      if (acc == zero) break;
    }
    return acc;
  };
  T total = zero;
  auto walk = [&](auto&& self, std::size_t depth, T acc) -> void {
    if (depth == k) {
      if (e.inner_sign.evaluate(n, xs) % 2 != 0) acc = neg(acc);
      total = add(total, acc);
      return;
    }
    for (std::int64_t x = 0; x <= upper; ++x) {
      xs[depth] = x;
      const T next = factors(depth + 1, acc);
      if (!(next == zero)) self(self, depth + 1, next);
    }
    xs[depth] = 0;
  };
  const T base = factors(0, one);
  if (!(base == zero)) walk(walk, 0, base);
  return total;
}

}  // namespace

std::vector<BinomialSumExpr> parse_expressions(std::string_view text) { return Parser(tokenize(text)).all(); }

std::vector<BinomialSumExpr> read_expression_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open expression file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_expressions(buf.str());
}

std::optional<std::int64_t> expr_index(const BinomialSumExpr& e, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  if (sp < e.modulus_b || (sp - e.modulus_b) % e.modulus_a != 0) return std::nullopt;
  const std::int64_t n = (sp - e.modulus_b) / e.modulus_a;
  if (n < 1) return std::nullopt;
  return n;
}

Residue eval_expr(const BinomialSumExpr& e, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("eval_expr: " + std::to_string(p) + " is not prime");
  const auto n = expr_index(e, p);
  if (!n) throw std::invalid_argument("eval_expr: " + std::to_string(p) + " does not match the modulus of " + e.id);
  FactorialTable t(p, p - 1);
  const Modulus& mod = t.mod();
  Residue value = nested_sum<Residue>(
      e, *n, 1 % p, 0, [&](std::int64_t a, std::int64_t b) { return t.binom(a, b); },
      [&](Residue a, Residue b) { return mod.mul(a, b); }, [&](Residue a, Residue b) { return mod.add(a, b); },
      [&](Residue a) { return mod.neg(a); });
  const std::vector<std::int64_t> none(e.vars.size(), 0);
  for (const auto& f : e.prefactor) {
    const std::int64_t a = f.arg.evaluate(*n, none);
    if (a < 0) throw std::invalid_argument("eval_expr: negative factorial argument in " + e.id);
    const auto ua = static_cast<std::uint64_t>(a);
    const Residue base = f.power >= 0 ? t.fact(ua) : t.inv_fact(ua);
    value = mod.mul(value, mod.pow(base, static_cast<std::uint64_t>(std::abs(f.power))));
  }
  if (e.outer_sign.evaluate(*n, none) % 2 != 0) value = mod.neg(value);
  return value;
}

BigInt eval_expr_exact(const BinomialSumExpr& e, std::int64_t n) {
  BigInt value = nested_sum<BigInt>(
      e, n, BigInt(1), BigInt(0), exact_binom, [](const BigInt& a, const BigInt& b) { return BigInt(a * b); },
      [](const BigInt& a, const BigInt& b) { return BigInt(a + b); }, [](const BigInt& a) { return BigInt(-a); });
  const std::vector<std::int64_t> none(e.vars.size(), 0);
  BigInt denom = 1;
  for (const auto& f : e.prefactor) {
    const BigInt base = exact_fact(f.arg.evaluate(n, none));
    for (int i = 0; i < std::abs(f.power); ++i) {
      if (f.power > 0) {
        value *= base;
      } else {
        denom *= base;
      }
    }
  }
  if (value % denom != 0) throw std::domain_error("eval_expr_exact: " + e.id + " is not an integer at this n");
  value /= denom;
  if (e.outer_sign.evaluate(n, none) % 2 != 0) value = -value;
  return value;
}

}  // namespace egp
