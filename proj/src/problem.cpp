#include "puiseux/problem.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "puiseux/error.hpp"

namespace puiseux {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based within the line
};

class Lexer {
 public:
  Lexer(std::string_view src, int line, int col0) : src_(src), line_(line), col0_(col0) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src_.size()) {
      char ch = src_[i];
      int col = col0_ + static_cast<int>(i);
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        out.push_back({Tok::Number, std::string(src_.substr(i, j - i)), col});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t j = i;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
        out.push_back({Tok::Ident, std::string(src_.substr(i, j - i)), col});
        i = j;
      } else {
        Tok k;
        switch (ch) {
          case '+': k = Tok::Plus; break;
          case '-': k = Tok::Minus; break;
          case '*': k = Tok::Star; break;
          case '/': k = Tok::Slash; break;
          case '^': k = Tok::Caret; break;
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          default: throw ParseError(std::string("unexpected character '") + ch + "'", line_, col);
        }
        out.push_back({k, std::string(1, ch), col});
        ++i;
      }
    }
    out.push_back({Tok::End, "", col0_ + static_cast<int>(src_.size())});
    return out;
  }

 private:
  std::string_view src_;
  int line_;
  int col0_;
};

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, const std::vector<std::string>& xnames,
             const std::vector<std::string>& ynames, int line)
      : toks_(std::move(toks)), xnames_(xnames), ynames_(ynames), line_(line) {}

  LPoly parse() {
    LPoly p = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  std::size_t n() const { return xnames_.size(); }
  std::size_t m() const { return ynames_.size(); }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, peek().column); }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  LPoly expr() {
    LPoly acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      LPoly u = term();
      acc = minus ? acc - u : acc + u;
    }
    return acc;
  }

  LPoly term() {
    LPoly acc = unary();
    for (;;) {
      Tok k = peek().kind;
      if (k == Tok::Star) {
        take();
        acc = acc * unary();
      } else if (k == Tok::Slash) {
        take();
        int col = peek().column;
        acc = acc * invert(unary(), col);
      } else if (k == Tok::LParen || k == Tok::Ident) {
        acc = acc * power();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  /// 1/p for a monomial p in x only.
  LPoly invert(const LPoly& p, int col) const {
    if (!p.is_monomial() || !p.is_x_only())
      throw ParseError("can only divide by a nonzero constant or x-monomial", line_, col);
    const Term& t = p.terms().front();
    return LPoly::x_monomial(1 / t.coeff, Rat(-1) * t.xexp, m());
  }

  Rat exponent() {
    if (peek().kind == Tok::LParen) {
      take();
      bool neg = false;
      if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) neg = take().kind == Tok::Minus;
      if (peek().kind != Tok::Number) fail("expected exponent");
      mpz_class num(take().text);
      mpz_class den = 1;
      if (peek().kind == Tok::Slash) {
        take();
        if (peek().kind != Tok::Number) fail("expected exponent denominator");
        den = mpz_class(take().text);
        if (den == 0) fail("zero denominator in exponent");
      }
      expect(Tok::RParen, "')'");
      Rat r(neg ? mpz_class(-num) : num, den);
      r.canonicalize();
      return r;
    }
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::Number) fail("expected exponent");
    mpz_class v(take().text);
    return Rat(neg ? mpz_class(-v) : v);
  }

  LPoly unary() {
    if (peek().kind == Tok::Minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::Plus) take();
    return power();
  }

  LPoly power() {
    int col = peek().column;
    LPoly base = primary();
    if (peek().kind != Tok::Caret) return base;
    take();
    int ecol = peek().column;
    Rat e = exponent();
    if (e.get_den() == 1 && sgn(e) >= 0) {
      if (!e.get_num().fits_uint_p()) throw ParseError("exponent too large", line_, ecol);
      return base.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
    if (!base.is_monomial() || !base.is_x_only() || base.terms().front().coeff != 1)
      throw ParseError("negative or fractional powers apply only to x-monomials", line_, col);
    return LPoly::x_monomial(Rat(1), e * base.terms().front().xexp, m());
  }

  LPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        return LPoly::constant(n(), m(), Rat(mpz_class(t.text)));
      }
      case Tok::Ident: {
        take();
        auto xi = std::find(xnames_.begin(), xnames_.end(), t.text);
        if (xi != xnames_.end()) {
          ExpVec e(n());
          e[static_cast<std::size_t>(xi - xnames_.begin())] = 1;
          return LPoly::x_monomial(Rat(1), std::move(e), m());
        }
        auto yi = std::find(ynames_.begin(), ynames_.end(), t.text);
        if (yi != ynames_.end())
          return LPoly::y_var(n(), m(), static_cast<std::size_t>(yi - ynames_.begin()));
        throw ParseError("unknown variable '" + t.text + "'", line_, t.column);
      }
      case Tok::LParen: {
        take();
        LPoly p = expr();
        expect(Tok::RParen, "')'");
        return p;
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& xnames_;
  const std::vector<std::string>& ynames_;
  int line_;
};

LPoly parse_expr_at(std::string_view expr, const std::vector<std::string>& xnames,
                    const std::vector<std::string>& ynames, int line, int col0) {
  return ExprParser(Lexer(expr, line, col0).run(), xnames, ynames, line).parse();
}

struct Word {
  std::string text;
  int column;
};

std::vector<Word> split_words(std::string_view line, std::size_t from) {
  std::vector<Word> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool parse_bool(const Word& w, int line) {
  if (w.text == "true" || w.text == "1" || w.text == "on") return true;
  if (w.text == "false" || w.text == "0" || w.text == "off") return false;
  throw ParseError("expected a boolean, got '" + w.text + "'", line, w.column);
}

std::size_t parse_count(const Word& w, int line) {
  if (w.text.empty() || !std::all_of(w.text.begin(), w.text.end(), ::isdigit) || w.text.size() > 9)
    throw ParseError("expected a nonnegative integer, got '" + w.text + "'", line, w.column);
  return static_cast<std::size_t>(std::stoul(w.text));
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

LPoly parse_polynomial(std::string_view expr, const std::vector<std::string>& xnames,
                       const std::vector<std::string>& ynames) {
  return parse_expr_at(expr, xnames, ynames, 1, 1);
}

ProblemSpec parse_problem(std::string_view text) {
  struct PendingGen {
    std::string expr;
    int line;
    int column;
  };
  std::optional<std::vector<Word>> vars;
  int vars_line = 0;
  std::vector<std::vector<Rat>> weight_rows;
  int weight_line = 0;
  std::vector<PendingGen> pending;
  ProblemSpec spec;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line, 0);
    if (words.empty()) continue;
    const std::string& kw = words[0].text;
    if (kw == "vars") {
      if (vars) throw ParseError("duplicate 'vars' line", lineno, words[0].column);
      words.erase(words.begin());
      for (const auto& w : words) {
        if (!valid_name(w.text)) throw ParseError("invalid variable name '" + w.text + "'", lineno, w.column);
        for (const auto& other : words)
          if (&other != &w && other.text == w.text)
            throw ParseError("duplicate variable '" + w.text + "'", lineno, w.column);
      }
      vars = std::move(words);
      vars_line = lineno;
    } else if (kw == "weight") {
      std::vector<Rat> row;
      for (std::size_t k = 1; k < words.size(); ++k) {
        try {
          row.push_back(parse_rat(words[k].text));
        } catch (const Error&) {
          throw ParseError("malformed rational '" + words[k].text + "'", lineno, words[k].column);
        }
      }
      if (row.empty()) throw ParseError("empty weight row", lineno, words[0].column);
      if (!weight_rows.empty() && row.size() != weight_rows.front().size())
        throw ParseError("weight rows differ in length", lineno, words[0].column);
      weight_rows.push_back(std::move(row));
      weight_line = lineno;
    } else if (kw == "gen") {
      std::size_t start = static_cast<std::size_t>(words[0].column - 1) + 3;
      pending.push_back({std::string(line.substr(start)), lineno, static_cast<int>(start) + 1});
    } else if (kw == "opt") {
      if (words.size() != 3) throw ParseError("expected 'opt <name> <value>'", lineno, words[0].column);
      const std::string& key = words[1].text;
      if ((key == "max_terms" || key == "max_branches") && parse_count(words[2], lineno) == 0)
        throw ParseError(key + " must be positive", lineno, words[2].column);
      if (key == "max_terms")
        spec.options.max_terms = parse_count(words[2], lineno);
      else if (key == "max_branches")
        spec.options.max_branches = parse_count(words[2], lineno);
      else if (key == "positive_only")
        spec.options.positive_only = parse_bool(words[2], lineno);
      else if (key == "max_groebner_pairs")
        spec.options.max_groebner_pairs = parse_count(words[2], lineno);
      else
        throw ParseError("unknown option '" + key + "'", lineno, words[1].column);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", lineno, words[0].column);
    }
  }

  std::optional<WeightMatrix> weight;
  if (!weight_rows.empty()) weight.emplace(weight_rows);  // may throw RankDeficient

  std::vector<std::string> names;
  if (vars)
    for (const auto& w : *vars) names.push_back(w.text);
  std::size_t n = 0;
  if (!weight_rows.empty()) {
    n = weight_rows.front().size();
    if (n > names.size())
      throw ParseError("weight rows have " + std::to_string(n) + " columns but only " +
                           std::to_string(names.size()) + " variables are declared",
                       weight_line, 1);
  } else {
    while (n < names.size() && names[n][0] == 'x') ++n;
  }
  spec.xnames.assign(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n));
  spec.ynames.assign(names.begin() + static_cast<std::ptrdiff_t>(n), names.end());

  for (const auto& g : pending) {
    LPoly p = parse_expr_at(g.expr, spec.xnames, spec.ynames, g.line, g.column);
    if (p.is_zero()) throw ParseError("zero generator", g.line, g.column);
    spec.gens.push_back(std::move(p));
  }
  if (!vars) throw ParseError("missing 'vars' line", lineno ? lineno : 1, 1);
  if (spec.xnames.empty()) throw ParseError("no x variables declared", vars_line, 1);
  if (spec.ynames.empty()) throw ParseError("no y variables declared", vars_line, 1);
  if (spec.gens.empty()) throw ParseError("no generators", lineno ? lineno : 1, 1);

  spec.weight = weight ? *weight : WeightMatrix::identity(n);
  return spec;
}

}  // namespace puiseux
