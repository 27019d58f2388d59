#include "pdel/parser.hpp"

#include <cctype>

namespace pdel {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Formula run() {
    Formula f = formula();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!eat(tok)) fail("expected '" + tok + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool ident_ahead(const std::string& kw) {
    // keyword match that does not swallow a longer identifier
    skip_ws();
    if (s_.compare(pos_, kw.size(), kw) != 0) return false;
    size_t end = pos_ + kw.size();
    if (end < s_.size()) {
      char c = s_[end];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
    }
    return true;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
      fail("expected identifier");
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Rational rational() {
    skip_ws();
    size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    bool any = false;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
            s_[pos_] == '.')) {
      ++pos_;
      any = true;
    }
    if (!any) fail("expected rational literal");
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Formula formula() {
    Formula lhs = or_expr();
    if (eat("<->")) return iff(lhs, formula());
    if (eat("->")) return imp(lhs, formula());
    return lhs;
  }

  Formula or_expr() {
    Formula lhs = and_expr();
    while (true) {
      skip_ws();
      // '|' but not '|>' etc.; there is no other token starting with '|'
      if (peek() == '|') {
        ++pos_;
        lhs = disj(lhs, and_expr());
      } else {
        return lhs;
      }
    }
  }

  Formula and_expr() {
    Formula lhs = unary();
    while (peek() == '&') {
      ++pos_;
      lhs = conj(lhs, unary());
    }
    return lhs;
  }

  Formula modal(Conn kind) {
    expect("[");
    std::string agent = ident();
    expect("]");
    Formula body = unary();
    return kind == Conn::Dia ? dia(agent, body) : box(agent, body);
  }

  Formula prob_atom() {
    expect("[");
    std::string agent = ident();
    expect("]");
    expect("(");
    std::vector<ProbTerm> terms;
    skip_ws();
    if (peek() == '0' && !std::isdigit(static_cast<unsigned char>(
                             pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0'))) {
      // constant-zero linear term, e.g. pr[i](0 >= -1)
      size_t save = pos_;
      ++pos_;
      skip_ws();
      if (s_.compare(pos_, 2, ">=") == 0 || peek() == '>') {
        // fall through with empty term list
      } else {
        pos_ = save;  // a genuine coefficient starting with 0, e.g. 0.5*mu(p)
      }
    }
    if (terms.empty() && !(peek() == '>' )) {
      bool first = true;
      while (true) {
        skip_ws();
        Rational sign = 1;
        if (eat("-")) sign = -1;
        else if (eat("+")) sign = 1;
        else if (!first) break;
        Rational coeff = 1;
        skip_ws();
        if (peek() != 'm' || !ident_ahead("mu")) {
          coeff = rational();
          expect("*");
        }
        expect("mu");
        expect("(");
        Formula arg = formula();
        expect(")");
        terms.push_back({sign * coeff, arg});
        first = false;
        skip_ws();
        if (peek() != '+' && peek() != '-') break;
      }
    }
    bool strict;
    if (eat(">=")) strict = false;
    else if (eat(">")) strict = true;
    else fail("expected '>=' or '>' in probability atom");
    Rational bound = rational();
    expect(")");
    return strict ? prob_gt(agent, std::move(terms), bound)
                  : prob_geq(agent, std::move(terms), bound);
  }

  Formula dynamic(bool is_box) {
    std::string ev = ident();
    expect(",");
    std::string e = ident();
    expect(is_box ? "]" : ">");
    Formula body = unary();
    return is_box ? dyn_box(ev, e, std::move(body)) : dyn_dia(ev, e, std::move(body));
  }

  Formula unary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '~') {
      ++pos_;
      return neg(unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = formula();
      expect(")");
      return f;
    }
    if (c == '[') {
      ++pos_;
      return dynamic(/*is_box=*/true);
    }
    if (c == '<') {
      ++pos_;
      return dynamic(/*is_box=*/false);
    }
    if (ident_ahead("true")) { pos_ += 4; return top(); }
    if (ident_ahead("false")) { pos_ += 5; return bot(); }
    if (s_.compare(pos_, 4, "dia[") == 0) { pos_ += 3; return modal(Conn::Dia); }
    if (s_.compare(pos_, 4, "box[") == 0) { pos_ += 3; return modal(Conn::Box); }
    if (s_.compare(pos_, 3, "pr[") == 0) { pos_ += 2; return prob_atom(); }
    if (std::islower(static_cast<unsigned char>(c))) return atom(ident());
    fail("unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).run(); }

}  // namespace pdel
