#include "ctxlogic/error.hpp"
#include "ctxlogic/formula.hpp"

#include <cctype>

namespace ctxlogic {

Rational parse_rational(std::string_view text) {
  auto digits = [&](std::string_view s) {
    if (s.empty() || s.size() > 12) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw Error(ErrorKind::range, "malformed rational '" + std::string(text) + "'");
  long long d = std::stoll(std::string(den));
  if (d == 0) throw Error(ErrorKind::range, "zero denominator in '" + std::string(text) + "'");
  return Rational(std::stoll(std::string(num)), d);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

enum class Tok {
  end,
  ident,      // name with optional sort suffix
  lparen,
  rparen,
  comma,
  tilde,
  amp,
  bar,
  arrow,
  iff,
  modal,      // a complete modal prefix
  universal,  // [U_o] / [U_p]
};

struct Token {
  Tok kind = Tok::end;
  std::size_t offset = 0;
  std::string text;
  std::optional<Sort> suffix;
  ModalDescriptor modality;
  Direction direction = Direction::o;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_space();
    Token t;
    t.offset = pos_;
    if (pos_ >= s_.size()) return t;
    char c = s_[pos_];
    if (ident_start(c)) return identifier(t);
    switch (c) {
      case '(': ++pos_; t.kind = Tok::lparen; return t;
      case ')': ++pos_; t.kind = Tok::rparen; return t;
      case ',': ++pos_; t.kind = Tok::comma; return t;
      case '~': ++pos_; t.kind = Tok::tilde; return t;
      case '&': ++pos_; t.kind = Tok::amp; return t;
      case '|': ++pos_; t.kind = Tok::bar; return t;
      case '-':
        if (peek(1) == '>') {
          pos_ += 2;
          t.kind = Tok::arrow;
          return t;
        }
        break;
      case '<':
        if (peek(1) == '-' && peek(2) == '>') {
          pos_ += 3;
          t.kind = Tok::iff;
          return t;
        }
        return modal(t, Style::diamond);
      case '[':
        if (peek(1) == '[') return modal(t, Style::window);
        if (s_.compare(pos_, 5, "[U_o]") == 0 || s_.compare(pos_, 5, "[U_p]") == 0) {
          t.kind = Tok::universal;
          t.direction = s_[pos_ + 3] == 'o' ? Direction::o : Direction::p;
          pos_ += 5;
          return t;
        }
        return modal(t, Style::box);
      default: break;
    }
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Token identifier(Token t) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    t.kind = Tok::ident;
    t.text = s_.substr(start, pos_ - start);
    if (peek(0) == '@') {
      if (peek(1) == '1' || peek(1) == '2') {
        t.suffix = peek(1) == '1' ? Sort::s1 : Sort::s2;
        pos_ += 2;
        if (pos_ < s_.size() && ident_char(s_[pos_]))
          throw SyntaxError(pos_, "sort suffix must be @1 or @2");
      } else {
        throw SyntaxError(pos_, "sort suffix must be @1 or @2");
      }
    }
    return t;
  }

  void expect(const char* lit, const char* what) {
    std::string l(lit);
    if (s_.compare(pos_, l.size(), l) != 0) throw SyntaxError(pos_, std::string("expected ") + what);
    pos_ += l.size();
  }

  Token modal(Token t, Style style) {
    pos_ += style == Style::window ? 2 : 1;
    ModalDescriptor d;
    d.style = style;
    if (peek(0) == '-') {
      d.base = Base::complement;
      ++pos_;
    }
    if (peek(0) == 'o') d.direction = Direction::o;
    else if (peek(0) == 'p') d.direction = Direction::p;
    else throw SyntaxError(pos_, "expected direction 'o' or 'p' in modality");
    ++pos_;
    if (peek(0) == ':') {
      ++pos_;
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek(0)))) ++pos_;
      if (start == pos_ || pos_ - start > 9) throw SyntaxError(start, "expected a grade (natural number)");
      d.grade = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      if (peek(0) == '!') {
        d.exact = true;
        ++pos_;
      }
    } else if (peek(0) == '>' && peek(1) == '=') {
      pos_ += 2;
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek(0))) || peek(0) == '/') ++pos_;
      try {
        d.weight = parse_rational(std::string_view(s_).substr(start, pos_ - start));
      } catch (const Error& e) {
        throw SyntaxError(start, e.what());
      }
    }
    switch (style) {
      case Style::box: expect("]", "']' closing the box"); break;
      case Style::diamond: expect(">", "'>' closing the diamond"); break;
      default:
        expect("]]", "']]' closing the window");
        if (peek(0) == '~') {
          d.style = Style::window_dual;
          ++pos_;
        }
    }
    try {
      d.validate();
    } catch (const Error& e) {
      throw SyntaxError(t.offset, e.what());
    }
    t.kind = Tok::modal;
    t.modality = d;
    return t;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, const SortEnv& env) : lex_(text), env_(env) { advance(); }

  Formula parse_all() {
    Formula f = iff();
    if (cur_.kind != Tok::end) throw SyntaxError(cur_.offset, "unexpected trailing input");
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) throw SyntaxError(cur_.offset, std::string("expected ") + what);
    advance();
  }

  Formula iff() {
    Formula f = implication();
    while (cur_.kind == Tok::iff) {
      advance();
      f = Formula::biconditional(f, implication());
    }
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (cur_.kind == Tok::arrow) {
      advance();
      return Formula::implication(f, implication());
    }
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (cur_.kind == Tok::bar) {
      advance();
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (cur_.kind == Tok::amp) {
      advance();
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::tilde:
        advance();
        return Formula::negation(unary());
      case Tok::modal: {
        ModalDescriptor d = cur_.modality;
        advance();
        return Formula::modal(d, unary());
      }
      case Tok::universal: {
        Direction d = cur_.direction;
        advance();
        return universal(d, unary());
      }
      default: return primary();
    }
  }

  Formula primary() {
    Token t = cur_;
    if (t.kind == Tok::lparen) {
      advance();
      Formula f = iff();
      expect(Tok::rparen, "')'");
      return f;
    }
    if (t.kind != Tok::ident) throw SyntaxError(t.offset, "expected a formula");
    advance();
    if (t.text == "N_o" || t.text == "N_p") {
      if (t.suffix) throw SyntaxError(t.offset, "N_o/N_p take no sort suffix");
      expect(Tok::lparen, "'(' after N_o/N_p");
      Formula a = iff();
      expect(Tok::comma, "','");
      Formula b = iff();
      expect(Tok::rparen, "')'");
      return n_operator(t.text == "N_o" ? Direction::o : Direction::p, a, b);
    }
    if (t.text == "true" || t.text == "false") {
      if (!t.suffix) throw SyntaxError(t.offset, "constant '" + t.text + "' needs a sort suffix @1 or @2");
      return t.text == "true" ? Formula::top(*t.suffix) : Formula::bottom(*t.suffix);
    }
    if (t.suffix) return Formula::atom(t.text, *t.suffix);
    auto it = env_.find(t.text);
    if (it == env_.end())
      throw Error(ErrorKind::sort, "cannot determine the sort of atom '" + t.text +
                                       "' (add @1/@2 or declare it)");
    return Formula::atom(t.text, it->second);
  }

  Lexer lex_;
  const SortEnv& env_;
  Token cur_;
};

}  // namespace

Formula parse(const std::string& text, const SortEnv& env) {
  Parser p(text, env);
  return p.parse_all();
}

}  // namespace ctxlogic
