#include "skein/expr.hpp"

#include <cctype>
#include <sstream>

namespace skein {

bool operator==(const ExprBase& a, const ExprBase& b) {
  if (a.kind != b.kind || a.index != b.index || a.value != b.value) return false;
  if (!a.sub != !b.sub) return false;
  return !a.sub || *a.sub == *b.sub;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expression parse() {
    Expression e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Int uint_lit() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  int sint_lit() {
    skip_ws();
    int sign = 1;
    if (eat('-')) sign = -1;
    else (void)eat('+');
    Int v = uint_lit();
    if (v > 1000000) fail("exponent too large");
    return sign * static_cast<int>(v);
  }

  int bracket_index() {
    if (!eat('[')) fail("expected '['");
    Int v = uint_lit();
    if (!eat(']')) fail("expected ']'");
    if (v > 1000000) fail("index too large");
    return static_cast<int>(v);
  }

  Expression expr() {
    Expression out;
    int sign = eat('-') ? -1 : +1;
    out.terms.push_back(term(sign));
    while (true) {
      if (eat('+')) out.terms.push_back(term(+1));
      else if (eat('-')) out.terms.push_back(term(-1));
      else break;
    }
    return out;
  }

  ExprTerm term(int sign) {
    ExprTerm out;
    out.sign = sign;
    out.factors.push_back(factor());
    while (true) {
      (void)eat('*');
      char c = peek();
      if (c == 't' || c == 'g' || c == 'q' || c == 'z' || c == '(' ||
          std::isdigit(static_cast<unsigned char>(c))) {
        out.factors.push_back(factor());
      } else {
        break;
      }
    }
    return out;
  }

  ExprFactor factor() {
    ExprFactor out;
    out.base = base();
    if (eat('^')) out.exp = sint_lit();
    return out;
  }

  ExprBase base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a factor");
    char c = text_[pos_];
    ExprBase out;
    if (c == 't') {
      ++pos_;
      bool primed = pos_ < text_.size() && text_[pos_] == '\'';
      if (primed) ++pos_;
      out.kind = primed ? ExprBase::Kind::LoopPrime : ExprBase::Kind::Loop;
      skip_ws();
      if (peek() == '[') out.index = bracket_index();
      else if (primed) fail("t' needs an index");
      return out;
    }
    if (c == 'g') {
      ++pos_;
      out.kind = ExprBase::Kind::Braid;
      out.index = bracket_index();
      if (out.index < 1) throw IndexError("braid generator index must be >= 1");
      return out;
    }
    if (c == 'q') {
      ++pos_;
      out.kind = ExprBase::Kind::Q;
      return out;
    }
    if (c == 'z') {
      ++pos_;
      out.kind = ExprBase::Kind::Z;
      return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      out.kind = ExprBase::Kind::IntLit;
      out.value = uint_lit();
      return out;
    }
    if (c == '(') {
      ++pos_;
      out.kind = ExprBase::Kind::Paren;
      out.sub = std::make_shared<Expression>(expr());
      if (!eat(')')) fail("expected ')'");
      return out;
    }
    fail("expected a factor");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void print_base(std::ostringstream& os, const ExprBase& b) {
  switch (b.kind) {
    case ExprBase::Kind::Loop:
      os << "t";
      if (b.index != 0) os << "[" << b.index << "]";
      return;
    case ExprBase::Kind::LoopPrime:
      os << "t'[" << b.index << "]";
      return;
    case ExprBase::Kind::Braid:
      os << "g[" << b.index << "]";
      return;
    case ExprBase::Kind::Q:
      os << "q";
      return;
    case ExprBase::Kind::Z:
      os << "z";
      return;
    case ExprBase::Kind::IntLit:
      os << b.value.str();
      return;
    case ExprBase::Kind::Paren:
      os << "(" << print_expression(*b.sub) << ")";
      return;
  }
}

int scan_strands(const Expression& e) {
  int n = 1;
  for (const ExprTerm& t : e.terms)
    for (const ExprFactor& f : t.factors) {
      switch (f.base.kind) {
        case ExprBase::Kind::Loop:
        case ExprBase::Kind::LoopPrime:
        case ExprBase::Kind::Braid:
          n = std::max(n, f.base.index + 1);
          break;
        case ExprBase::Kind::Paren:
          n = std::max(n, scan_strands(*f.base.sub));
          break;
        default:
          break;
      }
    }
  return n;
}

LinearWords evaluate_at(const Expression& e, int n);

LinearWords factor_value(const ExprFactor& f, int n) {
  LinearWords out;
  out.n = n;
  const int exp = f.exp;
  switch (f.base.kind) {
    case ExprBase::Kind::Loop:
    case ExprBase::Kind::LoopPrime:
    case ExprBase::Kind::Braid: {
      Word w(n);
      Letter l = f.base.kind == ExprBase::Kind::Braid
                     ? Letter::g(f.base.index)
                     : (f.base.kind == ExprBase::Kind::Loop
                            ? Letter::t_i(f.base.index)
                            : Letter::t_prime(f.base.index));
      l.sign = exp >= 0 ? +1 : -1;
      for (int r = 0; r < std::abs(exp); ++r) w.append(l);
      out.terms.push_back({CoeffPoly(1), std::move(w)});
      return out;
    }
    case ExprBase::Kind::Q:
      out.terms.push_back({cp_q(exp), Word(n)});
      return out;
    case ExprBase::Kind::Z:
      out.terms.push_back({cp_z(exp), Word(n)});
      return out;
    case ExprBase::Kind::IntLit: {
      if (exp < 0) {
        if (f.base.value == 1 || f.base.value == -1) {
          Int v = f.base.value;
          Int p = 1;
          for (int r = 0; r < -exp; ++r) p *= v;
          out.terms.push_back({CoeffPoly(p), Word(n)});
          return out;
        }
        throw Error("negative power of a non-invertible integer");
      }
      Int p = 1;
      for (int r = 0; r < exp; ++r) p *= f.base.value;
      out.terms.push_back({CoeffPoly(p), Word(n)});
      return out;
    }
    case ExprBase::Kind::Paren: {
      if (exp < 0) throw Error("negative power of a parenthesized expression");
      LinearWords acc;
      acc.n = n;
      acc.terms.push_back({CoeffPoly(1), Word(n)});
      LinearWords inner = evaluate_at(*f.base.sub, n);
      for (int r = 0; r < exp; ++r) {
        LinearWords next;
        next.n = n;
        for (const auto& [ca, wa] : acc.terms)
          for (const auto& [cb, wb] : inner.terms) {
            Word w = wa;
            w.append(wb);
            next.terms.push_back({ca * cb, std::move(w)});
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  throw Error("factor_value: bad base kind");
}

LinearWords evaluate_at(const Expression& e, int n) {
  LinearWords out;
  out.n = n;
  for (const ExprTerm& t : e.terms) {
    LinearWords acc;
    acc.n = n;
    acc.terms.push_back({CoeffPoly(t.sign), Word(n)});
    for (const ExprFactor& f : t.factors) {
      LinearWords fv = factor_value(f, n);
      LinearWords next;
      next.n = n;
      for (const auto& [ca, wa] : acc.terms)
        for (const auto& [cb, wb] : fv.terms) {
          Word w = wa;
          w.append(wb);
          next.terms.push_back({ca * cb, std::move(w)});
        }
      acc = std::move(next);
    }
    out.terms.insert(out.terms.end(), acc.terms.begin(), acc.terms.end());
  }
  return out;
}

}  // namespace

Expression parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string print_expression(const Expression& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const ExprTerm& t = e.terms[i];
    if (i == 0) {
      if (t.sign < 0) os << "-";
    } else {
      os << (t.sign < 0 ? " - " : " + ");
    }
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
      if (j) os << "*";
      print_base(os, t.factors[j].base);
      if (t.factors[j].exp != 1) os << "^" << t.factors[j].exp;
    }
  }
  return os.str();
}

LinearWords evaluate(const Expression& e) { return evaluate_at(e, scan_strands(e)); }

Word expression_word(const Expression& e) {
  LinearWords lw = evaluate(e);
  if (lw.terms.size() != 1 || !lw.terms[0].first.is_one())
    throw GrammarViolation("expected a plain word (single term, coefficient 1)");
  return lw.terms[0].second;
}

LoopMonomial expression_lambda_prime(const Expression& e) {
  Word w = expression_word(e);
  LoopMonomial out;
  int last = -1;
  int current = -1;
  for (const Letter& l : w.letters) {
    int idx = l.index;
    bool loop_kind = l.kind == Letter::Kind::LoopT || l.kind == Letter::Kind::LoopTPrime;
    if (!loop_kind) throw GrammarViolation("primed monomial may not contain g letters");
    if (l.kind == Letter::Kind::LoopT && idx != 0)
      throw GrammarViolation("use t'[i] for looping generators above index 0");
    if (idx != current) {
      if (idx <= last) throw GrammarViolation("primed monomial indices must increase");
      last = current = idx;
    }
    out.bump(idx, l.sign);
  }
  return out;
}

}  // namespace skein
