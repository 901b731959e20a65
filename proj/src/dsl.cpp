// Copyright 2026 The strand authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "strand/dsl.hpp"

#include <cctype>

namespace strand::dsl {

namespace {

struct Token {
  enum class Kind { Ident, Number, Dot, Star, LParen, RParen, LBracket,
                    RBracket, LBrace, RBrace, Comma, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      bump();
    }
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      current_.kind = k;
      current_.text = c;
      bump();
    };
    switch (c) {
      case '.': return single(Token::Kind::Dot);
      case '*': return single(Token::Kind::Star);
      case '(': return single(Token::Kind::LParen);
      case ')': return single(Token::Kind::RParen);
      case '[': return single(Token::Kind::LBracket);
      case ']': return single(Token::Kind::RBracket);
      case '{': return single(Token::Kind::LBrace);
      case '}': return single(Token::Kind::RBrace);
      case ',': return single(Token::Kind::Comma);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Token::Kind::Number;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        current_.text += text_[pos_];
        bump();
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Token::Kind::Ident;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_' &&
            d != ':' && d != '^')
          break;
        current_.text += d;
        bump();
      }
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     column_);
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Expr parse() {
    Expr e = parse_seq();
    expect(Token::Kind::End, "end of input");
    return e;
  }

 private:
  Expr parse_seq() {
    Expr left = parse_par();
    while (lex_.peek().kind == Token::Kind::Dot) {
      Token op = lex_.take();
      Expr right = parse_par();
      Expr seq;
      seq.kind = Expr::Kind::Seq;
      seq.line = op.line;
      seq.column = op.column;
      seq.children = {std::move(left), std::move(right)};
      left = std::move(seq);
    }
    return left;
  }

  Expr parse_par() {
    Expr left = parse_atom();
    while (lex_.peek().kind == Token::Kind::Star) {
      Token op = lex_.take();
      Expr right = parse_atom();
      Expr par;
      par.kind = Expr::Kind::Par;
      par.line = op.line;
      par.column = op.column;
      par.children = {std::move(left), std::move(right)};
      left = std::move(par);
    }
    return left;
  }

  Expr parse_atom() {
    Token t = lex_.take();
    Expr e;
    e.line = t.line;
    e.column = t.column;
    switch (t.kind) {
      case Token::Kind::LParen: {
        Expr inner = parse_seq();
        expect(Token::Kind::RParen, "')'");
        return inner;
      }
      case Token::Kind::Ident:
        break;
      default:
        throw ParseError("expected an expression", t.line, t.column);
    }

    if (t.text == "id") {
      e.kind = Expr::Kind::Id;
      expect(Token::Kind::LBracket, "'['");
      if (lex_.peek().kind != Token::Kind::RBracket) {
        e.types.push_back(ident("wire type"));
        while (lex_.peek().kind == Token::Kind::Comma) {
          lex_.take();
          e.types.push_back(ident("wire type"));
        }
      }
      expect(Token::Kind::RBracket, "']'");
      return e;
    }
    if (t.text == "cup" || t.text == "cap") {
      e.kind = t.text == "cup" ? Expr::Kind::Cup : Expr::Kind::Cap;
      expect(Token::Kind::LBracket, "'['");
      e.types.push_back(ident("wire type"));
      expect(Token::Kind::RBracket, "']'");
      return e;
    }
    if (t.text == "swap") {
      e.kind = Expr::Kind::Swap;
      expect(Token::Kind::LBracket, "'['");
      e.types.push_back(ident("wire type"));
      expect(Token::Kind::Comma, "','");
      e.types.push_back(ident("wire type"));
      expect(Token::Kind::RBracket, "']'");
      return e;
    }
    if (t.text == "spider") {
      e.kind = Expr::Kind::Spider;
      expect(Token::Kind::LBrace, "'{'");
      Token color = lex_.take();
      if (color.kind != Token::Kind::Ident ||
          (color.text != "light" && color.text != "dark"))
        throw ParseError("spider color must be light or dark", color.line,
                         color.column);
      e.color = spider_color_from_string(color.text);
      expect(Token::Kind::Comma, "','");
      e.types.push_back(ident("wire type"));
      expect(Token::Kind::Comma, "','");
      e.n_in = number("leg count");
      expect(Token::Kind::Comma, "','");
      e.n_out = number("leg count");
      expect(Token::Kind::RBrace, "'}'");
      return e;
    }
    if (t.text == "dag" || t.text == "tr") {
      e.kind = t.text == "dag" ? Expr::Kind::Dagger : Expr::Kind::Transpose;
      expect(Token::Kind::LParen, "'('");
      e.children.push_back(parse_seq());
      expect(Token::Kind::RParen, "')'");
      return e;
    }
    e.kind = Expr::Kind::Gen;
    e.name = t.text;
    return e;
  }

  std::string ident(const char* what) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Ident)
      throw ParseError(std::string("expected ") + what, t.line, t.column);
    return t.text;
  }

  std::uint32_t number(const char* what) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Number)
      throw ParseError(std::string("expected ") + what, t.line, t.column);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  void expect(Token::Kind kind, const char* what) {
    Token t = lex_.take();
    if (t.kind != kind)
      throw ParseError(std::string("expected ") + what, t.line, t.column);
  }

  Lexer lex_;
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

Diagram elaborate(const Expr& e, const SignaturePtr& sig) {
  auto type_of = [&](const std::string& name) {
    if (!sig->has_type(name))
      throw ParseError("unknown wire type '" + name + "'", e.line, e.column);
    return sig->type_id(name);
  };
  switch (e.kind) {
    case Expr::Kind::Id: {
      std::vector<TypeId> ts;
      for (const std::string& n : e.types) ts.push_back(type_of(n));
      return Diagram::identity(sig, ts);
    }
    case Expr::Kind::Gen:
      if (!sig->has_generator(e.name))
        throw ParseError("unknown generator '" + e.name + "'", e.line,
                         e.column);
      return Diagram::generator(sig, e.name);
    case Expr::Kind::Cup:
      return Diagram::cup(sig, type_of(e.types[0]));
    case Expr::Kind::Cap:
      return Diagram::cap(sig, type_of(e.types[0]));
    case Expr::Kind::Swap:
      return Diagram::swap_wires(sig, type_of(e.types[0]), type_of(e.types[1]));
    case Expr::Kind::Spider:
      return Diagram::spider(sig, e.color, type_of(e.types[0]), e.n_in, e.n_out);
    case Expr::Kind::Dagger:
      return elaborate(e.children[0], sig).dagger();
    case Expr::Kind::Transpose:
      return elaborate(e.children[0], sig).transpose();
    case Expr::Kind::Seq: {
      Diagram left = elaborate(e.children[0], sig);
      Diagram right = elaborate(e.children[1], sig);
      try {
        return compose_seq(left, right);
      } catch (const TypeMismatchError& err) {
        throw ParseError(err.what(), e.line, e.column);
      }
    }
    case Expr::Kind::Par:
      return compose_par(elaborate(e.children[0], sig),
                         elaborate(e.children[1], sig));
  }
  throw InternalError("unhandled expression kind");
}

Diagram parse_diagram(const std::string& text, const SignaturePtr& sig) {
  return elaborate(parse_expr(text), sig);
}

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Seq:
      return 1;
    case Expr::Kind::Par:
      return 2;
    default:
      return 3;
  }
}

void print(const Expr& e, int parent_prec, std::string& out) {
  int prec = precedence(e.kind);
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case Expr::Kind::Seq:
    case Expr::Kind::Par: {
      const char* op = e.kind == Expr::Kind::Seq ? " . " : " * ";
      print(e.children[0], prec, out);
      out += op;
      // both operators associate; right operands at equal level need parens
      print(e.children[1], prec + 1, out);
      break;
    }
    case Expr::Kind::Id: {
      out += "id[";
      for (std::size_t i = 0; i < e.types.size(); ++i) {
        if (i) out += ", ";
        out += e.types[i];
      }
      out += ']';
      break;
    }
    case Expr::Kind::Gen:
      out += e.name;
      break;
    case Expr::Kind::Cup:
      out += "cup[" + e.types[0] + "]";
      break;
    case Expr::Kind::Cap:
      out += "cap[" + e.types[0] + "]";
      break;
    case Expr::Kind::Swap:
      out += "swap[" + e.types[0] + ", " + e.types[1] + "]";
      break;
    case Expr::Kind::Spider:
      out += std::string("spider{") + to_string(e.color) + ", " + e.types[0] +
             ", " + std::to_string(e.n_in) + ", " + std::to_string(e.n_out) +
             "}";
      break;
    case Expr::Kind::Dagger:
      out += "dag(";
      print(e.children[0], 0, out);
      out += ')';
      break;
    case Expr::Kind::Transpose:
      out += "tr(";
      print(e.children[0], 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string pretty(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

}  // namespace strand::dsl
