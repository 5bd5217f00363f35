#include "dot_reader.hpp"

#include <cctype>

namespace dot {

namespace {

enum class Tok { Id, LBrace, RBrace, LBracket, RBracket, Equals, Semi, Comma, EdgeOp, End };

struct Token {
  Tok kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip();
    if (i_ >= s_.size()) return {Tok::End, ""};
    const char c = s_[i_];
    switch (c) {
      case '{': ++i_; return {Tok::LBrace, "{"};
      case '}': ++i_; return {Tok::RBrace, "}"};
      case '[': ++i_; return {Tok::LBracket, "["};
      case ']': ++i_; return {Tok::RBracket, "]"};
      case '=': ++i_; return {Tok::Equals, "="};
      case ';': ++i_; return {Tok::Semi, ";"};
      case ',': ++i_; return {Tok::Comma, ","};
      default: break;
    }
    if (c == '-' && i_ + 1 < s_.size() && (s_[i_ + 1] == '-' || s_[i_ + 1] == '>')) {
      i_ += 2;
      return {Tok::EdgeOp, s_.substr(i_ - 2, 2)};
    }
    if (c == '"') return quoted();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
        static_cast<unsigned char>(c) >= 0x80) {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' ||
                               static_cast<unsigned char>(s_[j]) >= 0x80)) {
        ++j;
      }
      return take(j);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-') {
      // numeral: [-]?(.[0-9]+ | [0-9]+(.[0-9]*)?)
      std::size_t j = i_;
      if (s_[j] == '-') ++j;
      bool digits = false, dot = false;
      while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || (!dot && s_[j] == '.'))) {
        if (s_[j] == '.') dot = true; else digits = true;
        ++j;
      }
      if (!digits) throw ParseError("bad numeral at offset " + std::to_string(i_));
      if (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) {
        throw ParseError("numeral followed by letter at offset " + std::to_string(j));
      }
      return take(j);
    }
    throw ParseError(std::string("unexpected character '") + c + "' at offset " + std::to_string(i_));
  }

 private:
  Token take(std::size_t j) {
    Token t{Tok::Id, s_.substr(i_, j - i_)};
    i_ = j;
    return t;
  }

  Token quoted() {
    std::string out;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size() && s_[i_ + 1] == '"') {
        out.push_back('"');
        i_ += 2;
        continue;
      }
      out.push_back(s_[i_++]);
    }
    if (i_ >= s_.size()) throw ParseError("unterminated string");
    ++i_;
    return {Tok::Id, out};
  }

  void skip() {
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (s_.compare(i_, 2, "//") == 0 || (s_.compare(i_, 1, "#") == 0 && at_line_start())) {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else if (s_.compare(i_, 2, "/*") == 0) {
        const auto end = s_.find("*/", i_ + 2);
        if (end == std::string::npos) throw ParseError("unterminated comment");
        i_ = end + 2;
      } else {
        return;
      }
    }
  }

  bool at_line_start() const {
    std::size_t j = i_;
    while (j > 0 && (s_[j - 1] == ' ' || s_[j - 1] == '\t')) --j;
    return j == 0 || s_[j - 1] == '\n';
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

bool keyword(const Token& t, const char* kw) {
  if (t.kind != Tok::Id || t.text.size() != std::char_traits<char>::length(kw)) return false;
  for (std::size_t i = 0; i < t.text.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(t.text[i])) != kw[i]) return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { advance(); }

  Graph graph() {
    if (keyword(cur_, "strict")) {
      g_.strict = true;
      advance();
    }
    if (keyword(cur_, "graph")) {
      g_.directed = false;
    } else if (keyword(cur_, "digraph")) {
      g_.directed = true;
    } else {
      throw ParseError("expected graph or digraph");
    }
    advance();
    if (cur_.kind == Tok::Id) {
      g_.name = cur_.text;
      advance();
    }
    expect(Tok::LBrace);
    stmt_list(nullptr);
    expect(Tok::RBrace);
    if (cur_.kind != Tok::End) throw ParseError("trailing input after graph");
    return std::move(g_);
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(Tok k) {
    if (cur_.kind != k) throw ParseError("unexpected token '" + cur_.text + "'");
    advance();
  }

  void stmt_list(Subgraph* sub) {
    while (cur_.kind != Tok::RBrace && cur_.kind != Tok::End) {
      stmt(sub);
      if (cur_.kind == Tok::Semi) advance();
    }
  }

  Attrs attr_list() {
    Attrs a;
    while (cur_.kind == Tok::LBracket) {
      advance();
      while (cur_.kind != Tok::RBracket) {
        if (cur_.kind != Tok::Id) throw ParseError("expected attribute name");
        std::string key = cur_.text;
        advance();
        expect(Tok::Equals);
        if (cur_.kind != Tok::Id) throw ParseError("expected attribute value");
        a[key] = cur_.text;
        advance();
        if (cur_.kind == Tok::Semi || cur_.kind == Tok::Comma) advance();
      }
      advance();
    }
    return a;
  }

  void note_node(const std::string& id, Subgraph* sub, const Attrs& attrs = {}) {
    auto& slot = g_.nodes[id];
    for (const auto& [k, v] : attrs) slot[k] = v;
    if (sub) sub->nodes.push_back(id);
  }

  // Returns the node IDs an edge endpoint stands for.
  std::vector<std::string> endpoint(Subgraph* sub) {
    if (keyword(cur_, "subgraph") || cur_.kind == Tok::LBrace) {
      const std::size_t before = g_.subgraphs.size();
      subgraph();
      return g_.subgraphs[before].nodes;
    }
    if (cur_.kind != Tok::Id) throw ParseError("expected node id");
    std::string id = cur_.text;
    advance();
    note_node(id, sub);
    return {id};
  }

  void subgraph() {
    Subgraph s;
    if (keyword(cur_, "subgraph")) {
      advance();
      if (cur_.kind == Tok::Id) {
        s.name = cur_.text;
        advance();
      }
    }
    const std::size_t slot = g_.subgraphs.size();
    g_.subgraphs.push_back({});
    expect(Tok::LBrace);
    stmt_list(&s);
    expect(Tok::RBrace);
    g_.subgraphs[slot] = std::move(s);
  }

  void stmt(Subgraph* sub) {
    if (keyword(cur_, "graph") || keyword(cur_, "node") || keyword(cur_, "edge")) {
      const bool graph_attr = keyword(cur_, "graph");
      advance();
      Attrs a = attr_list();
      if (graph_attr) {
        for (const auto& [k, v] : a) (sub ? sub->attrs : g_.graph_attrs)[k] = v;
      }
      return;
    }
    if (cur_.kind == Tok::Id && !keyword(cur_, "subgraph")) {
      const Token first = cur_;
      advance();
      if (cur_.kind == Tok::Equals) {
        advance();
        if (cur_.kind != Tok::Id) throw ParseError("expected value after '='");
        (sub ? sub->attrs : g_.graph_attrs)[first.text] = cur_.text;
        advance();
        return;
      }
      std::vector<std::string> lhs{first.text};
      if (cur_.kind != Tok::EdgeOp) {
        note_node(first.text, sub, attr_list());
        return;
      }
      note_node(first.text, sub);
      edge_rhs(lhs, sub);
      return;
    }
    std::vector<std::string> lhs = endpoint(sub);
    if (cur_.kind == Tok::EdgeOp) edge_rhs(lhs, sub);
  }

  void edge_rhs(std::vector<std::string> lhs, Subgraph* sub) {
    std::vector<std::pair<std::string, std::string>> pending;
    while (cur_.kind == Tok::EdgeOp) {
      if ((cur_.text == "->") != g_.directed) {
        throw ParseError("edge operator '" + cur_.text + "' does not match graph type");
      }
      advance();
      std::vector<std::string> rhs = endpoint(sub);
      for (const auto& a : lhs) {
        for (const auto& b : rhs) pending.emplace_back(a, b);
      }
      lhs = std::move(rhs);
    }
    const Attrs a = attr_list();
    for (auto& [from, to] : pending) g_.edges.push_back({from, to, a});
  }

  Lexer lex_;
  Token cur_{Tok::End, ""};
  Graph g_;
};

}  // namespace

Graph parse(const std::string& text) { return Parser(text).graph(); }

}  // namespace dot
