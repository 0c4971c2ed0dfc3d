#include <cctype>
#include <cstdint>

#include "ptel/syntax.hpp"

namespace ptel {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_punct(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  void expect_punct(const std::string& tok, const char* what) {
    if (!try_punct(tok)) throw ParseError(std::string("expected '") + tok + "' in " + what, pos);
  }

  // Identifier at the cursor, or empty string.  Does not consume.
  std::string peek_ident() {
    skip_ws();
    std::size_t p = pos;
    if (p >= text.size()) return {};
    char c = text[p];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return {};
    std::size_t e = p;
    while (e < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[e])) || text[e] == '_'))
      ++e;
    return text.substr(p, e - p);
  }

  std::string take_ident(const char* what) {
    std::string id = peek_ident();
    if (id.empty()) throw ParseError(std::string("expected identifier in ") + what, pos);
    pos += id.size();
    return id;
  }
};

struct Parser {
  Lexer lx;
  const AgentSignature& sig;

  Parser(const std::string& text, const AgentSignature& s) : lx(text), sig(s) {}

  Formula run() {
    Formula f = impl();
    if (!lx.eof()) throw ParseError("trailing input", lx.pos);
    return f;
  }

  Formula impl() {
    Formula l = iff();
    if (lx.try_punct("->")) return Formula::implies(l, impl());
    return l;
  }

  Formula iff() {
    std::vector<Formula> parts{orf()};
    while (lx.try_punct("<->")) parts.push_back(orf());
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::iff(parts[i], acc);
    return acc;
  }

  Formula orf() {
    std::vector<Formula> parts{andf()};
    while (lx.peek() == '|') {
      lx.try_punct("|");
      parts.push_back(andf());
    }
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::oor(parts[i], acc);
    return acc;
  }

  Formula andf() {
    std::vector<Formula> parts{temporal()};
    while (lx.peek() == '&') {
      lx.try_punct("&");
      parts.push_back(temporal());
    }
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::aand(parts[i], acc);
    return acc;
  }

  Formula temporal() {
    Formula l = unary();
    std::string id = lx.peek_ident();
    if (id == "U") {
      lx.pos += 1;
      return Formula::until(l, temporal());
    }
    if (id == "S") {
      lx.pos += 1;
      return Formula::since(l, temporal());
    }
    return l;
  }

  std::string agent_in_brackets(const char* what) {
    lx.expect_punct("[", what);
    std::size_t at = lx.pos;
    std::string a = lx.take_ident(what);
    if (!sig.contains(a)) throw ParseError("unknown agent '" + a + "'", at);
    lx.expect_punct("]", what);
    return a;
  }

  Rat threshold() {
    lx.skip_ws();
    std::size_t at = lx.pos;
    std::string digits;
    while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
      digits += lx.text[lx.pos++];
    if (digits.empty()) throw ParseError("expected rational threshold", lx.pos);
    std::string denom;
    if (lx.pos < lx.text.size() && lx.text[lx.pos] == '/') {
      ++lx.pos;
      while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
        denom += lx.text[lx.pos++];
      if (denom.empty()) throw ParseError("expected denominator", lx.pos);
    }
    auto r = parse_rat(denom.empty() ? digits : digits + "/" + denom);
    if (!r) throw ParseError("malformed rational", at);
    if (!in_unit_interval(*r)) throw ParseError("threshold outside [0,1]", at);
    return *r;
  }

  Cmp comparison() {
    if (lx.try_punct(">=")) return Cmp::Ge;
    if (lx.try_punct("<=")) return Cmp::Le;
    if (lx.try_punct("<")) return Cmp::Lt;
    if (lx.try_punct(">")) return Cmp::Gt;
    if (lx.try_punct("=")) return Cmp::Eq;
    throw ParseError("expected comparison (>=, <=, <, >, =)", lx.pos);
  }

  Formula unary() {
    if (lx.try_punct("~")) return Formula::nnot(unary());
    if (lx.try_punct("(")) {
      Formula f = impl();
      lx.expect_punct(")", "parenthesized formula");
      return f;
    }
    std::string id = lx.peek_ident();
    if (!id.empty()) {
      if (id == "true") { lx.pos += id.size(); return Formula::tt(); }
      if (id == "false") { lx.pos += id.size(); return Formula::ff(); }
      if (id == "X") { lx.pos += 1; return Formula::next(unary()); }
      if (id == "Z") { lx.pos += 1; return Formula::wprev(unary()); }
      if (id == "F") { lx.pos += 1; return Formula::sometime(unary()); }
      if (id == "G") { lx.pos += 1; return Formula::always(unary()); }
      if (id == "O") { lx.pos += 1; return Formula::once(unary()); }
      if (id == "H") { lx.pos += 1; return Formula::sofar(unary()); }
      if (id == "C") { lx.pos += 1; return Formula::common(unary()); }
      if (id == "E") { lx.pos += 1; return Formula::everyone(unary()); }
      if (id == "K") {
        lx.pos += 1;
        std::string a = agent_in_brackets("K[agent]");
        return Formula::know(a, unary());
      }
      if (id == "Pr") {
        lx.pos += 2;
        if (lx.peek() == '[') {
          std::string a = agent_in_brackets("Pr[agent]");
          Cmp c = comparison();
          Rat s = threshold();
          return Formula::proba(a, c, s, unary());
        }
        Cmp c = comparison();
        Rat s = threshold();
        return Formula::prob(c, s, unary());
      }
      if (id == "active") {
        lx.pos += id.size();
        lx.expect_punct("(", "active(agent)");
        std::size_t at = lx.pos;
        std::string a = lx.take_ident("active(agent)");
        if (!sig.contains(a)) throw ParseError("unknown agent '" + a + "'", at);
        lx.expect_punct(")", "active(agent)");
        return Formula::active(a);
      }
      if (id == "U" || id == "S")
        throw ParseError("binary operator '" + id + "' needs a left operand", lx.pos);
      lx.pos += id.size();
      return Formula::atom(id);
    }
    throw ParseError("expected formula", lx.pos);
  }
};

}  // namespace

Formula parse(const std::string& text, const AgentSignature& sig) {
  Parser p(text, sig);
  return p.run();
}

}  // namespace ptel
