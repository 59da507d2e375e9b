#include "invforge/textio.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = take() == '-';
    }
    terms.push_back(term(negative));
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      take();
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(ctx_, std::move(terms));
  }

 private:
  Term term(bool negative) {
    skip();
    if (at_end()) fail("expected a term");
    Term t{Monomial(ctx_->slot_count()), Rational(1)};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits(), 10);
      Integer den = 1;
      if (peek() == '/') {
        take();
        den = Integer(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      t.coeff = Rational(num, den);
      t.coeff.canonicalize();
      need_factor = false;
      if (peek() == '*') {
        take();
        need_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        need_factor = true;
      }
    }
    if (need_factor) {
      factor(t.monomial);
      while (peek() == '*') {
        take();
        factor(t.monomial);
      }
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  void factor(Monomial& m) {
    skip();
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      name += text_[pos_++];
    }
    if (name.empty()) fail("expected a variable");
    std::optional<std::size_t> slot = ctx_->slot_index(name);
    if (!slot && name == "t" && ctx_->kind() != RingKind::GenRing) slot = 0;
    if (!slot) fail("unknown variable '" + name + "'", start);
    int exponent = 1;
    if (peek() == '^') {
      take();
      bool neg = false;
      if (peek() == '-') {
        take();
        neg = true;
      }
      const std::size_t exp_pos = pos_;
      const std::string e = digits();
      if (e.size() > 4) fail("exponent too large", exp_pos);
      exponent = std::stoi(e);
      if (neg) {
        if (!ctx_->allows_negative(*slot)) fail("negative exponent not allowed on '" + name + "'", exp_pos);
        exponent = -exponent;
      }
    }
    const int total = m[*slot] + exponent;
    if (total > 30000 || total < -30000) fail("exponent too large", start);
    m.add(*slot, exponent);
  }

  std::string digits() {
    skip();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    skip();
    return text_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) { throw ParseError(what, at); }

  std::string_view text_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;
};

void write_monomial(std::ostream& out, const VarContext& ctx, const Monomial& m) {
  bool first = true;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << ctx.slot_name(s);
    if (m[s] != 1) out << '^' << m[s];
  }
}

void write_text(std::ostream& out, const Polynomial& f) {
  if (f.is_zero()) {
    out << '0';
    return;
  }
  const VarContext& ctx = *f.context();
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = abs(t.coeff);
    const bool constant = t.monomial.degree() == 0 && !t.monomial.has_negative();
    if (constant) {
      out << to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << to_string(magnitude) << '*';
    write_monomial(out, ctx, t.monomial);
  }
}

void write_json(std::ostream& out, const Polynomial& f) {
  const VarContext& ctx = *f.context();
  out << R"({"ring":{"kind":")" << kind_name(ctx.kind()) << R"(","n":)" << ctx.n() << R"(},"terms":[)";
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) out << ',';
    first = false;
    out << R"({"c":")" << to_string(t.coeff) << R"(","e":[)";
    for (std::size_t s = 0; s < t.monomial.size(); ++s) {
      if (s > 0) out << ',';
      out << t.monomial[s];
    }
    out << "]}";
  }
  out << "]}";
}

}  // namespace

Polynomial parse_poly(std::string_view text, const ContextPtr& ctx) {
  return Parser(text, ctx).parse();
}

Polynomial parse_poly_json(std::string_view text, const ContextPtr& ctx) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    const auto& ring = doc.at("ring");
    if (ring.at("kind").get<std::string>() != kind_name(ctx->kind()) || ring.at("n").get<int>() != ctx->n()) {
      throw ContextMismatch("JSON ring does not match the expected context");
    }
    std::vector<Term> terms;
    for (const auto& t : doc.at("terms")) {
      const auto exps = t.at("e").get<std::vector<int>>();
      if (exps.size() != ctx->slot_count()) throw ContextMismatch("JSON exponent vector has the wrong length");
      const Monomial m{std::span<const int>(exps)};
      for (std::size_t s = 0; s < exps.size(); ++s) {
        if (exps[s] < 0 && !ctx->allows_negative(s)) throw ParseError("negative exponent in JSON term", 0);
      }
      terms.push_back({m, parse_rational(t.at("c").get<std::string>())});
    }
    return Polynomial::from_terms(ctx, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what(), 0);
  }
}

void write_poly(std::ostream& out, const Polynomial& f, Format format) {
  if (format == Format::Json) {
    write_json(out, f);
  } else {
    write_text(out, f);
  }
}

std::string format_poly(const Polynomial& f, Format format) {
  std::ostringstream out;
  write_poly(out, f, format);
  return out.str();
}

}  // namespace invforge
