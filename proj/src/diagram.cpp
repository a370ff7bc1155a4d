#include "topoq/diagram.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <variant>
#include <vector>

#include "topoq/error.hpp"

namespace topoq {

struct Diagram::Node {
  Kind kind;
  std::string name;
  std::vector<Diagram> children;
  Complex value{1.0, 0.0};
  std::size_t a = 0;
  std::size_t b = 0;
};

Diagram Diagram::gen(std::string name) {
  return Diagram(std::make_shared<const Node>(Node{Kind::Generator, std::move(name), {}, {}, 0, 0}));
}

Diagram Diagram::seq(Diagram upper, Diagram lower) {
  return Diagram(std::make_shared<const Node>(
      Node{Kind::Seq, {}, {std::move(upper), std::move(lower)}, {}, 0, 0}));
}

Diagram Diagram::par(Diagram left, Diagram right) {
  return Diagram(std::make_shared<const Node>(
      Node{Kind::Par, {}, {std::move(left), std::move(right)}, {}, 0, 0}));
}

Diagram Diagram::scalar(Complex value) {
  return Diagram(std::make_shared<const Node>(Node{Kind::Scalar, {}, {}, value, 0, 0}));
}

Diagram Diagram::id(std::size_t dim) {
  return Diagram(std::make_shared<const Node>(Node{Kind::Id, {}, {}, {}, dim, 0}));
}

Diagram Diagram::swap(std::size_t dim_a, std::size_t dim_b) {
  return Diagram(std::make_shared<const Node>(Node{Kind::Swap, {}, {}, {}, dim_a, dim_b}));
}

Diagram Diagram::seq_chain(std::initializer_list<Diagram> bottom_to_top) {
  if (bottom_to_top.size() == 0) throw ValidationError("seq_chain of nothing");
  auto it = bottom_to_top.begin();
  Diagram acc = *it++;
  for (; it != bottom_to_top.end(); ++it) acc = seq(*it, acc);
  return acc;
}

Diagram::Kind Diagram::kind() const noexcept { return node_->kind; }
const std::string& Diagram::name() const { return node_->name; }
const Diagram& Diagram::first() const { return node_->children.at(0); }
const Diagram& Diagram::second() const { return node_->children.at(1); }
Complex Diagram::value() const { return node_->value; }
std::size_t Diagram::dim_a() const { return node_->a; }
std::size_t Diagram::dim_b() const { return node_->b; }

Environment& Environment::bind(std::string name, LinearMap map) {
  if (!map.is_finite()) throw NumericalError("binding " + name + " is not finite");
  bindings_.insert_or_assign(std::move(name), std::move(map));
  return *this;
}

namespace {

// Parses cap_<n> / cup_<n>; returns 0 when the name does not match.
std::size_t cap_cup_dim(const std::string& name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return 0;
  std::size_t n = 0;
  const char* begin = name.data() + prefix.size();
  const char* end = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(begin, end, n);
  if (ec != std::errc{} || ptr != end) return 0;
  return n;
}

}  // namespace

LinearMap Environment::lookup(const std::string& name) const {
  if (auto it = bindings_.find(name); it != bindings_.end()) return it->second;
  if (auto n = cap_cup_dim(name, "cap_"); n > 0) return topoq::name(LinearMap::identity(n));
  if (auto n = cap_cup_dim(name, "cup_"); n > 0) {
    return adjoint(topoq::name(LinearMap::identity(n)));
  }
  throw UnboundGenerator(name);
}

bool Environment::contains(const std::string& name) const {
  return bindings_.count(name) > 0 || cap_cup_dim(name, "cap_") > 0 ||
         cap_cup_dim(name, "cup_") > 0;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Diagram parse_document() {
    Diagram d = parse_expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, col_, what); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a token but input ended");
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      if (static_cast<unsigned char>(c) > 127) fail("non-ASCII character");
      advance();
    }
    if (pos_ == start) fail("expected a token");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t integer() {
    skip_space();
    const std::size_t line = line_, col = col_;
    const auto tok = atom();
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || n == 0) {
      throw SyntaxError(line, col, "expected a positive integer, got '" + tok + "'");
    }
    return n;
  }

  double real() {
    skip_space();
    const std::size_t line = line_, col = col_;
    const auto tok = atom();
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v)) {
      throw SyntaxError(line, col, "expected a number, got '" + tok + "'");
    }
    return v;
  }

  Diagram parse_expr() {
    expect('(');
    skip_space();
    const std::size_t form_line = line_, form_col = col_;
    const auto form = atom();
    Diagram out = [&] {
      if (form == "seq") {
        auto upper = parse_expr();
        auto lower = parse_expr();
        return Diagram::seq(std::move(upper), std::move(lower));
      }
      if (form == "par") {
        auto left = parse_expr();
        auto right = parse_expr();
        return Diagram::par(std::move(left), std::move(right));
      }
      if (form == "gen") return Diagram::gen(atom());
      if (form == "id") return Diagram::id(integer());
      if (form == "swap") {
        const auto a = integer();
        return Diagram::swap(a, integer());
      }
      if (form == "scalar") {
        const double re = real();
        return Diagram::scalar({re, real()});
      }
      throw UnknownForm("'" + form + "' at line " + std::to_string(form_line) + ", col " +
                        std::to_string(form_col));
    }();
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_to(const Diagram& d, std::string& out) {
  switch (d.kind()) {
    case Diagram::Kind::Generator:
      out += "(gen " + d.name() + ")";
      break;
    case Diagram::Kind::Seq:
    case Diagram::Kind::Par:
      out += d.kind() == Diagram::Kind::Seq ? "(seq " : "(par ";
      print_to(d.first(), out);
      out += ' ';
      print_to(d.second(), out);
      out += ')';
      break;
    case Diagram::Kind::Scalar:
      out += "(scalar " + format_real(d.value().real()) + " " + format_real(d.value().imag()) + ")";
      break;
    case Diagram::Kind::Id:
      out += "(id " + std::to_string(d.dim_a()) + ")";
      break;
    case Diagram::Kind::Swap:
      out += "(swap " + std::to_string(d.dim_a()) + " " + std::to_string(d.dim_b()) + ")";
      break;
  }
}

LinearMap eval_at(const Diagram& d, const Environment& env, const std::string& path) {
  switch (d.kind()) {
    case Diagram::Kind::Generator:
      return env.lookup(d.name());
    case Diagram::Kind::Seq: {
      const auto upper = eval_at(d.first(), env, path + "/upper");
      const auto lower = eval_at(d.second(), env, path + "/lower");
      if (lower.cod() != upper.dom()) {
        throw DimensionMismatch("at " + path + ": lower has codomain " +
                                std::to_string(lower.cod()) + " but upper has domain " +
                                std::to_string(upper.dom()));
      }
      return compose(upper, lower);
    }
    case Diagram::Kind::Par:
      return tensor(eval_at(d.first(), env, path + "/left"),
                    eval_at(d.second(), env, path + "/right"));
    case Diagram::Kind::Scalar:
      return LinearMap::scalar(d.value());
    case Diagram::Kind::Id:
      return LinearMap::identity(d.dim_a());
    case Diagram::Kind::Swap:
      return topoq::swap(d.dim_a(), d.dim_b());
  }
  throw InternalError("Unreachable", "unknown diagram kind");
}

}  // namespace

Diagram parse(std::string_view text) { return Parser(text).parse_document(); }

std::string print(const Diagram& d) {
  std::string out;
  print_to(d, out);
  return out;
}

LinearMap evaluate(const Diagram& d, const Environment& env) { return eval_at(d, env, "root"); }

bool diagrams_equal(const Diagram& a, const Diagram& b, const Environment& env, double tol) {
  return approx_eq(evaluate(a, env), evaluate(b, env), tol);
}

}  // namespace topoq
