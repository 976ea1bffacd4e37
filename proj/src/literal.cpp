#include "corelate/literal.hpp"

#include <cctype>
#include <functional>

#include "corelate/error.hpp"

namespace corelate {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    ws();
    return i_ == s_.size();
  }
  char peek() {
    ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(std::string_view tok) {
    ws();
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) error("expected '" + std::string(tok) + "'");
  }
  std::string word() {
    ws();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) error("expected a word");
    return std::string(s_.substr(b, i_ - b));
  }
  std::size_t natural() {
    ws();
    std::size_t b = i_;
    std::size_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[i_] - '0');
      if (v > 1'000'000) error("number too large");
      ++i_;
    }
    if (b == i_) error("expected a natural number");
    return v;
  }
  std::string scalar_token() {
    ws();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-' ||
                              s_[i_] == '+' || s_[i_] == '/')) {
      ++i_;
    }
    if (b == i_) error("expected a scalar");
    return std::string(s_.substr(b, i_ - b));
  }
  // Consumes a bracketed group and returns the text spanned by it.
  std::string_view rest_of_morphism() {
    ws();
    std::size_t b = i_;
    int depth = 0;
    bool seen = false;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '[') {
        ++depth;
        seen = true;
      } else if (c == ']') {
        --depth;
      }
      ++i_;
      if (seen && depth == 0) break;
    }
    if (!seen || depth != 0) error("unbalanced brackets");
    return s_.substr(b, i_ - b);
  }
  void finish() {
    if (!at_end()) error("trailing input");
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::InvalidLiteral, what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

void check_len(Scanner& sc, std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    sc.error(std::string(what) + ": expected " + std::to_string(want) + " entries, got " + std::to_string(got));
  }
}

template <class M>
std::pair<M, M> parse_pair(std::string_view text, std::string_view kind,
                           const std::function<M(std::string_view)>& leg) {
  Scanner sc(text);
  sc.expect(kind);
  sc.expect("{");
  sc.expect("left");
  sc.expect("=");
  std::string_view l = sc.rest_of_morphism();
  sc.expect(",");
  sc.expect("right");
  sc.expect("=");
  std::string_view r = sc.rest_of_morphism();
  sc.expect("}");
  sc.finish();
  return {leg(l), leg(r)};
}

template <class M>
Cospan<M> make_cospan(std::pair<M, M> p) {
  if (p.first.cod() != p.second.cod()) {
    fail(ErrorKind::TypeMismatch, "cospan legs have different codomains " + std::to_string(p.first.cod()) + " and " +
                                      std::to_string(p.second.cod()));
  }
  return {std::move(p.first), std::move(p.second)};
}

template <class M>
Span<M> make_span(std::pair<M, M> p) {
  if (p.first.dom() != p.second.dom()) {
    fail(ErrorKind::TypeMismatch, "span legs have different domains " + std::to_string(p.first.dom()) + " and " +
                                      std::to_string(p.second.dom()));
  }
  return {std::move(p.first), std::move(p.second)};
}

void require_ring(const MatrixAmbient& amb, const ExactMatrix& m) {
  if (!(m.ring() == amb.ring())) {
    fail(ErrorKind::RingMismatch, "literal over " + m.ring().display_name() + " used in " + amb.name());
  }
}

}  // namespace

FinMap parse_fin_map(std::string_view text) {
  Scanner sc(text);
  sc.expect("fn");
  std::size_t dom = sc.natural();
  sc.expect("->");
  std::size_t cod = sc.natural();
  sc.expect(":");
  sc.expect("[");
  std::vector<std::size_t> t;
  if (!sc.accept("]")) {
    do t.push_back(sc.natural());
    while (sc.accept(","));
    sc.expect("]");
  }
  sc.finish();
  check_len(sc, t.size(), dom, "fn");
  return FinMap(cod, std::move(t));
}

ParMap parse_par_map(std::string_view text) {
  Scanner sc(text);
  sc.expect("par");
  std::size_t dom = sc.natural();
  sc.expect("->");
  std::size_t cod = sc.natural();
  sc.expect(":");
  sc.expect("[");
  std::vector<ParMap::Entry> t;
  if (!sc.accept("]")) {
    do {
      if (sc.accept("_")) {
        t.emplace_back();
      } else {
        t.emplace_back(sc.natural());
      }
    } while (sc.accept(","));
    sc.expect("]");
  }
  sc.finish();
  check_len(sc, t.size(), dom, "par");
  return ParMap(cod, std::move(t));
}

ExactMatrix parse_matrix(std::string_view text) {
  Scanner sc(text);
  sc.expect("mat");
  Ring ring = Ring::from_tag(sc.word());
  std::size_t rows = sc.natural();
  if (!sc.accept("x") && !sc.accept("X")) sc.error("expected 'x'");
  std::size_t cols = sc.natural();
  sc.expect(":");
  sc.expect("[");
  std::vector<Scalar> e;
  std::size_t seen_rows = 0;
  if (!sc.accept("]")) {
    do {
      sc.expect("[");
      std::size_t k = 0;
      if (!sc.accept("]")) {
        do {
          e.push_back(ring.parse(sc.scalar_token()));
          ++k;
        } while (sc.accept(","));
        sc.expect("]");
      }
      check_len(sc, k, cols, "matrix row");
      ++seen_rows;
    } while (sc.accept(","));
    sc.expect("]");
  }
  sc.finish();
  check_len(sc, seen_rows, rows, "matrix rows");
  return ExactMatrix(ring, rows, cols, std::move(e));
}

Cospan<FinMap> parse_fin_cospan(std::string_view text) {
  return make_cospan(parse_pair<FinMap>(text, "cospan", parse_fin_map));
}
Span<FinMap> parse_fin_span(std::string_view text) {
  return make_span(parse_pair<FinMap>(text, "span", parse_fin_map));
}
Cospan<ParMap> parse_par_cospan(std::string_view text) {
  return make_cospan(parse_pair<ParMap>(text, "cospan", parse_par_map));
}
Span<ParMap> parse_par_span(std::string_view text) {
  return make_span(parse_pair<ParMap>(text, "span", parse_par_map));
}
Cospan<ExactMatrix> parse_matrix_cospan(std::string_view text) {
  return make_cospan(parse_pair<ExactMatrix>(text, "cospan", parse_matrix));
}
Span<ExactMatrix> parse_matrix_span(std::string_view text) {
  return make_span(parse_pair<ExactMatrix>(text, "span", parse_matrix));
}

ExactMatrix parse_morphism(const MatrixAmbient& amb, std::string_view t) {
  ExactMatrix m = parse_matrix(t);
  require_ring(amb, m);
  return m;
}

Cospan<ExactMatrix> parse_cospan(const MatrixAmbient& amb, std::string_view t) {
  Cospan<ExactMatrix> c = parse_matrix_cospan(t);
  require_ring(amb, c.left);
  require_ring(amb, c.right);
  return c;
}

Span<ExactMatrix> parse_span(const MatrixAmbient& amb, std::string_view t) {
  Span<ExactMatrix> s = parse_matrix_span(t);
  require_ring(amb, s.left);
  require_ring(amb, s.right);
  return s;
}

}  // namespace corelate
