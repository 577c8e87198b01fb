#include "nonarch/job.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "nonarch/error.hpp"

namespace nonarch {

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> names = {"newton", "unit",     "invert",
                                                 "pole",   "discwise", "descend"};
  return names;
}

namespace {

// ------------------------------------------------------------ text helpers

struct Span {
  std::string text;
  int line = 0;
  int column = 0;  // 1-based column of text[0]
};

[[noreturn]] void fail(ErrorCode code, const Span& at, std::size_t offset, const std::string& msg) {
  throw ParseError(code, at.line, at.column + static_cast<int>(offset), msg);
}

Span trimmed(const std::string& text, int line, int column) {
  std::size_t a = 0;
  while (a < text.size() && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  std::size_t b = text.size();
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return {text.substr(a, b - a), line, column + static_cast<int>(a)};
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

/// Splits on whitespace and/or commas, keeping each piece's position.
std::vector<Span> split_list(const Span& s) {
  std::vector<Span> out;
  std::size_t k = 0;
  while (k < s.text.size()) {
    while (k < s.text.size() && (std::isspace(static_cast<unsigned char>(s.text[k])) || s.text[k] == ',')) ++k;
    const std::size_t start = k;
    while (k < s.text.size() && !std::isspace(static_cast<unsigned char>(s.text[k])) && s.text[k] != ',') ++k;
    if (k > start) out.push_back({s.text.substr(start, k - start), s.line, s.column + static_cast<int>(start)});
  }
  return out;
}

/// Splits on commas only.
std::vector<Span> split_commas(const Span& s) {
  std::vector<Span> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.text.size(); ++k) {
    if (k == s.text.size() || s.text[k] == ',') {
      out.push_back(trimmed(s.text.substr(start, k - start), s.line, s.column + static_cast<int>(start)));
      start = k + 1;
    }
  }
  return out;
}

Rational rational_literal(const Span& s) {
  if (has_zero_denominator(s.text)) fail(ErrorCode::kSemantic, s, 0, "zero denominator in '" + s.text + "'");
  auto q = parse_rational(s.text);
  if (!q) fail(ErrorCode::kSyntax, s, 0, "expected a rational literal, got '" + s.text + "'");
  if (is_unreduced_literal(s.text)) {
    fail(ErrorCode::kRepresentation, s, 0, "rational '" + s.text + "' is not in lowest terms");
  }
  return *q;
}

long integer_literal(const Span& s) {
  std::size_t k = 0;
  if (!s.text.empty() && (s.text[0] == '-' || s.text[0] == '+')) k = 1;
  if (k == s.text.size() || s.text.size() > 18 ||
      !std::all_of(s.text.begin() + static_cast<long>(k), s.text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    fail(ErrorCode::kSyntax, s, 0, "expected an integer, got '" + s.text + "'");
  }
  return std::stol(s.text);
}

// ------------------------------------------------------------ expressions

/// Sparse polynomial with rational coefficients in a fixed list of symbols;
/// exponents may be negative.
using Poly = std::map<std::vector<long>, Rational>;

void poly_add(Poly& into, const std::vector<long>& e, const Rational& c) {
  Rational& slot = into[e];
  slot += c;
  if (slot == 0) into.erase(e);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<long> e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      poly_add(out, e, ca * cb);
    }
  }
  return out;
}

class ExprParser {
 public:
  ExprParser(const Span& src, const std::vector<std::string>& symbols) : src_(src), symbols_(symbols) {}

  Poly parse() {
    skip();
    if (pos_ == src_.text.size()) fail(ErrorCode::kSyntax, src_, pos_, "empty expression");
    Poly p = expr();
    skip();
    if (pos_ != src_.text.size()) {
      fail(ErrorCode::kSyntax, src_, pos_, std::string("unexpected '") + src_.text[pos_] + "'");
    }
    return p;
  }

 private:
  void skip() {
    while (pos_ < src_.text.size() && std::isspace(static_cast<unsigned char>(src_.text[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < src_.text.size() && src_.text[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly constant(const Rational& c) const {
    Poly p;
    if (c != 0) p[std::vector<long>(symbols_.size(), 0)] = c;
    return p;
  }

  Poly expr() {
    Poly out = term();
    for (;;) {
      if (eat('+')) {
        for (const auto& [e, c] : term()) poly_add(out, e, c);
      } else if (eat('-')) {
        for (const auto& [e, c] : term()) poly_add(out, e, -c);
      } else {
        return out;
      }
    }
  }

  Poly term() {
    skip();
    Rational sign(1);
    while (pos_ < src_.text.size() && (src_.text[pos_] == '-' || src_.text[pos_] == '+')) {
      if (src_.text[pos_] == '-') sign = -sign;
      ++pos_;
      skip();
    }
    Poly out = factor();
    while (eat('*')) out = poly_mul(out, factor());
    for (auto& [e, c] : out) c *= sign;
    return out;
  }

  Poly factor() {
    skip();
    if (pos_ >= src_.text.size()) fail(ErrorCode::kSyntax, src_, pos_, "unexpected end of expression");
    const char c = src_.text[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail(ErrorCode::kSyntax, src_, pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return power();
    fail(ErrorCode::kSyntax, src_, pos_, std::string("unexpected '") + c + "'");
  }

  Poly number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.text.size() && std::isdigit(static_cast<unsigned char>(src_.text[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.text.size() && src_.text[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      digits();
      if (pos_ == den) fail(ErrorCode::kSyntax, src_, den, "expected a denominator");
    }
    const Span literal{src_.text.substr(start, pos_ - start), src_.line, src_.column + static_cast<int>(start)};
    return constant(rational_literal(literal));
  }

  Poly power() {
    const std::size_t start = pos_;
    while (pos_ < src_.text.size() &&
           (std::isalnum(static_cast<unsigned char>(src_.text[pos_])) || src_.text[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = src_.text.substr(start, pos_ - start);
    const auto it = std::find(symbols_.begin(), symbols_.end(), name);
    if (it == symbols_.end()) fail(ErrorCode::kSemantic, src_, start, "unknown symbol '" + name + "'");
    long exponent = 1;
    if (eat('^')) {
      skip();
      const std::size_t e0 = pos_;
      if (pos_ < src_.text.size() && (src_.text[pos_] == '-' || src_.text[pos_] == '+')) ++pos_;
      while (pos_ < src_.text.size() && std::isdigit(static_cast<unsigned char>(src_.text[pos_]))) ++pos_;
      exponent = integer_literal({src_.text.substr(e0, pos_ - e0), src_.line, src_.column + static_cast<int>(e0)});
    }
    std::vector<long> e(symbols_.size(), 0);
    e[static_cast<std::size_t>(it - symbols_.begin())] = exponent;
    Poly p;
    p[e] = 1;
    return p;
  }

  Span src_;
  const std::vector<std::string>& symbols_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------ job assembly

struct RawLine {
  std::string key;
  Span value;
};

struct RawEntry {
  Span exponent;
  Span value;
};

LogRadiusWindow parse_window(const Span& s) {
  const std::string& t = s.text;
  if (t.size() < 2 || (t.front() != '[' && t.front() != '(') || (t.back() != ']' && t.back() != ')')) {
    fail(ErrorCode::kSyntax, s, 0, "expected an interval such as [0, 1] or (0, +inf)");
  }
  const Span inner = trimmed(t.substr(1, t.size() - 2), s.line, s.column + 1);
  const auto parts = split_commas(inner);
  if (parts.size() != 2) fail(ErrorCode::kSyntax, s, 0, "an interval has exactly two endpoints");
  auto endpoint = [&](const Span& p, const char* infinite) -> std::optional<Rational> {
    if (p.text == infinite || (std::string(infinite) == "+inf" && p.text == "inf")) return std::nullopt;
    return rational_literal(p);
  };
  const auto lo = endpoint(parts[0], "-inf");
  const auto hi = endpoint(parts[1], "+inf");
  const bool lo_open = t.front() == '(';
  const bool hi_open = t.back() == ')';
  if ((!lo && !lo_open) || (!hi && !hi_open)) {
    fail(ErrorCode::kSemantic, s, 0, "infinite endpoints must be open");
  }
  try {
    return LogRadiusWindow(lo, lo_open, hi, hi_open);
  } catch (const Error& e) {
    fail(ErrorCode::kSemantic, s, 0, e.what());
  }
}

Field parse_field(const Span& s) {
  const auto parts = split_list(s);
  if (parts.empty()) fail(ErrorCode::kSyntax, s, 0, "missing field descriptor");
  if (parts[0].text == "padic") {
    if (parts.size() != 2) fail(ErrorCode::kSyntax, s, 0, "expected 'padic P'");
    const long p = integer_literal(parts[1]);
    if (!is_prime(p)) fail(ErrorCode::kSemantic, parts[1], 0, "p = " + parts[1].text + " is not prime");
    return Field::padic(p);
  }
  if (parts[0].text == "laurent") {
    if (parts.size() != 4) fail(ErrorCode::kSyntax, s, 0, "expected 'laurent Fp|Q SYMBOL N'");
    const Span& residue = parts[1];
    if (!is_identifier(parts[2].text)) {
      fail(ErrorCode::kSyntax, parts[2], 0, "symbol must be an identifier");
    }
    const long n = integer_literal(parts[3]);
    if (residue.text == "Q") return Field::formal_laurent(ResidueKind::kRationals, 0, parts[2].text, n);
    if (residue.text.size() >= 2 && residue.text[0] == 'F') {
      const long p = integer_literal({residue.text.substr(1), residue.line, residue.column + 1});
      if (!is_prime(p)) fail(ErrorCode::kSemantic, residue, 1, "residue characteristic is not prime");
      return Field::formal_laurent(ResidueKind::kPrimeField, p, parts[2].text, n);
    }
    fail(ErrorCode::kSyntax, residue, 0, "residue field must be Fp or Q");
  }
  fail(ErrorCode::kSyntax, parts[0], 0, "unknown field kind '" + parts[0].text + "'");
}

class Builder {
 public:
  explicit Builder(JobFile& job) : job_(job) {}

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    if (job_.field->is_formal_laurent()) out.push_back(job_.field->laurent_desc().symbol);
    for (const auto& v : job_.vars) out.push_back(v);
    for (std::size_t k = 0; k < job_.aux; ++k) out.push_back("T" + std::to_string(k + 1));
    return out;
  }

  Poly expression(const Span& s) const { return ExprParser(s, symbols()).parse(); }

  /// Coefficient-field element from the s-part of a polynomial.
  /// Expressions are evaluated over Q; prime-field coefficients are then
  /// mapped through Z_(p) -> F_p.
  Element element(std::map<long, Rational> s_terms, const Span& at) const {
    const Field& field = *job_.field;
    if (field.is_formal_laurent() && field.laurent_desc().residue == ResidueKind::kPrimeField) {
      const Integer p(field.laurent_desc().p);
      for (auto it = s_terms.begin(); it != s_terms.end();) {
        Integer den = it->second.get_den();
        if (den % p == 0) {
          fail(ErrorCode::kSemantic, at, 0,
               "coefficient not in the declared field: " + to_string(it->second) + " has a pole modulo " + p.get_str());
        }
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        Integer r = it->second.get_num() * inv % p;
        if (r < 0) r += p;
        if (r == 0) {
          it = s_terms.erase(it);
        } else {
          it->second = Rational(r);
          ++it;
        }
      }
    }
    try {
      return Element::from_terms(field, s_terms);
    } catch (const Error& e) {
      fail(ErrorCode::kSemantic, at, 0, std::string("coefficient not in the declared field: ") + e.what());
    }
  }

  /// Splits a polynomial by its non-field exponents.
  std::map<std::vector<long>, Element> grouped(const Poly& p, const Span& at) const {
    const std::size_t lead = job_.field->is_formal_laurent() ? 1 : 0;
    std::map<std::vector<long>, std::map<long, Rational>> parts;
    for (const auto& [e, c] : p) {
      std::vector<long> rest(e.begin() + static_cast<long>(lead), e.end());
      parts[rest][lead ? e[0] : 0] += c;
    }
    std::map<std::vector<long>, Element> out;
    for (const auto& [rest, s_terms] : parts) {
      Element c = element(s_terms, at);
      if (!c.is_zero()) out.emplace(rest, std::move(c));
    }
    return out;
  }

  Element scalar(const Span& s) const {
    if (!job_.vars.empty() || job_.aux > 0) {
      // Restrict to the field symbol for scalars.
      const std::vector<std::string> only =
          job_.field->is_formal_laurent() ? std::vector<std::string>{job_.field->laurent_desc().symbol}
                                          : std::vector<std::string>{};
      const Poly p = ExprParser(s, only).parse();
      std::map<long, Rational> s_terms;
      for (const auto& [e, c] : p) s_terms[e.empty() ? 0 : e[0]] += c;
      return element(s_terms, s);
    }
    const auto groups = grouped(expression(s), s);
    return groups.empty() ? Element::zero(*job_.field) : groups.begin()->second;
  }

 private:
  JobFile& job_;
};

void build_series(JobFile& job, const Builder& b, const std::vector<RawEntry>& entries) {
  std::map<long, const RawEntry*> seen;
  std::map<long, Poly> polys;
  for (const auto& entry : entries) {
    const long e = integer_literal(entry.exponent);
    if (seen.count(e)) fail(ErrorCode::kSemantic, entry.exponent, 0, "duplicate exponent " + std::to_string(e));
    seen[e] = &entry;
    polys[e] = b.expression(entry.value);
  }
  const Field& field = *job.field;
  if (!job.vars.empty()) {
    job.kind = SeriesKind::kRelative;
    RelativeSeries::Terms terms;
    for (const auto& [e, p] : polys) {
      RelativePolynomial sum(field, job.weights);
      for (const auto& [degree, c] : b.grouped(p, seen[e]->value)) {
        if (std::any_of(degree.begin(), degree.end(), [](long d) { return d < 0; })) {
          fail(ErrorCode::kSemantic, seen[e]->value, 0, "negative power of a polydisc variable");
        }
        sum = sum + RelativePolynomial::monomial(c, degree, job.weights);
      }
      if (!sum.is_zero()) terms.emplace(e, std::move(sum));
    }
    job.relative = RelativeSeries(field, job.weights, std::move(terms));
  } else if (job.aux > 0) {
    job.kind = SeriesKind::kPolyradius;
    KrSeries kr{field, job.aux, {}};
    for (const auto& [e, p] : polys) {
      PolyradiusElement sum(field, job.aux);
      for (const auto& [index, c] : b.grouped(p, seen[e]->value)) {
        sum = sum + PolyradiusElement::monomial(c, index);
      }
      if (!sum.is_zero()) kr.terms.emplace(e, std::move(sum));
    }
    job.polyradius = std::move(kr);
  } else {
    job.kind = SeriesKind::kAbsolute;
    LaurentSeries::Terms terms;
    for (const auto& [e, p] : polys) {
      const auto groups = b.grouped(p, seen[e]->value);
      if (!groups.empty()) terms.emplace(e, groups.begin()->second);
    }
    job.absolute = LaurentSeries(field, std::move(terms));
  }
}

StreamRule parse_stream(const Span& s, const Builder& b) {
  auto parts = split_list(s);
  // split_list also splits on commas, which never occur inside values.
  if (parts.empty()) fail(ErrorCode::kSyntax, s, 0, "missing stream rule");
  StreamRule rule;
  std::set<std::string> allowed;
  if (parts[0].text == "geometric") {
    rule.kind = StreamRule::Kind::kGeometric;
    allowed = {"coef", "ratio", "step", "shift"};
  } else if (parts[0].text == "gaussian") {
    rule.kind = StreamRule::Kind::kGaussian;
    allowed = {"base", "sign"};
  } else {
    fail(ErrorCode::kSyntax, parts[0], 0, "unknown stream rule '" + parts[0].text + "'");
  }
  // Glue tokens without '=' onto the previous assignment ("coef=s + 1").
  std::vector<Span> assignments;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k].text.find('=') == std::string::npos && !assignments.empty()) {
      Span& last = assignments.back();
      const int gap = parts[k].column - (last.column + static_cast<int>(last.text.size()));
      last.text += std::string(static_cast<std::size_t>(std::max(gap, 1)), ' ') + parts[k].text;
    } else {
      assignments.push_back(parts[k]);
    }
  }
  std::set<std::string> given;
  for (const auto& a : assignments) {
    const auto eq = a.text.find('=');
    if (eq == std::string::npos) fail(ErrorCode::kSyntax, a, 0, "expected key=value");
    const std::string key = a.text.substr(0, eq);
    const Span value{a.text.substr(eq + 1), a.line, a.column + static_cast<int>(eq) + 1};
    if (!allowed.count(key)) fail(ErrorCode::kSemantic, a, 0, "unknown stream parameter '" + key + "'");
    if (!given.insert(key).second) fail(ErrorCode::kSemantic, a, 0, "duplicate stream parameter '" + key + "'");
    if (key == "coef") rule.coef = b.scalar(value);
    if (key == "ratio") rule.ratio = b.scalar(value);
    if (key == "base") rule.base = b.scalar(value);
    if (key == "step") rule.step = integer_literal(value);
    if (key == "shift") rule.shift = integer_literal(value);
    if (key == "sign") {
      const long sign = integer_literal(value);
      if (sign != 1 && sign != -1) fail(ErrorCode::kSemantic, value, 0, "sign must be 1 or -1");
      rule.sign = static_cast<int>(sign);
    }
  }
  for (const auto& key : allowed) {
    if (key == "step" || key == "shift") continue;
    if (!given.count(key)) fail(ErrorCode::kSemantic, s, 0, "stream rule needs '" + key + "'");
  }
  return rule;
}

SupportShape parse_shape(const Span& s) {
  const auto parts = split_list(s);
  if (parts.size() == 2 && parts[0].text == "finite-below") {
    return SupportShape::finite_below(integer_literal(parts[1]));
  }
  if (parts.size() == 1 && parts[0].text == "infinite-below") return SupportShape::infinite_below();
  if (parts.size() == 1 && parts[0].text == "unknown") return SupportShape::unknown();
  fail(ErrorCode::kSyntax, s, 0, "expected 'finite-below J', 'infinite-below' or 'unknown'");
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "command", "field", "vars",  "weights", "aux",   "window", "subwindow", "domain",
      "prec",    "depth", "shape", "point",   "stream", "series"};
  return keys;
}

}  // namespace

JobFile parse_job(std::string_view text) {
  std::vector<RawLine> lines;
  std::vector<RawEntry> entries;
  std::optional<Span> series_key;
  bool in_series = false;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const Span line = trimmed(raw, line_no, 1);
    if (line.text.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const bool indented = std::isspace(static_cast<unsigned char>(raw[0]));
    const auto colon = line.text.find(':');
    if (colon == std::string::npos) fail(ErrorCode::kSyntax, line, 0, "expected 'key: value'");
    const Span head = trimmed(line.text.substr(0, colon), line.line, line.column);
    const Span value = trimmed(line.text.substr(colon + 1), line.line, line.column + static_cast<int>(colon) + 1);

    if (indented) {
      if (!in_series) fail(ErrorCode::kSyntax, line, 0, "indented line outside a series block");
      if (value.text.empty()) fail(ErrorCode::kSyntax, value, 0, "missing coefficient");
      entries.push_back({head, value});
    } else {
      in_series = false;
      if (!is_identifier(head.text)) fail(ErrorCode::kSyntax, head, 0, "malformed key '" + head.text + "'");
      const auto& keys = known_keys();
      if (std::find(keys.begin(), keys.end(), head.text) == keys.end()) {
        fail(ErrorCode::kSemantic, head, 0, "unknown key '" + head.text + "'");
      }
      const bool repeated = std::any_of(lines.begin(), lines.end(),
                                        [&](const RawLine& l) { return l.key == head.text; }) ||
                            (head.text == "series" && series_key);
      if (repeated) fail(ErrorCode::kSemantic, head, 0, "duplicate key '" + head.text + "'");
      if (head.text == "series") {
        if (!value.text.empty()) fail(ErrorCode::kSyntax, value, 0, "series entries go on indented lines");
        series_key = head;
        in_series = true;
      } else {
        if (value.text.empty()) fail(ErrorCode::kSyntax, value, 0, "missing value for '" + head.text + "'");
        lines.push_back({head.text, value});
      }
    }
    if (end == text.size()) break;
  }

  JobFile job;
  auto find = [&](const std::string& key) -> const Span* {
    for (const auto& l : lines) {
      if (l.key == key) return &l.value;
    }
    return nullptr;
  };

  const Span* field = find("field");
  if (!field) throw ParseError(ErrorCode::kSemantic, 1, 1, "missing required key 'field'");
  job.field = parse_field(*field);

  if (const Span* s = find("command")) {
    const auto& names = job_commands();
    if (std::find(names.begin(), names.end(), s->text) == names.end()) {
      fail(ErrorCode::kSemantic, *s, 0, "unknown command '" + s->text + "'");
    }
    job.command = s->text;
  }
  if (const Span* s = find("vars")) {
    std::set<std::string> distinct;
    for (const auto& v : split_list(*s)) {
      const bool reserved = (job.field->is_formal_laurent() && v.text == job.field->laurent_desc().symbol) ||
                            (v.text.size() > 1 && v.text[0] == 'T' &&
                             std::all_of(v.text.begin() + 1, v.text.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }));
      if (!is_identifier(v.text) || reserved || !distinct.insert(v.text).second) {
        fail(ErrorCode::kSemantic, v, 0, "invalid variable name '" + v.text + "'");
      }
      job.vars.push_back(v.text);
    }
  }
  if (const Span* s = find("weights")) {
    for (const auto& w : split_list(*s)) job.weights.push_back(rational_literal(w));
    if (job.weights.size() != job.vars.size()) {
      fail(ErrorCode::kSemantic, *s, 0, "weights must match vars in number");
    }
  } else {
    job.weights.assign(job.vars.size(), Rational(0));
  }
  if (const Span* s = find("aux")) {
    const long n = integer_literal(*s);
    if (n < 1) fail(ErrorCode::kSemantic, *s, 0, "aux must be a positive count");
    if (!job.vars.empty()) fail(ErrorCode::kSemantic, *s, 0, "aux and vars cannot be combined");
    job.aux = static_cast<std::size_t>(n);
  }
  if (const Span* s = find("window")) job.window = parse_window(*s);
  if (const Span* s = find("subwindow")) job.subwindow = parse_window(*s);
  if (const Span* s = find("domain")) job.domain = parse_window(*s);
  if (const Span* s = find("prec")) job.prec = rational_literal(*s);
  if (const Span* s = find("depth")) {
    job.depth = integer_literal(*s);
    if (*job.depth < 0) fail(ErrorCode::kSemantic, *s, 0, "depth must be nonnegative");
  }
  if (const Span* s = find("shape")) job.shape = parse_shape(*s);

  const Builder builder(job);
  if (const Span* s = find("point")) {
    for (const auto& c : split_commas(*s)) {
      if (c.text.empty()) fail(ErrorCode::kSyntax, c, 0, "empty coordinate");
      job.point.push_back(builder.scalar(c));
    }
    if (job.point.size() != job.vars.size()) {
      fail(ErrorCode::kSemantic, *s, 0, "point has " + std::to_string(job.point.size()) +
                                           " coordinates for " + std::to_string(job.vars.size()) + " vars");
    }
  }
  if (const Span* s = find("stream")) {
    if (series_key) fail(ErrorCode::kSemantic, *s, 0, "stream and series cannot be combined");
    job.stream = parse_stream(*s, builder);
  }
  if (series_key) build_series(job, builder, entries);
  return job;
}

// ------------------------------------------------------------ serialization

std::string serialize_job(const JobFile& job) {
  std::ostringstream out;
  auto join = [](const auto& items, auto&& fmt, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (k) s += sep;
      s += fmt(items[k]);
    }
    return s;
  };
  if (job.command) out << "command: " << *job.command << "\n";
  if (job.field) out << "field: " << job.field->describe() << "\n";
  if (!job.vars.empty()) {
    out << "vars: " << join(job.vars, [](const std::string& v) { return v; }, " ") << "\n";
    out << "weights: " << join(job.weights, [](const Rational& w) { return to_string(w); }, " ") << "\n";
  }
  if (job.aux > 0) out << "aux: " << job.aux << "\n";
  if (job.window) out << "window: " << job.window->str() << "\n";
  if (job.subwindow) out << "subwindow: " << job.subwindow->str() << "\n";
  if (job.domain) out << "domain: " << job.domain->str() << "\n";
  if (job.prec) out << "prec: " << to_string(*job.prec) << "\n";
  if (job.depth) out << "depth: " << *job.depth << "\n";
  if (job.shape) out << "shape: " << job.shape->str() << "\n";
  if (!job.point.empty()) {
    out << "point: " << join(job.point, [](const Element& e) { return e.str(); }, ", ") << "\n";
  }
  if (job.stream) {
    const StreamRule& r = *job.stream;
    if (r.kind == StreamRule::Kind::kGeometric) {
      out << "stream: geometric coef=" << r.coef->str() << " ratio=" << r.ratio->str() << " step=" << r.step
          << " shift=" << r.shift << "\n";
    } else {
      out << "stream: gaussian base=" << r.base->str() << " sign=" << r.sign << "\n";
    }
  }
  switch (job.kind) {
    case SeriesKind::kNone:
      break;
    case SeriesKind::kAbsolute:
      out << "series:\n";
      for (const auto& [e, c] : job.absolute->terms()) out << "  " << e << ": " << c.str() << "\n";
      break;
    case SeriesKind::kRelative:
      out << "series:\n";
      for (const auto& [e, b] : job.relative->terms()) out << "  " << e << ": " << b.str(job.vars) << "\n";
      break;
    case SeriesKind::kPolyradius:
      out << "series:\n";
      for (const auto& [e, c] : job.polyradius->terms) out << "  " << e << ": " << c.str() << "\n";
      break;
  }
  return out.str();
}

}  // namespace nonarch
