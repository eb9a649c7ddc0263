#include "polyconj/ratpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "polyconj/error.hpp"

namespace polyconj {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotRealRooted: return "NotRealRooted";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotRationallySplit: return "NotRationallySplit";
    case ErrorKind::RealZerosNotSimple: return "RealZerosNotSimple";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::CoincidentCriticalRoots: return "CoincidentCriticalRoots";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::AtChargeSingularity: return "AtChargeSingularity";
    case ErrorKind::SingularOnLine: return "SingularOnLine";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::EqualRealParts: return "EqualRealParts";
    case ErrorKind::DuplicateAxisRoots: return "DuplicateAxisRoots";
    case ErrorKind::MissingFinding: return "MissingFinding";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = strip(text);
  auto slash = s.find('/');
  auto num = strip(s.substr(0, slash));
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  if (!is_integer_text(num)) throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(Integer(std::string(num)), 1);
  } else {
    auto den = strip(s.substr(slash + 1));
    if (!is_integer_text(den)) throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    q = Rational(Integer(std::string(num)), d);
  }
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// gmpxx arithmetic assumes canonical operands, and a caller may hand us
// something like Rational(2, 4) without canonicalizing it.
RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_factor(const Rational& root) { return RatPoly{-root, Rational(1)}; }

RatPoly RatPoly::from_roots(std::span<const Rational> roots) {
  RatPoly p = constant(1);
  for (const auto& r : roots) p *= linear_factor(r);
  return p;
}

void RatPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& x0) const {
  Rational x = x0;
  x.canonicalize();
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int RatPoly::sign_at(const Rational& x) const { return sgn((*this)(x)); }

double RatPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RatPoly RatPoly::derivative(int order) const {
  if (order <= 0) return *this;
  if (order > degree()) return {};
  std::vector<Rational> out(coeffs_.size() - static_cast<std::size_t>(order));
  for (std::size_t k = 0; k < out.size(); ++k) {
    // falling factorial (k+order)!/k!
    Integer f = 1;
    for (std::size_t t = k + 1; t <= k + static_cast<std::size_t>(order); ++t) f *= static_cast<unsigned long>(t);
    out[k] = coeffs_[k + static_cast<std::size_t>(order)] * Rational(f);
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::shifted(const Rational& c0) const {
  Rational c = c0;
  c.canonicalize();
  // Taylor shift by repeated synthetic division (Horner form).
  std::vector<Rational> a = coeffs_;
  const std::size_t n = a.size();
  if (n == 0 || sgn(c) == 0) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  }
  return RatPoly(std::move(a));
}

RatPoly RatPoly::reflected() const {
  std::vector<Rational> a = coeffs_;
  for (std::size_t k = 1; k < a.size(); k += 2) a[k] = -a[k];
  return RatPoly(std::move(a));
}

RatPoly RatPoly::reversed() const {
  std::vector<Rational> a(coeffs_.rbegin(), coeffs_.rend());
  return RatPoly(std::move(a));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

RatPoly RatPoly::normalized_sign() const {
  if (is_zero()) return *this;
  Rational inv = 1 / abs(leading());
  return *this * inv;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  *this = *this * o;
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& x : coeffs_) x *= k;
  return *this;
}

RatPoly operator-(RatPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::vector<double> RatPoly::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

std::string RatPoly::to_list_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ", ";
    s += format_rational(coeffs_[k]);
  }
  return s + "]";
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = mag == 1;
    if (k == 0 || !unit) s += format_rational(mag);
    if (k >= 1) {
      if (!unit) s += "*";
      s += "x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

DivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Rational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RatPoly pow(const RatPoly& p, int exponent) {
  RatPoly out = RatPoly::constant(1);
  for (int i = 0; i < exponent; ++i) out *= p;
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  RatPoly parse() {
    std::vector<Rational> coeffs;
    skip_ws();
    if (pos_ >= s_.size()) throw Error(ErrorKind::Parse, "empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, k] = term();
      if (static_cast<std::size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(k) + 1);
      coeffs[static_cast<std::size_t>(k)] += sign * c;
    }
    return RatPoly(std::move(coeffs));
  }

 private:
  std::pair<Rational, int> term() {
    Rational c = 1;
    bool have_num = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      c = number();
      have_num = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      } else {
        return {c, 0};
      }
    }
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      skip_ws();
      int k = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        k = std::stoi(std::string(s_.substr(start, pos_ - start)));
      }
      return {c, k};
    }
    if (have_num) fail("expected 'x' after '*'");
    fail("expected a term");
    return {};
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
      return parse_rational(std::string(s_.substr(start, save - start)) + "/" +
                            std::string(s_.substr(dstart, pos_ - dstart)));
    }
    pos_ = save;
    return parse_rational(s_.substr(start, save - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_poly(std::string_view text) {
  auto s = strip(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorKind::Parse, "unterminated list '" + std::string(text) + "'");
    s = strip(s.substr(1, s.size() - 2));
    std::vector<Rational> coeffs;
    if (s.empty()) return {};
    std::size_t start = 0;
    while (true) {
      auto comma = s.find(',', start);
      auto item = strip(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (!item.empty() && (item.front() == '"' || item.front() == '\'')) item = item.substr(1, item.size() - 2);
      coeffs.push_back(parse_rational(item));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return RatPoly(std::move(coeffs));
  }
  return TermParser(s).parse();
}

}  // namespace polyconj
