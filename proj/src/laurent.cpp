#include "laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace greenform {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

LaurentPoly::LaurentPoly(const Int& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::term(const Int& coeff, long exp) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exp] = coeff;
  return p;
}

LaurentPoly LaurentPoly::sigma(long r) {
  if (r < 0) fail(ErrorCode::InvalidArgument, "sigma requires r >= 0");
  LaurentPoly p;
  for (long i = 0; i <= r; ++i) p.coeffs_[i] = 1;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == 1;
}

Int LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(long exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[-e] = c;
  return p;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e + k] = c;
  return p;
}

Int LaurentPoly::eval_minus_one() const {
  Int v = 0;
  for (const auto& [e, c] : coeffs_) v += (e % 2 == 0) ? c : -c;
  return v;
}

std::vector<Int> LaurentPoly::cyclic_reduce(long n) const {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cyclic_reduce requires n >= 1");
  std::vector<Int> out(static_cast<std::size_t>(n), Int(0));
  for (const auto& [e, c] : coeffs_) {
    long r = ((e % n) + n) % n;
    out[static_cast<std::size_t>(r)] += c;
  }
  return out;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : coeffs_) g = gcd(g, abs(c));
  return g;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly prod;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) prod.add_term(e1 + e2, c1 * c2);
  coeffs_ = std::move(prod.coeffs_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= c;
  return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r *= b;
  return r;
}
LaurentPoly operator*(const Int& c, LaurentPoly a) { return a *= c; }

std::optional<LaurentPoly> LaurentPoly::divide(const LaurentPoly& u,
                                               const LaurentPoly& v) {
  if (v.is_zero()) return std::nullopt;
  if (u.is_zero()) return LaurentPoly();
  // Shift both to ordinary polynomials with nonzero constant term; the
  // exponent offset moves into the quotient.
  long shift = u.min_exp() - v.min_exp();
  LaurentPoly r = u.shifted(-u.min_exp());
  LaurentPoly d = v.shifted(-v.min_exp());
  const long ddeg = d.max_exp();
  const Int dlead = d.coeff(ddeg);
  LaurentPoly q;
  while (!r.is_zero() && r.max_exp() >= ddeg) {
    long e = r.max_exp() - ddeg;
    Int lead = r.coeff(r.max_exp());
    if (lead % dlead != 0) return std::nullopt;
    Int c = lead / dlead;
    LaurentPoly step = term(c, e);
    q += step;
    r -= step * d;
  }
  if (!r.is_zero()) return std::nullopt;
  return q.shifted(shift);
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos,
                             const std::string& what) {
  std::ostringstream os;
  os << "cannot parse Laurent polynomial '" << text << "' at offset " << pos
     << ": " << what;
  fail(ErrorCode::ParseError, os.str());
}

Int read_int(const std::string& s, std::size_t& pos, bool allow_sign,
             const std::string& orig) {
  bool negative = false;
  if (allow_sign && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::size_t start = pos;
  // Accumulate digits directly; the cpp_int string constructor would read a
  // leading zero as an octal prefix.
  Int value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + (s[pos] - '0');
    ++pos;
  }
  if (pos == start) parse_fail(orig, pos, "expected an integer");
  return negative ? -value : value;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) parse_fail(text, 0, "empty input");

  LaurentPoly result;
  std::size_t pos = 0;
  int sign = 1;
  if (s[pos] == '+' || s[pos] == '-') {
    sign = (s[pos] == '-') ? -1 : 1;
    ++pos;
  }
  while (true) {
    Int coeff = 1;
    bool saw_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = read_int(s, pos, false, text);
      saw_coeff = true;
    }
    long exp = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        Int e = read_int(s, pos, true, text);
        if (e > 1000000 || e < -1000000)
          parse_fail(text, pos, "exponent out of range");
        exp = static_cast<long>(e);
      }
    } else if (!saw_coeff) {
      parse_fail(text, pos, "expected a term");
    }
    result.add_term(exp, sign * coeff);
    if (pos == s.size()) break;
    if (s[pos] == '+') {
      sign = 1;
    } else if (s[pos] == '-') {
      sign = -1;
    } else {
      parse_fail(text, pos, "expected '+' or '-'");
    }
    ++pos;
    if (pos == s.size()) parse_fail(text, pos, "trailing sign");
  }
  return result;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << 't';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace greenform
