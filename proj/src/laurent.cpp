#include "cfl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace cfl {

// ---------------------------------------------------------------- Monomial

long Monomial::degree() const {
  long d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

// ----------------------------------------------------------- RationalPoint

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) {
    c.canonicalize();
    if (sgn(c) <= 0) throw std::domain_error("RationalPoint: coordinates must be strictly positive");
  }
}

RationalPoint RationalPoint::ones(std::size_t rank) {
  return RationalPoint(std::vector<Rational>(rank, Rational(1)));
}

RationalPoint RationalPoint::from_integers(std::span<const long> values) {
  std::vector<Rational> coords;
  coords.reserve(values.size());
  for (long v : values) coords.emplace_back(v);
  return RationalPoint(std::move(coords));
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(std::size_t rank, const Integer& c) {
  LaurentPoly p(rank);
  p.add_term(Monomial(rank), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t rank, std::size_t index) {
  if (index >= rank) throw std::out_of_range("LaurentPoly::variable: index out of range");
  Monomial m(rank);
  m[index] = 1;
  return monomial(m);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  LaurentPoly p(m.rank());
  p.add_term(m, c);
  return p;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_rank(const LaurentPoly& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
}

bool LaurentPoly::is_positive() const {
  if (terms_.empty()) return false;
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) > 0; });
}

Integer LaurentPoly::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::size_t> LaurentPoly::support() const {
  std::vector<bool> used(rank_, false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < rank_; ++i)
      if (m[i] != 0) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank_; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

Monomial LaurentPoly::min_exponents() const {
  Monomial out(rank_);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < rank_; ++i) out[i] = first ? m[i] : std::min(out[i], m[i]);
    first = false;
  }
  return out;
}

Monomial LaurentPoly::max_exponents() const {
  Monomial out(rank_);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < rank_; ++i) out[i] = first ? m[i] : std::max(out[i], m[i]);
    first = false;
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_rank(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_rank(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_rank(b);
  LaurentPoly out(a.rank_);
  Integer prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = one(rank_);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m) const {
  if (m.rank() != rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
  LaurentPoly out(rank_);
  for (const auto& [t, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), t * m, c);
  return out;
}

namespace {

template <class Coord>
Rational evaluate_impl(const LaurentPoly::TermMap& terms, std::size_t rank, std::span<const Coord> point) {
  // Powers are cached per variable, positive and negative separately.
  std::vector<std::map<int, Rational>> cache(rank);
  auto power = [&](std::size_t i, int e) -> const Rational& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    Rational base(point[i]);
    Rational v(1);
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    mpz_pow_ui(v.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(v.get_den_mpz_t(), base.get_den_mpz_t(), n);
    if (e < 0) v = 1 / v;
    v.canonicalize();
    return cache[i].emplace(e, v).first->second;
  };
  Rational total(0);
  for (const auto& [m, c] : terms) {
    Rational term(c);
    for (std::size_t i = 0; i < rank; ++i)
      if (m[i] != 0) term *= power(i, m[i]);
    total += term;
  }
  return total;
}

}  // namespace

Rational LaurentPoly::evaluate(const RationalPoint& point) const {
  if (point.rank() != rank_) throw std::invalid_argument("LaurentPoly::evaluate: rank mismatch");
  return evaluate_impl<Rational>(terms_, rank_, std::span<const Rational>(point.coords()));
}

Rational LaurentPoly::evaluate(std::span<const Integer> point) const {
  if (point.size() != rank_) throw std::invalid_argument("LaurentPoly::evaluate: rank mismatch");
  for (const auto& v : point)
    if (v == 0) throw std::domain_error("LaurentPoly::evaluate: zero coordinate");
  return evaluate_impl<Integer>(terms_, rank_, point);
}

LaurentPoly LaurentPoly::specialize_to_one(std::span<const std::size_t> indices) const {
  std::vector<bool> drop(rank_, false);
  for (auto i : indices) {
    if (i >= rank_) throw std::out_of_range("specialize_to_one: index out of range");
    drop[i] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rank_; ++i)
    if (!drop[i]) keep.push_back(i);
  LaurentPoly out(keep.size());
  for (const auto& [m, c] : terms_) {
    Monomial reduced(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) reduced[j] = m[keep[j]];
    out.add_term(reduced, c);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << (i + 1);
      if (m[i] != 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::size_t rank) : s_(text), rank_(rank) {}

  LaurentPoly parse() {
    LaurentPoly out(rank_);
    skip_ws();
    if (s_.empty()) fail("empty input");
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
      out += term(sign);
    }
    return out;
  }

 private:
  LaurentPoly term(int sign) {
    Integer coef = sign;
    Monomial m(rank_);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef *= Integer(digits());
      } else if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        std::string idx = digits();
        std::size_t i = std::stoul(idx);
        if (i == 0 || i > rank_) fail("variable index out of range");
        int e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          bool neg = false;
          if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
          }
          e = std::stoi(digits());
          if (neg) e = -e;
        }
        m[i - 1] += e;
      } else {
        fail("expected a coefficient or a variable");
      }
      any = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return LaurentPoly::monomial(m, coef);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("LaurentPoly::parse: " + std::string(what) + " at offset " +
                                std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t rank_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t rank) {
  return TermParser(text, rank).parse();
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ib->first < ia->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<std::size_t>{}(rank_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& [m, c] : terms_) {
    for (int e : m.exponents()) mix(static_cast<std::size_t>(static_cast<long>(e)));
    mix(static_cast<std::size_t>(mpz_get_si(c.get_mpz_t())));
  }
  return h;
}

// ------------------------------------------------------------ free functions

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.rank() != den.rank()) throw std::invalid_argument("exact_div: rank mismatch");
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (num.is_zero()) return LaurentPoly(num.rank());

  // Strip the monomial content from both sides. The variables are primes in
  // the polynomial ring, so Laurent divisibility reduces to ordinary
  // polynomial divisibility of the stripped numerator by the stripped
  // denominator, which long division decides.
  const Monomial num_content = num.min_exponents();
  const Monomial den_content = den.min_exponents();
  Monomial neg_num(num.rank()), neg_den(den.rank());
  for (std::size_t i = 0; i < num.rank(); ++i) {
    neg_num[i] = -num_content[i];
    neg_den[i] = -den_content[i];
  }
  LaurentPoly remainder = num.times_monomial(neg_num);
  const LaurentPoly divisor = den.times_monomial(neg_den);
  const auto& [lead_mono, lead_coef] = *divisor.terms().begin();

  LaurentPoly quotient(num.rank());
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().begin();
    Monomial step = rm / lead_mono;
    for (int e : step.exponents())
      if (e < 0) throw InexactDivision("exact_div: nonzero remainder in '" + num.to_string() + "' / '" + den.to_string() + "'");
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_coef.get_mpz_t()))
      throw InexactDivision("exact_div: coefficient not divisible in '" + num.to_string() + "' / '" + den.to_string() + "'");
    Integer c = rc / lead_coef;
    LaurentPoly t = LaurentPoly::monomial(step, c);
    quotient += t;
    remainder -= divisor * t;
  }
  return quotient.times_monomial(num_content / den_content);
}

Rational evaluate(const LaurentPoly& p, const RationalPoint& point) { return p.evaluate(point); }

Integer coefficient_sum(const LaurentPoly& p) { return p.coefficient_sum(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

// ------------------------------------------------------------ SplitLaurent

SplitLaurent::SplitLaurent(const LaurentPoly& p) : denominator(p.rank(), 0) {
  Monomial lo = p.min_exponents();
  for (std::size_t i = 0; i < p.rank(); ++i) denominator[i] = lo[i] < 0 ? static_cast<unsigned>(-lo[i]) : 0u;
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> e(p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i) e[i] = static_cast<unsigned>(m[i] + static_cast<int>(denominator[i]));
    numerator.emplace_back(std::move(e), c);
  }
}

bool SplitLaurent::evaluate_integral(std::span<const Integer> point, Integer& out) const {
  Integer num = 0, t, pw;
  for (const auto& [e, c] : numerator) {
    t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), e[i]);
      t *= pw;
    }
    num += t;
  }
  Integer den = 1;
  for (std::size_t i = 0; i < denominator.size(); ++i) {
    if (denominator[i] == 0) continue;
    mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), denominator[i]);
    den *= pw;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return true;
}

}  // namespace cfl
