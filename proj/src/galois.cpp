#include "mdssd/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mdssd/errors.hpp"

namespace mdssd {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Dense polynomials over GF(p), ascending coefficients, used only while
// building a field (irreducibility and primitive-element search).
using PrimePoly = std::vector<std::uint64_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial f.
PrimePoly reduce(PrimePoly a, const PrimePoly& f, std::uint64_t p) {
  const std::size_t df = f.size() - 1;
  trim(a);
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) {
      a[shift + i] = (a[shift + i] + (p - f[i]) * lead) % p;
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  return reduce(std::move(c), f, p);
}

PrimePoly powmod(PrimePoly base, std::uint64_t e, const PrimePoly& f, std::uint64_t p) {
  PrimePoly result{1};
  base = reduce(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return reduce(std::move(result), f, p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so reduce() applies
    const std::uint64_t inv = inverse_mod(b.back(), p);
    for (auto& c : b) c = c * inv % p;
    PrimePoly r = reduce(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f monic of degree m is irreducible over GF(p) iff
// x^{p^m} = x mod f and gcd(x^{p^{m/l}} - x, f) = 1 for every prime l | m.
bool is_irreducible(const PrimePoly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  std::vector<PrimePoly> frob(m + 1);  // frob[i] = x^{p^i} mod f
  frob[0] = reduce(PrimePoly{0, 1}, f, p);
  for (std::size_t i = 1; i <= m; ++i) frob[i] = powmod(frob[i - 1], p, f, p);
  if (frob[m] != frob[0]) return false;
  for (std::uint64_t l : prime_divisors(m)) {
    PrimePoly h = frob[m / l];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    PrimePoly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

PrimePoly digits_to_poly(std::uint64_t index, std::uint32_t p, std::uint32_t m) {
  PrimePoly out(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    out[i] = index % p;
    index /= p;
  }
  return out;
}

std::uint32_t poly_to_index(const PrimePoly& a, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return static_cast<std::uint32_t>(idx);
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (p == 2) throw InvalidArgument("characteristic 2 is not supported");
  if (m == 0) throw InvalidArgument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw InvalidArgument("field order exceeds 2^20");
  }

  std::vector<std::uint32_t> chosen;
  if (modulus) {
    const auto& f = *modulus;
    if (f.size() != m + 1 || f.back() != 1) {
      throw InvalidArgument("modulus must be monic of degree " + std::to_string(m));
    }
    for (auto c : f) {
      if (c >= p) throw InvalidArgument("modulus coefficient out of range");
    }
    if (!is_irreducible(PrimePoly(f.begin(), f.end()), p)) throw InvalidArgument("modulus is reducible");
    chosen = f;
  } else {
    // Candidate number c = sum c_i p^i enumerates (c_{m-1}, ..., c_0) lexicographically.
    for (std::uint64_t c = 0; c < q; ++c) {
      PrimePoly f = digits_to_poly(c, p, m);
      f.push_back(1);
      if (is_irreducible(f, p)) {
        chosen.assign(f.begin(), f.end());
        break;
      }
    }
    if (chosen.empty()) throw InternalError("no irreducible polynomial found");
  }
  return std::make_shared<const Field>(Token{}, p, m, std::move(chosen));
}

FieldPtr Field::of_order(std::uint64_t q) {
  auto pm = prime_power(q);
  if (!pm) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
  return make(pm->first, pm->second);
}

Field::Field(Token, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
  half_ = (q_ - 1) / 2;

  const PrimePoly f(modulus_.begin(), modulus_.end());
  const auto factors = prime_divisors(q_ - 1);

  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < q_ && gen == 0; ++cand) {
    const PrimePoly g = digits_to_poly(cand, p_, m_);
    bool primitive = true;
    for (std::uint64_t l : factors) {
      PrimePoly h = powmod(g, (q_ - 1) / l, f, p_);
      if (h.size() == 1 && h[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = cand;
  }
  if (gen == 0) throw InternalError("no primitive element found");
  generator_ = Element{gen};

  log_.assign(q_, kNoLog);
  exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
  const PrimePoly g = digits_to_poly(gen, p_, m_);
  PrimePoly cur{1};
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    const std::uint32_t idx = poly_to_index(cur, p_);
    if (log_[idx] != kNoLog) throw InternalError("generator has order below q - 1");
    exp_[i] = idx;
    exp_[i + q_ - 1] = idx;
    log_[idx] = i;
    cur = mulmod(cur, g, f, p_);
  }

  zech_.assign(q_ - 1, kNoLog);
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    const std::uint32_t x = exp_[i];
    const std::uint32_t plus_one = (x % p_ == p_ - 1) ? x - (p_ - 1) : x + 1;
    zech_[i] = plus_one == 0 ? kNoLog : log_[plus_one];
  }
}

Element Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Element{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::digits(Element a) const {
  std::vector<std::uint32_t> out(m_, 0);
  std::uint32_t idx = a.index;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = idx % p_;
    idx /= p_;
  }
  return out;
}

Element Field::from_digits(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > m_) throw InvalidArgument("too many coordinates for field element");
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InvalidArgument("coordinate out of range");
    idx = idx * p_ + coeffs[i];
  }
  return Element{static_cast<std::uint32_t>(idx)};
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw InvalidArgument("inverse of zero");
  const std::uint32_t l = log_[a.index];
  return Element{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::pow(Element a, std::int64_t e) const {
  if (a.index == 0) {
    if (e == 0) return one();
    if (e < 0) throw InvalidArgument("negative power of zero");
    return zero();
  }
  const std::int64_t order = q_ - 1;
  std::int64_t r = e % order;
  if (r < 0) r += order;
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a.index]) * static_cast<std::uint64_t>(r)) % order;
  return Element{exp_[l]};
}

std::uint32_t Field::log(Element a) const {
  if (a.index == 0) throw InvalidArgument("logarithm of zero");
  return log_[a.index];
}

Element Field::exp(std::int64_t e) const {
  const std::int64_t order = q_ - 1;
  std::int64_t r = e % order;
  if (r < 0) r += order;
  return Element{exp_[r]};
}

int Field::character(Element a) const {
  if (a.index == 0) throw InvalidArgument("quadratic character of zero");
  return (log_[a.index] & 1u) ? -1 : 1;
}

std::optional<Element> Field::sqrt(Element a) const {
  if (a.index == 0) return a;
  const std::uint32_t l = log_[a.index];
  if (l & 1u) return std::nullopt;
  const Element r{exp_[l / 2]};
  const Element s = neg(r);
  return std::min(r, s);
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Element{i};
  return out;
}

std::string Field::to_string(Element a) const {
  if (m_ == 1) return std::to_string(a.index);
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i >= 1) os << 'T';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

Value::Value(FieldPtr field, Element e) : field_(std::move(field)), e_(e) {
  if (!field_) throw InvalidArgument("value without field");
  if (!field_->contains(e_)) throw InvalidArgument("element index out of range");
}

const Field& Value::checked(const Value& o) const {
  if (!field_->same_as(*o.field_)) throw InvalidArgument("operands belong to different fields");
  return *field_;
}

Value Value::operator+(const Value& o) const { return {field_, checked(o).add(e_, o.e_)}; }
Value Value::operator-(const Value& o) const { return {field_, checked(o).sub(e_, o.e_)}; }
Value Value::operator*(const Value& o) const { return {field_, checked(o).mul(e_, o.e_)}; }
Value Value::operator/(const Value& o) const { return {field_, checked(o).div(e_, o.e_)}; }
Value Value::operator-() const { return {field_, field_->neg(e_)}; }
Value Value::inv() const { return {field_, field_->inv(e_)}; }
Value Value::pow(std::int64_t e) const { return {field_, field_->pow(e_, e)}; }
bool Value::operator==(const Value& o) const {
  checked(o);
  return e_ == o.e_;
}

Subfield::Subfield(FieldPtr field, std::uint32_t degree) : field_(std::move(field)), degree_(degree) {
  if (degree_ == 0 || field_->m() % degree_ != 0) {
    throw InvalidArgument("subfield degree " + std::to_string(degree) + " does not divide " +
                          std::to_string(field_->m()));
  }
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < degree_; ++i) r *= field_->p();
  r_ = static_cast<std::uint32_t>(r);
  const std::uint32_t step = (field_->q() - 1) / (r_ - 1);
  members_.push_back(field_->zero());
  for (std::uint32_t j = 0; j < r_ - 1; ++j) members_.push_back(field_->exp(std::int64_t{j} * step));
  std::sort(members_.begin(), members_.end());
}

bool Subfield::contains(Element a) const { return field_->pow(a, r_) == a; }

Element Subfield::trace(Element a) const {
  Element sum = field_->zero();
  Element x = a;
  for (std::uint32_t i = 0; i < field_->m() / degree_; ++i) {
    sum = field_->add(sum, x);
    x = field_->pow(x, r_);
  }
  return sum;
}

Element Subfield::norm(Element a) const { return field_->pow(a, (field_->q() - 1) / (r_ - 1)); }

Embedding::Embedding(FieldPtr small, FieldPtr large) : small_(std::move(small)), large_(std::move(large)) {
  if (small_->p() != large_->p() || large_->m() % small_->m() != 0) {
    throw InvalidArgument("GF(" + std::to_string(small_->q()) + ") is not a subfield of GF(" +
                          std::to_string(large_->q()) + ")");
  }
  const Field& L = *large_;
  const auto& mod = small_->modulus();
  auto eval_modulus = [&](Element x) {
    Element acc = L.zero();
    for (std::size_t i = mod.size(); i-- > 0;) acc = L.add(L.mul(acc, x), L.from_int(mod[i]));
    return acc;
  };
  bool found = false;
  const Subfield image(large_, small_->m());
  for (Element cand : image.elements()) {
    if (eval_modulus(cand).index == 0) {
      root_ = cand;
      found = true;
      break;
    }
  }
  if (!found) throw InternalError("modulus of the subfield has no root in the extension");

  map_.resize(small_->q());
  for (std::uint32_t idx = 0; idx < small_->q(); ++idx) {
    const auto d = small_->digits(Element{idx});
    Element acc = L.zero();
    for (std::size_t i = d.size(); i-- > 0;) acc = L.add(L.mul(acc, root_), L.from_int(d[i]));
    map_[idx] = acc.index;
  }
}

}  // namespace mdssd
