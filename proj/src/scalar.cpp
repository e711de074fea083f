#include "heckelab/scalar.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace heckelab {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational");
  for (char ch : s)
    if (!(std::isdigit((unsigned char)ch) || ch == '-' || ch == '+' || ch == '/'))
      throw parse_error("bad rational: " + s);
  Rat r;
  if (r.set_str(s, 10) != 0) throw parse_error("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() <= 0) throw parse_error("bad rational: " + s);
  return r;
}

std::string format_rational(const Rat& r) { return r.get_str(); }

Poly parse_poly(const std::string& s) {
  Poly p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw parse_error("empty coefficient in: " + s);
    p.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  poly_trim(p);
  return p;
}

std::string format_poly(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += format_rational(p[i]);
  }
  return out;
}

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_mod(const Poly& a, const Poly& b) {
  if (b.empty()) throw error("poly_mod by zero");
  Poly r = a;
  poly_trim(r);
  while (r.size() >= b.size()) {
    Rat c = r.back() / b.back();
    size_t off = r.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) r[off + i] -= c * b[i];
    poly_trim(r);
  }
  return r;
}

static Poly poly_scale(const Poly& a, const Rat& c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

void poly_ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
  // standard extended Euclid over Q[x], result made monic
  Poly r0 = a, r1 = b;
  poly_trim(r0);
  poly_trim(r1);
  Poly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  while (!r1.empty()) {
    // divide r0 by r1
    Poly q;
    Poly rem = r0;
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rat(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rat c = rem.back() / r1.back();
      size_t off = rem.size() - r1.size();
      q[off] = c;
      for (size_t i = 0; i < r1.size(); ++i) rem[off + i] -= c * r1[i];
      poly_trim(rem);
    }
    poly_trim(q);
    Poly ns = poly_sub(s0, poly_mul(q, s1));
    Poly nt = poly_sub(t0, poly_mul(q, t1));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (r0.empty()) {
    g = {};
    s = {};
    t = {};
    return;
  }
  Rat lead = r0.back();
  g = poly_scale(r0, 1 / lead);
  s = poly_scale(s0, 1 / lead);
  t = poly_scale(t0, 1 / lead);
}

namespace {
std::vector<std::unique_ptr<FieldData>>& field_registry() {
  static std::vector<std::unique_ptr<FieldData>> reg;
  return reg;
}
std::mutex& field_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Field Field::make(const Poly& min_poly, const Poly& q_poly) {
  Poly m = min_poly;
  for (auto& c : m) c.canonicalize();
  poly_trim(m);
  if (m.size() < 2) throw invalid_field_error("min_poly must have degree >= 1");
  if (m.back() != 1) throw invalid_field_error("min_poly must be monic");
  int deg = (int)m.size() - 1;
  Poly qp = q_poly;
  for (auto& c : qp) c.canonicalize();
  Poly q = poly_mod(qp, m);
  std::vector<Rat> qv(deg, Rat(0));
  for (size_t i = 0; i < q.size(); ++i) qv[i] = q[i];

  std::lock_guard<std::mutex> lk(field_mutex());
  for (auto& fd : field_registry())
    if (fd->min_poly == m && fd->q_elt == qv) return Field(fd.get());
  auto fd = std::make_unique<FieldData>();
  fd->min_poly = m;
  fd->q_elt = qv;
  fd->deg = deg;
  Field f(fd.get());
  field_registry().push_back(std::move(fd));
  return f;
}

Scalar Field::zero() const {
  return Scalar(d_, std::vector<Rat>(d_->deg, Rat(0)));
}
Scalar Field::one() const {
  std::vector<Rat> c(d_->deg, Rat(0));
  c[0] = 1;
  return Scalar(d_, std::move(c));
}
Scalar Field::q() const { return Scalar(d_, d_->q_elt); }
Scalar Field::from_rational(const Rat& r) const {
  std::vector<Rat> c(d_->deg, Rat(0));
  c[0] = r;
  c[0].canonicalize();
  return Scalar(d_, std::move(c));
}
Scalar Field::from_int(long v) const { return from_rational(Rat(v)); }
Scalar Field::from_poly(const Poly& p) const {
  Poly r = poly_mod(p, d_->min_poly);
  std::vector<Rat> c(d_->deg, Rat(0));
  for (size_t i = 0; i < r.size(); ++i) {
    c[i] = r[i];
    c[i].canonicalize();
  }
  return Scalar(d_, std::move(c));
}
Scalar Field::generator() const {
  Poly x{Rat(0), Rat(1)};
  return from_poly(x);
}

Field Field::with_q(const Scalar& new_q) const {
  Poly qp(new_q.coeffs().begin(), new_q.coeffs().end());
  poly_trim(qp);
  return Field::make(d_->min_poly, qp);
}

bool Field::same_ring(const Field& o) const {
  return d_ == o.d_ || d_->min_poly == o.d_->min_poly;
}

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}
bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}
Field Scalar::field() const { return Field(f_); }

static void check_fields(const Scalar& a, const Scalar& b) {
  if (a.field().data() == nullptr || b.field().data() == nullptr)
    throw mismatch_error("uninitialized scalar");
  if (!a.field().same_ring(b.field()))
    throw mismatch_error("scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}
Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}
Scalar& Scalar::operator+=(const Scalar& o) {
  check_fields(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  check_fields(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_fields(*this, o);
  size_t d = c_.size();
  if (d == 1) return Scalar(f_, {c_[0] * o.c_[0]});
  Poly prod(2 * d - 1, Rat(0));
  for (size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  Poly red = poly_mod(prod, f_->min_poly);
  std::vector<Rat> c(d, Rat(0));
  for (size_t i = 0; i < red.size(); ++i) c[i] = red[i];
  return Scalar(f_, std::move(c));
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  if (c_.size() == 1) {
    c_[0] -= a.c_[0] * b.c_[0];
    return;
  }
  *this -= a * b;
}

bool Scalar::operator==(const Scalar& o) const {
  check_fields(*this, o);
  return c_ == o.c_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw error("division by zero");
  if (c_.size() == 1) return Scalar(f_, {1 / c_[0]});
  Poly a(c_.begin(), c_.end());
  poly_trim(a);
  Poly g, s, t;
  poly_ext_gcd(a, f_->min_poly, g, s, t);
  if (g.size() != 1)
    throw zero_divisor_error(
        "scalar not invertible; min_poly has factor " + format_poly(g),
        format_poly(g));
  // s*a + t*m = 1, so s is the inverse mod m
  Poly inv = poly_mod(s, f_->min_poly);
  std::vector<Rat> c(c_.size(), Rat(0));
  for (size_t i = 0; i < inv.size(); ++i) c[i] = inv[i];
  return Scalar(f_, std::move(c));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_fields(*this, o);
  return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? (unsigned long)(-e) : (unsigned long)e;
  Scalar r = field().one();
  while (k) {
    if (k & 1) r *= base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::string Scalar::str() const {
  if (c_.size() == 1) return format_rational(c_[0]);
  // fixed-length coefficient sequence so parsing is position-stable
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += format_rational(c_[i]);
  }
  return out;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, const std::string& op) {
  if (op == "add") return a + b;
  if (op == "sub") return a - b;
  if (op == "mul") return a * b;
  if (op == "div") return a / b;
  throw error("unknown op: " + op);
}

Scalar q_integer(const Field& F, long n) {
  Scalar r = F.zero();
  Scalar p = F.one();
  Scalar q = F.q();
  for (long i = 0; i < n; ++i) {
    r += p;
    p *= q;
  }
  return r;
}

Field field_rational(const Rat& q) {
  Poly m{-q, Rat(1)};  // x - q
  Poly qp{q};
  poly_trim(qp);
  return Field::make(m, qp);
}

Field field_gaussian() {
  Poly m{Rat(1), Rat(0), Rat(1)};  // x^2 + 1
  Poly qp{Rat(0), Rat(1)};
  return Field::make(m, qp);
}

Field field_cube_root() {
  Poly m{Rat(1), Rat(1), Rat(1)};  // x^2 + x + 1
  Poly qp{Rat(0), Rat(1)};
  return Field::make(m, qp);
}

}  // namespace heckelab
