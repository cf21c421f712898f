#include "gqt/field.hpp"

#include <sstream>

namespace gqt {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // low degree first, coefficients mod p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw FieldError("no inverse mod p");
}

// Remainder of f modulo monic-or-not nonzero g over GF(p).
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  const int lead_inv = inv_mod(g.back(), p);
  while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int factor = f.back() * lead_inv % p;
    for (int i = 0; i <= dg; ++i)
      f[i + shift] = ((f[i + shift] - factor * g[i]) % p + p) % p;
    trim(f);
  }
  return f;
}

Poly to_poly(int index, int p, int e) {
  Poly f(static_cast<std::size_t>(e), 0);
  for (int i = 0; i < e; ++i) {
    f[i] = index % p;
    index /= p;
  }
  return f;
}

int from_poly(const Poly& f, int p, int e) {
  int idx = 0;
  for (int i = e - 1; i >= 0; --i) idx = idx * p + (i < static_cast<int>(f.size()) ? f[i] : 0);
  return idx;
}

}  // namespace

bool is_irreducible(int p, std::span<const int> poly) {
  Poly f(poly.begin(), poly.end());
  for (int& c : f) c = ((c % p) + p) % p;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  // Try every monic divisor of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    int combos = 1;
    for (int i = 0; i < d; ++i) combos *= p;
    for (int k = 0; k < combos; ++k) {
      Poly g = to_poly(k, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::make(int p, int e, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1 || e > 4) throw FieldError("extension degree must be in 1..4");
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > 256) throw FieldError("field order exceeds 256");

  Poly mod;
  if (modulus) {
    mod = *modulus;
    for (int& c : mod) c = ((c % p) + p) % p;
    trim(mod);
    if (static_cast<int>(mod.size()) != e + 1 || mod.back() != 1)
      throw FieldError("modulus must be monic of degree " + std::to_string(e));
    if (!is_irreducible(p, mod)) throw FieldError("modulus is reducible");
  } else {
    // Lexicographic on (c0, c1, ..., c_{e-1}): c0 is the most significant digit.
    bool found = false;
    for (int k = 0; k < q && !found; ++k) {
      Poly cand(static_cast<std::size_t>(e + 1), 0);
      int rest = k;
      for (int i = e - 1; i >= 0; --i) {
        cand[i] = rest % p;
        rest /= p;
      }
      cand[e] = 1;
      if (is_irreducible(p, cand)) {
        mod = cand;
        found = true;
      }
    }
    if (!found) throw FieldError("no irreducible polynomial found");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->e_ = e;
  f->q_ = q;
  f->modulus_ = mod;
  f->add_.resize(static_cast<std::size_t>(q * q));
  f->mul_.resize(static_cast<std::size_t>(q * q));
  f->neg_.resize(static_cast<std::size_t>(q));
  f->inv_.assign(static_cast<std::size_t>(q), 0);
  for (int a = 0; a < q; ++a) {
    const Poly pa = to_poly(a, p, e);
    Poly na(pa);
    for (int& c : na) c = (p - c) % p;
    f->neg_[a] = static_cast<std::uint16_t>(from_poly(na, p, e));
    for (int b = 0; b < q; ++b) {
      const Poly pb = to_poly(b, p, e);
      Poly sum(static_cast<std::size_t>(e));
      for (int i = 0; i < e; ++i) sum[i] = (pa[i] + pb[i]) % p;
      f->add_[a * q + b] = static_cast<std::uint16_t>(from_poly(sum, p, e));
      Poly prod(static_cast<std::size_t>(2 * e), 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      f->mul_[a * q + b] = static_cast<std::uint16_t>(from_poly(poly_mod(prod, mod, p), p, e));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f->mul_[a * q + b] == 1) f->inv_[a] = static_cast<std::uint16_t>(b);

  // The multiplicative group must be cyclic of order q-1.
  bool primitive = false;
  for (int a = 1; a < q && !primitive; ++a) primitive = f->order_of(Elem{static_cast<std::uint16_t>(a)}) == q - 1;
  if (!primitive) throw FieldError("multiplicative group is not cyclic; modulus invalid");
  return f;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "]";
  return os.str();
}

Elem Field::from_int(long long k) const {
  return Elem{static_cast<std::uint16_t>(((k % p_) + p_) % p_)};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw FieldError("inverse of zero");
  return Elem{inv_[a.v]};
}

Elem Field::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

int Field::order_of(Elem a) const {
  if (a.v == 0) return 0;
  Elem x = a;
  for (int k = 1; k <= q_; ++k) {
    if (x.v == 1) return k;
    x = mul(x, a);
  }
  return 0;
}

Matrix2 Matrix2::operator-(const Matrix2& o) const {
  Matrix2 r{field, {}};
  for (int i = 0; i < 4; ++i) r.m[i] = field->sub(m[i], o.m[i]);
  return r;
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
  Matrix2 r{field, {}};
  for (int i = 0; i < 4; ++i) r.m[i] = field->add(m[i], o.m[i]);
  return r;
}

Elem Matrix2::quadratic(Elem v0, Elem v1) const {
  const Field& f = *field;
  Elem r = f.mul(f.mul(v0, v0), a());
  r = f.add(r, f.mul(f.mul(v0, v1), f.add(b(), c())));
  return f.add(r, f.mul(f.mul(v1, v1), d()));
}

bool anisotropic_difference_check(std::span<const Matrix2> clan) {
  if (clan.empty()) return true;
  for (const auto& m : clan)
    if (!m.field || !(*m.field == *clan[0].field))
      throw FieldError("anisotropic_difference_check: matrices over different fields");
  const Field& f = *clan[0].field;
  for (std::size_t i = 0; i < clan.size(); ++i) {
    for (std::size_t j = i + 1; j < clan.size(); ++j) {
      const Matrix2 diff = clan[i] - clan[j];
      for (int v0 = 0; v0 < f.q(); ++v0)
        for (int v1 = 0; v1 < f.q(); ++v1) {
          if (v0 == 0 && v1 == 0) continue;
          if (diff.quadratic(f.element(v0), f.element(v1)).v == 0) return false;
        }
    }
  }
  return true;
}

}  // namespace gqt
