#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqt {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of a small finite field: its coefficient vector over GF(p) read as
// a base-p integer (constant term least significant). 0 and 1 are themselves.
struct Elem {
  std::uint16_t v = 0;
  auto operator<=>(const Elem&) const = default;
};

// GF(p^e) with q <= 256, backed by full addition and multiplication tables.
class Field {
 public:
  // modulus: monic, low degree first, length e+1. When omitted the
  // lexicographically least monic irreducible of degree e is used.
  static std::shared_ptr<const Field> make(int p, int e,
                                           std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(long long k) const;
  // Root of the modulus (the class of x). Equals from_int(0) when e == 1.
  Elem generator_root() const { return Elem{static_cast<std::uint16_t>(e_ > 1 ? p_ : 0)}; }
  Elem element(int index) const { return Elem{static_cast<std::uint16_t>(index)}; }

  Elem add(Elem a, Elem b) const { return Elem{add_[a.v * q_ + b.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[a.v * q_ + b.v]}; }
  Elem neg(Elem a) const { return Elem{neg_[a.v]}; }
  // Throws FieldError for zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long k) const;
  int order_of(Elem a) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

 private:
  Field() = default;

  int p_ = 0;
  int e_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int n);
// Exhaustive factor search over GF(p); poly is low degree first.
bool is_irreducible(int p, std::span<const int> poly);

// Row-major 2x2 matrix [[a,b],[c,d]] over one field.
struct Matrix2 {
  FieldPtr field;
  std::array<Elem, 4> m{};

  Elem a() const { return m[0]; }
  Elem b() const { return m[1]; }
  Elem c() const { return m[2]; }
  Elem d() const { return m[3]; }

  Matrix2 operator-(const Matrix2& o) const;
  Matrix2 transpose() const { return {field, {m[0], m[2], m[1], m[3]}}; }
  Matrix2 operator+(const Matrix2& o) const;
  // v M v^T for the row vector v = (v0, v1).
  Elem quadratic(Elem v0, Elem v1) const;
  bool operator==(const Matrix2& o) const { return m == o.m && *field == *o.field; }
};

// True iff for every pair t != u the form v -> v (A_t - A_u) v^T has no
// nonzero isotropic vector. Throws FieldError when the fields differ.
bool anisotropic_difference_check(std::span<const Matrix2> clan);

}  // namespace gqt
