#pragma once

// Exact scalars and lattice vectors.
//
// Everything in tropjac is exact: integers are GMP mpz_class, rationals are
// GMP mpq_class in canonical form.  A LatticeVector is a coordinate vector in
// the ambient lattice (or its rationalization).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropjac {

using Integer = mpz_class;
using Rational = mpq_class;

// Base of the exception hierarchy.  Callers that only care about "bad input"
// versus "mathematical precondition" catch the two subclasses below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed data: wrong lengths, unknown names, schema violations.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed data that violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank) {}
  explicit LatticeVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
  }

  static LatticeVector zero(std::size_t rank) { return LatticeVector(rank); }
  static LatticeVector unit(std::size_t rank, std::size_t i) {
    LatticeVector v(rank);
    v[i] = 1;
    return v;
  }

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& c : coords_)
      if (c.get_den() != 1) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  LatticeVector& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Rational& s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }

  // Lexicographic comparison of raw coordinates; only used for sorting keys.
  friend bool coord_less(const LatticeVector& a, const LatticeVector& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

  void check_rank(const LatticeVector& o) const {
    if (o.rank() != rank())
      throw InputError("dimension mismatch: rank " + std::to_string(rank()) + " vs " +
                       std::to_string(o.rank()));
  }

 private:
  std::vector<Rational> coords_;
};

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(std::span<const Rational> a, const LatticeVector& b) {
  return dot(a, b.coords());
}

static_assert(sizeof(long) == sizeof(long long), "64-bit long required");

inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rational abs_of(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '+')) t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
  };
  strip(s);
  if (s.empty()) throw InputError("empty rational literal");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den == "0" || den == "-0")
    throw InputError("bad rational literal '" + std::string(text) + "'");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

inline std::string to_string(const LatticeVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace tropjac
