#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qfcode/common.hpp"

namespace qfcode {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Z[zeta_p], p prime. Coordinates are taken in the basis
/// zeta, zeta^2, ..., zeta^{p-1}, with 1 = -(zeta + ... + zeta^{p-1});
/// this basis gives every ring element a unique coordinate vector, so
/// equality is coordinate equality.
class CycInt {
  public:
    explicit CycInt(int p) : p_(p), c_(static_cast<std::size_t>(p - 1)) {}

    static CycInt from_int(int p, const BigInt& n);
    /// zeta^k, exponent taken mod p.
    static CycInt zeta_pow(int p, long long k);

    int prime() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const;
    CycInt operator-() const;
    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const BigInt& n) const;
    CycInt& operator+=(const CycInt& o);
    bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    int p_;
    std::vector<BigInt> c_;  // coefficient of zeta^{i+1} at index i
};

/// p* = (-1)^{(p-1)/2} p.
BigInt star_prime(int p);

/// The quadratic Gauss sum g_p = sum over c in F_p* of legendre(c) zeta^c.
/// Satisfies g_p^2 = p*; it is the canonical square root of p* used to give
/// half-integer powers of p* an exact meaning.
CycInt gauss_sum(int p);

/// (p*)^{j/2} for j >= 0, i.e. (p*)^{floor(j/2)} * g_p^{j mod 2}.
CycInt half_power(int p, int j);

}  // namespace qfcode
