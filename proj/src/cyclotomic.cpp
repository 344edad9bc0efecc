#include "qfcode/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace qfcode {

CycInt CycInt::from_int(int p, const BigInt& n) {
    // n * 1 = -n * (zeta + ... + zeta^{p-1})
    CycInt r(p);
    for (auto& c : r.c_) c = -n;
    return r;
}

CycInt CycInt::zeta_pow(int p, long long k) {
    long long e = k % p;
    if (e < 0) e += p;
    if (e == 0) return from_int(p, 1);
    CycInt r(p);
    r.c_[static_cast<std::size_t>(e - 1)] = 1;
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: mixed primes");
    CycInt r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: mixed primes");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator*(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: mixed primes");
    // convolve over exponents 1..2(p-1), fold mod p, then eliminate the
    // zeta^0 slot via 1 = -(zeta + ... + zeta^{p-1})
    std::vector<BigInt> acc(static_cast<std::size_t>(p_), 0);  // exponent 0..p-1
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            const std::size_t e = (i + 1 + j + 1) % static_cast<std::size_t>(p_);
            acc[e] += c_[i] * o.c_[j];
        }
    }
    CycInt r(p_);
    for (std::size_t e = 1; e < acc.size(); ++e) r.c_[e - 1] = acc[e] - acc[0];
    return r;
}

CycInt CycInt::operator*(const BigInt& n) const {
    CycInt r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * n;
    return r;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0)
            os << "-";
        first = false;
        const BigInt mag = abs(c_[i]);
        if (mag != 1) os << mag << "*";
        os << "z^" << (i + 1);
    }
    if (first) os << "0";
    return os.str();
}

BigInt star_prime(int p) {
    BigInt r = p;
    if ((p - 1) / 2 % 2 == 1) r = -r;
    return r;
}

CycInt gauss_sum(int p) {
    CycInt g(p);
    for (int c = 1; c < p; ++c) {
        // Legendre symbol by Euler's criterion
        long long e = 1;
        int b = c;
        int ex = (p - 1) / 2;
        long long acc = 1;
        (void)e;
        while (ex) {
            if (ex & 1) acc = acc * b % p;
            b = static_cast<int>(1LL * b * b % p);
            ex >>= 1;
        }
        const int legendre = acc == 1 ? 1 : -1;
        g += CycInt::zeta_pow(p, c) * BigInt(legendre);
    }
    return g;
}

CycInt half_power(int p, int j) {
    if (j < 0) throw std::invalid_argument("half_power: negative exponent");
    BigInt whole = 1;
    const BigInt ps = star_prime(p);
    for (int i = 0; i < j / 2; ++i) whole *= ps;
    CycInt r = CycInt::from_int(p, whole);
    if (j % 2) r = r * gauss_sum(p);
    return r;
}

}  // namespace qfcode
