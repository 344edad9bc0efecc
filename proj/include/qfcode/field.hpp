#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qfcode/common.hpp"

namespace qfcode {

/// One level of a finite-field tower: F_p, or a degree-k extension of
/// another level by a canonical irreducible modulus.
///
/// Elements are integer indices. The index of an element encodes its
/// coordinate vector over the immediate base field in base base_size(),
/// least significant digit first, so that the flattened representation over
/// F_p encodes an integer in base p. Index order therefore *is* the
/// canonical element order: index 0 is 0, index 1 is 1, and the enumeration
/// is stable for fixed (p, degrees).
class Field {
  public:
    using Ptr = std::shared_ptr<const Field>;

    /// F_p for an odd prime p.
    static Ptr prime(int p);

    /// Degree-k extension of `base` by the canonical modulus: the
    /// lexicographically least monic irreducible of degree k, candidates
    /// ordered by the integer code sum c_i * base_size^i (constant term
    /// least significant).
    static Ptr extension(Ptr base, int degree);

    std::uint64_t size() const { return size_; }
    int characteristic() const { return p_; }
    bool is_prime_field() const { return base_ == nullptr; }
    int degree() const { return degree_; }  // over the immediate base
    std::uint64_t base_size() const { return base_size_; }
    const Ptr& base() const { return base_; }
    /// Monic modulus as base-field indices, length degree()+1; empty for F_p.
    const std::vector<Elem>& modulus() const { return modulus_; }
    /// Extension degree over F_p.
    int degree_over_prime() const { return prime_degree_; }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem from_int(std::int64_t n) const;  // n * 1, prime-subfield constant
    Elem half(Elem a) const { return mul(a, inv_two_); }

    /// Coordinates over the immediate base (power basis 1, t, ..., t^{k-1}).
    void coords(Elem a, Elem* out) const;
    Elem from_coords(const Elem* d) const;
    Elem coord(Elem a, int i) const;
    /// The class of x in F[x]/(modulus); only meaningful for extensions.
    Elem generator() const;

    Elem frobenius(Elem a) const { return frob_[a]; }  // a^{base_size}
    /// Relative trace onto the immediate base field (identity on F_p).
    Elem trace_to_base(Elem a) const;
    /// Absolute trace onto F_p, composed down the tower.
    Elem trace_to_prime(Elem a) const;

    /// Quadratic character: 0 for 0, +1 for nonzero squares, -1 otherwise.
    int quadratic_character(Elem a) const;
    /// q-1 at 0, -1 elsewhere.
    std::int64_t nu(Elem a) const { return a == 0 ? std::int64_t(size_) - 1 : -1; }

    std::uint64_t mult_order(Elem a) const;
    /// Least element (in canonical order) of maximal multiplicative order.
    Elem primitive_element() const { return primitive_; }

    /// True when `a` is a constant, i.e. lies in the embedded base field.
    bool in_base_subfield(Elem a) const { return a < base_size_; }

    /// Base-p digit string, most significant digit last.
    std::string to_string(Elem a) const;
    /// Parses a digit literal; short strings are zero-extended.
    Elem parse(const std::string& lit) const;

  private:
    Field() = default;
    void build_tables();

    Ptr base_;  // null for the prime field
    int p_ = 0;
    int degree_ = 1;
    int prime_degree_ = 1;
    std::uint64_t size_ = 0, base_size_ = 0;
    std::vector<Elem> modulus_;
    Elem one_ = 1, inv_two_ = 0, primitive_ = 0;

    // size-linear tables, always built
    std::vector<Elem> neg_, inv_, frob_, trace_;
    // full tables for small fields
    bool tabled_ = false;
    std::vector<Elem> add_tab_, mul_tab_;
    // t^{degree+j} mod modulus, j = 0..degree-2, as coefficient rows
    std::vector<Elem> red_pows_;

    Elem add_slow(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;
    Elem inv_euclid(Elem a) const;
};

/// Trace-dual basis: returns w with trace_to_base(v_i * w_j) = delta_ij.
/// Throws std::invalid_argument if the input is not a basis.
std::vector<Elem> dual_basis(const Field& ext, std::span<const Elem> basis);

/// The chain F_p in F_q = F_{p^m} in F_{q^{s1}}, F_{q^{s2}}. The two top
/// levels are built directly over F_q so relative traces onto F_q are
/// single-level power sums. Immutable; safe to share across threads.
struct FieldTower {
    Field::Ptr fp, fq, fq1, fq2;
    int p = 0, m = 1, s1 = 1, s2 = 1;

    int s() const { return s1 + s2; }
    std::uint64_t q() const { return fq->size(); }
    std::uint64_t q1() const { return fq1->size(); }
    std::uint64_t q2() const { return fq2->size(); }

    /// Tr from F_{q^{s1}} onto F_q.
    Elem trace1(Elem x) const { return fq1->trace_to_base(x); }
    /// Tr from F_{q^{s2}} onto F_q.
    Elem trace2(Elem y) const { return fq2->trace_to_base(y); }
    /// Absolute trace of an F_q element, as an integer exponent mod p.
    int trace_q_to_p(Elem c) const { return static_cast<int>(fq->trace_to_prime(c)); }
};

FieldTower make_tower(int p, int m, int s1, int s2);

}  // namespace qfcode
