#include "qfcode/field.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qfcode {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 22;
constexpr std::uint64_t kFullTableCap = 1024;
constexpr int kMaxDegree = 16;

bool is_prime_int(int n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over a base field, coefficient vectors of base indices,
// constant term first. Used only during construction (modulus search,
// reduction rows); element arithmetic proper goes through Field.
using Poly = std::vector<Elem>;

int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

Poly poly_trim(Poly f) {
    f.resize(static_cast<std::size_t>(poly_deg(f) + 1));
    return f;
}

Poly poly_mul(const Field& B, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = B.add(r[i + j], B.mul(a[i], b[j]));
    }
    return poly_trim(std::move(r));
}

// remainder of a modulo monic-after-normalisation f
Poly poly_rem(const Field& B, Poly a, const Poly& f) {
    const int df = poly_deg(f);
    const Elem lead_inv = B.inv(f[static_cast<std::size_t>(df)]);
    int da = poly_deg(a);
    while (da >= df) {
        const Elem c = B.mul(a[static_cast<std::size_t>(da)], lead_inv);
        for (int i = 0; i <= df; ++i) {
            const std::size_t k = static_cast<std::size_t>(da - df + i);
            a[k] = B.sub(a[k], B.mul(c, f[static_cast<std::size_t>(i)]));
        }
        da = poly_deg(a);
    }
    return poly_trim(std::move(a));
}

Poly poly_mulmod(const Field& B, const Poly& a, const Poly& b, const Poly& f) {
    return poly_rem(B, poly_mul(B, a, b), f);
}

Poly poly_powmod(const Field& B, Poly g, std::uint64_t e, const Poly& f) {
    Poly r{B.one()};
    while (e) {
        if (e & 1) r = poly_mulmod(B, r, g, f);
        g = poly_mulmod(B, g, g, f);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(const Field& B, Poly a, Poly b) {
    while (poly_deg(b) >= 0) {
        Poly r = poly_rem(B, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree k >= 2 over B: irreducible iff it shares no factor with
// x^{N^j} - x for j = 1..k/2 (those split off every factor of degree <= k/2).
bool poly_irreducible(const Field& B, const Poly& f) {
    const int k = poly_deg(f);
    if (k == 1) return true;
    const std::uint64_t N = B.size();
    Poly h{0, B.one()};  // x
    for (int j = 1; 2 * j <= k; ++j) {
        h = poly_powmod(B, h, N, f);
        Poly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = B.sub(hx[1], B.one());
        if (poly_deg(poly_gcd(B, f, poly_trim(std::move(hx)))) > 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

Field::Ptr Field::prime(int p) {
    if (p < 3 || p % 2 == 0 || !is_prime_int(p))
        throw std::invalid_argument("field characteristic must be an odd prime, got " +
                                    std::to_string(p));
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->degree_ = 1;
    f->prime_degree_ = 1;
    f->size_ = static_cast<std::uint64_t>(p);
    f->base_size_ = static_cast<std::uint64_t>(p);
    f->build_tables();
    return f;
}

Field::Ptr Field::extension(Ptr base, int degree) {
    if (!base) throw std::invalid_argument("extension needs a base field");
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("extension degree must be in 1.." + std::to_string(kMaxDegree));
    const std::uint64_t N = base->size();
    std::uint64_t size = 1;
    for (int i = 0; i < degree; ++i) {
        size *= N;
        if (size > kMaxFieldSize) throw std::invalid_argument("field too large");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->base_ = base;
    f->p_ = base->characteristic();
    f->degree_ = degree;
    f->prime_degree_ = degree * base->degree_over_prime();
    f->size_ = size;
    f->base_size_ = N;

    // canonical modulus: first irreducible in code order
    Poly mod(static_cast<std::size_t>(degree) + 1, 0);
    mod[static_cast<std::size_t>(degree)] = base->one();
    bool found = false;
    for (std::uint64_t code = 0; code < size; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < degree; ++i) {
            mod[static_cast<std::size_t>(i)] = static_cast<Elem>(c % N);
            c /= N;
        }
        if (poly_irreducible(*base, mod)) {
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");  // cannot happen
    f->modulus_ = mod;
    f->build_tables();
    return f;
}

void Field::build_tables() {
    const std::uint64_t n = size_;
    one_ = 1;

    if (base_) {
        // rows t^{degree+j} mod modulus
        const Field& B = *base_;
        Poly t_k(modulus_.begin(), modulus_.end() - 1);
        for (auto& c : t_k) c = B.neg(c);  // t^k = -(lower part), modulus monic
        t_k.resize(static_cast<std::size_t>(degree_), 0);
        red_pows_.assign(static_cast<std::size_t>(degree_ * std::max(0, degree_ - 1)), 0);
        Poly row = t_k;
        for (int j = 0; j + 1 < degree_; ++j) {
            for (int i = 0; i < degree_; ++i)
                red_pows_[static_cast<std::size_t>(j * degree_ + i)] = row[static_cast<std::size_t>(i)];
            // multiply by t and reduce
            Poly next(static_cast<std::size_t>(degree_), 0);
            Elem top = row[static_cast<std::size_t>(degree_ - 1)];
            for (int i = degree_ - 1; i > 0; --i) next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)];
            if (top)
                for (int i = 0; i < degree_; ++i)
                    next[static_cast<std::size_t>(i)] = B.add(next[static_cast<std::size_t>(i)], B.mul(top, t_k[static_cast<std::size_t>(i)]));
            row = std::move(next);
        }
    }

    neg_.resize(n);
    for (std::uint64_t a = 0; a < n; ++a) {
        if (!base_) {
            neg_[a] = static_cast<Elem>(a == 0 ? 0 : size_ - a);
        } else {
            Elem d[kMaxDegree];
            coords(static_cast<Elem>(a), d);
            for (int i = 0; i < degree_; ++i) d[i] = base_->neg(d[i]);
            neg_[a] = from_coords(d);
        }
    }

    tabled_ = n <= kFullTableCap;
    if (tabled_) {
        add_tab_.resize(n * n);
        mul_tab_.resize(n * n);
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b) {
                add_tab_[a * n + b] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
                mul_tab_[a * n + b] = mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
            }
    }

    inv_.assign(n, 0);
    for (std::uint64_t a = 1; a < n; ++a) inv_[a] = inv_euclid(static_cast<Elem>(a));
    inv_two_ = inv_[from_int(2)];

    frob_.resize(n);
    for (std::uint64_t a = 0; a < n; ++a) frob_[a] = pow(static_cast<Elem>(a), base_size_);

    trace_.resize(n);
    for (std::uint64_t a = 0; a < n; ++a) {
        if (!base_) {
            trace_[a] = static_cast<Elem>(a);
        } else {
            Elem acc = static_cast<Elem>(a), conj = static_cast<Elem>(a);
            for (int j = 1; j < degree_; ++j) {
                conj = frob_[conj];
                acc = add(acc, conj);
            }
            assert(acc < base_size_ && "trace must land in the base subfield");
            trace_[a] = acc;
        }
    }

    const std::uint64_t full = n - 1;
    for (std::uint64_t a = 1; a < n; ++a)
        if (mult_order(static_cast<Elem>(a)) == full) {
            primitive_ = static_cast<Elem>(a);
            break;
        }
}

Elem Field::add_slow(Elem a, Elem b) const {
    if (!base_) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % size_);
    Elem da[kMaxDegree], db[kMaxDegree];
    coords(a, da);
    coords(b, db);
    for (int i = 0; i < degree_; ++i) da[i] = base_->add(da[i], db[i]);
    return from_coords(da);
}

Elem Field::mul_slow(Elem a, Elem b) const {
    if (!base_) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % size_);
    if (a == 0 || b == 0) return 0;
    const Field& B = *base_;
    Elem da[kMaxDegree], db[kMaxDegree];
    coords(a, da);
    coords(b, db);
    Elem prod[2 * kMaxDegree] = {0};
    for (int i = 0; i < degree_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < degree_; ++j)
            if (db[j]) prod[i + j] = B.add(prod[i + j], B.mul(da[i], db[j]));
    }
    for (int j = 2 * degree_ - 2; j >= degree_; --j) {
        const Elem c = prod[j];
        if (!c) continue;
        const Elem* row = &red_pows_[static_cast<std::size_t>((j - degree_) * degree_)];
        for (int i = 0; i < degree_; ++i)
            if (row[i]) prod[i] = B.add(prod[i], B.mul(c, row[i]));
    }
    return from_coords(prod);
}

Elem Field::add(Elem a, Elem b) const {
    if (tabled_) return add_tab_[static_cast<std::size_t>(a) * size_ + b];
    return add_slow(a, b);
}

Elem Field::mul(Elem a, Elem b) const {
    if (tabled_) return mul_tab_[static_cast<std::size_t>(a) * size_ + b];
    return mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero field element");
    return inv_[a];
}

Elem Field::inv_euclid(Elem a) const {
    if (!base_) {
        // extended Euclid on integers
        std::int64_t r0 = static_cast<std::int64_t>(size_), r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const std::int64_t qq = r0 / r1;
            std::int64_t t = r0 - qq * r1;
            r0 = r1;
            r1 = t;
            t = s0 - qq * s1;
            s0 = s1;
            s1 = t;
        }
        s0 %= static_cast<std::int64_t>(size_);
        if (s0 < 0) s0 += static_cast<std::int64_t>(size_);
        return static_cast<Elem>(s0);
    }
    // extended Euclid on polynomials over the base field
    const Field& B = *base_;
    Poly r0(modulus_.begin(), modulus_.end());
    Elem d[kMaxDegree];
    coords(a, d);
    Poly r1(d, d + degree_);
    r1 = poly_trim(std::move(r1));
    Poly s0{}, s1{B.one()};
    while (poly_deg(r1) > 0) {
        // r0 = q*r1 + rem
        Poly q(static_cast<std::size_t>(poly_deg(r0) - poly_deg(r1) + 1), 0);
        Poly rem = r0;
        const Elem lead_inv = B.inv(r1[static_cast<std::size_t>(poly_deg(r1))]);
        int dr = poly_deg(rem);
        const int d1 = poly_deg(r1);
        while (dr >= d1) {
            const Elem c = B.mul(rem[static_cast<std::size_t>(dr)], lead_inv);
            q[static_cast<std::size_t>(dr - d1)] = c;
            for (int i = 0; i <= d1; ++i) {
                const std::size_t k = static_cast<std::size_t>(dr - d1 + i);
                rem[k] = B.sub(rem[k], B.mul(c, r1[static_cast<std::size_t>(i)]));
            }
            dr = poly_deg(rem);
        }
        rem = poly_trim(std::move(rem));
        Poly qs = poly_mul(B, q, s1);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = B.sub(s2[i], qs[i]);
        s0 = std::move(s1);
        s1 = poly_trim(std::move(s2));
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    if (poly_deg(r1) != 0) throw std::domain_error("division by zero field element");
    const Elem scale = B.inv(r1[0]);
    Elem out[kMaxDegree] = {0};
    for (std::size_t i = 0; i < s1.size(); ++i) out[i] = B.mul(scale, s1[i]);
    return from_coords(out);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = one_;
    Elem b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Elem Field::from_int(std::int64_t n) const {
    std::int64_t v = n % p_;
    if (v < 0) v += p_;
    // constants embed along the chain with unchanged index
    return static_cast<Elem>(v);
}

void Field::coords(Elem a, Elem* out) const {
    std::uint64_t v = a;
    for (int i = 0; i < degree_; ++i) {
        out[i] = static_cast<Elem>(v % base_size_);
        v /= base_size_;
    }
}

Elem Field::from_coords(const Elem* d) const {
    std::uint64_t v = 0, scale = 1;
    for (int i = 0; i < degree_; ++i) {
        v += d[i] * scale;
        scale *= base_size_;
    }
    return static_cast<Elem>(v);
}

Elem Field::coord(Elem a, int i) const {
    std::uint64_t v = a;
    for (int k = 0; k < i; ++k) v /= base_size_;
    return static_cast<Elem>(v % base_size_);
}

Elem Field::generator() const {
    if (!base_) throw std::logic_error("prime field has no adjoined generator");
    return degree_ == 1 ? neg_[modulus_[0]] : static_cast<Elem>(base_size_);
}

Elem Field::trace_to_base(Elem a) const { return trace_[a]; }

Elem Field::trace_to_prime(Elem a) const {
    const Field* f = this;
    Elem x = a;
    while (f->base_) {
        x = f->trace_[x];
        f = f->base_.get();
    }
    return x;
}

int Field::quadratic_character(Elem a) const {
    if (a == 0) return 0;
    const Elem r = pow(a, (size_ - 1) / 2);
    return r == one_ ? 1 : -1;
}

std::uint64_t Field::mult_order(Elem a) const {
    if (a == 0) throw std::domain_error("0 has no multiplicative order");
    std::uint64_t ord = size_ - 1;
    for (std::uint64_t pf : prime_factors(size_ - 1)) {
        while (ord % pf == 0 && pow(a, ord / pf) == one_) ord /= pf;
    }
    return ord;
}

namespace {
char digit_char(unsigned d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }
unsigned digit_val(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a' + 10);
    throw std::invalid_argument(std::string("bad digit '") + c + "' in element literal");
}
}  // namespace

std::string Field::to_string(Elem a) const {
    std::string s(static_cast<std::size_t>(prime_degree_), '0');
    std::uint64_t v = a;
    for (int i = 0; i < prime_degree_; ++i) {
        s[static_cast<std::size_t>(i)] = digit_char(static_cast<unsigned>(v % p_));
        v /= static_cast<std::uint64_t>(p_);
    }
    return s;
}

Elem Field::parse(const std::string& lit) const {
    if (lit.empty()) throw std::invalid_argument("empty element literal");
    if (lit.size() > static_cast<std::size_t>(prime_degree_))
        throw std::invalid_argument("element literal '" + lit + "' too long for this field");
    std::uint64_t v = 0, scale = 1;
    for (char c : lit) {
        const unsigned d = digit_val(c);
        if (d >= static_cast<unsigned>(p_))
            throw std::invalid_argument("digit out of range in element literal '" + lit + "'");
        v += d * scale;
        scale *= static_cast<std::uint64_t>(p_);
    }
    return static_cast<Elem>(v);
}

std::vector<Elem> dual_basis(const Field& ext, std::span<const Elem> basis) {
    const int k = ext.degree();
    if (static_cast<int>(basis.size()) != k)
        throw std::invalid_argument("dual_basis: wrong basis size");
    const Field& B = *ext.base();
    // trace pairing Gram matrix T_ij = Tr(v_i v_j), then invert over the base
    std::vector<Elem> T(static_cast<std::size_t>(k * k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            T[static_cast<std::size_t>(i * k + j)] = ext.trace_to_base(ext.mul(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]));

    // Gauss-Jordan inverse; singular pairing means the input was not a basis
    std::vector<Elem> inv(static_cast<std::size_t>(k * k), 0);
    for (int i = 0; i < k; ++i) inv[static_cast<std::size_t>(i * k + i)] = B.one();
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (T[static_cast<std::size_t>(r * k + col)]) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("dual_basis: input is not a basis (singular trace pairing)");
        for (int c = 0; c < k; ++c) {
            std::swap(T[static_cast<std::size_t>(piv * k + c)], T[static_cast<std::size_t>(col * k + c)]);
            std::swap(inv[static_cast<std::size_t>(piv * k + c)], inv[static_cast<std::size_t>(col * k + c)]);
        }
        const Elem s = B.inv(T[static_cast<std::size_t>(col * k + col)]);
        for (int c = 0; c < k; ++c) {
            T[static_cast<std::size_t>(col * k + c)] = B.mul(s, T[static_cast<std::size_t>(col * k + c)]);
            inv[static_cast<std::size_t>(col * k + c)] = B.mul(s, inv[static_cast<std::size_t>(col * k + c)]);
        }
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            const Elem f = T[static_cast<std::size_t>(r * k + col)];
            if (!f) continue;
            for (int c = 0; c < k; ++c) {
                T[static_cast<std::size_t>(r * k + c)] = B.sub(T[static_cast<std::size_t>(r * k + c)], B.mul(f, T[static_cast<std::size_t>(col * k + c)]));
                inv[static_cast<std::size_t>(r * k + c)] = B.sub(inv[static_cast<std::size_t>(r * k + c)], B.mul(f, inv[static_cast<std::size_t>(col * k + c)]));
            }
        }
    }

    std::vector<Elem> dual(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        Elem w = 0;
        for (int l = 0; l < k; ++l) {
            const Elem c = inv[static_cast<std::size_t>(l * k + j)];
            if (c) w = ext.add(w, ext.mul(static_cast<Elem>(c), basis[static_cast<std::size_t>(l)]));
        }
        dual[static_cast<std::size_t>(j)] = w;
    }
    return dual;
}

FieldTower make_tower(int p, int m, int s1, int s2) {
    if (m < 1 || s1 < 1 || s2 < 1) throw std::invalid_argument("tower degrees must be >= 1");
    FieldTower t;
    t.p = p;
    t.m = m;
    t.s1 = s1;
    t.s2 = s2;
    t.fp = Field::prime(p);
    t.fq = Field::extension(t.fp, m);
    t.fq1 = Field::extension(t.fq, s1);
    t.fq2 = Field::extension(t.fq, s2);
    return t;
}

}  // namespace qfcode
