#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qfcode/field.hpp"
#include "qfcode/linalg.hpp"

namespace qfcode {

/// Symbolic quadratic form on F_{q^{s1}} with values in F_q: a sum of
/// trace monomials Tr(a * x^{q^i + 1}) and scaled squared traces
/// c * (Tr x)^2. Every such term is homogeneous of quadratic type.
struct QuadTerm {
    enum class Kind { TraceMonomial, TraceSquare };
    Kind kind = Kind::TraceMonomial;
    Elem coeff = 0;  // a in F_{q1} for monomials, c in F_q for squared traces
    int power = 0;   // the i of q^i + 1
};

struct QuadFormExpr {
    std::vector<QuadTerm> terms;
};

Elem eval_form_expr(const FieldTower& t, const QuadFormExpr& e, Elem x);

/// An F_q-subspace of F_q^ambient held as its canonical reduced row echelon
/// basis, so equal subspaces compare equal.
struct Subspace {
    int ambient = 0;
    Mat rows;  // dim x ambient, RREF
    int dim() const { return rows.rows; }
};

/// Canonicalizes an arbitrary spanning set (zero rows are dropped).
Subspace make_subspace(int ambient, Mat rows);
Subspace zero_subspace(const Field& fq, int ambient);
Subspace full_subspace(const Field& fq, int ambient);

/// Walks all q^dim points of a subspace as coordinate vectors in the
/// ambient space; fn(coords) is called once per point, zero included.
template <typename Fn>
void for_each_point(const Subspace& H, Fn&& fn) {
    const Field& F = *H.rows.F;
    const std::uint64_t total = ipow(F.size(), static_cast<unsigned>(H.dim()));
    std::vector<Elem> coords(static_cast<std::size_t>(H.ambient));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::fill(coords.begin(), coords.end(), 0);
        std::uint64_t v = idx;
        for (int i = 0; i < H.dim(); ++i) {
            const Elem lam = static_cast<Elem>(v % F.size());
            v /= F.size();
            if (lam)
                for (int j = 0; j < H.ambient; ++j)
                    if (H.rows.at(i, j)) coords[static_cast<std::size_t>(j)] = F.add(coords[static_cast<std::size_t>(j)], F.mul(lam, H.rows.at(i, j)));
        }
        fn(coords);
    }
}

/// Congruence diagonalization M A M^T = diag(l_1..l_R, 0..0) by symmetric
/// Gaussian elimination; always possible in odd characteristic. pivot_mode
/// selects among admissible pivots (0 first, 1 last) so that invariance of
/// the sign under the elimination path can be exercised.
std::pair<Mat, std::vector<Elem>> diagonalize(const Mat& A, int pivot_mode = 0);

/// A quadratic form with its Gram matrix and derived invariants. Ambient
/// forms (dim == s1) also know the element space F_{q1} and expose the
/// linearized map L_f. Immutable once built.
class GramForm {
  public:
    /// Polarization: A_ij = (f(v_i+v_j)-f(v_i)-f(v_j))/2 on the power basis,
    /// verified against direct evaluation on every point of F_{q1} (or a
    /// 10^4 sample with homogeneity checks when the field is large).
    static GramForm from_expr(const FieldTower& t, const QuadFormExpr& e);
    /// Form given directly by a symmetric Gram matrix over F_q.
    static GramForm from_gram(const FieldTower& t, Mat A);

    const FieldTower& tower() const { return tower_; }
    const Mat& gram() const { return A_; }
    int dim() const { return A_.rows; }
    int rank() const { return rank_; }
    Elem delta() const { return delta_; }
    int sign() const { return sign_; }  // eta(delta)
    const Mat& diag_transform() const { return M_; }
    const std::vector<Elem>& diag_values() const { return lambdas_; }
    const Subspace& radical() const { return radical_; }
    bool is_ambient() const { return ambient_; }
    const std::optional<QuadFormExpr>& expr() const { return expr_; }

    Elem eval_coords(const std::vector<Elem>& c) const { return bilinear(A_, c, c); }

    // element-space operations, ambient forms only
    std::vector<Elem> elem_coords(Elem x) const;
    Elem coords_elem(const std::vector<Elem>& c) const;
    Elem eval_elem(Elem x) const;
    Elem lf_apply(Elem y) const;
    /// x_b with L_f(x_b) = -b/2, or empty when b is outside Im(L_f); any
    /// representative of the radical coset is acceptable.
    std::optional<Elem> lf_solve(Elem b) const;
    bool in_image(Elem b) const { return lf_solve(b).has_value(); }
    /// f(x_b), well defined on the whole solution coset.
    Elem value_at_xb(Elem b) const;
    std::pair<Subspace, Subspace> im_ker() const;

  private:
    GramForm() = default;
    void derive();

    FieldTower tower_;
    std::optional<QuadFormExpr> expr_;
    Mat A_;
    bool ambient_ = false;
    int rank_ = 0;
    Elem delta_ = 1;
    int sign_ = 1;
    Mat M_;
    std::vector<Elem> lambdas_;
    Subspace radical_;
    std::vector<Elem> power_basis_, dual_basis_;
};

GramForm polarize(const QuadFormExpr& e, const FieldTower& t);

GramForm restrict_form(const GramForm& f, const Subspace& H);
/// Restriction through an arbitrary (not necessarily canonical) basis.
GramForm restrict_form_basis(const GramForm& f, const Mat& basis_rows);

struct LevelSetCount {
    long long brute = 0, closed = 0;
    bool match = false;
};

/// |{x in H : f(x) = c}| both by enumeration and by the rank/sign count
/// formula for the restricted form.
LevelSetCount count_level_set(const GramForm& f, const Subspace& H, Elem c);

}  // namespace qfcode
