#pragma once

#include <optional>
#include <string>
#include <vector>

#include "petit/linalg.hpp"
#include "petit/skewpoly.hpp"

namespace petit {

class PetitAlgebra;

/// Element of S_f = K[t;sigma]/K[t;sigma]f: a coefficient vector of fixed
/// length m over K, index i = coefficient of t^i.
class AlgebraElement {
   public:
    AlgebraElement(std::shared_ptr<const PetitAlgebra> owner, std::vector<std::uint32_t> coeffs);

    const PetitAlgebra& owner() const { return *owner_; }
    const std::shared_ptr<const PetitAlgebra>& owner_ptr() const { return owner_; }

    std::uint32_t coeff(std::size_t i) const { return coeffs_[i]; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (auto c : coeffs_)
            if (c) return false;
        return true;
    }

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator*(const AlgebraElement& other) const;
    bool operator==(const AlgebraElement& other) const;

    SkewPoly to_poly() const;

   private:
    std::shared_ptr<const PetitAlgebra> owner_;
    std::vector<std::uint32_t> coeffs_;
};

/// The Petit algebra S_f for a monic twisted polynomial f of degree m >= 2:
/// skew polynomials of degree < m with product g h mod_r f. Associative
/// exactly when f is right-invariant; the proper (nonassociative) case is
/// the one the classification machinery targets.
class PetitAlgebra : public std::enable_shared_from_this<PetitAlgebra> {
   public:
    static std::shared_ptr<const PetitAlgebra> make(SkewPoly f) {
        if (f.is_zero() || !f.is_monic()) throw error("modulus must be monic");
        if (f.degree() < 2) throw error("modulus degree must be at least 2");
        return std::shared_ptr<const PetitAlgebra>(new PetitAlgebra(std::move(f)));
    }

    /// S_f for f = t^m - a.
    static std::shared_ptr<const PetitAlgebra> make_cyclic(const std::shared_ptr<const ExtensionTower>& tower,
                                                           unsigned j, unsigned m, std::uint32_t a) {
        return make(SkewPoly::binomial(GaloisGenerator(tower, j), m, a));
    }

    const ExtensionTower& tower() const { return f_.twist().tower(); }
    std::shared_ptr<const ExtensionTower> tower_ptr() const { return f_.twist().tower_ptr(); }
    const GaloisGenerator& gen() const { return f_.twist(); }
    const SkewPoly& modulus() const { return f_; }
    unsigned m() const { return m_; }
    unsigned n() const { return tower().n(); }
    unsigned dim_f() const { return m_ * n(); }
    const FiniteField& coeff_field() const { return f_.field(); }
    const FiniteField& base_field() const { return tower().base(); }
    std::shared_ptr<const FiniteField> coeff_field_ptr() const { return tower().top_ptr(); }
    std::shared_ptr<const FiniteField> base_field_ptr() const { return tower().base_ptr(); }

    bool right_invariant_modulus() const { return right_invariant_; }
    bool proper() const { return !right_invariant_; }

    /// The a of f = t^m - a, when f has that shape.
    std::optional<std::uint32_t> binomial_a() const { return a_; }

    bool same_structure(const PetitAlgebra& other) const {
        return tower_ptr().get() == other.tower_ptr().get() && gen().exponent() == other.gen().exponent() &&
               f_ == other.f_;
    }

    AlgebraElement element(std::vector<std::uint32_t> coeffs) const {
        if (coeffs.size() != m_) throw error("coefficient vector has wrong length");
        return AlgebraElement(shared_from_this(), std::move(coeffs));
    }

    AlgebraElement zero() const { return element(std::vector<std::uint32_t>(m_, 0)); }

    AlgebraElement one() const {
        std::vector<std::uint32_t> c(m_, 0);
        c[0] = coeff_field().one();
        return element(std::move(c));
    }

    AlgebraElement t_power(unsigned k) const {
        if (k >= m_) throw error("t power exceeds algebra degree");
        std::vector<std::uint32_t> c(m_, 0);
        c[k] = coeff_field().one();
        return element(std::move(c));
    }

    /// K -> A on constants.
    AlgebraElement embed_top(std::uint32_t code) const {
        std::vector<std::uint32_t> c(m_, 0);
        c[0] = code;
        return element(std::move(c));
    }

    /// c * x for c in K (left scaling; K is the left nucleus).
    AlgebraElement scale_top(std::uint32_t c, const AlgebraElement& x) const {
        std::vector<std::uint32_t> out(m_);
        for (unsigned i = 0; i < m_; ++i) out[i] = coeff_field().mul(c, x.coeff(i));
        return element(std::move(out));
    }

    /// beta_l t^i for idx = i*n + l, the canonical F-basis of the algebra.
    AlgebraElement basis_element(unsigned idx) const {
        std::vector<std::uint32_t> c(m_, 0);
        c[idx / n()] = tower().f_basis()[idx % n()];
        return element(std::move(c));
    }

    std::uint64_t element_count() const {
        return checked_pow(coeff_field().size(), m_);
    }

    std::uint64_t element_count_checked() const {
        std::uint64_t c = element_count();
        if (c > size_cap()) throw size_cap_exceeded("algebra enumeration exceeds cap");
        return c;
    }

    /// Rank in the canonical order: lex on (x_0, ..., x_{m-1}) under the
    /// canonical element order of K.
    AlgebraElement element_at_rank(std::uint64_t rank) const {
        const std::uint64_t q = coeff_field().size();
        std::vector<std::uint32_t> c(m_);
        for (unsigned i = m_; i-- > 0;) {
            c[i] = coeff_field().code_at_rank(rank % q);
            rank /= q;
        }
        return element(std::move(c));
    }

    std::uint64_t rank_of(const AlgebraElement& x) const {
        const std::uint64_t q = coeff_field().size();
        std::uint64_t rank = 0;
        for (unsigned i = 0; i < m_; ++i) rank = rank * q + coeff_field().rank_of(x.coeff(i));
        return rank;
    }

    /// F-coordinates over the basis {beta_l t^i}, block i first.
    std::vector<std::uint32_t> f_coords(const AlgebraElement& x) const {
        std::vector<std::uint32_t> out;
        out.reserve(dim_f());
        for (unsigned i = 0; i < m_; ++i) {
            auto block = tower().f_coords(x.coeff(i));
            out.insert(out.end(), block.begin(), block.end());
        }
        return out;
    }

    AlgebraElement from_f_coords(std::span<const std::uint32_t> v) const {
        if (v.size() != dim_f()) throw error("coordinate vector has wrong length");
        std::vector<std::uint32_t> c(m_);
        for (unsigned i = 0; i < m_; ++i) c[i] = tower().from_f_coords(v.subspan(i * n(), n()));
        return element(std::move(c));
    }

    /// x y mod_r f.
    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const {
        if (!same_structure(x.owner()) || !same_structure(y.owner()))
            throw owner_mismatch("elements belong to a different algebra");
        SkewPoly prod = skew_mul(x.to_poly(), y.to_poly());
        SkewPoly rem = prod.degree() < static_cast<int>(m_) ? std::move(prod)
                                                            : right_divmod(prod, f_).remainder;
        std::vector<std::uint32_t> c(m_, 0);
        for (unsigned i = 0; i < m_; ++i) c[i] = rem.coeff(i);
        return element(std::move(c));
    }

   private:
    explicit PetitAlgebra(SkewPoly f) : f_(std::move(f)), m_(static_cast<unsigned>(f_.degree())) {
        right_invariant_ = is_right_invariant(f_);
        bool binomial = true;
        for (unsigned i = 1; i < m_; ++i)
            if (f_.coeff(i) != 0) binomial = false;
        if (binomial) a_ = coeff_field().neg(f_.coeff(0));
    }

    SkewPoly f_;
    unsigned m_;
    bool right_invariant_;
    std::optional<std::uint32_t> a_;
};

inline AlgebraElement::AlgebraElement(std::shared_ptr<const PetitAlgebra> owner, std::vector<std::uint32_t> coeffs)
    : owner_(std::move(owner)), coeffs_(std::move(coeffs)) {}

inline AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    if (!owner_->same_structure(other.owner())) throw owner_mismatch("elements belong to a different algebra");
    std::vector<std::uint32_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = owner_->coeff_field().add(coeffs_[i], other.coeffs_[i]);
    return AlgebraElement(owner_, std::move(c));
}

inline AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    if (!owner_->same_structure(other.owner())) throw owner_mismatch("elements belong to a different algebra");
    std::vector<std::uint32_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = owner_->coeff_field().sub(coeffs_[i], other.coeffs_[i]);
    return AlgebraElement(owner_, std::move(c));
}

inline AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
    return owner_->mul(*this, other);
}

inline bool AlgebraElement::operator==(const AlgebraElement& other) const {
    return owner_->same_structure(other.owner()) && coeffs_ == other.coeffs_;
}

inline SkewPoly AlgebraElement::to_poly() const { return SkewPoly(owner_->gen(), coeffs_); }

/// [x, y, z] = (xy)z - x(yz).
inline AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
    return (x * y) * z - x * (y * z);
}

/// Least s >= 1 with sigma^s(a) = a; always divides the order of sigma.
inline unsigned stabilizer_index(const GaloisGenerator& sigma, std::uint32_t a) {
    const unsigned n = sigma.order();
    for (unsigned s = 1; s < n; ++s)
        if (sigma.pow_apply(static_cast<long>(s), a) == a) return s;
    return n;
}

struct NucleusReport {
    std::vector<AlgebraElement> left, middle, right, center;
    /// Stabilizer index: least s >= 1 with sigma^s(a) = a; n = s * r.
    /// Only set for f = t^m - a; [E:F] = s for E = Fix(sigma^s).
    unsigned s = 0, r = 0;
    /// The structural prediction Nuc_r = K + K t^s + ... + K t^{(r-1)s}
    /// applies to f = t^m - a with a in K minus F and sigma^m = id (n | m).
    bool prediction_applicable = false;
    bool prediction_matches = false;
    std::vector<AlgebraElement> predicted_right;
};

namespace detail {
inline std::vector<AlgebraElement> elements_from_rows(const PetitAlgebra& algebra,
                                                      const std::vector<std::vector<std::uint32_t>>& rows) {
    std::vector<AlgebraElement> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(algebra.from_f_coords(row));
    return out;
}
}  // namespace detail

/// Nuclei and center via associator-vanishing linear systems over F on the
/// canonical basis. The structural prediction for the right nucleus is then
/// compared against the computed subspace, never assumed.
inline NucleusReport nuclei(const std::shared_ptr<const PetitAlgebra>& algebra_ptr) {
    const PetitAlgebra& A = *algebra_ptr;
    const unsigned D = A.dim_f();
    auto base = A.base_field_ptr();

    std::vector<AlgebraElement> B;
    B.reserve(D);
    for (unsigned b = 0; b < D; ++b) B.push_back(A.basis_element(b));

    std::vector<std::vector<AlgebraElement>> P;  // P[b1][b2] = B[b1] * B[b2]
    P.reserve(D);
    for (unsigned b1 = 0; b1 < D; ++b1) {
        std::vector<AlgebraElement> row;
        row.reserve(D);
        for (unsigned b2 = 0; b2 < D; ++b2) row.push_back(B[b1] * B[b2]);
        P.push_back(std::move(row));
    }

    // T[a][b][c] = F-coords of [B_a, B_b, B_c]
    std::vector<std::vector<std::uint32_t>> T(static_cast<std::size_t>(D) * D * D);
    for (unsigned a = 0; a < D; ++a)
        for (unsigned b = 0; b < D; ++b)
            for (unsigned c = 0; c < D; ++c)
                T[(static_cast<std::size_t>(a) * D + b) * D + c] = A.f_coords(P[a][b] * B[c] - B[a] * P[b][c]);

    auto solve = [&](auto pick) {
        RowReducer red(base, D);
        std::vector<std::uint32_t> row(D);
        for (unsigned b = 0; b < D; ++b)
            for (unsigned c = 0; c < D; ++c)
                for (unsigned d = 0; d < D; ++d) {
                    for (unsigned l = 0; l < D; ++l) row[l] = pick(l, b, c)[d];
                    red.add_row(row);
                }
        return red;
    };

    auto at = [&](unsigned a, unsigned b, unsigned c) -> const std::vector<std::uint32_t>& {
        return T[(static_cast<std::size_t>(a) * D + b) * D + c];
    };

    RowReducer left_red = solve([&](unsigned l, unsigned b, unsigned c) -> const std::vector<std::uint32_t>& {
        return at(l, b, c);
    });
    RowReducer middle_red = solve([&](unsigned l, unsigned b, unsigned c) -> const std::vector<std::uint32_t>& {
        return at(b, l, c);
    });
    RowReducer right_red = solve([&](unsigned l, unsigned b, unsigned c) -> const std::vector<std::uint32_t>& {
        return at(b, c, l);
    });

    NucleusReport report;
    report.left = detail::elements_from_rows(A, left_red.nullspace());
    report.middle = detail::elements_from_rows(A, middle_red.nullspace());
    report.right = detail::elements_from_rows(A, right_red.nullspace());

    // center: nucleus constraints plus commutation against the basis
    RowReducer center_red(base, D);
    {
        std::vector<std::uint32_t> row(D);
        auto feed = [&](auto pick) {
            for (unsigned b = 0; b < D; ++b)
                for (unsigned c = 0; c < D; ++c)
                    for (unsigned d = 0; d < D; ++d) {
                        for (unsigned l = 0; l < D; ++l) row[l] = pick(l, b, c)[d];
                        center_red.add_row(row);
                    }
        };
        feed([&](unsigned l, unsigned b, unsigned c) -> const std::vector<std::uint32_t>& { return at(l, b, c); });
        feed([&](unsigned l, unsigned b, unsigned c) -> const std::vector<std::uint32_t>& { return at(b, l, c); });
        feed([&](unsigned l, unsigned b, unsigned c) -> const std::vector<std::uint32_t>& { return at(b, c, l); });
        for (unsigned b = 0; b < D; ++b) {
            std::vector<std::vector<std::uint32_t>> comm(D);
            for (unsigned l = 0; l < D; ++l) comm[l] = A.f_coords(P[l][b] - P[b][l]);
            for (unsigned d = 0; d < D; ++d) {
                for (unsigned l = 0; l < D; ++l) row[l] = comm[l][d];
                center_red.add_row(row);
            }
        }
    }
    report.center = detail::elements_from_rows(A, center_red.nullspace());

    if (auto a = A.binomial_a()) {
        const unsigned n = A.n();
        const unsigned s = stabilizer_index(A.gen(), *a);
        report.s = s;
        report.r = n / s;
        const bool a_outside_f = !A.tower().in_base(*a);
        report.prediction_applicable = a_outside_f && (A.m() % n == 0);
        if (report.prediction_applicable) {
            std::vector<std::vector<std::uint32_t>> pred_rows;
            for (unsigned c = 0; c < report.r; ++c) {
                for (unsigned l = 0; l < n; ++l) {
                    report.predicted_right.push_back(A.basis_element((c * s) * n + l));
                    pred_rows.push_back(A.f_coords(report.predicted_right.back()));
                }
            }
            report.prediction_matches = canonical_span_basis(base, pred_rows, D) ==
                                        canonical_span_basis(base, right_red.nullspace(), D);
        }
    }
    return report;
}

enum class Side { kLeft, kRight };

/// The matrix of L_x or R_x as an F-linear map on the canonical basis.
inline Mat mult_matrix_F(const std::shared_ptr<const PetitAlgebra>& algebra_ptr, const AlgebraElement& x, Side side) {
    const PetitAlgebra& A = *algebra_ptr;
    if (!A.same_structure(x.owner())) throw owner_mismatch("element belongs to a different algebra");
    const unsigned D = A.dim_f();
    Mat out(A.base_field_ptr(), D, D);
    for (unsigned b = 0; b < D; ++b) {
        AlgebraElement basis = A.basis_element(b);
        auto col = A.f_coords(side == Side::kLeft ? x * basis : basis * x);
        for (unsigned r = 0; r < D; ++r) out.at(r, b) = col[r];
    }
    return out;
}

/// The m x m matrix over K of the right multiplication y -> y o x in the
/// left K-module basis {1, t, ..., t^{m-1}}: column i = coordinates of
/// t^i o x. For f = t^m - a this is the circulant-with-twist display whose
/// nonzero codewords make up the rank-metric code.
inline Mat right_mult_matrix_K(const std::shared_ptr<const PetitAlgebra>& algebra_ptr, const AlgebraElement& x) {
    const PetitAlgebra& A = *algebra_ptr;
    if (!A.same_structure(x.owner())) throw owner_mismatch("element belongs to a different algebra");
    const unsigned m = A.m();
    Mat out(A.coeff_field_ptr(), m, m);
    for (unsigned i = 0; i < m; ++i) {
        AlgebraElement col = A.t_power(i) * x;
        for (unsigned r = 0; r < m; ++r) out.at(r, i) = col.coeff(r);
    }
    return out;
}

/// Division algebra test: every nonzero left multiplication invertible over F.
inline bool is_division(const std::shared_ptr<const PetitAlgebra>& algebra_ptr) {
    const PetitAlgebra& A = *algebra_ptr;
    const std::uint64_t count = A.element_count_checked();
    for (std::uint64_t rank = 1; rank < count; ++rank) {
        if (!mult_matrix_F(algebra_ptr, A.element_at_rank(rank), Side::kLeft).invertible()) return false;
    }
    return true;
}

enum class PrecheckVerdict { kDivision, kNotDivision, kNoConclusion };

struct Precheck {
    std::string criterion;
    bool applicable = false;
    PrecheckVerdict verdict = PrecheckVerdict::kNoConclusion;
    std::string detail;
};

/// Evaluates the published sufficient/necessary division criteria that apply
/// to f = t^m - a, each guarded by its hypotheses. Consistency with
/// is_division is asserted by the test suite, not assumed here.
inline std::vector<Precheck> division_prechecks(const std::shared_ptr<const PetitAlgebra>& algebra_ptr) {
    const PetitAlgebra& A = *algebra_ptr;
    std::vector<Precheck> out;
    auto a_opt = A.binomial_a();
    if (!a_opt) {
        out.push_back({"binomial-shape", false, PrecheckVerdict::kNoConclusion, "modulus is not of the form t^m - a"});
        return out;
    }
    const std::uint32_t a = *a_opt;
    const ExtensionTower& tower = A.tower();
    const unsigned m = A.m(), n = A.n();
    const bool a_outside_f = !tower.in_base(a);
    const bool m_hyp = (m == 2 || m == 3) ||
                       (m >= 5 && is_prime_u64(m) && primitive_root_of_unity(tower.base(), m).has_value());

    {
        Precheck pc;
        pc.criterion = "solvability";
        pc.applicable = a_outside_f && m_hyp;
        if (pc.applicable) {
            bool solvable = partial_norm_image(A.gen(), m).contains(a);
            pc.verdict = solvable ? PrecheckVerdict::kNotDivision : PrecheckVerdict::kDivision;
            pc.detail = solvable ? "some z in K has sigma^{m-1}(z)...sigma(z)z = a"
                                 : "no z in K has sigma^{m-1}(z)...sigma(z)z = a";
        }
        out.push_back(std::move(pc));
    }

    {
        // N(a) outside (N(K^x))^m forces a division algebra
        Precheck pc;
        pc.criterion = "norm-obstruction";
        pc.applicable = a_outside_f && m_hyp;
        if (pc.applicable) {
            const FiniteField& top = A.coeff_field();
            std::vector<bool> mth_powers(top.size(), false);
            for (std::uint64_t z = 1; z < top.size(); ++z)
                mth_powers[top.pow(tower.norm(static_cast<std::uint32_t>(z)), m)] = true;
            bool obstructed = !mth_powers[tower.norm(a)];
            pc.verdict = obstructed ? PrecheckVerdict::kDivision : PrecheckVerdict::kNoConclusion;
            pc.detail = obstructed ? "N(a) is not an mth power of a norm" : "N(a) is an mth power of a norm";
        }
        out.push_back(std::move(pc));
    }
    {
        // finite-base form of the same corollary: N(a) outside (F^x)^m
        Precheck pc;
        pc.criterion = "norm-obstruction-finite";
        pc.applicable = a_outside_f && m_hyp;
        if (pc.applicable) {
            const FiniteField& top = A.coeff_field();
            std::vector<bool> mth_powers(top.size(), false);
            for (std::uint32_t u : tower.base_image())
                if (u) mth_powers[top.pow(u, m)] = true;
            bool obstructed = !mth_powers[tower.norm(a)];
            pc.verdict = obstructed ? PrecheckVerdict::kDivision : PrecheckVerdict::kNoConclusion;
            pc.detail = obstructed ? "N(a) is not an mth power in F" : "N(a) is an mth power in F";
        }
        out.push_back(std::move(pc));
    }

    const unsigned s = stabilizer_index(A.gen(), a);

    {
        Precheck pc;
        pc.criterion = "cyclic-division";
        pc.applicable = n == m && a_outside_f && m_hyp;
        if (pc.applicable) {
            pc.verdict = PrecheckVerdict::kDivision;
            pc.detail = "nonassociative cyclic algebra of degree " + std::to_string(m) + " with a outside F";
        }
        out.push_back(std::move(pc));
    }
    {
        Precheck pc;
        pc.criterion = "no-proper-subfield";
        pc.applicable = n == m && a_outside_f;
        if (pc.applicable) {
            pc.verdict = s == n ? PrecheckVerdict::kDivision : PrecheckVerdict::kNoConclusion;
            pc.detail = s == n ? "a lies in no proper subfield of K/F"
                               : "a lies in the subfield fixed by sigma^" + std::to_string(s);
        }
        out.push_back(std::move(pc));
    }
    {
        Precheck pc;
        pc.criterion = "right-nucleus-zero-divisors";
        pc.applicable = n == m && a_outside_f;
        if (pc.applicable) {
            bool strict = s > 1 && s < n;
            pc.verdict = strict ? PrecheckVerdict::kNotDivision : PrecheckVerdict::kNoConclusion;
            pc.detail = strict ? "right nucleus is an associative cyclic algebra of degree " +
                                     std::to_string(n / s) + " over a finite field"
                               : "stabilizer gives no associative division obstruction";
        }
        out.push_back(std::move(pc));
    }
    return out;
}

}  // namespace petit
