#pragma once

#include <utility>
#include <vector>

#include "petit/fields.hpp"

namespace petit {

/// Element of the twisted polynomial ring K[t; sigma], multiplication rule
/// t a = sigma(a) t. Coefficients are top-field codes, index i = coefficient
/// of t^i, normalized so the stored vector never ends in a zero. The zero
/// polynomial has an empty vector and degree() == -1, which stands in for
/// the degree marker below all integers.
class SkewPoly {
   public:
    explicit SkewPoly(GaloisGenerator twist) : twist_(std::move(twist)) {}

    SkewPoly(GaloisGenerator twist, std::vector<std::uint32_t> coeffs)
        : twist_(std::move(twist)), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static SkewPoly monomial(const GaloisGenerator& twist, std::uint32_t c, unsigned k) {
        std::vector<std::uint32_t> v(k + 1, 0);
        v[k] = c;
        return SkewPoly(twist, std::move(v));
    }

    static SkewPoly constant(const GaloisGenerator& twist, std::uint32_t c) { return monomial(twist, c, 0); }

    static SkewPoly t_power(const GaloisGenerator& twist, unsigned k) {
        return monomial(twist, twist.tower().top().one(), k);
    }

    /// f = t^m - a
    static SkewPoly binomial(const GaloisGenerator& twist, unsigned m, std::uint32_t a) {
        const FiniteField& top = twist.tower().top();
        std::vector<std::uint32_t> v(m + 1, 0);
        v[0] = top.neg(a);
        v[m] = top.one();
        return SkewPoly(twist, std::move(v));
    }

    const GaloisGenerator& twist() const { return twist_; }
    const FiniteField& field() const { return twist_.tower().top(); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

    std::uint32_t leading() const {
        if (is_zero()) throw error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_monic() const { return !is_zero() && leading() == field().one(); }

    SkewPoly operator+(const SkewPoly& other) const {
        require_same_twist(other);
        const FiniteField& top = field();
        std::vector<std::uint32_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = top.add(coeff(i), other.coeff(i));
        return SkewPoly(twist_, std::move(out));
    }

    SkewPoly operator-(const SkewPoly& other) const {
        require_same_twist(other);
        const FiniteField& top = field();
        std::vector<std::uint32_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = top.sub(coeff(i), other.coeff(i));
        return SkewPoly(twist_, std::move(out));
    }

    /// c * f (left scaling, untwisted).
    SkewPoly scaled_left(std::uint32_t c) const {
        const FiniteField& top = field();
        std::vector<std::uint32_t> out(coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = top.mul(c, coeffs_[i]);
        return SkewPoly(twist_, std::move(out));
    }

    bool operator==(const SkewPoly& other) const {
        return twist_ == other.twist_ && coeffs_ == other.coeffs_;
    }

    void require_same_twist(const SkewPoly& other) const {
        if (!(twist_ == other.twist_)) throw twist_mismatch("operands live in different twisted rings");
    }

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    GaloisGenerator twist_;
    std::vector<std::uint32_t> coeffs_;
};

/// Product under t a = sigma(a) t:
/// (sum a_i t^i)(sum b_j t^j) = sum_{i,j} a_i sigma^i(b_j) t^{i+j}.
inline SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    f.require_same_twist(g);
    if (f.is_zero() || g.is_zero()) return SkewPoly(f.twist());
    const FiniteField& top = f.field();
    const GaloisGenerator& sigma = f.twist();
    std::vector<std::uint32_t> out(static_cast<std::size_t>(f.degree() + g.degree()) + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        std::uint32_t a = f.coeff(static_cast<std::size_t>(i));
        if (!a) continue;
        for (int j = 0; j <= g.degree(); ++j) {
            std::uint32_t b = g.coeff(static_cast<std::size_t>(j));
            if (!b) continue;
            auto& slot = out[static_cast<std::size_t>(i + j)];
            slot = top.add(slot, top.mul(a, sigma.pow_apply(i, b)));
        }
    }
    return SkewPoly(f.twist(), std::move(out));
}

struct DivModResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// Right division: unique (q, r) with g = q f + r and deg r < deg f.
inline DivModResult right_divmod(const SkewPoly& g, const SkewPoly& f) {
    g.require_same_twist(f);
    if (f.is_zero()) throw division_by_zero_polynomial("right division by the zero polynomial");
    const FiniteField& top = f.field();
    const GaloisGenerator& sigma = f.twist();
    SkewPoly r = g;
    const int df = f.degree();
    std::vector<std::uint32_t> qcoeffs(
        r.degree() >= df ? static_cast<std::size_t>(r.degree() - df) + 1 : 0, 0);
    while (!r.is_zero() && r.degree() >= df) {
        const int d = r.degree() - df;
        // (c t^d) f must cancel the leading term of r: c sigma^d(lc f) = lc r
        std::uint32_t c = top.div(r.leading(), sigma.pow_apply(d, f.leading()));
        qcoeffs[static_cast<std::size_t>(d)] = c;
        r = r - skew_mul(SkewPoly::monomial(sigma, c, static_cast<unsigned>(d)), f);
    }
    return {SkewPoly(f.twist(), std::move(qcoeffs)), std::move(r)};
}

/// f is right-invariant iff Rf is a two-sided ideal, checked on generators:
/// f*b for b in an F-basis of K, and f*t, must all be right-divisible by f.
inline bool is_right_invariant(const SkewPoly& f) {
    if (f.is_zero() || f.degree() < 1 || !f.is_monic()) throw error("right-invariance needs a monic f of degree >= 1");
    const ExtensionTower& tower = f.twist().tower();
    for (std::uint32_t b : tower.f_basis()) {
        if (!right_divmod(skew_mul(f, SkewPoly::constant(f.twist(), b)), f).remainder.is_zero()) return false;
    }
    return right_divmod(skew_mul(f, SkewPoly::t_power(f.twist(), 1)), f).remainder.is_zero();
}

namespace detail {
/// Monic degree-k polynomials in canonical order (lex on the coefficient
/// tuple (g_0, ..., g_{k-1}) under the canonical element order).
template <class Fn>
inline void for_each_monic(const GaloisGenerator& twist, unsigned k, Fn&& fn) {
    const FiniteField& top = twist.tower().top();
    const std::uint64_t q = top.size();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (count > size_cap() / q + 1) throw enumeration_cap_exceeded("divisor enumeration exceeds cap");
        count *= q;
    }
    if (count > size_cap()) throw enumeration_cap_exceeded("divisor enumeration exceeds cap");
    std::vector<std::uint32_t> coeffs(k + 1, 0);
    coeffs[k] = top.one();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // decode idx -> (g_0, ..., g_{k-1}) with g_0 as the most significant
        // digit, each digit a canonical element rank
        std::uint64_t r = idx;
        for (unsigned i = k; i-- > 0;) {
            coeffs[i] = top.code_at_rank(r % q);
            r /= q;
        }
        if (!fn(SkewPoly(twist, coeffs))) return;
    }
}
}  // namespace detail

/// All monic degree-k right divisors of f, in canonical order.
inline std::vector<SkewPoly> monic_right_divisors(const SkewPoly& f, unsigned k) {
    if (f.is_zero() || k < 1 || static_cast<int>(k) >= f.degree())
        throw error("divisor degree must satisfy 1 <= k < deg f");
    std::vector<SkewPoly> out;
    detail::for_each_monic(f.twist(), k, [&](const SkewPoly& g) {
        if (right_divmod(f, g).remainder.is_zero()) out.push_back(g);
        return true;
    });
    return out;
}

inline bool has_monic_right_divisor(const SkewPoly& f, unsigned k) {
    bool found = false;
    detail::for_each_monic(f.twist(), k, [&](const SkewPoly& g) {
        if (right_divmod(f, g).remainder.is_zero()) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

/// No proper factors. Any proper factorization gives a monic right divisor
/// of some degree 1 <= k < deg f, so brute enumeration decides it.
inline bool is_irreducible(const SkewPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw error("irreducibility needs deg f >= 1");
    for (unsigned k = 1; static_cast<int>(k) < f.degree(); ++k)
        if (has_monic_right_divisor(f, k)) return false;
    return true;
}

}  // namespace petit
