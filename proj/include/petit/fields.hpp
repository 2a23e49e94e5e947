#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "petit/common.hpp"

namespace petit {

namespace detail {

// Coefficient-vector arithmetic over F_p used only while a field is being
// constructed (tables are not available yet). Vectors have fixed length e,
// index i = coefficient of x^i.
using PolyVec = std::vector<std::uint32_t>;

inline PolyVec mul_mod(const PolyVec& a, const PolyVec& b, const PolyVec& modulus, std::uint64_t p) {
    const std::size_t e = modulus.size() - 1;
    std::vector<std::uint64_t> prod(2 * e - 1 < 1 ? 1 : 2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t i = prod.size(); i-- > e;) {
        std::uint64_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        // subtract c * x^{i-e} * modulus
        for (std::size_t j = 0; j <= e; ++j) {
            std::uint64_t sub = (c * modulus[j]) % p;
            std::size_t k = i - e + j;
            prod[k] = (prod[k] + p - sub) % p;
        }
    }
    PolyVec out(e);
    for (std::size_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

inline int poly_degree(const PolyVec& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i]) return static_cast<int>(i);
    return -1;
}

inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    // Fermat
    std::uint64_t r = 1, b = a % p;
    std::uint64_t k = p - 2;
    while (k) {
        if (k & 1) r = (r * b) % p;
        b = (b * b) % p;
        k >>= 1;
    }
    return r;
}

/// Remainder of a / b over F_p; b != 0. Both variable length.
inline PolyVec poly_rem(PolyVec a, const PolyVec& b, std::uint64_t p) {
    int db = poly_degree(b);
    std::uint64_t lead_inv = inv_mod_prime(b[static_cast<std::size_t>(db)], p);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        std::uint64_t c = (std::uint64_t{a[static_cast<std::size_t>(da)]} * lead_inv) % p;
        int shift = da - db;
        for (int j = 0; j <= db; ++j) {
            std::uint64_t sub = (c * b[static_cast<std::size_t>(j)]) % p;
            auto& slot = a[static_cast<std::size_t>(j + shift)];
            slot = static_cast<std::uint32_t>((slot + p - sub) % p);
        }
    }
    return a;
}

/// Trial division by every monic polynomial of degree 1..e/2.
inline bool poly_irreducible(const PolyVec& f, std::uint64_t p) {
    const int e = poly_degree(f);
    if (e <= 0) return false;
    if (e == 1) return true;
    for (int d = 1; d <= e / 2; ++d) {
        std::uint64_t count = checked_pow(p, static_cast<unsigned>(d));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PolyVec g(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t rest = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_degree(poly_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// The finite field F_{p^e} with the canonical modulus: among all monic
/// irreducible degree-e polynomials over F_p, the one whose coefficient
/// vector (constant term first) is lexicographically least. Elements are
/// codes in [0, p^e): code = sum c_i p^i where (c_0, ..., c_{e-1}) are the
/// polynomial-basis coordinates, constant term first. Construction is
/// deterministic, so two fields with the same (p, e) are bit-identical;
/// make() interns them.
class FiniteField {
   public:
    static std::shared_ptr<const FiniteField> make(std::uint64_t p, unsigned e);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    std::uint64_t size() const { return q_; }
    bool is_prime_field() const { return e_ == 1; }

    /// Monic modulus, length e+1, constant term first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        std::uint32_t out = 0;
        for (unsigned i = 0; i < e_; ++i) {
            std::uint64_t da = (a / ppow_[i]) % p_, db = (b / ppow_[i]) % p_;
            out += static_cast<std::uint32_t>(((da + db) % p_) * ppow_[i]);
        }
        return out;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (p_ == 2) return a;
        std::uint32_t out = 0;
        for (unsigned i = 0; i < e_; ++i) {
            std::uint64_t d = (a / ppow_[i]) % p_;
            out += static_cast<std::uint32_t>(((p_ - d) % p_) * ppow_[i]);
        }
        return out;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!a || !b) return 0;
        return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (!a) throw error("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
        if (!a) return k == 0 ? one() : 0;
        return exp_[(std::uint64_t{log_[a]} * (k % (q_ - 1))) % (q_ - 1)];
    }

    /// x -> x^p, the absolute Frobenius.
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

    /// Canonically least multiplicative generator of the unit group.
    std::uint32_t generator() const { return gen_; }

    std::uint64_t log(std::uint32_t a) const {
        if (!a) throw error("log of zero");
        return log_[a];
    }

    std::uint32_t exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

    std::uint64_t mult_order(std::uint32_t a) const {
        if (!a) throw error("order of zero");
        return (q_ - 1) / gcd_u64(q_ - 1, log_[a]);
    }

    std::vector<std::uint32_t> coords(std::uint32_t code) const {
        std::vector<std::uint32_t> c(e_);
        for (unsigned i = 0; i < e_; ++i) c[i] = static_cast<std::uint32_t>((code / ppow_[i]) % p_);
        return c;
    }

    std::uint32_t code_from_coords(std::span<const std::uint32_t> c) const {
        if (c.size() != e_) throw error("coordinate vector has wrong length");
        std::uint64_t code = 0;
        for (unsigned i = 0; i < e_; ++i) {
            if (c[i] >= p_) throw error("coordinate out of range");
            code += c[i] * ppow_[i];
        }
        return static_cast<std::uint32_t>(code);
    }

    // Canonical element order: lexicographic on the coordinate vector,
    // constant term first. rank_of is the position in that order.
    std::uint64_t rank_of(std::uint32_t code) const {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < e_; ++i) r = r * p_ + (code / ppow_[i]) % p_;
        return r;
    }

    std::uint32_t code_at_rank(std::uint64_t rank) const {
        std::uint64_t code = 0;
        for (unsigned i = e_; i-- > 0;) {
            code += (rank % p_) * ppow_[i];
            rank /= p_;
        }
        return static_cast<std::uint32_t>(code);
    }

    bool canonical_less(std::uint32_t a, std::uint32_t b) const { return rank_of(a) < rank_of(b); }

   private:
    FiniteField(std::uint64_t p, unsigned e);

    std::uint64_t p_;
    unsigned e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> ppow_;   // p^i, i <= e
    std::vector<std::uint32_t> exp_;    // generator^i, size q-1
    std::vector<std::uint64_t> log_;    // inverse of exp_, size q
    std::uint32_t gen_ = 0;
};

inline FiniteField::FiniteField(std::uint64_t p, unsigned e) : p_(p), e_(e) {
    if (e == 0) throw error("extension degree must be positive");
    if (!is_prime_u64(p)) throw non_prime_characteristic("characteristic " + std::to_string(p) + " is not prime");
    q_ = checked_pow(p, e);
    if (q_ > size_cap()) throw size_cap_exceeded("field size exceeds cap");
    if (q_ > (std::uint64_t{1} << 31)) throw size_cap_exceeded("field size exceeds element-code width");

    ppow_.resize(e + 1);
    ppow_[0] = 1;
    for (unsigned i = 1; i <= e; ++i) ppow_[i] = ppow_[i - 1] * p;

    // canonical modulus: first irreducible in lex order on (c_0, ..., c_{e-1})
    for (std::uint64_t rank = 0;; ++rank) {
        if (rank >= q_) throw internal_error("no irreducible modulus found");
        detail::PolyVec f(e + 1, 0);
        // decode rank -> coefficients with c_0 as the most significant digit,
        // so increasing rank walks the vectors in lex order
        std::uint64_t r = rank;
        for (unsigned i = e; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        f[e] = 1;
        if (detail::poly_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }

    // exp/log tables from the canonically least primitive element
    auto mul_raw = [&](std::uint32_t a, std::uint32_t b) {
        detail::PolyVec av(e), bv(e);
        for (unsigned i = 0; i < e; ++i) {
            av[i] = static_cast<std::uint32_t>((a / ppow_[i]) % p);
            bv[i] = static_cast<std::uint32_t>((b / ppow_[i]) % p);
        }
        detail::PolyVec cv = detail::mul_mod(av, bv, modulus_, p);
        std::uint64_t code = 0;
        for (unsigned i = 0; i < e; ++i) code += cv[i] * ppow_[i];
        return static_cast<std::uint32_t>(code);
    };
    auto pow_raw = [&](std::uint32_t a, std::uint64_t k) {
        std::uint32_t r = 1, b = a;
        while (k) {
            if (k & 1) r = mul_raw(r, b);
            b = mul_raw(b, b);
            k >>= 1;
        }
        return r;
    };

    const auto factors = detail::prime_factors(q_ - 1);
    for (std::uint64_t rank = 1; rank < q_; ++rank) {
        std::uint32_t cand = code_at_rank(rank);
        bool primitive = true;
        for (std::uint64_t f : factors) {
            if (pow_raw(cand, (q_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_ = cand;
            break;
        }
    }
    if (!gen_) throw internal_error("no primitive element found");

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    exp_[0] = 1;
    for (std::uint64_t i = 1; i < q_ - 1; ++i) exp_[i] = mul_raw(exp_[i - 1], gen_);
    for (std::uint64_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

inline std::shared_ptr<const FiniteField> FiniteField::make(std::uint64_t p, unsigned e) {
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FiniteField>> registry;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(p, e);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    auto field = std::shared_ptr<const FiniteField>(new FiniteField(p, e));
    registry.emplace(key, field);
    return field;
}

inline std::shared_ptr<const FiniteField> make_field(std::uint64_t p, unsigned e) { return FiniteField::make(p, e); }

/// Splits a prime power q into (p, e); rejects non prime powers.
inline std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
    if (q < 2) throw error("not a prime power: " + std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw non_prime_characteristic(std::to_string(q) + " is not a prime power");
    return {p, e};
}

/// The pair F_q subset F_{q^n}. The top field is built directly over the
/// prime field; the embedding maps the polynomial generator of F to the
/// canonically least root of F's modulus inside K.
class ExtensionTower {
   public:
    static std::shared_ptr<const ExtensionTower> make(std::uint64_t q, unsigned n);

    const FiniteField& base() const { return *base_; }
    const FiniteField& top() const { return *top_; }
    std::shared_ptr<const FiniteField> base_ptr() const { return base_; }
    std::shared_ptr<const FiniteField> top_ptr() const { return top_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return base_->size(); }

    std::uint32_t embed(std::uint32_t base_code) const { return embed_[base_code]; }

    bool in_base(std::uint32_t top_code) const {
        return std::binary_search(base_image_.begin(), base_image_.end(), top_code);
    }

    /// Base-image elements, sorted by top-field code.
    const std::vector<std::uint32_t>& base_image() const { return base_image_; }

    std::uint32_t to_base(std::uint32_t top_code) const {
        auto it = to_base_.find(top_code);
        if (it == to_base_.end()) throw error("element is not in the base image");
        return it->second;
    }

    /// x -> x^q, the generator of Gal(K/F) with exponent 1.
    std::uint32_t frobenius(std::uint32_t x) const { return sigma_pow(1, x); }

    /// x -> x^{q^i}; i taken mod n.
    std::uint32_t sigma_pow(long i, std::uint32_t x) const {
        if (!x) return 0;
        long r = i % static_cast<long>(n_);
        if (r < 0) r += n_;
        const std::uint64_t m = top_->size() - 1;
        return top_->exp((top_->log(x) * qpow_mod_[static_cast<std::size_t>(r)]) % m);
    }

    /// N_{K/F}(x) = x^{(q^n-1)/(q-1)} as a top-field code (lies in the image of F).
    std::uint32_t norm(std::uint32_t x) const {
        if (!x) return 0;
        const std::uint64_t m = top_->size() - 1;
        return top_->exp((top_->log(x) * norm_exponent_) % m);
    }

    std::uint32_t norm_to_base(std::uint32_t x) const { return to_base(norm(x)); }

    /// Tr_{K/F}(x) as a top-field code.
    std::uint32_t trace(std::uint32_t x) const {
        std::uint32_t acc = 0;
        for (unsigned i = 0; i < n_; ++i) acc = top_->add(acc, sigma_pow(static_cast<long>(i), x));
        return acc;
    }

    std::uint32_t trace_to_base(std::uint32_t x) const { return to_base(trace(x)); }

    /// F-basis of K: powers of the canonical generator of K.
    const std::vector<std::uint32_t>& f_basis() const { return f_basis_; }

    /// Coordinates of a top element over f_basis(), as base-field codes.
    std::vector<std::uint32_t> f_coords(std::uint32_t x) const {
        const std::uint64_t p = top_->characteristic();
        const unsigned d = top_->degree();
        std::vector<std::uint32_t> soln(d, 0);
        auto xdigits = top_->coords(x);
        for (unsigned row = 0; row < d; ++row) {
            std::uint64_t acc = 0;
            for (unsigned col = 0; col < d; ++col)
                acc = (acc + std::uint64_t{coord_inverse_[row * d + col]} * xdigits[col]) % p;
            soln[row] = static_cast<std::uint32_t>(acc);
        }
        const unsigned e = base_->degree();
        std::vector<std::uint32_t> out(n_);
        for (unsigned l = 0; l < n_; ++l) {
            std::vector<std::uint32_t> c(soln.begin() + l * e, soln.begin() + (l + 1) * e);
            out[l] = base_->code_from_coords(c);
        }
        return out;
    }

    std::uint32_t from_f_coords(std::span<const std::uint32_t> base_codes) const {
        if (base_codes.size() != n_) throw error("coordinate vector has wrong length");
        std::uint32_t acc = 0;
        for (unsigned l = 0; l < n_; ++l) acc = top_->add(acc, top_->mul(embed_[base_codes[l]], f_basis_[l]));
        return acc;
    }

   private:
    ExtensionTower(std::uint64_t q, unsigned n);

    std::shared_ptr<const FiniteField> base_;
    std::shared_ptr<const FiniteField> top_;
    unsigned n_;
    std::uint64_t norm_exponent_;
    std::vector<std::uint64_t> qpow_mod_;  // q^i mod (q^n - 1)
    std::vector<std::uint32_t> embed_;
    std::vector<std::uint32_t> base_image_;
    std::unordered_map<std::uint32_t, std::uint32_t> to_base_;
    std::vector<std::uint32_t> f_basis_;
    std::vector<std::uint32_t> coord_inverse_;  // d x d over F_p, row major
};

inline ExtensionTower::ExtensionTower(std::uint64_t q, unsigned n) : n_(n) {
    if (n == 0) throw error("tower degree must be positive");
    auto [p, e] = split_prime_power(q);
    base_ = FiniteField::make(p, e);
    top_ = FiniteField::make(p, e * n);
    const std::uint64_t m = top_->size() - 1;
    norm_exponent_ = m / (q - 1);

    qpow_mod_.resize(n);
    qpow_mod_[0] = 1 % m;
    for (unsigned i = 1; i < n; ++i) qpow_mod_[i] = (qpow_mod_[i - 1] * (q % m)) % m;

    embed_.resize(q);
    if (n == 1) {
        for (std::uint64_t c = 0; c < q; ++c) embed_[c] = static_cast<std::uint32_t>(c);
    } else {
        // roots of the base modulus inside K all lie in the order-q subfield
        std::uint32_t root = 0;
        bool found = false;
        std::uint64_t best_rank = 0;
        auto consider = [&](std::uint32_t z) {
            std::uint32_t acc = top_->one();  // monic leading coefficient
            const auto& mod = base_->modulus();
            for (unsigned i = e; i-- > 0;) acc = top_->add(top_->mul(acc, z), static_cast<std::uint32_t>(mod[i] % p));
            if (acc == 0) {
                std::uint64_t r = top_->rank_of(z);
                if (!found || r < best_rank) {
                    found = true;
                    best_rank = r;
                    root = z;
                }
            }
        };
        consider(0);
        for (std::uint64_t k = 0; k < q - 1; ++k) consider(top_->exp(k * norm_exponent_));
        if (!found) throw internal_error("base modulus has no root in the top field");
        for (std::uint64_t c = 0; c < q; ++c) {
            auto digits = base_->coords(static_cast<std::uint32_t>(c));
            std::uint32_t acc = 0;
            for (unsigned i = e; i-- > 0;)
                acc = top_->add(top_->mul(acc, root), static_cast<std::uint32_t>(digits[i] % p));
            embed_[c] = acc;
        }
    }

    base_image_.assign(embed_.begin(), embed_.end());
    std::sort(base_image_.begin(), base_image_.end());
    for (std::uint64_t c = 0; c < q; ++c) to_base_.emplace(embed_[c], static_cast<std::uint32_t>(c));
    if (to_base_.size() != q) throw internal_error("embedding is not injective");

    // verify the embedding is a ring homomorphism (exhaustive for small q)
    const std::uint64_t check_limit = std::min<std::uint64_t>(q, 64);
    for (std::uint64_t c1 = 0; c1 < check_limit; ++c1)
        for (std::uint64_t c2 = 0; c2 < check_limit; ++c2) {
            auto a = static_cast<std::uint32_t>(c1), b = static_cast<std::uint32_t>(c2);
            if (embed_[base_->add(a, b)] != top_->add(embed_[a], embed_[b]) ||
                embed_[base_->mul(a, b)] != top_->mul(embed_[a], embed_[b]))
                throw internal_error("embedding is not a homomorphism");
        }

    f_basis_.resize(n);
    for (unsigned l = 0; l < n; ++l) f_basis_[l] = top_->pow(top_->generator(), l);

    // invert the F_p change of basis {embed(x_F^u) * w_K^l} -> polynomial basis of K
    const unsigned d = top_->degree();
    std::vector<std::uint32_t> mat(static_cast<std::size_t>(d) * 2 * d, 0);
    for (unsigned l = 0; l < n; ++l) {
        for (unsigned u = 0; u < e; ++u) {
            std::uint32_t col_elt = top_->mul(embed_[base_->code_from_coords(
                                                  [&] {
                                                      std::vector<std::uint32_t> c(e, 0);
                                                      c[u] = 1;
                                                      return c;
                                                  }())],
                                              f_basis_[l]);
            auto digits = top_->coords(col_elt);
            unsigned col = l * e + u;
            for (unsigned row = 0; row < d; ++row) mat[row * 2 * d + col] = digits[row];
        }
    }
    for (unsigned i = 0; i < d; ++i) mat[i * 2 * d + d + i] = 1;
    // Gauss-Jordan over F_p
    for (unsigned col = 0, row = 0; col < d && row < d; ++col) {
        unsigned pivot = row;
        while (pivot < d && mat[pivot * 2 * d + col] == 0) ++pivot;
        if (pivot == d) throw internal_error("basis change matrix is singular");
        if (pivot != row)
            for (unsigned j = 0; j < 2 * d; ++j) std::swap(mat[pivot * 2 * d + j], mat[row * 2 * d + j]);
        std::uint64_t inv = detail::inv_mod_prime(mat[row * 2 * d + col], p);
        for (unsigned j = 0; j < 2 * d; ++j)
            mat[row * 2 * d + j] = static_cast<std::uint32_t>((mat[row * 2 * d + j] * inv) % p);
        for (unsigned r2 = 0; r2 < d; ++r2) {
            if (r2 == row) continue;
            std::uint64_t factor = mat[r2 * 2 * d + col];
            if (!factor) continue;
            for (unsigned j = 0; j < 2 * d; ++j) {
                std::uint64_t sub = (factor * mat[row * 2 * d + j]) % p;
                mat[r2 * 2 * d + j] = static_cast<std::uint32_t>((mat[r2 * 2 * d + j] + p - sub) % p);
            }
        }
        ++row;
    }
    coord_inverse_.resize(static_cast<std::size_t>(d) * d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) coord_inverse_[i * d + j] = mat[i * 2 * d + d + j];
}

inline std::shared_ptr<const ExtensionTower> ExtensionTower::make(std::uint64_t q, unsigned n) {
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const ExtensionTower>> registry;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(q, n);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    auto tower = std::shared_ptr<const ExtensionTower>(new ExtensionTower(q, n));
    registry.emplace(key, tower);
    return tower;
}

inline std::shared_ptr<const ExtensionTower> make_tower(std::uint64_t q, unsigned n) {
    return ExtensionTower::make(q, n);
}

/// A generator sigma = (x -> x^{q^j}) of Gal(K/F), gcd(j, n) = 1.
class GaloisGenerator {
   public:
    GaloisGenerator(std::shared_ptr<const ExtensionTower> tower, unsigned j) : tower_(std::move(tower)), j_(j) {
        const unsigned n = tower_->n();
        if (n == 1) {
            if (j != 1) throw error("trivial Galois group has only the identity generator");
        } else if (j < 1 || j >= n || gcd_u64(j, n) != 1) {
            throw error("exponent does not generate the Galois group");
        }
    }

    const ExtensionTower& tower() const { return *tower_; }
    std::shared_ptr<const ExtensionTower> tower_ptr() const { return tower_; }
    unsigned exponent() const { return j_; }
    unsigned order() const { return tower_->n(); }

    /// sigma(x)
    std::uint32_t operator()(std::uint32_t x) const { return tower_->sigma_pow(j_, x); }

    /// sigma^i(x)
    std::uint32_t pow_apply(long i, std::uint32_t x) const {
        return tower_->sigma_pow(i * static_cast<long>(j_), x);
    }

    bool operator==(const GaloisGenerator& other) const {
        return tower_.get() == other.tower_.get() && j_ == other.j_;
    }

   private:
    std::shared_ptr<const ExtensionTower> tower_;
    unsigned j_;
};

/// All generators of Gal(K/F), ordered by exponent. Exactly phi(n) of them.
inline std::vector<GaloisGenerator> generators(const std::shared_ptr<const ExtensionTower>& tower) {
    std::vector<GaloisGenerator> out;
    const unsigned n = tower->n();
    if (n == 1) {
        out.emplace_back(tower, 1);
        return out;
    }
    for (unsigned j = 1; j < n; ++j)
        if (gcd_u64(j, n) == 1) out.emplace_back(tower, j);
    return out;
}

/// N_{m,sigma}(k) = k sigma(k) ... sigma^{m-1}(k).
inline std::uint32_t partial_norm(const GaloisGenerator& gen, unsigned m, std::uint32_t k) {
    const FiniteField& top = gen.tower().top();
    std::uint32_t acc = top.one();
    for (unsigned i = 0; i < m; ++i) acc = top.mul(acc, gen.pow_apply(static_cast<long>(i), k));
    return acc;
}

/// The multiplicative subgroup {N_{m,sigma}(k) : k in K^x}, with O(1) membership.
class PartialNormImage {
   public:
    PartialNormImage(const GaloisGenerator& gen, unsigned m) {
        const FiniteField& top = gen.tower().top();
        if (top.size() > size_cap()) throw size_cap_exceeded("partial norm image enumeration exceeds cap");
        mask_.assign(top.size(), false);
        for (std::uint64_t i = 1; i < top.size(); ++i) {
            std::uint32_t v = partial_norm(gen, m, static_cast<std::uint32_t>(i));
            if (!mask_[v]) {
                mask_[v] = true;
                elements_.push_back(v);
            }
        }
        std::sort(elements_.begin(), elements_.end());
    }

    bool contains(std::uint32_t top_code) const { return top_code < mask_.size() && mask_[top_code]; }
    const std::vector<std::uint32_t>& elements() const { return elements_; }

   private:
    std::vector<std::uint32_t> elements_;
    std::vector<bool> mask_;
};

inline PartialNormImage partial_norm_image(const GaloisGenerator& gen, unsigned m) {
    return PartialNormImage(gen, m);
}

/// Canonically least element of multiplicative order exactly m, if m | q-1.
inline std::optional<std::uint32_t> primitive_root_of_unity(const FiniteField& field, std::uint64_t m) {
    if (m == 0) throw error("order must be positive");
    if ((field.size() - 1) % m != 0) return std::nullopt;
    std::optional<std::uint32_t> best;
    std::uint64_t best_rank = 0;
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (gcd_u64(k, m) != 1) continue;
        std::uint32_t z = field.exp(k * ((field.size() - 1) / m));
        std::uint64_t r = field.rank_of(z);
        if (!best || r < best_rank) {
            best = z;
            best_rank = r;
        }
    }
    return best;
}

}  // namespace petit
