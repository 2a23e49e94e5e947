#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "petit/algebra.hpp"

namespace petit {

enum class IsoStatus { kIsomorphic, kNotIsomorphic, kInconclusive };

struct IsoWitness {
    unsigned tau_exponent = 0;  // tau = (x -> x^{q^tau})
    std::uint32_t k = 0;        // top-field code with tau(a) = N_{m,sigma}(k) b
};

struct IsoVerdict {
    IsoStatus status = IsoStatus::kInconclusive;
    std::optional<IsoWitness> witness;
    std::string reason;
};

namespace detail {

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t qq = r / newr;
        std::int64_t tmp = t - qq * newt;
        t = newt;
        newt = tmp;
        tmp = r - qq * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw internal_error("element not invertible in modular arithmetic");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

/// Exponent of the partial-norm power map: N_{m,sigma}(k) = k^E on K^x.
inline std::uint64_t partial_norm_exponent(const GaloisGenerator& gen, unsigned m) {
    const std::uint64_t big = gen.tower().top().size() - 1;
    if (big == 0) return 0;
    const std::uint64_t qj = gen.tower().q() % big == 0 ? 0 : [&] {
        std::uint64_t acc = 1 % big;
        for (unsigned i = 0; i < gen.exponent(); ++i) acc = (acc * (gen.tower().q() % big)) % big;
        return acc;
    }();
    std::uint64_t e = 0, term = 1 % big;
    for (unsigned i = 0; i < m; ++i) {
        e = (e + term) % big;
        term = (term * qj) % big;
    }
    return e;
}

/// Canonically least k with N_{m,sigma}(k) = target (target must be in the image).
inline std::uint32_t least_partial_norm_preimage(const GaloisGenerator& gen, unsigned m, std::uint32_t target) {
    const FiniteField& top = gen.tower().top();
    const std::uint64_t big = top.size() - 1;
    if (big == 0) return top.one();
    const std::uint64_t e = partial_norm_exponent(gen, m);
    const std::uint64_t t = top.log(target);
    const std::uint64_t d = gcd_u64(e == 0 ? big : e, big);
    if (t % d != 0) throw internal_error("target is not in the partial norm image");
    const std::uint64_t reduced_mod = big / d;
    const std::uint64_t i0 =
        reduced_mod == 1 ? 0 : ((t / d) % reduced_mod * mod_inverse((e / d) % reduced_mod, reduced_mod)) % reduced_mod;
    std::uint32_t best = 0;
    std::uint64_t best_rank = 0;
    for (std::uint64_t l = 0; l < d; ++l) {
        std::uint32_t k = top.exp(i0 + l * reduced_mod);
        std::uint64_t r = top.rank_of(k);
        if (!best || r < best_rank) {
            best = k;
            best_rank = r;
        }
    }
    if (partial_norm(gen, m, best) != target) throw internal_error("partial norm preimage solve failed");
    return best;
}

inline void require_binomial_proper_pair(const PetitAlgebra& A, const PetitAlgebra& B) {
    if (!A.binomial_a() || !B.binomial_a()) throw hypothesis_violation("moduli must have the form t^m - a");
    if (A.tower().in_base(*A.binomial_a()) || B.tower().in_base(*B.binomial_a()))
        throw hypothesis_violation("a and b must lie outside the base field");
}

}  // namespace detail

/// Isomorphism decision for S_{t^m-a} vs S_{t^m-b}, same K, same sigma:
/// isomorphic iff some tau in Gal(K/F) and k in K^x satisfy
/// tau(a) = N_{m,sigma}(k) b. The search over tau plus an O(1) membership
/// test in the precomputed partial-norm image decides it; for n >= m-1 a
/// failed search is conclusive, below that the theorem only gives the
/// sufficient direction and the verdict stays Inconclusive.
inline IsoVerdict iso_criterion(const std::shared_ptr<const PetitAlgebra>& Aptr,
                                const std::shared_ptr<const PetitAlgebra>& Bptr) {
    const PetitAlgebra& A = *Aptr;
    const PetitAlgebra& B = *Bptr;
    if (A.tower_ptr().get() != B.tower_ptr().get()) throw hypothesis_violation("algebras must share the tower");
    if (A.gen().exponent() != B.gen().exponent()) throw hypothesis_violation("algebras must share the twist");
    if (A.m() != B.m()) throw hypothesis_violation("algebras must share the degree m");
    detail::require_binomial_proper_pair(A, B);

    const ExtensionTower& tower = A.tower();
    const FiniteField& top = tower.top();
    const std::uint32_t a = *A.binomial_a();
    const std::uint32_t b = *B.binomial_a();
    const unsigned n = tower.n(), m = A.m();

    PartialNormImage image(A.gen(), m);
    for (unsigned tau = 0; tau < n; ++tau) {
        std::uint32_t target = top.mul(tower.sigma_pow(static_cast<long>(tau), a), top.inv(b));
        if (image.contains(target)) {
            IsoWitness w{tau, detail::least_partial_norm_preimage(A.gen(), m, target)};
            if (tower.sigma_pow(tau, a) != top.mul(partial_norm(A.gen(), m, w.k), b))
                throw internal_error("isomorphism witness fails its defining equation");
            return {IsoStatus::kIsomorphic, w, "criterion"};
        }
    }
    if (n >= m - 1) return {IsoStatus::kNotIsomorphic, std::nullopt, "criterion"};
    return {IsoStatus::kInconclusive, std::nullopt, "criterion"};
}

/// Norm-class obstruction: N(a) outside (N(K^x))^m N(b) rules isomorphism
/// out. Returns nothing when the obstruction fails to apply.
inline std::optional<IsoVerdict> norm_obstruction(const std::shared_ptr<const PetitAlgebra>& Aptr,
                                                  const std::shared_ptr<const PetitAlgebra>& Bptr) {
    const PetitAlgebra& A = *Aptr;
    const PetitAlgebra& B = *Bptr;
    if (A.tower_ptr().get() != B.tower_ptr().get()) throw hypothesis_violation("algebras must share the tower");
    if (A.gen().exponent() != B.gen().exponent()) throw hypothesis_violation("algebras must share the twist");
    if (A.m() != B.m()) throw hypothesis_violation("algebras must share the degree m");
    detail::require_binomial_proper_pair(A, B);
    const unsigned n = A.n(), m = A.m();
    if (n + 1 < m) throw hypothesis_violation("norm obstruction needs n >= m-1");

    const ExtensionTower& tower = A.tower();
    const FiniteField& top = tower.top();
    std::vector<bool> norm_mth_powers(top.size(), false);
    for (std::uint64_t z = 1; z < top.size(); ++z)
        norm_mth_powers[top.pow(tower.norm(static_cast<std::uint32_t>(z)), m)] = true;
    std::uint32_t ratio = top.div(tower.norm(*A.binomial_a()), tower.norm(*B.binomial_a()));
    if (!norm_mth_powers[ratio]) return IsoVerdict{IsoStatus::kNotIsomorphic, std::nullopt, "norm-obstruction"};
    return std::nullopt;
}

/// An isomorphism candidate: restriction tau on K and the image of t.
/// Determines the whole map by H(sum x_i t^i) = sum tau(x_i) u^(i) with
/// u^(i) = u u^(i-1).
struct OracleMap {
    unsigned tau_exponent;
    AlgebraElement t_image;
};

inline AlgebraElement apply_oracle_map(const std::shared_ptr<const PetitAlgebra>& Bptr, const OracleMap& map,
                                       const AlgebraElement& x) {
    const PetitAlgebra& B = *Bptr;
    const ExtensionTower& tower = B.tower();
    const unsigned m = x.owner().m();
    std::vector<AlgebraElement> upow;
    upow.reserve(m);
    upow.push_back(B.one());
    for (unsigned i = 1; i < m; ++i) upow.push_back(map.t_image * upow.back());
    AlgebraElement acc = B.zero();
    for (unsigned i = 0; i < m; ++i)
        acc = acc + B.scale_top(tower.sigma_pow(map.tau_exponent, x.coeff(i)), upow[i]);
    return acc;
}

/// Full re-verification of a candidate map: multiplicative on every basis
/// pair and bijective as an F-linear map.
inline bool oracle_map_is_isomorphism(const std::shared_ptr<const PetitAlgebra>& Aptr,
                                      const std::shared_ptr<const PetitAlgebra>& Bptr, const OracleMap& map) {
    const PetitAlgebra& A = *Aptr;
    const PetitAlgebra& B = *Bptr;
    const unsigned D = A.dim_f();
    if (D != B.dim_f()) return false;
    std::vector<AlgebraElement> h_basis;
    h_basis.reserve(D);
    for (unsigned b = 0; b < D; ++b) h_basis.push_back(apply_oracle_map(Bptr, map, A.basis_element(b)));
    for (unsigned b1 = 0; b1 < D; ++b1)
        for (unsigned b2 = 0; b2 < D; ++b2) {
            AlgebraElement lhs = apply_oracle_map(Bptr, map, A.basis_element(b1) * A.basis_element(b2));
            if (!(lhs == h_basis[b1] * h_basis[b2])) return false;
        }
    Mat hm(B.base_field_ptr(), D, D);
    for (unsigned b = 0; b < D; ++b) {
        auto col = B.f_coords(h_basis[b]);
        for (unsigned r = 0; r < D; ++r) hm.at(r, b) = col[r];
    }
    return hm.invertible();
}

namespace detail {
constexpr std::uint64_t kOracleCap = 1 << 12;
}

/// Exhaustive isomorphism search between proper Petit algebras over the same
/// tower. Every isomorphism restricts to some tau in Gal(K/F) on the left
/// nucleus K and is determined by tau and the image of t, so sweeping all
/// (tau, u) pairs is complete. Candidates are checked multiplicatively on
/// basis pairs (discriminating pairs first) and for bijectivity.
inline std::vector<OracleMap> brute_force_iso_all(const std::shared_ptr<const PetitAlgebra>& Aptr,
                                                  const std::shared_ptr<const PetitAlgebra>& Bptr,
                                                  std::size_t limit = static_cast<std::size_t>(-1)) {
    const PetitAlgebra& A = *Aptr;
    const PetitAlgebra& B = *Bptr;
    if (A.tower_ptr().get() != B.tower_ptr().get()) throw hypothesis_violation("algebras must share the tower");
    if (!A.proper() || !B.proper()) throw hypothesis_violation("oracle needs proper (nonassociative) algebras");
    if (A.element_count() > detail::kOracleCap || B.element_count() > detail::kOracleCap)
        throw size_cap_exceeded("oracle sweep exceeds its cap");

    std::vector<OracleMap> found;
    if (A.m() != B.m()) return found;  // F-dimensions differ

    const ExtensionTower& tower = A.tower();
    const unsigned n = A.n(), m = A.m(), D = A.dim_f();

    std::vector<AlgebraElement> basis;
    basis.reserve(D);
    for (unsigned b = 0; b < D; ++b) basis.push_back(A.basis_element(b));
    std::vector<std::vector<AlgebraElement>> products;
    products.reserve(D);
    for (unsigned b1 = 0; b1 < D; ++b1) {
        std::vector<AlgebraElement> row;
        row.reserve(D);
        for (unsigned b2 = 0; b2 < D; ++b2) row.push_back(basis[b1] * basis[b2]);
        products.push_back(std::move(row));
    }

    // basis index of t is n, of the K-generator is 1, of t^{m-1} is (m-1)n;
    // pairs touching those kill bad candidates fastest
    std::vector<std::pair<unsigned, unsigned>> pairs;
    auto push_unique = [&](unsigned x, unsigned y) {
        if (x >= D || y >= D) return;
        for (auto& p : pairs)
            if (p.first == x && p.second == y) return;
        pairs.emplace_back(x, y);
    };
    push_unique(n, 1);
    push_unique(1, n);
    push_unique((m - 1) * n, n);
    push_unique(n, (m - 1) * n);
    for (unsigned b1 = 0; b1 < D; ++b1)
        for (unsigned b2 = 0; b2 < D; ++b2) push_unique(b1, b2);

    const std::uint64_t count = B.element_count();
    std::vector<AlgebraElement> h_basis;
    h_basis.reserve(D);
    for (unsigned tau = 0; tau < n; ++tau) {
        for (std::uint64_t urank = 0; urank < count; ++urank) {
            AlgebraElement u = B.element_at_rank(urank);
            std::vector<AlgebraElement> upow;
            upow.reserve(m);
            upow.push_back(B.one());
            for (unsigned i = 1; i < m; ++i) upow.push_back(u * upow.back());
            h_basis.clear();
            for (unsigned b = 0; b < D; ++b)
                h_basis.push_back(
                    B.scale_top(tower.sigma_pow(tau, tower.f_basis()[b % n]), upow[b / n]));
            auto apply = [&](const AlgebraElement& x) {
                AlgebraElement acc = B.zero();
                for (unsigned i = 0; i < m; ++i)
                    acc = acc + B.scale_top(tower.sigma_pow(tau, x.coeff(i)), upow[i]);
                return acc;
            };
            bool ok = true;
            for (const auto& [b1, b2] : pairs) {
                if (!(apply(products[b1][b2]) == h_basis[b1] * h_basis[b2])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Mat hm(B.base_field_ptr(), D, D);
            for (unsigned b = 0; b < D; ++b) {
                auto col = B.f_coords(h_basis[b]);
                for (unsigned r = 0; r < D; ++r) hm.at(r, b) = col[r];
            }
            if (!hm.invertible()) continue;
            found.push_back({tau, u});
            if (found.size() >= limit) return found;
        }
    }
    return found;
}

inline std::optional<OracleMap> brute_force_iso(const std::shared_ptr<const PetitAlgebra>& Aptr,
                                                const std::shared_ptr<const PetitAlgebra>& Bptr) {
    auto all = brute_force_iso_all(Aptr, Bptr, 1);
    if (all.empty()) return std::nullopt;
    return all.front();
}

/// Isomorphism verdict across possibly different generators. Distinct towers
/// force distinct left nuclei; distinct generators with n >= m-1 fall under
/// the cross-generator non-isomorphism theorem; below that range the oracle
/// settles small instances and anything else stays Inconclusive.
inline IsoVerdict cross_generator_verdict(const std::shared_ptr<const PetitAlgebra>& Aptr,
                                          const std::shared_ptr<const PetitAlgebra>& Bptr) {
    const PetitAlgebra& A = *Aptr;
    const PetitAlgebra& B = *Bptr;
    detail::require_binomial_proper_pair(A, B);
    if (!A.proper() || !B.proper()) throw hypothesis_violation("verdict needs proper algebras");
    if (A.tower_ptr().get() != B.tower_ptr().get())
        return {IsoStatus::kNotIsomorphic, std::nullopt, "nucleus-mismatch"};
    if (A.m() != B.m()) return {IsoStatus::kNotIsomorphic, std::nullopt, "dimension-mismatch"};
    if (A.gen().exponent() == B.gen().exponent()) return iso_criterion(Aptr, Bptr);
    const unsigned n = A.n(), m = A.m();
    if (n + 1 >= m) return {IsoStatus::kNotIsomorphic, std::nullopt, "cross-generator-rule"};
    if (A.element_count() <= detail::kOracleCap) {
        auto map = brute_force_iso(Aptr, Bptr);
        if (map) return {IsoStatus::kIsomorphic, std::nullopt, "oracle"};
        return {IsoStatus::kNotIsomorphic, std::nullopt, "oracle"};
    }
    return {IsoStatus::kInconclusive, std::nullopt, "cross-generator-open"};
}

enum class IsotopyStatus { kIsotopic, kNotIsotopic, kUnsupported };

struct IsotopyVerdict {
    IsotopyStatus status;
    std::string reason;
    std::optional<IsoVerdict> underlying;
};

/// Isotopy for nonassociative cyclic algebras (n = m >= 3): isotopic
/// algebras share the generator, and with the generator fixed isotopy
/// coincides with isomorphism. Outside that regime no rule is available
/// and the verdict is Unsupported.
inline IsotopyVerdict isotopy_verdict(const std::shared_ptr<const PetitAlgebra>& Aptr,
                                      const std::shared_ptr<const PetitAlgebra>& Bptr) {
    const PetitAlgebra& A = *Aptr;
    const PetitAlgebra& B = *Bptr;
    detail::require_binomial_proper_pair(A, B);
    if (!A.proper() || !B.proper()) throw hypothesis_violation("isotopy verdict needs proper algebras");
    if (A.tower_ptr().get() != B.tower_ptr().get())
        throw hypothesis_violation("isotopy verdict needs algebras over the same tower");
    if (A.m() != B.m()) throw hypothesis_violation("isotopy verdict needs equal degrees");
    if (A.m() < 3 || A.n() != A.m())
        return {IsotopyStatus::kUnsupported, "theorem requires n = m >= 3", std::nullopt};
    if (A.gen().exponent() != B.gen().exponent())
        return {IsotopyStatus::kNotIsotopic, "isotopic cyclic algebras share the generator", std::nullopt};
    IsoVerdict iso = iso_criterion(Aptr, Bptr);
    if (iso.status == IsoStatus::kIsomorphic)
        return {IsotopyStatus::kIsotopic, "isomorphic with the same generator", iso};
    return {IsotopyStatus::kNotIsotopic, "same generator, not isomorphic; isotopy would force isomorphism", iso};
}

struct CensusResult {
    std::uint64_t q = 0;
    unsigned m = 0;
    unsigned j = 0;
    std::vector<std::uint32_t> representatives;  // canonically least element per class
    std::uint64_t class_count = 0;
    std::optional<std::uint64_t> formula_count;  // closed form, m prime
    std::vector<std::uint32_t> class_index;      // per top code; UINT32_MAX off K minus F
};

/// Exact class count from the counting theorem, m prime.
inline std::uint64_t census_formula(std::uint64_t q, unsigned m) {
    if (!is_prime_u64(m)) throw hypothesis_violation("counting formula needs m prime");
    const std::uint64_t qm = checked_pow(q, m);
    if ((q - 1) % m != 0) return (qm - q) / (m * (q - 1));
    return (m - 1) + (qm - q - (q - 1) * (m - 1)) / (m * (q - 1));
}

/// Partition of K minus F into isomorphism classes of S_{t^m-a}, n = m.
/// Classes are the orbits of a -> sigma^c(a) w over automorphisms sigma^c
/// and partial-norm image elements w.
inline CensusResult census(std::uint64_t q, unsigned m, unsigned j) {
    auto tower = ExtensionTower::make(q, m);
    GaloisGenerator gen(tower, j);
    const FiniteField& top = tower->top();
    const std::uint64_t total = top.size();
    if (total > size_cap()) throw size_cap_exceeded("census enumeration exceeds cap");

    PartialNormImage image(gen, m);
    CensusResult result;
    result.q = q;
    result.m = m;
    result.j = j;
    result.class_index.assign(total, UINT32_MAX);

    std::uint64_t covered = 0;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        std::uint32_t a = top.code_at_rank(rank);
        if (tower->in_base(a) || result.class_index[a] != UINT32_MAX) continue;
        auto cls = static_cast<std::uint32_t>(result.class_count);
        for (unsigned c = 0; c < tower->n(); ++c) {
            std::uint32_t conj = tower->sigma_pow(static_cast<long>(c), a);
            for (std::uint32_t w : image.elements()) {
                std::uint32_t elt = top.mul(conj, w);
                if (result.class_index[elt] == UINT32_MAX) {
                    result.class_index[elt] = cls;
                    ++covered;
                }
            }
        }
        result.representatives.push_back(a);
        ++result.class_count;
    }
    if (covered != total - q) throw internal_error("census classes do not partition K minus F");
    if (is_prime_u64(m)) {
        result.formula_count = census_formula(q, m);
        if (*result.formula_count != result.class_count)
            throw internal_error("census disagrees with the counting formula");
    }
    return result;
}

struct ParamMember {
    std::uint32_t value = 0;             // top-field code
    std::uint32_t index_set = 0;         // bitmask of I (kind S)
    std::vector<std::uint32_t> tuple;    // chosen coset representative (base codes)
};

struct ParamSet {
    std::string kind;  // "S" | "S2" | "S2-prime"
    std::uint64_t q = 0;
    unsigned m = 0;
    unsigned j = 1;
    std::uint32_t zeta = 0;    // base code, primitive mth root with sigma(beta) = zeta beta (kind S)
    std::uint32_t b = 0;       // base code, least non-mth-power (kind S)
    std::uint32_t beta = 0;    // top code, least root of x^m - b (kind S)
    std::uint32_t c = 0;       // base code, least non-square (kind S2)
    std::uint32_t sqrt_c = 0;  // top code, least square root of c (kind S2)
    std::vector<ParamMember> members;
};

namespace detail {
/// Shared transversality assertions: members pairwise non-isomorphic and in
/// bijection with the census classes.
inline void assert_transversal(const ParamSet& set) {
    auto tower = ExtensionTower::make(set.q, set.m);
    CensusResult cens = census(set.q, set.m, set.j);
    std::vector<bool> seen(cens.class_count, false);
    for (const auto& member : set.members) {
        if (tower->in_base(member.value)) throw internal_error("parametrization member lies in the base field");
        std::uint32_t cls = cens.class_index[member.value];
        if (cls == UINT32_MAX || seen[cls]) throw internal_error("parametrization members are not class-distinct");
        seen[cls] = true;
    }
    if (set.members.size() != cens.class_count)
        throw internal_error("parametrization does not cover every isomorphism class");
    for (std::size_t i = 0; i < set.members.size(); ++i) {
        auto Ai = PetitAlgebra::make_cyclic(tower, set.j, set.m, set.members[i].value);
        for (std::size_t k = i + 1; k < set.members.size(); ++k) {
            auto Ak = PetitAlgebra::make_cyclic(tower, set.j, set.m, set.members[k].value);
            if (iso_criterion(Ai, Ak).status != IsoStatus::kNotIsomorphic)
                throw internal_error("parametrization members are isomorphic");
        }
    }
}
}  // namespace detail

/// The explicit transversal S(F_{q^m}) for odd prime m with a primitive mth
/// root of unity in F_q: members are sums over index sets I of beta-power
/// terms, one per coset of Delta_I in (F_q^x)^k, built from the canonical
/// beta with sigma(beta) = zeta beta.
inline ParamSet parametrize_S(std::uint64_t q, unsigned m, unsigned j = 1) {
    auto [p, e] = split_prime_power(q);
    (void)e;
    if (p == 2) throw hypothesis_violation("parametrization needs odd characteristic");
    if (m < 3 || !is_prime_u64(m)) throw hypothesis_violation("parametrization needs m an odd prime");
    if ((q - 1) % m != 0) throw hypothesis_violation("F_q must contain a primitive mth root of unity");

    auto tower = ExtensionTower::make(q, m);
    GaloisGenerator gen(tower, j);
    const FiniteField& base = tower->base();
    const FiniteField& top = tower->top();

    ParamSet set;
    set.kind = "S";
    set.q = q;
    set.m = m;
    set.j = j;

    for (std::uint64_t rank = 1; rank < q; ++rank) {
        std::uint32_t u = base.code_at_rank(rank);
        if (base.pow(u, (q - 1) / m) != base.one()) {
            set.b = u;
            break;
        }
    }

    const std::uint32_t b_top = tower->embed(set.b);
    for (std::uint64_t rank = 1; rank < top.size(); ++rank) {
        std::uint32_t z = top.code_at_rank(rank);
        if (top.pow(z, m) == b_top) {
            set.beta = z;
            break;
        }
    }
    if (!set.beta) throw internal_error("x^m - b has no root in the top field");

    // normalize zeta so that sigma(beta) = zeta beta
    std::uint32_t zeta_top = top.div(gen(set.beta), set.beta);
    if (!tower->in_base(zeta_top)) throw internal_error("sigma(beta)/beta escapes the base field");
    set.zeta = tower->to_base(zeta_top);
    if (base.mult_order(set.zeta) != m) throw internal_error("sigma(beta)/beta is not a primitive mth root");

    std::vector<std::uint32_t> beta_pow(m);
    for (unsigned i = 0; i < m; ++i) beta_pow[i] = top.pow(set.beta, i);

    for (std::uint32_t mask = 2; mask < (1u << m); ++mask) {
        std::vector<unsigned> indices;
        for (unsigned i = 0; i < m; ++i)
            if (mask & (1u << i)) indices.push_back(i);
        const unsigned k = static_cast<unsigned>(indices.size()) - 1;
        if (k == 0) {
            set.members.push_back({beta_pow[indices[0]], mask, {}});
            continue;
        }
        // Delta_I: cyclic subgroup generated by (zeta^{i_1-i_0}, ..., zeta^{i_k-i_0})
        std::vector<std::vector<std::uint32_t>> delta;
        {
            std::vector<std::uint32_t> g(k), cur(k);
            for (unsigned t = 0; t < k; ++t) g[t] = base.pow(set.zeta, indices[t + 1] - indices[0]);
            for (unsigned t = 0; t < k; ++t) cur[t] = base.one();
            do {
                for (unsigned t = 0; t < k; ++t) cur[t] = base.mul(cur[t], g[t]);
                delta.push_back(cur);
            } while (!std::all_of(cur.begin(), cur.end(), [&](std::uint32_t v) { return v == base.one(); }));
        }
        const std::uint64_t tuples = checked_pow(q - 1, k);
        if (tuples > size_cap()) throw size_cap_exceeded("coset enumeration exceeds cap");
        std::vector<bool> visited(tuples, false);
        auto encode = [&](const std::vector<std::uint32_t>& tup) {
            std::uint64_t code = 0;
            for (unsigned t = 0; t < k; ++t) code = code * (q - 1) + (base.rank_of(tup[t]) - 1);
            return code;
        };
        for (std::uint64_t idx = 0; idx < tuples; ++idx) {
            if (visited[idx]) continue;
            std::vector<std::uint32_t> rep(k);
            std::uint64_t rest = idx;
            for (unsigned t = k; t-- > 0;) {
                rep[t] = base.code_at_rank(1 + rest % (q - 1));
                rest /= (q - 1);
            }
            for (const auto& d : delta) {
                std::vector<std::uint32_t> moved(k);
                for (unsigned t = 0; t < k; ++t) moved[t] = base.mul(rep[t], d[t]);
                visited[encode(moved)] = true;
            }
            std::uint32_t value = beta_pow[indices[0]];  // a_{i_0} = 1
            for (unsigned t = 0; t < k; ++t)
                value = top.add(value, top.mul(tower->embed(rep[t]), beta_pow[indices[t + 1]]));
            set.members.push_back({value, mask, rep});
        }
    }

    detail::assert_transversal(set);
    return set;
}

struct S2Sets {
    ParamSet s2;
    ParamSet s2_prime;
};

/// The quaternion-case transversals S_2 and S' over F_{q^2}, q odd.
inline S2Sets parametrize_S2(std::uint64_t q) {
    auto [p, e] = split_prime_power(q);
    (void)e;
    if (p == 2) throw hypothesis_violation("parametrization needs odd characteristic");

    auto tower = ExtensionTower::make(q, 2);
    const FiniteField& base = tower->base();
    const FiniteField& top = tower->top();

    std::uint32_t c = 0;
    for (std::uint64_t rank = 1; rank < q; ++rank) {
        std::uint32_t u = base.code_at_rank(rank);
        if (base.pow(u, (q - 1) / 2) != base.one()) {
            c = u;
            break;
        }
    }

    std::uint32_t sqrt_c = 0;
    const std::uint32_t c_top = tower->embed(c);
    for (std::uint64_t rank = 1; rank < top.size(); ++rank) {
        std::uint32_t z = top.code_at_rank(rank);
        if (top.mul(z, z) == c_top) {
            sqrt_c = z;
            break;
        }
    }
    if (!sqrt_c) throw internal_error("x^2 - c has no root in the top field");

    std::vector<std::uint32_t> sign_reps;  // F_q^x / {+-1}
    {
        std::vector<bool> visited(q, false);
        for (std::uint64_t rank = 1; rank < q; ++rank) {
            std::uint32_t s = base.code_at_rank(rank);
            if (visited[s]) continue;
            visited[s] = true;
            visited[base.neg(s)] = true;
            sign_reps.push_back(s);
        }
    }

    S2Sets sets;
    for (auto* set : {&sets.s2, &sets.s2_prime}) {
        set->q = q;
        set->m = 2;
        set->j = 1;
        set->c = c;
        set->sqrt_c = sqrt_c;
    }
    sets.s2.kind = "S2";
    sets.s2.members.push_back({sqrt_c, 0, {}});
    for (std::uint32_t s : sign_reps)
        sets.s2.members.push_back({top.add(top.one(), top.mul(tower->embed(s), sqrt_c)), 0, {s}});

    sets.s2_prime.kind = "S2-prime";
    sets.s2_prime.members.push_back({sqrt_c, 0, {0}});
    for (std::uint32_t t : sign_reps)
        sets.s2_prime.members.push_back({top.add(tower->embed(t), sqrt_c), 0, {t}});

    detail::assert_transversal(sets.s2);
    detail::assert_transversal(sets.s2_prime);
    return sets;
}

}  // namespace petit
