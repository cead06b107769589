#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

#include "matdist/matrix.hpp"
#include "matdist/poly.hpp"

namespace matdist {

/// Integer partition with weakly decreasing parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    static std::vector<Partition> all(unsigned n);

    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    unsigned size() const;         // |lambda|
    unsigned sum_squares() const;  // |lambda|_2
    unsigned count_eq(unsigned j) const;  // m_j(lambda)
    unsigned max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string str() const;  // "(2,1)"

  private:
    std::vector<unsigned> parts_;
};

/// Canonical total order: by |lambda|, then lexicographic on the parts.
bool partition_less(const Partition& a, const Partition& b);

/**
 * Cycle type: the finite-support map from monic irreducibles to partitions
 * classifying a matrix up to similarity. Factors are kept in canonical
 * polynomial order; the degree of the formal product is sum deg(pi)*|lambda|.
 */
struct CycleType {
    std::vector<std::pair<FqPoly, Partition>> factors;

    unsigned degree() const;
    std::string str() const;
    /// Deterministic cache key (injective on cycle types of one field).
    std::string key() const;
    bool operator==(const CycleType& o) const;
};

/// Extracts the cycle type from the rank sequence of pi(A)^j per irreducible
/// factor pi of the characteristic polynomial: the number of parts >= j is
/// (rank_{j-1} - rank_j) / deg pi.
CycleType cycle_type(const FqMatrix& a, IrrSieve& sieve);

struct ClassTypeComponent {
    unsigned d = 0;
    Partition lambda;
    bool operator==(const ClassTypeComponent& o) const { return d == o.d && lambda == o.lambda; }
};
bool component_less(const ClassTypeComponent& a, const ClassTypeComponent& b);

/// Class type: the cycle type with polynomials replaced by their degrees.
struct ClassType {
    std::vector<ClassTypeComponent> comps;  // canonically sorted
    unsigned degree() const;
    std::string str() const;
    bool operator==(const ClassType& o) const { return comps == o.comps; }
};

ClassType class_type(const CycleType& ct);

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
mpz_class gl_order(unsigned q, unsigned n);

/// Exact centralizer order in GL_n(F_q) from the class type, via the product
/// over components of c(d^lambda) = q^{d*|lambda'|_2} prod_j (1/q^d)_{m_j}.
mpz_class centralizer_order(const ClassType& t, unsigned q);

/// Exact similarity class size |GL_n| / centralizer (orbit-stabilizer).
mpz_class similarity_class_size(const ClassType& t, unsigned q, unsigned n);

/**
 * Quadratic cycle type: the cycle type's factors split into four groups by
 * their behavior under T -> -T (writing f~ for the monic normalization of
 * f(-T)):
 *   - alpha: the partition at the factor T;
 *   - plus:  pairs {zeta, zeta~} with zeta~ != zeta and both present, keyed
 *            by the lexicographically smaller mate (beta on the key, gamma
 *            on the mate);
 *   - sq:    factors f with f~ == f and f != T; such f equal pi(T^2) for an
 *            irreducible pi, recorded as (pi, lambda);
 *   - minus: factors whose mate is absent.
 */
struct QuadCycleType {
    Partition alpha;
    std::vector<std::tuple<FqPoly, Partition, Partition>> plus;
    std::vector<std::pair<FqPoly, Partition>> sq;
    std::vector<std::pair<FqPoly, Partition>> minus;

    unsigned degree() const;
    std::string str() const;
};

/// Unordered pair of partitions attached to a mate-pair of degree d; the
/// canonical form keeps the partition_less-greater one first.
struct PlusComponent {
    unsigned d = 0;
    Partition first, second;
    bool operator==(const PlusComponent& o) const {
        return d == o.d && first == o.first && second == o.second;
    }
};
bool plus_component_less(const PlusComponent& a, const PlusComponent& b);

/// Quadratic class type: the quadratic cycle type with polynomials replaced
/// by their degrees (sq components carry d = deg pi, i.e. half the factor
/// degree). Carrier of the radical invariant, centralizer size, class size
/// and cycle-type count.
struct QuadClassType {
    Partition alpha;
    std::vector<PlusComponent> plus;
    std::vector<ClassTypeComponent> sq;
    std::vector<ClassTypeComponent> minus;

    unsigned degree() const;
    ClassType flatten() const;
    std::string str() const;
    bool operator==(const QuadClassType& o) const;
};
bool quad_class_type_less(const QuadClassType& a, const QuadClassType& b);

QuadCycleType quad_cycle_type(const CycleType& ct);
QuadClassType quad_class_type_of(const QuadCycleType& qct);
std::pair<QuadCycleType, QuadClassType> quad_class_type(const FqMatrix& a, IrrSieve& sieve);

/**
 * Polynomial pools for counting and realizing quadratic types over one field:
 * per degree d, the mate-pairs {zeta, zeta~} (zeta~ != zeta) and the
 * irreducibles pi with pi(T^2) irreducible. Built once from the sieve.
 */
struct QuadPools {
    // pair_list[d]: (lexicographically smaller mate, larger mate)
    std::vector<std::vector<std::pair<FqPoly, FqPoly>>> pair_list;
    // even_list[d]: pi of degree d with pi(T^2) irreducible of degree 2d
    std::vector<std::vector<FqPoly>> even_list;

    std::uint64_t mate_pairs(unsigned d) const {
        return d < pair_list.size() ? pair_list[d].size() : 0;
    }
    std::uint64_t even_count(unsigned d) const {
        return d < even_list.size() ? even_list[d].size() : 0;
    }
};

QuadPools build_quad_pools(IrrSieve& sieve, unsigned max_degree);

/// y_tau: the number of quadratic cycle types with quadratic class type tau,
/// counted as admissible assignments of distinct polynomials from the pools
/// (multinomial choice of mate-pairs / even irreducibles, times 2 for each
/// orientable draw).
mpz_class count_quad_cycle_types(const QuadClassType& tau, const QuadPools& pools);

/// All quadratic class types of degree n realized over the sieve's field
/// (y_tau > 0), generated by iterating degree compositions and partitions,
/// sorted canonically.
std::vector<QuadClassType> enumerate_quad_class_types(unsigned n, IrrSieve& sieve);

/// As above but without the realizability filter (y_tau may be zero).
std::vector<QuadClassType> enumerate_quad_class_shapes(unsigned n);

/// A concrete matrix with the given quadratic class type, as a block
/// diagonal of companion matrices of powers of pooled irreducibles.
/// Throws if the type is not realizable over the field (y_tau = 0).
FqMatrix representative(const QuadClassType& tau, IrrSieve& sieve);

/// One representative per similarity class of M_n(F_q): every cycle type of
/// degree n, paired with its rational-canonical-form representative.
std::vector<std::pair<CycleType, FqMatrix>> all_class_reps(FieldPtr field, unsigned n,
                                                           IrrSieve& sieve);

}  // namespace matdist
