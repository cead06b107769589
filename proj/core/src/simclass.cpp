#include "matdist/simclass.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace matdist {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::vector<Partition> Partition::all(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    // parts chosen weakly decreasing
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(current));
            return;
        }
        for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

unsigned Partition::size() const {
    unsigned s = 0;
    for (unsigned p : parts_) s += p;
    return s;
}

unsigned Partition::sum_squares() const {
    unsigned s = 0;
    for (unsigned p : parts_) s += p * p;
    return s;
}

unsigned Partition::count_eq(unsigned j) const {
    unsigned c = 0;
    for (unsigned p : parts_) c += (p == j);
    return c;
}

Partition Partition::conjugate() const {
    std::vector<unsigned> conj;
    for (unsigned j = 1; j <= max_part(); ++j) {
        unsigned c = 0;
        for (unsigned p : parts_) c += (p >= j);
        conj.push_back(c);
    }
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool partition_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
}

unsigned CycleType::degree() const {
    unsigned d = 0;
    for (const auto& [pi, lambda] : factors) d += static_cast<unsigned>(pi.degree()) * lambda.size();
    return d;
}

std::string CycleType::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [pi, lambda] : factors) {
        if (!out.empty()) out += "·";
        const bool simple = pi.degree() == 1 && pi.coeff(0) == 0;
        out += simple ? pi.str() : "(" + pi.str() + ")";
        out += "^" + lambda.str();
    }
    return out;
}

std::string CycleType::key() const {
    std::string k;
    for (const auto& [pi, lambda] : factors) {
        k += std::to_string(pi.degree()) + ":" + std::to_string(pi.encoding()) + "^";
        for (unsigned part : lambda.parts()) k += std::to_string(part) + ".";
        k += ";";
    }
    return k;
}

bool CycleType::operator==(const CycleType& o) const {
    if (factors.size() != o.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].first != o.factors[i].first || !(factors[i].second == o.factors[i].second))
            return false;
    return true;
}

CycleType cycle_type(const FqMatrix& a, IrrSieve& sieve) {
    CycleType out;
    const FqPoly cp = char_poly(a);
    for (const auto& [pi, mult] : sieve.factor(cp)) {
        const unsigned d = static_cast<unsigned>(pi.degree());
        const FqMatrix base = eval_at_matrix(pi, a);
        // rank sequence of base^j; stop once it stabilizes
        std::vector<unsigned> num_parts_ge;  // index j-1 -> #parts >= j
        unsigned prev_rank = a.n();
        FqMatrix power = base;
        while (true) {
            const unsigned rank = power.rank();
            if (rank == prev_rank) break;
            num_parts_ge.push_back((prev_rank - rank) / d);
            prev_rank = rank;
            power = power * base;
        }
        Partition conj(std::move(num_parts_ge));
        Partition lambda = conj.conjugate();
        if (lambda.size() != mult)
            throw Error("rank sequence disagrees with factor multiplicity for " + pi.str());
        out.factors.emplace_back(pi, std::move(lambda));
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

bool component_less(const ClassTypeComponent& a, const ClassTypeComponent& b) {
    if (a.d != b.d) return a.d < b.d;
    return partition_less(a.lambda, b.lambda);
}

unsigned ClassType::degree() const {
    unsigned s = 0;
    for (const auto& c : comps) s += c.d * c.lambda.size();
    return s;
}

std::string ClassType::str() const {
    std::string out;
    for (const auto& c : comps) {
        if (!out.empty()) out += " ";
        out += std::to_string(c.d) + "^" + c.lambda.str();
    }
    return out;
}

ClassType class_type(const CycleType& ct) {
    ClassType out;
    for (const auto& [pi, lambda] : ct.factors)
        out.comps.push_back({static_cast<unsigned>(pi.degree()), lambda});
    std::sort(out.comps.begin(), out.comps.end(), component_less);
    return out;
}

mpz_class gl_order(unsigned q, unsigned n) {
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    mpz_class total = 1;
    mpz_class qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        total *= (qn - qi);
        qi *= q;
    }
    return total;
}

mpz_class centralizer_order(const ClassType& t, unsigned q) {
    // c(d^lambda) = q^{d*|lambda'|_2} * prod_j prod_{i=1}^{m_j} (1 - q^{-d*i});
    // expanding the Pochhammer factors leaves a nonnegative power of q times
    // a product of (q^{d*i} - 1) terms, so the result is an exact integer.
    mpz_class total = 1;
    for (const auto& comp : t.comps) {
        long exponent = static_cast<long>(comp.d) * comp.lambda.conjugate().sum_squares();
        mpz_class numerator = 1;
        for (unsigned j = 1; j <= comp.lambda.max_part(); ++j) {
            const unsigned m = comp.lambda.count_eq(j);
            for (unsigned i = 1; i <= m; ++i) {
                mpz_class qdi;
                mpz_ui_pow_ui(qdi.get_mpz_t(), q, static_cast<unsigned long>(comp.d) * i);
                numerator *= (qdi - 1);
                exponent -= static_cast<long>(comp.d) * i;
            }
        }
        if (exponent < 0) throw Error("centralizer exponent went negative; invalid class type");
        mpz_class qe;
        mpz_ui_pow_ui(qe.get_mpz_t(), q, static_cast<unsigned long>(exponent));
        total *= numerator * qe;
    }
    return total;
}

mpz_class similarity_class_size(const ClassType& t, unsigned q, unsigned n) {
    const mpz_class gl = gl_order(q, n);
    const mpz_class cent = centralizer_order(t, q);
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), gl.get_mpz_t(), cent.get_mpz_t());
    if (rem != 0) throw Error("centralizer order does not divide |GL_n|; invalid class type");
    return quot;
}

unsigned QuadCycleType::degree() const {
    unsigned s = alpha.size();
    for (const auto& [zeta, beta, gamma] : plus)
        s += static_cast<unsigned>(zeta.degree()) * (beta.size() + gamma.size());
    for (const auto& [pi, lambda] : sq) s += 2u * static_cast<unsigned>(pi.degree()) * lambda.size();
    for (const auto& [eta, kappa] : minus) s += static_cast<unsigned>(eta.degree()) * kappa.size();
    return s;
}

std::string QuadCycleType::str() const {
    std::string out;
    auto append = [&](const std::string& s) {
        if (!out.empty()) out += "·";
        out += s;
    };
    if (!alpha.empty()) append("T^" + alpha.str());
    for (const auto& [zeta, beta, gamma] : plus) {
        FqPoly mate = zeta.reflect();
        append("(" + zeta.str() + ")^" + beta.str() + "(" + mate.str() + ")^" + gamma.str());
    }
    for (const auto& [pi, lambda] : sq)
        append("(" + pi.compose_square().str() + ")^" + lambda.str());
    for (const auto& [eta, kappa] : minus) append("(" + eta.str() + ")^" + kappa.str());
    return out.empty() ? "1" : out;
}

bool plus_component_less(const PlusComponent& a, const PlusComponent& b) {
    if (a.d != b.d) return a.d < b.d;
    if (!(a.first == b.first)) return partition_less(a.first, b.first);
    return partition_less(a.second, b.second);
}

unsigned QuadClassType::degree() const {
    unsigned s = alpha.size();
    for (const auto& c : plus) s += c.d * (c.first.size() + c.second.size());
    for (const auto& c : sq) s += 2 * c.d * c.lambda.size();
    for (const auto& c : minus) s += c.d * c.lambda.size();
    return s;
}

ClassType QuadClassType::flatten() const {
    ClassType out;
    if (!alpha.empty()) out.comps.push_back({1, alpha});
    for (const auto& c : plus) {
        out.comps.push_back({c.d, c.first});
        out.comps.push_back({c.d, c.second});
    }
    for (const auto& c : sq) out.comps.push_back({2 * c.d, c.lambda});
    for (const auto& c : minus) out.comps.push_back({c.d, c.lambda});
    std::sort(out.comps.begin(), out.comps.end(), component_less);
    return out;
}

std::string QuadClassType::str() const {
    std::string out;
    auto append = [&](const std::string& s) {
        if (!out.empty()) out += "·";
        out += s;
    };
    if (!alpha.empty()) append("0^" + alpha.str());
    for (const auto& c : plus)
        append("(" + std::to_string(c.d) + "^" + c.first.str() + " " + std::to_string(c.d) + "^" +
               c.second.str() + ")_(+1)");
    if (!sq.empty()) {
        std::string body;
        for (const auto& c : sq) {
            if (!body.empty()) body += " ";
            body += std::to_string(c.d) + "^" + c.lambda.str();
        }
        append("(" + body + ")_(2)");
    }
    if (!minus.empty()) {
        std::string body;
        for (const auto& c : minus) {
            if (!body.empty()) body += " ";
            body += std::to_string(c.d) + "^" + c.lambda.str();
        }
        append("(" + body + ")_(-1)");
    }
    return out.empty() ? "1" : out;
}

bool QuadClassType::operator==(const QuadClassType& o) const {
    return alpha == o.alpha && plus == o.plus && sq == o.sq && minus == o.minus;
}

bool quad_class_type_less(const QuadClassType& a, const QuadClassType& b) {
    return a.str() < b.str();
}

QuadCycleType quad_cycle_type(const CycleType& ct) {
    QuadCycleType out;
    for (const auto& [f, lambda] : ct.factors) {
        if (f.degree() == 1 && f.coeff(0) == 0) {  // factor T
            out.alpha = lambda;
            continue;
        }
        const FqPoly mate = f.reflect();
        if (mate == f) {
            out.sq.emplace_back(f.decompose_square(), lambda);
            continue;
        }
        // look for the mate among the factors
        const Partition* mate_partition = nullptr;
        for (const auto& [g, mu] : ct.factors)
            if (g == mate) {
                mate_partition = &mu;
                break;
            }
        if (mate_partition) {
            if (poly_less(f, mate)) out.plus.emplace_back(f, lambda, *mate_partition);
            // the mate's own visit is skipped: the pair is keyed once
        } else {
            out.minus.emplace_back(f, lambda);
        }
    }
    return out;
}

QuadClassType quad_class_type_of(const QuadCycleType& qct) {
    QuadClassType out;
    out.alpha = qct.alpha;
    for (const auto& [zeta, beta, gamma] : qct.plus) {
        PlusComponent c;
        c.d = static_cast<unsigned>(zeta.degree());
        // the pair {beta, gamma} is unordered at the class level
        if (partition_less(beta, gamma)) {
            c.first = gamma;
            c.second = beta;
        } else {
            c.first = beta;
            c.second = gamma;
        }
        out.plus.push_back(std::move(c));
    }
    for (const auto& [pi, lambda] : qct.sq)
        out.sq.push_back({static_cast<unsigned>(pi.degree()), lambda});
    for (const auto& [eta, kappa] : qct.minus)
        out.minus.push_back({static_cast<unsigned>(eta.degree()), kappa});
    std::sort(out.plus.begin(), out.plus.end(), plus_component_less);
    std::sort(out.sq.begin(), out.sq.end(), component_less);
    std::sort(out.minus.begin(), out.minus.end(), component_less);
    return out;
}

std::pair<QuadCycleType, QuadClassType> quad_class_type(const FqMatrix& a, IrrSieve& sieve) {
    QuadCycleType qct = quad_cycle_type(cycle_type(a, sieve));
    QuadClassType t = quad_class_type_of(qct);
    return {std::move(qct), std::move(t)};
}

QuadPools build_quad_pools(IrrSieve& sieve, unsigned max_degree) {
    QuadPools pools;
    pools.pair_list.resize(max_degree + 1);
    pools.even_list.resize(max_degree + 1);
    for (unsigned d = 1; d <= max_degree; ++d) {
        for (const FqPoly& f : sieve.irreducibles(d)) {
            if (d == 1 && f.coeff(0) == 0) continue;  // the factor T is its own group
            const FqPoly mate = f.reflect();
            if (mate == f) {
                // f = pi(T^2); store pi at degree d/2
                const FqPoly pi = f.decompose_square();
                pools.even_list[static_cast<unsigned>(pi.degree())].push_back(pi);
            } else if (poly_less(f, mate)) {
                pools.pair_list[d].emplace_back(f, mate);
            }
        }
    }
    return pools;
}

namespace {

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Multinomial count of assigning distinct pool slots to instance groups of
// sizes mults[], times per-instance orientation weights.
mpz_class pool_assignments(std::uint64_t pool, const std::vector<std::pair<unsigned, unsigned>>& groups) {
    // groups: (multiplicity, orientations per instance)
    mpz_class total = 1;
    std::uint64_t remaining = pool;
    for (const auto& [mult, weight] : groups) {
        total *= binomial(remaining, mult);
        if (total == 0) return 0;
        remaining -= mult;
        mpz_class w;
        mpz_ui_pow_ui(w.get_mpz_t(), weight, mult);
        total *= w;
    }
    return total;
}

}  // namespace

mpz_class count_quad_cycle_types(const QuadClassType& tau, const QuadPools& pools) {
    // Group the plus and minus components by degree: both draw distinct
    // mate-pairs from the same pool (a plus component takes both mates of its
    // pair; a minus component uses one member of an otherwise unused pair, in
    // 2 ways). Even (sq) components draw from the separate pool of pi with
    // pi(T^2) irreducible.
    mpz_class y = 1;
    std::map<unsigned, std::vector<std::pair<unsigned, unsigned>>> pair_groups;

    // plus components: identical (d, {first,second}) instances are
    // interchangeable; asymmetric pairs orient 2 ways.
    for (std::size_t i = 0; i < tau.plus.size();) {
        std::size_t j = i;
        while (j < tau.plus.size() && tau.plus[j] == tau.plus[i]) ++j;
        const unsigned orientations = (tau.plus[i].first == tau.plus[i].second) ? 1 : 2;
        pair_groups[tau.plus[i].d].push_back({static_cast<unsigned>(j - i), orientations});
        i = j;
    }
    // minus components: each instance picks one of the 2 mates of a fresh pair.
    for (std::size_t i = 0; i < tau.minus.size();) {
        std::size_t j = i;
        while (j < tau.minus.size() && tau.minus[j] == tau.minus[i]) ++j;
        pair_groups[tau.minus[i].d].push_back({static_cast<unsigned>(j - i), 2});
        i = j;
    }
    for (const auto& [d, groups] : pair_groups) {
        y *= pool_assignments(pools.mate_pairs(d), groups);
        if (y == 0) return 0;
    }
    // sq components: one pi per instance, no orientation.
    std::map<unsigned, std::vector<std::pair<unsigned, unsigned>>> even_groups;
    for (std::size_t i = 0; i < tau.sq.size();) {
        std::size_t j = i;
        while (j < tau.sq.size() && tau.sq[j] == tau.sq[i]) ++j;
        even_groups[tau.sq[i].d].push_back({static_cast<unsigned>(j - i), 1});
        i = j;
    }
    for (const auto& [d, groups] : even_groups) {
        y *= pool_assignments(pools.even_count(d), groups);
        if (y == 0) return 0;
    }
    return y;
}

namespace {

// Component shapes of each group with their degree weights, canonical order.
struct PlusShape {
    unsigned d;
    Partition a, b;  // a >= b
    unsigned weight() const { return d * (a.size() + b.size()); }
};
struct SingleShape {
    unsigned d;
    Partition lambda;
};

std::vector<PlusShape> plus_shapes(unsigned max_weight) {
    std::vector<PlusShape> out;
    for (unsigned d = 1; 2 * d <= max_weight; ++d)
        for (unsigned sa = 1; d * sa < max_weight; ++sa)
            for (unsigned sb = 1; d * (sa + sb) <= max_weight; ++sb)
                for (const auto& a : Partition::all(sa))
                    for (const auto& b : Partition::all(sb)) {
                        if (partition_less(a, b)) continue;  // keep a >= b
                        out.push_back({d, a, b});
                    }
    return out;
}

std::vector<SingleShape> single_shapes(unsigned max_weight, unsigned degree_multiplier) {
    std::vector<SingleShape> out;
    for (unsigned d = 1; degree_multiplier * d <= max_weight; ++d)
        for (unsigned s = 1; degree_multiplier * d * s <= max_weight; ++s)
            for (const auto& lambda : Partition::all(s)) out.push_back({d, lambda});
    return out;
}

// Multisets (as non-decreasing index sequences) of shapes with given total weight.
template <typename Shape, typename WeightFn>
void multisets_of_weight(const std::vector<Shape>& shapes, WeightFn weight, unsigned target,
                         std::vector<Shape>& current, std::size_t start,
                         const std::function<void(const std::vector<Shape>&)>& emit) {
    if (target == 0) {
        emit(current);
        return;
    }
    for (std::size_t i = start; i < shapes.size(); ++i) {
        const unsigned w = weight(shapes[i]);
        if (w > target) continue;
        current.push_back(shapes[i]);
        multisets_of_weight(shapes, weight, target - w, current, i, emit);
        current.pop_back();
    }
}

}  // namespace

std::vector<QuadClassType> enumerate_quad_class_shapes(unsigned n) {
    std::vector<QuadClassType> out;
    const auto plus_all = plus_shapes(n);
    const auto sq_all = single_shapes(n, 2);
    const auto minus_all = single_shapes(n, 1);

    for (unsigned n0 = 0; n0 <= n; ++n0) {
        std::vector<Partition> alphas =
            n0 == 0 ? std::vector<Partition>{Partition()} : Partition::all(n0);
        for (const auto& alpha : alphas) {
            for (unsigned n1 = 0; n0 + n1 <= n; ++n1) {
                std::vector<std::vector<PlusShape>> plus_choices;
                {
                    std::vector<PlusShape> cur;
                    multisets_of_weight<PlusShape>(
                        plus_all, [](const PlusShape& s) { return s.weight(); }, n1, cur, 0,
                        [&](const std::vector<PlusShape>& c) { plus_choices.push_back(c); });
                }
                for (const auto& plus : plus_choices) {
                    for (unsigned n2 = 0; n0 + n1 + n2 <= n; ++n2) {
                        const unsigned n3 = n - n0 - n1 - n2;
                        std::vector<std::vector<SingleShape>> sq_choices;
                        {
                            std::vector<SingleShape> cur;
                            multisets_of_weight<SingleShape>(
                                sq_all,
                                [](const SingleShape& s) { return 2 * s.d * s.lambda.size(); }, n2,
                                cur, 0,
                                [&](const std::vector<SingleShape>& c) { sq_choices.push_back(c); });
                        }
                        std::vector<std::vector<SingleShape>> minus_choices;
                        {
                            std::vector<SingleShape> cur;
                            multisets_of_weight<SingleShape>(
                                minus_all,
                                [](const SingleShape& s) { return s.d * s.lambda.size(); }, n3, cur,
                                0, [&](const std::vector<SingleShape>& c) {
                                    minus_choices.push_back(c);
                                });
                        }
                        for (const auto& sq : sq_choices)
                            for (const auto& minus : minus_choices) {
                                QuadClassType t;
                                t.alpha = alpha;
                                for (const auto& s : plus) t.plus.push_back({s.d, s.a, s.b});
                                for (const auto& s : sq) t.sq.push_back({s.d, s.lambda});
                                for (const auto& s : minus) t.minus.push_back({s.d, s.lambda});
                                std::sort(t.plus.begin(), t.plus.end(), plus_component_less);
                                std::sort(t.sq.begin(), t.sq.end(), component_less);
                                std::sort(t.minus.begin(), t.minus.end(), component_less);
                                out.push_back(std::move(t));
                            }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), quad_class_type_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<QuadClassType> enumerate_quad_class_types(unsigned n, IrrSieve& sieve) {
    const QuadPools pools = build_quad_pools(sieve, n);
    std::vector<QuadClassType> out;
    for (auto& t : enumerate_quad_class_shapes(n))
        if (count_quad_cycle_types(t, pools) > 0) out.push_back(std::move(t));
    return out;
}

FqMatrix representative(const QuadClassType& tau, IrrSieve& sieve) {
    const QuadPools pools = build_quad_pools(sieve, std::max(tau.degree(), 1u));
    const Field& f = sieve.field();
    std::vector<FqMatrix> blocks;
    auto add_blocks = [&](const FqPoly& factor, const Partition& lambda) {
        for (unsigned part : lambda.parts())
            blocks.push_back(FqMatrix::companion(factor.pow(part)));
    };
    if (!tau.alpha.empty()) add_blocks(FqPoly::x(f), tau.alpha);
    std::vector<std::size_t> used_pairs(pools.pair_list.size(), 0);
    std::vector<std::size_t> used_even(pools.even_list.size(), 0);
    for (const auto& c : tau.plus) {
        if (used_pairs[c.d] >= pools.pair_list[c.d].size())
            throw Error("type not realizable over this field: " + tau.str());
        const auto& [zeta, mate] = pools.pair_list[c.d][used_pairs[c.d]++];
        add_blocks(zeta, c.first);
        add_blocks(mate, c.second);
    }
    for (const auto& c : tau.sq) {
        if (used_even[c.d] >= pools.even_list[c.d].size())
            throw Error("type not realizable over this field: " + tau.str());
        const FqPoly& pi = pools.even_list[c.d][used_even[c.d]++];
        add_blocks(pi.compose_square(), c.lambda);
    }
    for (const auto& c : tau.minus) {
        if (used_pairs[c.d] >= pools.pair_list[c.d].size())
            throw Error("type not realizable over this field: " + tau.str());
        const auto& [eta, mate] = pools.pair_list[c.d][used_pairs[c.d]++];
        (void)mate;
        add_blocks(eta, c.lambda);
    }
    if (blocks.empty()) throw Error("empty type has no representative");
    return FqMatrix::block_diag(blocks);
}

std::vector<std::pair<CycleType, FqMatrix>> all_class_reps(FieldPtr field, unsigned n,
                                                           IrrSieve& sieve) {
    if (!field->same_spec(sieve.field()))
        throw FieldMismatchError("sieve belongs to a different field");
    // all irreducibles of degree <= n in canonical global order
    std::vector<FqPoly> polys;
    for (unsigned d = 1; d <= n; ++d)
        for (const FqPoly& f : sieve.irreducibles(d)) polys.push_back(f);

    std::vector<std::pair<CycleType, FqMatrix>> out;
    std::vector<std::pair<FqPoly, Partition>> current;
    auto rec = [&](auto&& self, std::size_t start, unsigned remaining) -> void {
        if (remaining == 0) {
            CycleType ct;
            ct.factors = current;
            std::vector<FqMatrix> blocks;
            for (const auto& [pi, lambda] : current)
                for (unsigned part : lambda.parts())
                    blocks.push_back(FqMatrix::companion(pi.pow(part)));
            out.emplace_back(std::move(ct), FqMatrix::block_diag(blocks));
            return;
        }
        for (std::size_t i = start; i < polys.size(); ++i) {
            const unsigned d = static_cast<unsigned>(polys[i].degree());
            if (d > remaining) break;
            for (unsigned s = 1; d * s <= remaining; ++s)
                for (const auto& lambda : Partition::all(s)) {
                    current.emplace_back(polys[i], lambda);
                    self(self, i + 1, remaining - d * s);
                    current.pop_back();
                }
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace matdist
