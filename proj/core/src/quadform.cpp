#include "matdist/quadform.hpp"

#include <algorithm>

namespace matdist {

QuadFormData gram_matrix(const FqMatrix& a) {
    const Field& f = a.field();
    const unsigned n = a.n();
    const unsigned dim = n * n;
    auto basis = [&](unsigned k) {
        FqMatrix e(f, n);
        e.set(k / n, k % n, f.one());
        return e;
    };
    FqMatrix gram(f, dim);
    for (unsigned i = 0; i < dim; ++i) {
        const FqMatrix ei = basis(i);
        for (unsigned j = i; j < dim; ++j) {
            const FqMatrix ej = basis(j);
            const std::uint16_t value = (a * (ei * ej + ej * ei)).trace();
            gram.set(i, j, value);
            gram.set(j, i, value);
        }
    }
    QuadFormData out{gram, gram.rank(), 0};
    out.radical_dim = dim - out.rank;
    return out;
}

unsigned radical_partition_term(const Partition& alpha) {
    // sum over ordered pairs of parts of min(part_a, part_b)
    unsigned s = 0;
    for (unsigned a : alpha.parts())
        for (unsigned b : alpha.parts()) s += std::min(a, b);
    return s;
}

namespace {

unsigned plus_pair_term(const PlusComponent& c, bool doubled_by_degree) {
    unsigned cross = 0;
    for (unsigned a : c.first.parts())
        for (unsigned b : c.second.parts()) cross += std::min(a, b);
    return doubled_by_degree ? 2 * c.d * cross : cross;
}

unsigned radical_impl(const QuadClassType& t, bool doubled_plus) {
    unsigned rho = radical_partition_term(t.alpha);
    for (const auto& c : t.plus) rho += plus_pair_term(c, doubled_plus);
    for (const auto& c : t.sq) rho += 2 * c.d * radical_partition_term(c.lambda);
    // minus group contributes nothing: no eigenvalue has its negative present
    return rho;
}

}  // namespace

unsigned radical_from_type(const QuadClassType& t) { return radical_impl(t, true); }

unsigned radical_from_type_alt(const QuadClassType& t) { return radical_impl(t, false); }

}  // namespace matdist
