#include "matdist/matrix.hpp"

#include <sstream>

namespace matdist {

FqMatrix FqMatrix::identity(const Field& f, unsigned n) {
    FqMatrix m(f, n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

FqMatrix FqMatrix::diag(const Field& f, const std::vector<std::uint16_t>& values) {
    FqMatrix m(f, static_cast<unsigned>(values.size()));
    for (unsigned i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
    return m;
}

FqMatrix FqMatrix::companion(const FqPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw NonMonicError("companion matrix needs a monic polynomial");
    const Field& k = f.field();
    const unsigned n = static_cast<unsigned>(f.degree());
    FqMatrix m(k, n);
    for (unsigned i = 1; i < n; ++i) m.set(i, i - 1, k.one());
    for (unsigned i = 0; i < n; ++i) m.set(i, n - 1, k.neg(f.coeff(i)));
    return m;
}

FqMatrix FqMatrix::block_diag(const std::vector<FqMatrix>& blocks) {
    unsigned n = 0;
    for (const auto& b : blocks) n += b.n();
    FqMatrix m(blocks.front().field(), n);
    unsigned off = 0;
    for (const auto& b : blocks) {
        for (unsigned i = 0; i < b.n(); ++i)
            for (unsigned j = 0; j < b.n(); ++j) m.set(off + i, off + j, b.at(i, j));
        off += b.n();
    }
    return m;
}

void FqMatrix::check_compat(const FqMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatchError("matrix dimensions differ");
    if (!f_->same_spec(*o.f_)) throw FieldMismatchError("matrices over different fields");
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
    check_compat(o);
    FqMatrix r(*f_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->add(e_[i], o.e_[i]);
    return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
    check_compat(o);
    FqMatrix r(*f_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->sub(e_[i], o.e_[i]);
    return r;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    check_compat(o);
    FqMatrix r(*f_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned k = 0; k < n_; ++k) {
            const std::uint16_t a = at(i, k);
            if (a == 0) continue;
            for (unsigned j = 0; j < n_; ++j)
                r.e_[i * n_ + j] = f_->add(r.e_[i * n_ + j], f_->mul(a, o.at(k, j)));
        }
    return r;
}

FqMatrix FqMatrix::operator-() const {
    FqMatrix r(*f_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->neg(e_[i]);
    return r;
}

FqMatrix FqMatrix::scaled(std::uint16_t s) const {
    FqMatrix r(*f_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->mul(e_[i], s);
    return r;
}

bool FqMatrix::is_zero() const {
    for (auto v : e_)
        if (v != 0) return false;
    return true;
}

std::uint16_t FqMatrix::trace() const {
    std::uint16_t t = 0;
    for (unsigned i = 0; i < n_; ++i) t = f_->add(t, at(i, i));
    return t;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix r(*f_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) r.set(j, i, at(i, j));
    return r;
}

unsigned FqMatrix::rank() const {
    std::vector<std::uint16_t> m = e_;
    unsigned rank = 0;
    for (unsigned col = 0; col < n_ && rank < n_; ++col) {
        unsigned pivot = n_;
        for (unsigned row = rank; row < n_; ++row)
            if (m[row * n_ + col] != 0) {
                pivot = row;
                break;
            }
        if (pivot == n_) continue;
        for (unsigned j = 0; j < n_; ++j) std::swap(m[rank * n_ + j], m[pivot * n_ + j]);
        const std::uint16_t inv = f_->inv(m[rank * n_ + col]);
        for (unsigned j = 0; j < n_; ++j) m[rank * n_ + j] = f_->mul(m[rank * n_ + j], inv);
        for (unsigned row = 0; row < n_; ++row) {
            if (row == rank) continue;
            const std::uint16_t factor = m[row * n_ + col];
            if (factor == 0) continue;
            for (unsigned j = 0; j < n_; ++j)
                m[row * n_ + j] = f_->sub(m[row * n_ + j], f_->mul(factor, m[rank * n_ + j]));
        }
        ++rank;
    }
    return rank;
}

std::uint64_t FqMatrix::to_index() const {
    std::uint64_t v = 0;
    for (auto entry : e_) v = v * f_->q() + entry;
    return v;
}

FqMatrix FqMatrix::from_index(const Field& f, unsigned n, std::uint64_t index) {
    FqMatrix m(f, n);
    for (std::size_t i = m.e_.size(); i-- > 0;) {
        m.e_[i] = static_cast<std::uint16_t>(index % f.q());
        index /= f.q();
    }
    return m;
}

FqMatrix FqMatrix::parse(const Field& f, const std::string& text) {
    std::vector<std::vector<std::uint16_t>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<std::uint16_t> entries;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) entries.push_back(f.parse_element(tok));
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw ConfigError("empty matrix literal");
    const unsigned n = static_cast<unsigned>(rows.size());
    for (const auto& r : rows)
        if (r.size() != n) throw ConfigError("matrix literal is not square: '" + text + "'");
    FqMatrix m(f, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    return m;
}

std::string FqMatrix::str() const {
    std::string out;
    for (unsigned i = 0; i < n_; ++i) {
        if (i) out += ";";
        for (unsigned j = 0; j < n_; ++j) {
            if (j) out += ",";
            out += f_->format_element(at(i, j));
        }
    }
    return out;
}

FqPoly char_poly(const FqMatrix& a) {
    const Field& f = a.field();
    const unsigned n = a.n();
    if (n == 0) return FqPoly::one(f);
    // Berkowitz: iterate over leading principal submatrices. `coeffs` holds
    // the characteristic polynomial of the current submatrix, leading
    // coefficient first.
    std::vector<std::uint16_t> coeffs = {f.one(), f.neg(a.at(0, 0))};
    for (unsigned r = 2; r <= n; ++r) {
        // Toeplitz column: t0 = 1, t1 = -a_rr, t_k = -(R * M^{k-2} * S) where
        // M is the (r-1) leading principal block, R the row left of a_rr, S
        // the column above it.
        const unsigned m = r - 1;
        std::vector<std::uint16_t> t(r + 1, 0);
        t[0] = f.one();
        t[1] = f.neg(a.at(m, m));
        std::vector<std::uint16_t> v(m);  // v = M^{k-2} * S
        for (unsigned i = 0; i < m; ++i) v[i] = a.at(i, m);
        for (unsigned k = 2; k <= r; ++k) {
            std::uint16_t dot = 0;
            for (unsigned i = 0; i < m; ++i) dot = f.add(dot, f.mul(a.at(m, i), v[i]));
            t[k] = f.neg(dot);
            if (k < r) {
                std::vector<std::uint16_t> nv(m, 0);
                for (unsigned i = 0; i < m; ++i) {
                    std::uint16_t acc = 0;
                    for (unsigned j = 0; j < m; ++j) acc = f.add(acc, f.mul(a.at(i, j), v[j]));
                    nv[i] = acc;
                }
                v = std::move(nv);
            }
        }
        std::vector<std::uint16_t> next(r + 1, 0);
        for (unsigned i = 0; i <= r; ++i) {
            std::uint16_t acc = 0;
            for (unsigned j = 0; j < coeffs.size(); ++j) {
                if (j > i) break;
                acc = f.add(acc, f.mul(t[i - j], coeffs[j]));
            }
            next[i] = acc;
        }
        coeffs = std::move(next);
    }
    std::vector<std::uint16_t> constant_first(coeffs.rbegin(), coeffs.rend());
    return FqPoly(f, std::move(constant_first));
}

FqMatrix inverse(const FqMatrix& a) {
    const Field& f = a.field();
    const unsigned n = a.n();
    std::vector<std::uint16_t> m(a.entries());
    FqMatrix inv = FqMatrix::identity(f, n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = n;
        for (unsigned row = col; row < n; ++row)
            if (m[row * n + col] != 0) {
                pivot = row;
                break;
            }
        if (pivot == n) throw Error("matrix is singular");
        for (unsigned j = 0; j < n; ++j) {
            std::swap(m[col * n + j], m[pivot * n + j]);
            std::uint16_t tmp = inv.at(col, j);
            inv.set(col, j, inv.at(pivot, j));
            inv.set(pivot, j, tmp);
        }
        const std::uint16_t scale = f.inv(m[col * n + col]);
        for (unsigned j = 0; j < n; ++j) {
            m[col * n + j] = f.mul(m[col * n + j], scale);
            inv.set(col, j, f.mul(inv.at(col, j), scale));
        }
        for (unsigned row = 0; row < n; ++row) {
            if (row == col) continue;
            const std::uint16_t factor = m[row * n + col];
            if (factor == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                m[row * n + j] = f.sub(m[row * n + j], f.mul(factor, m[col * n + j]));
                inv.set(row, j, f.sub(inv.at(row, j), f.mul(factor, inv.at(col, j))));
            }
        }
    }
    return inv;
}

FqMatrix eval_at_matrix(const FqPoly& f, const FqMatrix& a) {
    const Field& k = a.field();
    FqMatrix acc(k, a.n());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * a;
        const std::uint16_t c = f.coeff(static_cast<unsigned>(i));
        if (c != 0)
            for (unsigned d = 0; d < a.n(); ++d) acc.set(d, d, k.add(acc.at(d, d), c));
    }
    return acc;
}

FqTuple::FqTuple(std::vector<FqMatrix> mats) : mats_(std::move(mats)) {
    for (const auto& m : mats_)
        if (m.n() != mats_[0].n() || !m.field().same_spec(mats_[0].field()))
            throw FieldMismatchError("tuple entries must share dimension and field");
}

FqMatrix FqTuple::norm() const {
    FqMatrix acc(field(), n());
    for (const auto& m : mats_) acc = acc + m * m;
    return acc;
}

FqMatrix FqTuple::dot(const FqTuple& o) const {
    if (o.r() != r()) throw DimensionMismatchError("tuple lengths differ");
    FqMatrix acc(field(), n());
    for (unsigned i = 0; i < r(); ++i) acc = acc + mats_[i] * o.mats_[i];
    return acc;
}

FqTuple FqTuple::operator-(const FqTuple& o) const {
    if (o.r() != r()) throw DimensionMismatchError("tuple lengths differ");
    FqTuple out = *this;
    for (unsigned i = 0; i < r(); ++i) out.mats_[i] = mats_[i] - o.mats_[i];
    return out;
}

bool FqTuple::is_zero() const {
    for (const auto& m : mats_)
        if (!m.is_zero()) return false;
    return true;
}

std::uint64_t FqTuple::to_index() const {
    // X_1 most significant; within a matrix, row-major lexicographic.
    std::uint64_t v = 0;
    const std::uint64_t block = [&] {
        std::uint64_t b = 1;
        for (unsigned i = 0; i < n() * n(); ++i) b *= field().q();
        return b;
    }();
    for (const auto& m : mats_) v = v * block + m.to_index();
    return v;
}

FqTuple FqTuple::from_index(const Field& f, unsigned n, unsigned r, std::uint64_t index) {
    std::uint64_t block = 1;
    for (unsigned i = 0; i < n * n; ++i) block *= f.q();
    std::vector<FqMatrix> mats;
    mats.reserve(r);
    std::vector<std::uint64_t> parts(r);
    for (unsigned i = r; i-- > 0;) {
        parts[i] = index % block;
        index /= block;
    }
    for (unsigned i = 0; i < r; ++i) mats.push_back(FqMatrix::from_index(f, n, parts[i]));
    return FqTuple(std::move(mats));
}

std::string FqTuple::str() const {
    std::string out;
    for (unsigned i = 0; i < r(); ++i) {
        if (i) out += " | ";
        out += mats_[i].str();
    }
    return out;
}

}  // namespace matdist
