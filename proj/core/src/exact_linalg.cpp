#include "hopfpow/exact_linalg.hpp"

#include "hopfpow/errors.hpp"

#include <algorithm>
#include <utility>

namespace hopfpow {

namespace {

using IntRow = std::vector<Integer>;

void require(bool condition, const char* message) {
    if (!condition) throw ArgumentError(message);
}

// Row scaled by the lcm of its denominators, so all entries are integers.
IntRow integral_row(std::span<const Rational> row) {
    Integer scale = 1;
    for (const auto& x : row) {
        if (x.get_den() != 1) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
    IntRow out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(row[j]) != 0) out[j] = row[j].get_num() * (scale / row[j].get_den());
    }
    return out;
}

// Divides the row by the gcd of its entries and makes the entry at `lead` positive.
void make_primitive(IntRow& row, std::size_t lead) {
    Integer g = 0;
    for (const auto& x : row) {
        if (sgn(x) != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
    }
    if (sgn(g) == 0) return;
    if (sgn(row[lead]) < 0) g = -g;
    if (g == 1) return;
    for (auto& x : row) {
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

struct IntegerEchelon {
    std::vector<IntRow> rows; // the first pivots.size() rows, fully reduced
    std::vector<std::size_t> pivots;
};

// Fraction-free Gauss-Jordan: rows stay integral and primitive, and rows that
// already vanish in the pivot column are never touched.
IntegerEchelon integer_rref(const ExactMatrix& m) {
    IntegerEchelon e;
    e.rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        e.rows.push_back(integral_row(m.row(r)));
    }
    const std::size_t nrows = e.rows.size();
    Integer scaled;
    for (std::size_t c = 0; c < m.cols() && e.pivots.size() < nrows; ++c) {
        const std::size_t rank = e.pivots.size();
        std::size_t p = rank;
        while (p < nrows && sgn(e.rows[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(e.rows[p], e.rows[rank]);
        IntRow& pivot_row = e.rows[rank];
        make_primitive(pivot_row, c);
        const Integer pivot = pivot_row[c];
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == rank || sgn(e.rows[i][c]) == 0) continue;
            IntRow& row = e.rows[i];
            const Integer factor = row[c];
            for (std::size_t j = 0; j < row.size(); ++j) {
                const bool row_zero = sgn(row[j]) == 0;
                const bool pivot_zero = sgn(pivot_row[j]) == 0;
                if (row_zero && pivot_zero) continue;
                if (pivot != 1 && !row_zero) row[j] *= pivot;
                if (!pivot_zero) {
                    mpz_mul(scaled.get_mpz_t(), factor.get_mpz_t(), pivot_row[j].get_mpz_t());
                    row[j] -= scaled;
                }
            }
            make_primitive(row, c);
        }
        e.pivots.push_back(c);
    }
    return e;
}

struct RationalEchelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};

// Textbook reduced row echelon form over Q, pivot = first nonzero in column order.
RationalEchelon rational_rref(std::vector<Vector> rows, std::size_t cols) {
    RationalEchelon e;
    const std::size_t nrows = rows.size();
    Rational tmp;
    for (std::size_t c = 0; c < cols && e.pivots.size() < nrows; ++c) {
        const std::size_t rank = e.pivots.size();
        std::size_t p = rank;
        while (p < nrows && sgn(rows[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(rows[p], rows[rank]);
        Vector& pivot_row = rows[rank];
        const Rational inv = 1 / pivot_row[c];
        for (auto& x : pivot_row) {
            if (sgn(x) != 0) x *= inv;
        }
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == rank || sgn(rows[i][c]) == 0) continue;
            const Rational factor = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (sgn(pivot_row[j]) == 0) continue;
                tmp = factor * pivot_row[j];
                rows[i][j] -= tmp;
            }
        }
        e.pivots.push_back(c);
    }
    rows.resize(e.pivots.size());
    e.rows = std::move(rows);
    return e;
}

// v -= factor * w, skipping zeros of w.
void axpy_neg(Vector& v, const Rational& factor, const Vector& w) {
    Rational tmp;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (sgn(w[j]) == 0) continue;
        tmp = factor * w[j];
        v[j] -= tmp;
    }
}

std::size_t last_nonzero(const Vector& v) {
    for (std::size_t j = v.size(); j-- > 0;) {
        if (sgn(v[j]) != 0) return j;
    }
    return v.size();
}

// Echelon vectors with pivot = last nonzero coordinate, not back-reduced.
// Used to count how many new directions a sequence of vectors adds.
class TrailingEchelon {
public:
    // Reduces v against the accumulated vectors; keeps it if anything is left.
    bool insert(Vector v) {
        for (auto it = by_pivot_.rbegin(); it != by_pivot_.rend(); ++it) {
            const std::size_t q = it->first;
            if (sgn(v[q]) != 0) {
                const Rational factor = v[q];
                axpy_neg(v, factor, it->second);
            }
        }
        const std::size_t q = last_nonzero(v);
        if (q == v.size()) return false;
        const Rational inv = 1 / v[q];
        for (auto& x : v) {
            if (sgn(x) != 0) x *= inv;
        }
        auto pos = std::lower_bound(by_pivot_.begin(), by_pivot_.end(), q,
                                    [](const auto& entry, std::size_t key) { return entry.first < key; });
        by_pivot_.emplace(pos, q, std::move(v));
        return true;
    }

private:
    std::vector<std::pair<std::size_t, Vector>> by_pivot_;
};

} // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    ExactMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == m.cols_, "ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Vector ExactMatrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void ExactMatrix::set_column(std::size_t c, const Vector& values) {
    require(values.size() == rows_, "column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

bool ExactMatrix::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

std::size_t ExactMatrix::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const Rational& x) { return sgn(x) != 0; }));
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.cols() == b.rows(), "mat_mul: shape mismatch");
    ExactMatrix c(a.rows(), b.cols());
    Rational tmp;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            const auto brow = b.row(k);
            auto crow = c.row(i);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(brow[j]) == 0) continue;
                tmp = aik * brow[j];
                crow[j] += tmp;
            }
        }
    }
    return c;
}

Vector mat_vec(const ExactMatrix& a, const Vector& v) {
    require(a.cols() == v.size(), "mat_vec: shape mismatch");
    Vector out(a.rows());
    Rational tmp;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto row = a.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (sgn(row[j]) == 0 || sgn(v[j]) == 0) continue;
            tmp = row[j] * v[j];
            out[i] += tmp;
        }
    }
    return out;
}

ExactMatrix transpose(const ExactMatrix& a) {
    ExactMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

ExactMatrix subtract(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "subtract: shape mismatch");
    ExactMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto crow = c.row(i);
        const auto brow = b.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(brow[j]) != 0) crow[j] -= brow[j];
        }
    }
    return c;
}

bool equal(const ExactMatrix& a, const ExactMatrix& b) { return a == b; }

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::size_t rank(const ExactMatrix& m) {
    return m.is_integral() ? rank_bareiss(m) : rank_gauss_jordan(m);
}

std::size_t rank_bareiss(const ExactMatrix& m) {
    require(m.is_integral(), "rank_bareiss needs an integral matrix");
    std::vector<IntRow> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(integral_row(m.row(r)));
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    Integer prev = 1;
    Integer t1;
    Integer t2;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t p = rank;
        while (p < nrows && sgn(a[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[rank]);
        const IntRow& pivot_row = a[rank];
        const Integer pivot = pivot_row[c];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            IntRow& row = a[i];
            const Integer factor = row[c];
            if (sgn(factor) == 0 && pivot == prev) continue;
            // row <- (pivot * row - factor * pivot_row) / prev, exact by Sylvester's identity.
            for (std::size_t j = c + 1; j < ncols; ++j) {
                const bool row_zero = sgn(row[j]) == 0;
                const bool pivot_zero = sgn(factor) == 0 || sgn(pivot_row[j]) == 0;
                if (row_zero && pivot_zero) continue;
                mpz_mul(t1.get_mpz_t(), pivot.get_mpz_t(), row[j].get_mpz_t());
                if (!pivot_zero) {
                    mpz_mul(t2.get_mpz_t(), factor.get_mpz_t(), pivot_row[j].get_mpz_t());
                    t1 -= t2;
                }
                mpz_divexact(row[j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::size_t rank_gauss_jordan(const ExactMatrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
    return rational_rref(std::move(rows), m.cols()).pivots.size();
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& input : vectors) {
        require(input.size() == ambient_dim, "span: vector length mismatch");
        Vector v = s.reduce(input);
        const std::size_t q = last_nonzero(v);
        if (q == v.size()) continue;
        const Rational inv = 1 / v[q];
        for (auto& x : v) {
            if (sgn(x) != 0) x *= inv;
        }
        // Older vectors with a later pivot may be nonzero at q; v only reaches up to q.
        for (auto& b : s.basis_) {
            if (sgn(b[q]) != 0) {
                const Rational factor = b[q];
                axpy_neg(b, factor, v);
            }
        }
        const auto pos = std::lower_bound(s.pivots_.begin(), s.pivots_.end(), q);
        const auto offset = pos - s.pivots_.begin();
        s.pivots_.insert(pos, q);
        s.basis_.insert(s.basis_.begin() + offset, std::move(v));
    }
    return s;
}

Vector Subspace::reduce(Vector v) const {
    require(v.size() == ambient_dim_, "reduce: vector length mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (sgn(v[p]) == 0) continue;
        const Rational factor = v[p];
        axpy_neg(v, factor, basis_[k]);
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

Subspace nullspace(const ExactMatrix& m) {
    const auto e = integer_rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Subspace s(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const auto& row = e.rows[r];
            if (sgn(row[f]) == 0) continue;
            v[e.pivots[r]] = Rational(-row[f], row[e.pivots[r]]);
            v[e.pivots[r]].canonicalize();
        }
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(f);
    }
    return s;
}

std::size_t intersect_dim(const Subspace& u, const Subspace& v) {
    require(u.ambient_dim() == v.ambient_dim(), "intersect_dim: ambient dimension mismatch");
    // Rank of [U | V] = dim U + (number of V vectors independent modulo U).
    TrailingEchelon residuals;
    std::size_t added = 0;
    for (const auto& b : v.basis()) {
        if (residuals.insert(u.reduce(b))) ++added;
    }
    return v.dim() - added;
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    require(u.ambient_dim() == v.ambient_dim(), "intersection: ambient dimension mismatch");
    const std::size_t n = u.ambient_dim();
    std::vector<Vector> rows;
    for (const auto& b : u.basis()) {
        Vector row(2 * n);
        std::copy(b.begin(), b.end(), row.begin());
        std::copy(b.begin(), b.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
        rows.push_back(std::move(row));
    }
    for (const auto& b : v.basis()) {
        Vector row(2 * n);
        std::copy(b.begin(), b.end(), row.begin());
        rows.push_back(std::move(row));
    }
    const auto e = rational_rref(std::move(rows), 2 * n);
    std::vector<Vector> meet;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] < n) continue;
        meet.emplace_back(e.rows[r].begin() + static_cast<std::ptrdiff_t>(n), e.rows[r].end());
    }
    return Subspace::span(n, meet);
}

std::string to_string(const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += v[i].get_str();
    }
    return out + "]";
}

} // namespace hopfpow
