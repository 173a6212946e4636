#include "scy/matrix.hpp"

#include <sstream>

namespace scy {

ExactMatrix ExactMatrix::identity(int n)
{
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const CycloNum& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
    return c;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::scaled(const CycloNum& s) const
{
    ExactMatrix t = *this;
    for (auto& x : t.a_) x = x * s;
    return t;
}

std::vector<CycloNum> ExactMatrix::apply(const std::vector<CycloNum>& v) const
{
    std::vector<CycloNum> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool ExactMatrix::is_scalar() const
{
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
            if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
        }
    return true;
}

CycloNum ExactMatrix::det() const
{
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    ExactMatrix m = *this;
    CycloNum d(1);
    int n = rows_;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!m(r, c).is_zero()) { p = r; break; }
        if (p < 0) return CycloNum(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        CycloNum iv = m(c, c).inv();
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            CycloNum f = m(r, c) * iv;
            for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

std::string ExactMatrix::key() const
{
    std::ostringstream os;
    os << rows_ << 'x' << cols_;
    for (const auto& x : a_) {
        os << '|';
        if (!x.is_zero())
            for (int k = 0; k < 4; ++k) os << x[k].get_str() << ',';
    }
    return os.str();
}

Echelon echelonize(const ExactMatrix& m)
{
    ExactMatrix a = m;
    int rows = a.rows(), cols = a.cols();
    Echelon out;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        CycloNum iv = a(r, c).inv();
        for (int j = c; j < cols; ++j) a(r, j) = a(r, j) * iv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            CycloNum f = a(i, c);
            for (int j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.echelon = ExactMatrix(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out.echelon(i, j) = a(i, j);
    std::vector<bool> piv(cols, false);
    for (int c : out.pivots) piv[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (piv[f]) continue;
        std::vector<CycloNum> v(cols);
        v[f] = 1;
        for (int i = 0; i < r; ++i) v[out.pivots[i]] = -a(i, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace scy

namespace scy {

QEchelon q_echelon(QMat m)
{
    QEchelon out;
    size_t r = 0;
    int cols = m.empty() ? 0 : int(m[0].size());
    for (int c = 0; c < cols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        mpq_class iv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= iv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

int q_rank(const QMat& m) { return q_echelon(m).rank(); }

QMat q_mul(const QMat& a, const QMat& b)
{
    size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    QMat c(n, std::vector<mpq_class>(mcols));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < mcols; ++j)
                if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

QMat q_identity(int n)
{
    QMat m(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat q_transpose(const QMat& a)
{
    if (a.empty()) return {};
    QMat t(a[0].size(), std::vector<mpq_class>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

QMat q_solve(const QMat& A, const QMat& B)
{
    size_t rows = A.size(), n = A[0].size(), m = B[0].size();
    QMat aug(rows, std::vector<mpq_class>(n + m));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
        for (size_t j = 0; j < m; ++j) aug[i][n + j] = B[i][j];
    }
    QEchelon e = q_echelon(aug);
    if (e.rank() != int(n)) throw std::runtime_error("q_solve: inconsistent system or rank-deficient matrix");
    for (int i = 0; i < e.rank(); ++i)
        if (e.pivots[i] != i) throw std::runtime_error("q_solve: inconsistent system");
    QMat X(n, std::vector<mpq_class>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) X[i][j] = e.rows[i][n + j];
    return X;
}

}  // namespace scy
