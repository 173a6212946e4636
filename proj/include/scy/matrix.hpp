#pragma once
#include "scy/cyclo.hpp"

#include <vector>

namespace scy {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CycloNum& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const CycloNum& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    ExactMatrix transpose() const;
    ExactMatrix scaled(const CycloNum& s) const;
    std::vector<CycloNum> apply(const std::vector<CycloNum>& v) const;
    bool is_scalar() const;
    CycloNum det() const;
    std::string key() const;  // canonical serialization

private:
    int rows_ = 0, cols_ = 0;
    std::vector<CycloNum> a_;
};

struct Echelon {
    ExactMatrix echelon;  // reduced row echelon form, zero rows dropped
    int rank = 0;
    std::vector<int> pivots;
    std::vector<std::vector<CycloNum>> kernel;
};

// Reduced row echelon form: pivots normalized to 1, cleared above and below.
Echelon echelonize(const ExactMatrix& m);

}  // namespace scy

namespace scy {

// Dense rational matrices for Picard-lattice linear algebra.
using QMat = std::vector<std::vector<mpq_class>>;
struct QEchelon {
    QMat rows;
    std::vector<int> pivots;
    int rank() const { return int(rows.size()); }
};
QEchelon q_echelon(QMat m);
int q_rank(const QMat& m);
QMat q_mul(const QMat& a, const QMat& b);
QMat q_identity(int n);
QMat q_transpose(const QMat& a);
// Solve A X = B for X (A full column rank); throws if inconsistent.
QMat q_solve(const QMat& A, const QMat& B);

}  // namespace scy
