#include "qdiff/matrix.hpp"

#include <limits>

namespace qdiff {
namespace {

/// In-place Gauss-Jordan elimination.  Pivots are restricted to columns
/// below pivot_limit; among candidate rows the entry with the fewest stored
/// Laurent terms is chosen to keep intermediate expressions small.
/// Returns the pivot columns, one per produced unit row.
std::vector<long> row_reduce(QMatrix& m, long pivot_limit) {
    std::vector<long> pivots;
    const long rows = m.rows();
    const long cols = m.cols();
    long row = 0;
    for (long c = 0; c < pivot_limit && row < rows; ++c) {
        long best = -1;
        size_t best_size = std::numeric_limits<size_t>::max();
        for (long r = row; r < rows; ++r) {
            const QCoeff& e = m(r, c);
            if (e.is_zero()) continue;
            const size_t sz = e.numerator().size() + e.denominator().size();
            if (sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best < 0) continue;
        if (best != row) m.row(best).swap(m.row(row));
        const QCoeff inv = m(row, c).inverse();
        for (long cc = c; cc < cols; ++cc)
            if (!m(row, cc).is_zero()) m(row, cc) *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == row || m(r, c).is_zero()) continue;
            const QCoeff f = m(r, c);
            for (long cc = c; cc < cols; ++cc) {
                if (m(row, cc).is_zero()) continue;
                m(r, cc) -= f * m(row, cc);
            }
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

bool matrices_equal(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (long c = 0; c < a.cols(); ++c)
        for (long r = 0; r < a.rows(); ++r)
            if (a(r, c) != b(r, c)) return false;
    return true;
}

long exact_rank(QMatrix m) {
    return static_cast<long>(row_reduce(m, m.cols()).size());
}

QMatrix exact_kernel(QMatrix m) {
    const long cols = m.cols();
    const std::vector<long> pivots = row_reduce(m, cols);
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = 1;
    std::vector<long> free_cols;
    for (long c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

    QMatrix kernel(cols, static_cast<long>(free_cols.size()));
    for (size_t t = 0; t < free_cols.size(); ++t) {
        const long f = free_cols[t];
        kernel(f, static_cast<long>(t)) = QCoeff::one();
        for (size_t i = 0; i < pivots.size(); ++i)
            kernel(pivots[i], static_cast<long>(t)) =
                -m(static_cast<long>(i), f);
    }
    return kernel;
}

std::optional<QVector> exact_solve_any(QMatrix m, const QVector& b) {
    const long rows = m.rows();
    const long cols = m.cols();
    QMatrix aug(rows, cols + 1);
    aug.leftCols(cols) = m;
    aug.col(cols) = b;
    const std::vector<long> pivots = row_reduce(aug, cols);
    for (long r = static_cast<long>(pivots.size()); r < rows; ++r)
        if (!aug(r, cols).is_zero()) return std::nullopt;

    QVector x(cols);
    for (size_t i = 0; i < pivots.size(); ++i)
        x(pivots[i]) = aug(static_cast<long>(i), cols);
    return x;
}

long rank_at(const QMatrix& m, const Rational& q0) {
    const long rows = m.rows();
    const long cols = m.cols();
    std::vector<std::vector<Rational>> a(
        static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols)));
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c)
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                m(r, c).eval_at(q0);

    long rank = 0;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long r = rank; r < rows; ++r) {
            if (sgn(a[static_cast<size_t>(r)][static_cast<size_t>(c)]) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
        const Rational inv = 1 / a[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        for (long cc = c; cc < cols; ++cc)
            a[static_cast<size_t>(rank)][static_cast<size_t>(cc)] *= inv;
        for (long r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (sgn(f) == 0) continue;
            for (long cc = c; cc < cols; ++cc)
                a[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    f * a[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
        }
        ++rank;
    }
    return rank;
}

} // namespace qdiff
