#pragma once

/**
 * Catalan-Stieltjes matrices C_n, their Hankel matrices H_n, and submatrices.
 *
 * C = (c_{n,k}) is the lower-triangular array with c_{0,0} = 1 and
 *
 *     c_{n,k} = r_{k-1} c_{n-1,k-1} + s_k c_{n-1,k} + t_{k+1} c_{n-1,k+1},
 *
 * where entries outside 0 <= k <= n vanish. The first column a_k = c_{k,0}
 * gives the Catalan-like numbers and H = (a_{i+j}).
 */

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "csnet/families.hpp"
#include "csnet/qpoly.hpp"

namespace csnet {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    PolyMatrix(std::initializer_list<std::initializer_list<QPoly>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    QPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const QPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static PolyMatrix identity(std::size_t n);
    PolyMatrix transpose() const;
    /// Block diagonal diag(1, *this).
    PolyMatrix pad_identity() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<QPoly> data_;
};

enum class MatrixKind { CatalanStieltjes, Hankel, Submatrix };

const char* to_string(MatrixKind kind) noexcept;

/// A matrix with its provenance: which family, and which rows and columns of
/// the infinite array it was cut from.
struct CSMatrix {
    MatrixKind kind = MatrixKind::CatalanStieltjes;
    /// Kind of the matrix a submatrix was taken from.
    MatrixKind parent_kind = MatrixKind::CatalanStieltjes;
    std::string family;
    std::vector<std::size_t> row_indices;
    std::vector<std::size_t> col_indices;
    PolyMatrix entries;

    std::size_t size() const noexcept { return entries.rows(); }
};

/// The leading principal submatrix C_n, of size (n+1) x (n+1).
CSMatrix catalan_stieltjes(const FamilySpec& f, int n);

/// The leading principal submatrix H_n = (a_{i+j})_{0<=i,j<=n}.
CSMatrix hankel(const FamilySpec& f, int n);

/// Rows and columns must be strictly increasing indices into m, of equal length.
/// The recorded indices refer to the infinite parent array.
CSMatrix submatrix(const CSMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

/// [a_0, ..., a_{up_to}].
std::vector<QPoly> catalan_like(const FamilySpec& f, int up_to);

/// The (n+2) x (n+2) transfer matrix L_n with C_{n+1} = diag(1, C_n) L_n:
/// a leading 1, then row i >= 1 holds t_{i-1}, s_{i-1}, r_{i-1} ending on the diagonal.
PolyMatrix build_ln(const FamilySpec& f, int n);

nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const CSMatrix& m);
/// Rows of human-readable polynomials separated by commas, one line per row.
std::string to_csv(const PolyMatrix& m);
/// Column-aligned human-readable table.
std::string to_text(const PolyMatrix& m);

} // namespace csnet
