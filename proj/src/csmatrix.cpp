#include "csnet/csmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "csnet/error.hpp"

namespace csnet {

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<QPoly>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorKind::ShapeError, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::pad_identity() const {
    PolyMatrix p(rows_ + 1, cols_ + 1);
    p(0, 0) = 1;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) p(i + 1, j + 1) = (*this)(i, j);
    return p;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeError, "matrix product dimension mismatch");
    PolyMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const QPoly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

const char* to_string(MatrixKind kind) noexcept {
    switch (kind) {
    case MatrixKind::CatalanStieltjes: return "catalan_stieltjes";
    case MatrixKind::Hankel: return "hankel";
    case MatrixKind::Submatrix: return "submatrix";
    }
    return "?";
}

namespace {

std::vector<std::size_t> iota_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

void require_nonnegative(int n, const char* what) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, std::string(what) + " must be nonnegative");
}

// Rows 0..n of the triangle; row m holds c_{m,0..m}. Parameters are only
// touched where the predecessor entry exists, so short families stay usable.
std::vector<std::vector<QPoly>> triangle(const FamilySpec& f, int n) {
    std::vector<std::vector<QPoly>> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    rows.push_back({QPoly(1)});
    for (int m = 1; m <= n; ++m) {
        const auto& prev = rows.back();
        std::vector<QPoly> row(static_cast<std::size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) {
            QPoly v;
            if (k >= 1 && k - 1 <= m - 1) v += f.r(k - 1) * prev[k - 1];
            if (k <= m - 1) v += f.s(k) * prev[k];
            if (k + 1 <= m - 1) v += f.t(k + 1) * prev[k + 1];
            row[k] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

CSMatrix catalan_stieltjes(const FamilySpec& f, int n) {
    require_nonnegative(n, "n");
    auto tri = triangle(f, n);
    CSMatrix m;
    m.kind = m.parent_kind = MatrixKind::CatalanStieltjes;
    m.family = f.name();
    const auto size = static_cast<std::size_t>(n) + 1;
    m.row_indices = m.col_indices = iota_indices(size);
    m.entries = PolyMatrix(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j <= i; ++j) m.entries(i, j) = tri[i][j];
    return m;
}

std::vector<QPoly> catalan_like(const FamilySpec& f, int up_to) {
    require_nonnegative(up_to, "up_to");
    auto tri = triangle(f, up_to);
    std::vector<QPoly> a;
    a.reserve(tri.size());
    for (auto& row : tri) a.push_back(std::move(row[0]));
    return a;
}

CSMatrix hankel(const FamilySpec& f, int n) {
    require_nonnegative(n, "n");
    auto a = catalan_like(f, 2 * n);
    CSMatrix m;
    m.kind = m.parent_kind = MatrixKind::Hankel;
    m.family = f.name();
    const auto size = static_cast<std::size_t>(n) + 1;
    m.row_indices = m.col_indices = iota_indices(size);
    m.entries = PolyMatrix(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m.entries(i, j) = a[i + j];
    return m;
}

CSMatrix submatrix(const CSMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size())
        throw Error(ErrorKind::ShapeError, "row and column selections differ in length (" +
                                               std::to_string(rows.size()) + " vs " + std::to_string(cols.size()) + ")");
    auto validate = [](const std::vector<std::size_t>& idx, std::size_t bound, const char* what) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= bound)
                throw Error(ErrorKind::IndexError, std::string(what) + " index " + std::to_string(idx[i]) +
                                                       " out of range " + std::to_string(bound));
            if (i > 0 && idx[i] <= idx[i - 1])
                throw Error(ErrorKind::IndexError, std::string(what) + " indices must be strictly increasing");
        }
    };
    validate(rows, m.entries.rows(), "row");
    validate(cols, m.entries.cols(), "column");

    CSMatrix s;
    s.kind = MatrixKind::Submatrix;
    s.parent_kind = m.kind == MatrixKind::Submatrix ? m.parent_kind : m.kind;
    s.family = m.family;
    s.entries = PolyMatrix(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // A matrix without recorded indices is its own parent.
        s.row_indices.push_back(m.row_indices.empty() ? rows[i] : m.row_indices.at(rows[i]));
        s.col_indices.push_back(m.col_indices.empty() ? cols[i] : m.col_indices.at(cols[i]));
        for (std::size_t j = 0; j < cols.size(); ++j) s.entries(i, j) = m.entries(rows[i], cols[j]);
    }
    return s;
}

PolyMatrix build_ln(const FamilySpec& f, int n) {
    require_nonnegative(n, "n");
    const auto size = static_cast<std::size_t>(n) + 2;
    PolyMatrix l(size, size);
    l(0, 0) = 1;
    for (std::size_t i = 1; i < size; ++i) {
        const int k = static_cast<int>(i) - 1;
        l(i, i) = f.r(k);
        l(i, i - 1) = f.s(k);
        if (i >= 2) l(i, i - 2) = f.t(k);
    }
    return l;
}

nlohmann::json to_json(const PolyMatrix& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const CSMatrix& m) {
    nlohmann::json j;
    j["kind"] = to_string(m.kind);
    if (m.kind == MatrixKind::Submatrix) j["parent"] = to_string(m.parent_kind);
    j["family"] = m.family;
    j["rows"] = m.row_indices;
    j["cols"] = m.col_indices;
    j["entries"] = to_json(m.entries);
    return j;
}

std::string to_csv(const PolyMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).to_string();
        os << '\n';
    }
    return os.str();
}

std::string to_text(const PolyMatrix& m) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], m(i, j).to_string().size());
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string cell = m(i, j).to_string();
            if (j) os << "  ";
            os << std::string(width[j] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace csnet
