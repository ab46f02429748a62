#pragma once

/**
 * Immanants Imm_lambda(M) = sum over pi of chi^lambda(pi) * prod_i m_{i,pi(i)}
 * for polynomial matrices, the determinant by fraction-free elimination, and
 * sweeps that test q-nonnegativity of immanants of all square submatrices.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "csnet/csmatrix.hpp"
#include "csnet/qpoly.hpp"
#include "csnet/symchar.hpp"

namespace csnet {

inline constexpr std::size_t default_size_cap = 9;

/// Permutation sum grouped by cycle type: entry c is the sum of
/// prod_i m_{i,pi(i)} over pi whose cycle type is character_table(n).partitions()[c].
/// SizeCapExceeded if n > size_cap; ShapeError if m is not square.
std::vector<QPoly> class_sums(const PolyMatrix& m, std::size_t size_cap = default_size_cap);

/// Combines class sums with one character row.
QPoly immanant_from_class_sums(const std::vector<QPoly>& sums, const Partition& lambda);

QPoly immanant(const PolyMatrix& m, const Partition& lambda, std::size_t size_cap = default_size_cap);
inline QPoly immanant(const CSMatrix& m, const Partition& lambda, std::size_t size_cap = default_size_cap) {
    return immanant(m.entries, lambda, size_cap);
}

/// Bareiss elimination with exact division in Z[q].
QPoly determinant(const PolyMatrix& m);
inline QPoly determinant(const CSMatrix& m) { return determinant(m.entries); }

struct ImmanantReport {
    Partition lambda;
    QPoly value;
    bool q_nonnegative = false;
    QPoly dominance_gap;  ///< Imm_lambda M - deg(chi^lambda) det M
    bool gap_nonnegative = false;
    std::string family;
    MatrixKind parent = MatrixKind::CatalanStieltjes;
    std::vector<std::size_t> rows, cols;
};

struct SweepOptions {
    std::size_t max_size = 1;
    std::size_t size_cap = default_size_cap;
    /// Enumerate every submatrix when there are at most this many; otherwise sample this many.
    std::size_t exhaustive_limit = 20000;
    std::uint64_t seed = 0;
};

struct SweepResult {
    std::vector<ImmanantReport> reports;
    std::uint64_t candidate_submatrices = 0;
    std::uint64_t examined_submatrices = 0;
    bool sampled = false;
    std::uint64_t seed = 0;

    bool all_q_nonnegative() const;
    bool all_gap_nonnegative() const;
    bool ok() const { return all_q_nonnegative() && all_gap_nonnegative(); }
};

/// Every square submatrix of size 1..max_size (or a seeded sample), every lambda.
SweepResult positivity_sweep(const CSMatrix& m, const SweepOptions& options);

/// 2(a_{i1+j2} a_{i2+j1} a_{i3+j3} + a_{i1+j3} a_{i2+j2} a_{i3+j1} + a_{i1+j1} a_{i2+j3} a_{i3+j2})
///  - 3(a_{i1+j2} a_{i2+j3} a_{i3+j1} + a_{i1+j3} a_{i2+j1} a_{i3+j2}).
/// IndexError unless i and j are strictly increasing and every index is in range.
QPoly inequality_331(std::span<const QPoly> a, std::array<std::size_t, 3> i, std::array<std::size_t, 3> j);

/// a_{2i} a_{j+k}^2 + a_{2j} a_{i+k}^2 + a_{2k} a_{i+j}^2 - 3 a_{i+j} a_{j+k} a_{k+i}, for i < j < k.
QPoly inequality_332(std::span<const QPoly> a, std::size_t i, std::size_t j, std::size_t k);

nlohmann::json to_json(const ImmanantReport& r);
nlohmann::json to_json(const SweepResult& r);
/// One row per (submatrix, lambda).
std::string to_csv(const SweepResult& r);

} // namespace csnet
