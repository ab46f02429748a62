#include "csnet/immanant.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "csnet/error.hpp"

namespace csnet {

std::vector<QPoly> class_sums(const PolyMatrix& m, std::size_t size_cap) {
    if (!m.is_square())
        throw Error(ErrorKind::ShapeError, "immanant of a non-square " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n > size_cap)
        throw Error(ErrorKind::SizeCapExceeded,
                    "matrix size " + std::to_string(n) + " exceeds the immanant size cap " + std::to_string(size_cap));
    const CharacterTable& table = character_table(static_cast<int>(n));
    std::vector<QPoly> sums(table.partitions().size());

    // Depth-first over rows; a zero entry prunes the whole subtree.
    std::vector<int> image(n);
    std::vector<bool> used(n, false);
    std::vector<QPoly> partial(n + 1);
    partial[0] = 1;
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == n) {
            std::vector<int> one_based(n);
            for (std::size_t i = 0; i < n; ++i) one_based[i] = image[i] + 1;
            sums[table.index_of(cycle_type(one_based))] += partial[n];
            return;
        }
        for (std::size_t col = 0; col < n; ++col) {
            if (used[col] || m(row, col).is_zero()) continue;
            used[col] = true;
            image[row] = static_cast<int>(col);
            partial[row + 1] = partial[row] * m(row, col);
            self(self, row + 1);
            used[col] = false;
        }
    };
    rec(rec, 0);
    return sums;
}

QPoly immanant_from_class_sums(const std::vector<QPoly>& sums, const Partition& lambda) {
    const CharacterTable& table = character_table(lambda.size());
    if (sums.size() != table.partitions().size())
        throw Error(ErrorKind::ShapeError, "class sums do not match partitions of " + std::to_string(lambda.size()));
    const std::size_t l = table.index_of(lambda);
    QPoly total;
    for (std::size_t c = 0; c < sums.size(); ++c) {
        if (sums[c].is_zero()) continue;
        std::int64_t chi = table.value(l, c);
        if (chi != 0) total += QPoly(Integer(static_cast<long>(chi))) * sums[c];
    }
    return total;
}

QPoly immanant(const PolyMatrix& m, const Partition& lambda, std::size_t size_cap) {
    if (static_cast<std::size_t>(lambda.size()) != m.rows() || !m.is_square())
        throw Error(ErrorKind::ShapeError, "partition " + lambda.to_string() + " does not match a " +
                                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    return immanant_from_class_sums(class_sums(m, size_cap), lambda);
}

QPoly determinant(const PolyMatrix& input) {
    if (!input.is_square()) throw Error(ErrorKind::ShapeError, "determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    PolyMatrix a = input;
    QPoly prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = QPoly::divexact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = QPoly();
        }
        prev = a(k, k);
    }
    QPoly det = a(n - 1, n - 1);
    return negate ? -det : det;
}

bool SweepResult::all_q_nonnegative() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.q_nonnegative; });
}

bool SweepResult::all_gap_nonnegative() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.gap_nonnegative; });
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// The combination of the given rank in lexicographic order of k-subsets of {0..n-1}.
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k) {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (std::size_t x = next; x < n; ++x) {
            std::uint64_t with_x = binomial(n - x - 1, k - slot - 1);
            if (rank < with_x) {
                out.push_back(x);
                next = x + 1;
                break;
            }
            rank -= with_x;
        }
    }
    return out;
}

void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    if (k > n) return;
    while (true) {
        fn(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

void report_submatrix(const CSMatrix& parent, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols, std::size_t size_cap, SweepResult& out) {
    CSMatrix sub = submatrix(parent, rows, cols);
    auto sums = class_sums(sub.entries, size_cap);
    const int n = static_cast<int>(rows.size());
    const QPoly det = immanant_from_class_sums(sums, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (const auto& lambda : partitions_of(n)) {
        ImmanantReport r;
        r.lambda = lambda;
        r.value = immanant_from_class_sums(sums, lambda);
        r.q_nonnegative = r.value.is_q_nonnegative();
        r.dominance_gap = r.value - QPoly(Integer(static_cast<long>(degree(lambda)))) * det;
        r.gap_nonnegative = r.dominance_gap.is_q_nonnegative();
        r.family = sub.family;
        r.parent = sub.parent_kind;
        r.rows = sub.row_indices;
        r.cols = sub.col_indices;
        out.reports.push_back(std::move(r));
    }
    ++out.examined_submatrices;
}

} // namespace

SweepResult positivity_sweep(const CSMatrix& m, const SweepOptions& options) {
    if (options.max_size > options.size_cap)
        throw Error(ErrorKind::SizeCapExceeded, "max_size " + std::to_string(options.max_size) +
                                                    " exceeds the immanant size cap " + std::to_string(options.size_cap));
    const std::size_t nr = m.entries.rows(), nc = m.entries.cols();
    const std::size_t top = std::min({options.max_size, nr, nc});

    SweepResult result;
    result.seed = options.seed;
    std::vector<std::uint64_t> per_size(top + 1, 0);
    for (std::size_t s = 1; s <= top; ++s) {
        per_size[s] = binomial(nr, s) * binomial(nc, s);
        result.candidate_submatrices += per_size[s];
    }

    if (result.candidate_submatrices <= options.exhaustive_limit) {
        for (std::size_t s = 1; s <= top; ++s)
            for_each_combination(nr, s, [&](const std::vector<std::size_t>& rows) {
                for_each_combination(nc, s, [&](const std::vector<std::size_t>& cols) {
                    report_submatrix(m, rows, cols, options.size_cap, result);
                });
            });
        return result;
    }

    // Uniform sample without replacement over all candidates, in a fixed order for a given seed.
    result.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, result.candidate_submatrices - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < options.exhaustive_limit) chosen.insert(dist(rng));
    for (std::uint64_t rank : chosen) {
        std::size_t s = 1;
        while (rank >= per_size[s]) rank -= per_size[s++];
        const std::uint64_t col_count = binomial(nc, s);
        auto rows = unrank_combination(rank / col_count, nr, s);
        auto cols = unrank_combination(rank % col_count, nc, s);
        report_submatrix(m, rows, cols, options.size_cap, result);
    }
    return result;
}

QPoly inequality_331(std::span<const QPoly> a, std::array<std::size_t, 3> i, std::array<std::size_t, 3> j) {
    if (!(i[0] < i[1] && i[1] < i[2]) || !(j[0] < j[1] && j[1] < j[2]))
        throw Error(ErrorKind::IndexError, "inequality_331 needs strictly increasing index triples");
    if (i[2] + j[2] >= a.size())
        throw Error(ErrorKind::IndexError, "inequality_331 needs a_" + std::to_string(i[2] + j[2]) + " but only " +
                                               std::to_string(a.size()) + " terms were given");
    auto A = [&](std::size_t x, std::size_t y) -> const QPoly& { return a[i[x] + j[y]]; };
    QPoly positive = A(0, 1) * A(1, 0) * A(2, 2) + A(0, 2) * A(1, 1) * A(2, 0) + A(0, 0) * A(1, 2) * A(2, 1);
    QPoly negative = A(0, 1) * A(1, 2) * A(2, 0) + A(0, 2) * A(1, 0) * A(2, 1);
    return QPoly(2) * positive - QPoly(3) * negative;
}

QPoly inequality_332(std::span<const QPoly> a, std::size_t i, std::size_t j, std::size_t k) {
    if (!(i < j && j < k)) throw Error(ErrorKind::IndexError, "inequality_332 needs i < j < k");
    if (2 * k >= a.size())
        throw Error(ErrorKind::IndexError, "inequality_332 needs a_" + std::to_string(2 * k) + " but only " +
                                               std::to_string(a.size()) + " terms were given");
    return a[2 * i] * a[j + k] * a[j + k] + a[2 * j] * a[i + k] * a[i + k] + a[2 * k] * a[i + j] * a[i + j] -
           QPoly(3) * a[i + j] * a[j + k] * a[k + i];
}

nlohmann::json to_json(const ImmanantReport& r) {
    return {{"lambda", to_json(r.lambda)},
            {"value", to_json(r.value)},
            {"q_nonnegative", r.q_nonnegative},
            {"dominance_gap", to_json(r.dominance_gap)},
            {"gap_nonnegative", r.gap_nonnegative},
            {"matrix_provenance", {{"family", r.family}, {"matrix", to_string(r.parent)}, {"rows", r.rows}, {"cols", r.cols}}}};
}

nlohmann::json to_json(const SweepResult& r) {
    nlohmann::json j;
    j["candidate_submatrices"] = r.candidate_submatrices;
    j["examined_submatrices"] = r.examined_submatrices;
    j["sampled"] = r.sampled;
    if (r.sampled) j["seed"] = r.seed;
    j["all_q_nonnegative"] = r.all_q_nonnegative();
    j["all_gap_nonnegative"] = r.all_gap_nonnegative();
    j["reports"] = nlohmann::json::array();
    for (const auto& rep : r.reports) j["reports"].push_back(to_json(rep));
    return j;
}

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

} // namespace

std::string to_csv(const SweepResult& r) {
    std::ostringstream os;
    os << "family,matrix,rows,cols,lambda,immanant,q_nonnegative,dominance_gap,gap_nonnegative\n";
    for (const auto& rep : r.reports) {
        std::string lam = rep.lambda.to_string();
        os << rep.family << ',' << to_string(rep.parent) << ',' << join_indices(rep.rows) << ','
           << join_indices(rep.cols) << ",\"" << lam << "\"," << rep.value << ',' << (rep.q_nonnegative ? 1 : 0)
           << ',' << rep.dominance_gap << ',' << (rep.gap_nonnegative ? 1 : 0) << '\n';
    }
    return os.str();
}

} // namespace csnet
