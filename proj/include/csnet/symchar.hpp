#pragma once

/**
 * Integer partitions and irreducible characters of the symmetric group.
 *
 * Characters are evaluated with the Murnaghan-Nakayama rule on beta-sets:
 * removing a border strip of length m from lambda corresponds to moving one
 * bead of the beta-set down by m, with sign (-1)^(beads jumped over).
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <json.hpp>

#include "csnet/qpoly.hpp"

namespace csnet {

struct Partition {
    std::vector<int> parts;  ///< weakly decreasing, positive

    Partition() = default;
    /// Sorts into weakly decreasing order and drops zeros; negative parts throw OutOfRange.
    explicit Partition(std::vector<int> p);

    int size() const noexcept;  ///< n = sum of parts
    std::size_t length() const noexcept { return parts.size(); }
    Partition conjugate() const;
    std::string to_string() const;  ///< "(2,1)", "()" for the empty partition

    auto operator<=>(const Partition&) const = default;
};

/// All partitions of n in reverse lexicographic order, e.g. (3), (2,1), (1,1,1).
/// OutOfRange unless 0 <= n <= 20.
std::vector<Partition> partitions_of(int n);

/// chi^lambda at cycle type mu. ShapeError if |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// chi^lambda(identity), by the hook length formula.
std::int64_t degree(const Partition& lambda);

/// Cycle type of a permutation of {1..n} given as its image list [pi(1), ..., pi(n)].
/// NotAPermutation if the list is not a bijection.
Partition cycle_type(const std::vector<int>& images);

/// (-1)^(n - number of parts).
int sign(const Partition& mu);

/// Order of the centralizer of a permutation with cycle type mu.
Integer centralizer_order(const Partition& mu);

class CharacterTable {
public:
    explicit CharacterTable(int n);

    int n() const noexcept { return n_; }
    /// Partitions of n; serve as both row (lambda) and column (class) labels.
    const std::vector<Partition>& partitions() const noexcept { return parts_; }
    std::size_t index_of(const Partition& p) const;
    std::int64_t value(std::size_t lambda, std::size_t mu) const { return values_[lambda * parts_.size() + mu]; }
    std::int64_t value(const Partition& lambda, const Partition& mu) const {
        return value(index_of(lambda), index_of(mu));
    }

private:
    int n_;
    std::vector<Partition> parts_;
    std::map<Partition, std::size_t> index_;
    std::vector<std::int64_t> values_;
};

/// Shared, immutable table for n, built on first use. Thread-safe.
const CharacterTable& character_table(int n);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const CharacterTable& t);

} // namespace csnet
