#pragma once

/**
 * Parameter families (r_k), (s_k), (t_k) of a Catalan-Stieltjes matrix and
 * the five sufficient positivity conditions they may satisfy.
 *
 * Each sequence is data, not code: an explicit prefix of terms followed by an
 * optional affine tail rule term(k) = linear*k + constant. The t sequence is
 * indexed from 1, so its prefix starts at t_1. The conventions r_{-1} = 0 and
 * t_0 = 0 are built into the accessors.
 */

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csnet/qpoly.hpp"

namespace csnet {

struct AffineTail {
    QPoly linear;
    QPoly constant;
};

class Sequence {
public:
    Sequence() = default;
    Sequence(std::vector<QPoly> prefix, std::optional<AffineTail> tail, int first_index = 0)
        : prefix_(std::move(prefix)), tail_(std::move(tail)), first_index_(first_index) {}

    static Sequence constant(QPoly c, int first_index = 0) {
        return Sequence({}, AffineTail{QPoly(), std::move(c)}, first_index);
    }

    /// Term k. Throws SequenceExhausted past a finite prefix and IndexError below first_index.
    QPoly term(int k) const;

    const std::vector<QPoly>& prefix() const noexcept { return prefix_; }
    const std::optional<AffineTail>& tail() const noexcept { return tail_; }
    int first_index() const noexcept { return first_index_; }

private:
    std::vector<QPoly> prefix_;
    std::optional<AffineTail> tail_;
    int first_index_ = 0;
};

class FamilySpec {
public:
    FamilySpec(std::string name, Sequence r, Sequence s, Sequence t,
               std::optional<Sequence> witness_b = std::nullopt,
               std::optional<Sequence> witness_c = std::nullopt);

    const std::string& name() const noexcept { return name_; }

    // Parameter accessors. Every returned term has been checked q-nonnegative;
    // a failing term raises NonNonnegativeParameter.
    QPoly r(int k) const;  ///< r_k, with r_{-1} = 0
    QPoly s(int k) const;  ///< s_k, k >= 0
    QPoly t(int k) const;  ///< t_k, with t_0 = 0
    QPoly b(int k) const;  ///< witness b_k; MissingWitness when absent
    QPoly c(int k) const;  ///< witness c_k; MissingWitness when absent

    bool has_witnesses() const noexcept { return witness_b_.has_value() && witness_c_.has_value(); }

    const Sequence& r_sequence() const noexcept { return r_; }
    const Sequence& s_sequence() const noexcept { return s_; }
    const Sequence& t_sequence() const noexcept { return t_; }
    const std::optional<Sequence>& b_sequence() const noexcept { return witness_b_; }
    const std::optional<Sequence>& c_sequence() const noexcept { return witness_c_; }

private:
    std::string name_;
    Sequence r_, s_, t_;
    std::optional<Sequence> witness_b_, witness_c_;
};

struct Violation {
    int k;
    QPoly difference;
};

struct ConditionReport {
    int condition_index = 0;
    bool holds = true;
    std::optional<Violation> first_violation;
};

/// Checks positivity condition `which` (1..5) for every k in [0, up_to].
///
///   1: s_0 >= r_0,         s_k >= r_k + t_k
///   2: s_0 >= t_1,         s_k >= r_{k-1} + t_{k+1}
///   3: s_0 >= 1,           s_k >= r_{k-1} t_k + 1
///   4: s_0 >= r_0 t_1,     s_k >= r_k t_{k+1} + 1
///   5: r_k = 1, s_k = b_k + c_k, t_{k+1} = b_{k+1} c_k with b, c q-nonnegative
///
/// For condition 5 the reported difference is the first nonzero residual, or
/// the offending witness term itself.
ConditionReport check_condition(const FamilySpec& f, int which, int up_to);

/// Default truncation depth used when a size-n matrix is requested.
constexpr int default_truncation(int n) { return 2 * n + 2; }

/// "eulerian", "schroder" or "narayana"; UnknownFamily otherwise.
FamilySpec builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// The positivity conditions each builtin is known to satisfy.
std::vector<int> builtin_conditions(const std::string& name);

FamilySpec load_family(const nlohmann::json& document);
FamilySpec load_family(const std::string& text);
nlohmann::json to_json(const FamilySpec& f);

} // namespace csnet
