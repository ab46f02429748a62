#pragma once

/**
 * Univariate polynomials in q with arbitrary-precision integer coefficients.
 *
 * Every scalar in the library is a QPoly: the sequence parameters, matrix
 * entries, arc weights and immanant values. Plain integers are degree-zero
 * polynomials.
 *
 * Coefficients are stored densely in ascending order and kept canonical:
 * the highest stored coefficient is nonzero, and the zero polynomial is the
 * empty list. The coefficientwise partial order f >=_q g is only exposed as
 * is_q_nonnegative(f - g).
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace csnet {

using Integer = mpz_class;

class QPoly {
public:
    QPoly() = default;
    QPoly(long c);
    QPoly(const Integer& c);
    QPoly(std::initializer_list<long> ascending);
    explicit QPoly(std::vector<Integer> ascending);

    /// The monomial c*q^k.
    static QPoly monomial(const Integer& c, std::size_t k);
    static QPoly q() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    /// Coefficient of q^k (zero beyond the degree).
    Integer coeff(std::size_t k) const;
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_q_nonnegative() const noexcept;
    Integer eval(const Integer& x) const;

    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);
    QPoly operator-() const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact quotient a / b in Z[q]. Throws std::domain_error if b does not divide a.
    static QPoly divexact(const QPoly& a, const QPoly& b);

    /// Ascending human-readable form, e.g. "1+4q+q^2", "-q^3", "0".
    std::string to_string() const;
    /// Inverse of to_string; also accepts spaces and terms in any order.
    static QPoly parse(std::string_view text);

    /// Drops zero high-order coefficients. Idempotent.
    void canonicalize();

private:
    std::vector<Integer> coeffs_;
};

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
bool is_q_nonnegative(const QPoly& p);
Integer eval_int(const QPoly& p, const Integer& x);

/// JSON encoding: ascending coefficient array, zero is []. Integers beyond
/// the 64-bit range are written as decimal strings.
nlohmann::json to_json(const QPoly& p);
/// Accepts a coefficient array (numbers or decimal strings) or a
/// human-readable polynomial string.
QPoly qpoly_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

} // namespace csnet
