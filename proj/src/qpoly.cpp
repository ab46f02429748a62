#include "csnet/qpoly.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "csnet/error.hpp"

namespace csnet {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NonNonnegativeParameter: return "NonNonnegativeParameter";
    case ErrorKind::MissingWitness: return "MissingWitness";
    case ErrorKind::SequenceExhausted: return "SequenceExhausted";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::RequiresUnitGamma: return "RequiresUnitGamma";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    }
    return "Error";
}

bool is_family_error(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::UnknownFamily:
    case ErrorKind::SchemaError:
    case ErrorKind::NonNonnegativeParameter:
    case ErrorKind::MissingWitness:
    case ErrorKind::SequenceExhausted:
    case ErrorKind::NegativeWeight:
    case ErrorKind::RequiresUnitGamma:
        return true;
    default:
        return false;
    }
}

QPoly::QPoly(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const Integer& c) {
    if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    canonicalize();
}

QPoly::QPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
    canonicalize();
}

QPoly QPoly::monomial(const Integer& c, std::size_t k) {
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Integer(0));
        p.coeffs_[k] = c;
    }
    return p;
}

void QPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> QPoly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Integer QPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

bool QPoly::is_q_nonnegative() const noexcept {
    for (const auto& c : coeffs_)
        if (sgn(c) < 0) return false;
    return true;
}

Integer QPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    canonicalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    canonicalize();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.canonicalize();
    return r;
}

QPoly QPoly::divexact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly::divexact: division by zero");
    if (a.is_zero()) return {};
    if (a.coeffs_.size() < b.coeffs_.size()) throw std::domain_error("QPoly::divexact: inexact division");
    std::vector<Integer> rem = a.coeffs_;
    const std::size_t db = b.coeffs_.size() - 1;
    const Integer& lead = b.coeffs_.back();
    std::vector<Integer> quot(rem.size() - db, Integer(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Integer& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("QPoly::divexact: inexact division");
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs_[j];
        quot[k] = c;
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("QPoly::divexact: inexact division");
    return QPoly(std::move(quot));
}

std::string QPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (sgn(c) < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (k == 0 || mag != 1) out += mag.get_str();
        if (k >= 1) out += 'q';
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

QPoly QPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&]() { return Error(ErrorKind::SchemaError, "cannot parse polynomial \"" + std::string(text) + "\""); };
    if (s.empty()) throw fail();

    QPoly result;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw fail();
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        Integer c = 1;
        bool have_digits = i > start;
        if (have_digits) c = Integer(s.substr(start, i - start));
        if (i < s.size() && s[i] == '*') {
            if (!have_digits) throw fail();
            ++i;
        }
        std::size_t power = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ps = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == ps) throw fail();
                power = std::stoul(s.substr(ps, i - ps));
            }
        } else if (!have_digits) {
            throw fail();
        }
        result += monomial(sign * c, power);
    }
    return result;
}

QPoly add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly sub(const QPoly& a, const QPoly& b) { return a - b; }
QPoly mul(const QPoly& a, const QPoly& b) { return a * b; }
bool is_q_nonnegative(const QPoly& p) { return p.is_q_nonnegative(); }
Integer eval_int(const QPoly& p, const Integer& x) { return p.eval(x); }

nlohmann::json to_json(const QPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p())
            arr.push_back(c.get_si());
        else
            arr.push_back(c.get_str());
    }
    return arr;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
    if (j.is_string()) return QPoly::parse(j.get<std::string>());
    if (j.is_number_integer()) return QPoly(Integer(j.dump()));
    if (!j.is_array()) throw Error(ErrorKind::SchemaError, "polynomial must be a coefficient array or string, got " + j.dump());
    std::vector<Integer> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (c.is_number_integer())
            coeffs.emplace_back(c.dump());
        else if (c.is_string())
            try {
                coeffs.emplace_back(c.get<std::string>());
            } catch (const std::invalid_argument&) {
                throw Error(ErrorKind::SchemaError, "bad integer coefficient " + c.dump());
            }
        else
            throw Error(ErrorKind::SchemaError, "bad coefficient " + c.dump());
    }
    return QPoly(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

} // namespace csnet
