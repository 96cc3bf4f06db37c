/**
 * @brief Exact arithmetic over Z_p for small primes.
 *
 * Residues are always held as canonical representatives in [0, p), so the
 * inclusion Z_p -> Z used by the carry function phi is the identity on
 * stored values.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcover {

/// A prime modulus in the supported range [2, 13].
class Prime {
  public:
    static constexpr std::uint32_t max_supported = 13;

    explicit Prime(std::uint32_t value) : value_(value) {
        if (value < 2 || value > max_supported) {
            throw std::invalid_argument("prime must lie in [2, 13], got " + std::to_string(value));
        }
        for (std::uint32_t q = 2; q * q <= value; ++q) {
            if (value % q == 0) {
                throw std::invalid_argument(std::to_string(value) + " is not prime");
            }
        }
    }

    [[nodiscard]] constexpr std::uint32_t value() const noexcept { return value_; }
    [[nodiscard]] constexpr bool is_odd() const noexcept { return value_ != 2; }

    friend constexpr bool operator==(Prime, Prime) noexcept = default;

  private:
    std::uint32_t value_;
};

namespace detail {
inline void require_same_modulus(Prime a, Prime b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": modulus mismatch (" +
                                    std::to_string(a.value()) + " vs " + std::to_string(b.value()) + ")");
    }
}

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
    auto r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}
} // namespace detail

class ZpScalar {
  public:
    /// Reduces @p v modulo p.
    ZpScalar(std::int64_t v, Prime p) : value_(detail::reduce(v, p.value())), p_(p) {}

    static ZpScalar zero(Prime p) { return ZpScalar(0, p); }

    [[nodiscard]] std::uint32_t value() const noexcept { return value_; }
    [[nodiscard]] Prime modulus() const noexcept { return p_; }

    ZpScalar operator-() const { return ZpScalar(value_ == 0 ? 0 : p_.value() - value_, p_); }

    friend ZpScalar operator+(ZpScalar a, ZpScalar b) {
        detail::require_same_modulus(a.p_, b.p_, "add");
        return ZpScalar(static_cast<std::int64_t>(a.value_) + b.value_, a.p_);
    }
    friend ZpScalar operator-(ZpScalar a, ZpScalar b) { return a + (-b); }
    friend ZpScalar operator*(ZpScalar a, ZpScalar b) {
        detail::require_same_modulus(a.p_, b.p_, "mul");
        return ZpScalar(static_cast<std::int64_t>(a.value_) * b.value_, a.p_);
    }
    ZpScalar& operator+=(ZpScalar o) { return *this = *this + o; }
    ZpScalar& operator-=(ZpScalar o) { return *this = *this - o; }

    /// Multiplicative inverse; throws for zero.
    [[nodiscard]] ZpScalar inverse() const {
        if (value_ == 0) throw std::domain_error("zero has no inverse in Z_p");
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = value_;
        for (std::uint32_t e = p_.value() - 2; e != 0; e >>= 1) {
            if (e & 1U) result = result * base % p_.value();
            base = base * base % p_.value();
        }
        return ZpScalar(static_cast<std::int64_t>(result), p_);
    }

    friend bool operator==(ZpScalar, ZpScalar) noexcept = default;

    friend std::ostream& operator<<(std::ostream& os, ZpScalar s) { return os << s.value_; }

  private:
    std::uint32_t value_;
    Prime p_;
};

/// Fixed-length vector over Z_p.
class ZpVector {
  public:
    ZpVector(Prime p, std::size_t dimension) : p_(p), coords_(dimension, 0) {}

    ZpVector(Prime p, std::initializer_list<std::int64_t> values) : p_(p) {
        coords_.reserve(values.size());
        for (auto v : values) coords_.push_back(detail::reduce(v, p.value()));
    }

    ZpVector(Prime p, const std::vector<std::uint32_t>& residues) : p_(p), coords_(residues) {
        for (auto& c : coords_) c %= p.value();
    }

    static ZpVector zero(Prime p, std::size_t dimension) { return ZpVector(p, dimension); }

    /// Standard basis vector e_{index} (0-based index).
    static ZpVector basis(Prime p, std::size_t dimension, std::size_t index) {
        if (index >= dimension) throw std::out_of_range("basis index out of range");
        ZpVector v(p, dimension);
        v.coords_[index] = 1;
        return v;
    }

    [[nodiscard]] Prime modulus() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
    [[nodiscard]] const std::vector<std::uint32_t>& residues() const noexcept { return coords_; }

    [[nodiscard]] ZpScalar operator[](std::size_t i) const { return ZpScalar(coords_.at(i), p_); }
    void set(std::size_t i, ZpScalar s) {
        detail::require_same_modulus(p_, s.modulus(), "set");
        coords_.at(i) = s.value();
    }

    [[nodiscard]] bool is_zero() const noexcept {
        for (auto c : coords_)
            if (c != 0) return false;
        return true;
    }

    ZpVector operator-() const {
        ZpVector out(p_, size());
        for (std::size_t i = 0; i < size(); ++i) out.coords_[i] = coords_[i] == 0 ? 0 : p_.value() - coords_[i];
        return out;
    }

    friend ZpVector operator+(const ZpVector& u, const ZpVector& v) {
        check_compatible(u, v, "vector add");
        ZpVector out(u.p_, u.size());
        for (std::size_t i = 0; i < u.size(); ++i) out.coords_[i] = (u.coords_[i] + v.coords_[i]) % u.p_.value();
        return out;
    }
    friend ZpVector operator-(const ZpVector& u, const ZpVector& v) { return u + (-v); }

    friend ZpVector operator*(ZpScalar k, const ZpVector& v) {
        detail::require_same_modulus(k.modulus(), v.p_, "scale");
        ZpVector out(v.p_, v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out.coords_[i] = k.value() * v.coords_[i] % v.p_.value();
        return out;
    }

    friend bool operator==(const ZpVector&, const ZpVector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ZpVector& v) {
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v.coords_[i];
        return os << ')';
    }

    /// Concatenation (u, v).
    friend ZpVector concat(const ZpVector& u, const ZpVector& v) {
        detail::require_same_modulus(u.p_, v.p_, "concat");
        ZpVector out(u.p_, u.size() + v.size());
        std::copy(u.coords_.begin(), u.coords_.end(), out.coords_.begin());
        std::copy(v.coords_.begin(), v.coords_.end(), out.coords_.begin() + static_cast<std::ptrdiff_t>(u.size()));
        return out;
    }

    /// Coordinates [first, first + count).
    [[nodiscard]] ZpVector slice(std::size_t first, std::size_t count) const {
        if (first + count > size()) throw std::out_of_range("slice out of range");
        ZpVector out(p_, count);
        for (std::size_t i = 0; i < count; ++i) out.coords_[i] = coords_[first + i];
        return out;
    }

    static void check_compatible(const ZpVector& u, const ZpVector& v, const char* what) {
        detail::require_same_modulus(u.p_, v.p_, what);
        if (u.size() != v.size()) {
            throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(u.size()) +
                                        " vs " + std::to_string(v.size()) + ")");
        }
    }

  private:
    Prime p_;
    std::vector<std::uint32_t> coords_;
};

inline ZpScalar dot(const ZpVector& u, const ZpVector& v) {
    ZpVector::check_compatible(u, v, "dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += static_cast<std::uint64_t>(u.residues()[i]) * v.residues()[i];
    return ZpScalar(static_cast<std::int64_t>(acc % u.modulus().value()), u.modulus());
}

/// Carry bit: 1 when the integer representatives of a and b sum to at least p.
inline ZpScalar phi(ZpScalar a, ZpScalar b) {
    detail::require_same_modulus(a.modulus(), b.modulus(), "phi");
    return ZpScalar(a.value() + b.value() >= a.modulus().value() ? 1 : 0, a.modulus());
}

/// Rank over Z_p of the matrix whose rows are @p rows (Gaussian elimination).
inline std::size_t rank(std::vector<ZpVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows) ZpVector::check_compatible(rows.front(), r, "rank");

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot].residues()[col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const ZpScalar inv = rows[rank][col].inverse();
        rows[rank] = inv * rows[rank];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].residues()[col] != 0) rows[r] = rows[r] - rows[r][col] * rows[rank];
        }
        ++rank;
    }
    return rank;
}

/// Number of elements of Z_p^dimension, or throws if it would exceed @p limit.
inline std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t limit) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        result *= base;
        if (result > limit) {
            throw std::invalid_argument(std::to_string(base) + "^" + std::to_string(exponent) +
                                        " exceeds size limit " + std::to_string(limit));
        }
    }
    return result;
}

} // namespace pcover
