#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace toricode {

bool is_prime(std::uint64_t q) noexcept;

// Arithmetic in F_q for a prime q < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q);

    std::uint32_t modulus() const noexcept { return q_; }

    std::uint32_t reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(q_);
        return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
    }
    // Inverse by extended Euclid; a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const;
    // Negative exponents use the inverse.
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t q_;
};

// A field element that carries its modulus.
struct GF {
    std::uint32_t q = 2;
    std::uint32_t value = 0;

    GF() = default;
    GF(std::uint32_t modulus, std::int64_t v);

    friend bool operator==(const GF&, const GF&) = default;
    friend auto operator<=>(const GF&, const GF&) = default;
};

GF operator+(GF a, GF b);
GF operator-(GF a, GF b);
GF operator*(GF a, GF b);
GF inverse(GF a);
std::ostream& operator<<(std::ostream& os, const GF& a);

} // namespace toricode
