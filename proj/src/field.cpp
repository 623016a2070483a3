#include "toricode/field.hpp"

#include "toricode/error.hpp"

#include <limits>
#include <string>

namespace toricode {

bool is_prime(std::uint64_t q) noexcept {
    if (q < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (q >= (1u << 31) || !is_prime(q))
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a supported prime modulus");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    std::int64_t r0 = q_, r1 = a % q_;
    std::int64_t s0 = 0, s1 = 1;
    if (r1 == 0)
        throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
    while (r1 != 0) {
        std::int64_t k = r0 / r1;
        std::int64_t r2 = r0 - k * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t s2 = s0 - k * s1;
        s0 = s1;
        s1 = s2;
    }
    return reduce(s0);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    std::uint32_t result = 1 % q_;
    std::uint32_t base = a % q_;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

GF::GF(std::uint32_t modulus, std::int64_t v) : q(modulus), value(PrimeField(modulus).reduce(v)) {}

namespace {
void same_field(const GF& a, const GF& b) {
    if (a.q != b.q)
        throw Error(ErrorKind::InvalidInput, "mixing F_" + std::to_string(a.q) + " and F_" + std::to_string(b.q));
}
} // namespace

GF operator+(GF a, GF b) {
    same_field(a, b);
    GF r;
    r.q = a.q;
    r.value = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) + b.value) % a.q);
    return r;
}

GF operator-(GF a, GF b) {
    same_field(a, b);
    GF r;
    r.q = a.q;
    r.value = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.value) + a.q - b.value) % a.q);
    return r;
}

GF operator*(GF a, GF b) {
    same_field(a, b);
    GF r;
    r.q = a.q;
    r.value = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % a.q);
    return r;
}

GF inverse(GF a) {
    GF r;
    r.q = a.q;
    r.value = PrimeField(a.q).inv(a.value);
    return r;
}

std::ostream& operator<<(std::ostream& os, const GF& a) { return os << a.value; }

} // namespace toricode
