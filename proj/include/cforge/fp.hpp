#pragma once
// Arithmetic in the prime field F_p for a prime p that fits in 31 bits.
// All exact-linear-algebra routines take the field as an explicit context so
// different sessions can run at different primes.  p = 2 is allowed; the few
// routines that genuinely need an odd prime (polynomial root splitting)
// enforce that themselves.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cforge {

struct CfError : std::runtime_error {
    explicit CfError(const std::string& msg) : std::runtime_error(msg) {}
};

bool is_prime_u64(uint64_t n);

class Fp {
  public:
    explicit Fp(uint32_t p) : p_(p) {
        if (p < 2 || !is_prime_u64(p) || p > (1u << 31))
            throw CfError("field modulus must be a prime below 2^31, got " + std::to_string(p));
    }

    uint32_t p() const { return p_; }

    uint32_t reduce_int(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return (uint32_t)r;
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return (uint32_t)((uint64_t)a * b % p_); }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw CfError("division by zero in F_p");
        return pow(a, p_ - 2);
    }

    bool operator==(const Fp& o) const { return p_ == o.p_; }

  private:
    uint32_t p_;
};

} // namespace cforge
