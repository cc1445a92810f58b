#pragma once
// Prime-field scalar F_p with a process-wide modulus.
//
// The modulus is configured once at startup (default 101, overridable via the
// QUADSYS_PRIME environment variable or programmatically) and read-only
// afterwards; all Fp values created under the same modulus are compatible.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace quadsys {

namespace detail {
inline std::uint64_t& fp_modulus_ref() {
    static std::uint64_t p = [] {
        if (const char* env = std::getenv("QUADSYS_PRIME")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v >= 2) return static_cast<std::uint64_t>(v);
        }
        return static_cast<std::uint64_t>(101);
    }();
    return p;
}
}  // namespace detail

inline std::uint64_t fp_modulus() { return detail::fp_modulus_ref(); }

inline void set_fp_modulus(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    detail::fp_modulus_ref() = p;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = (__uint128_t{r} * b) % p;
        b = (__uint128_t{b} * b) % p;
        e >>= 1;
    }
    return r;
}

// Inverse mod p for prime p.
inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("division by zero mod p");
    return mod_pow(a, p - 2, p);
}

class Fp {
  public:
    Fp() : v_(0) {}
    Fp(long long x) {  // NOLINT: implicit by design, mirrors integer literals
        const long long p = static_cast<long long>(fp_modulus());
        long long r = x % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    // Symmetric representative in (-p/2, p/2].
    long long lifted() const {
        const long long p = static_cast<long long>(fp_modulus());
        long long v = static_cast<long long>(v_);
        return v * 2 > p ? v - p : v;
    }

    Fp operator-() const { return from_raw(v_ ? fp_modulus() - v_ : 0); }
    Fp& operator+=(Fp o) {
        v_ += o.v_;
        if (v_ >= fp_modulus()) v_ -= fp_modulus();
        return *this;
    }
    Fp& operator-=(Fp o) {
        v_ += fp_modulus() - o.v_;
        if (v_ >= fp_modulus()) v_ -= fp_modulus();
        return *this;
    }
    Fp& operator*=(Fp o) {
        v_ = (__uint128_t{v_} * o.v_) % fp_modulus();
        return *this;
    }
    Fp& operator/=(Fp o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inv() const { return from_raw(mod_inv(v_, fp_modulus())); }

    static Fp from_raw(std::uint64_t v) {
        Fp x;
        x.v_ = v % fp_modulus();
        return x;
    }

  private:
    std::uint64_t v_;
};

inline std::string to_string(Fp x) { return std::to_string(x.value()); }

}  // namespace quadsys
