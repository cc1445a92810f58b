#pragma once
// Scalar domains: rationals (GMP mpq) and real quadratic extensions Q(sqrt D),
// plus parsing/printing helpers shared by the matrix text format.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "quadsys/fp.hpp"

namespace quadsys {

using Rat = mpq_class;

inline std::string to_string(const Rat& x) { return x.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    x.canonicalize();
    return x;
}

// Element x + y*sqrt(D) of a quadratic extension of Q; D squarefree, not 0 or 1.
template <long D>
class Quad {
    static_assert(D != 0 && D != 1, "D must be a squarefree integer other than 0, 1");

  public:
    Quad() : x_(0), y_(0) {}
    Quad(long v) : x_(v), y_(0) {}  // NOLINT: implicit by design
    Quad(Rat x) : x_(std::move(x)), y_(0) {}  // NOLINT
    Quad(Rat x, Rat y) : x_(std::move(x)), y_(std::move(y)) {}

    const Rat& rational_part() const { return x_; }
    const Rat& radical_part() const { return y_; }
    bool is_rational() const { return y_ == 0; }

    Quad operator-() const { return Quad(-x_, -y_); }
    Quad conj() const { return Quad(x_, -y_); }
    Rat norm() const { return x_ * x_ - Rat(D) * y_ * y_; }

    Quad& operator+=(const Quad& o) {
        x_ += o.x_;
        y_ += o.y_;
        return *this;
    }
    Quad& operator-=(const Quad& o) {
        x_ -= o.x_;
        y_ -= o.y_;
        return *this;
    }
    Quad& operator*=(const Quad& o) {
        Rat nx = x_ * o.x_ + Rat(D) * y_ * o.y_;
        Rat ny = x_ * o.y_ + y_ * o.x_;
        x_ = std::move(nx);
        y_ = std::move(ny);
        return *this;
    }
    Quad& operator/=(const Quad& o) { return *this *= o.inv(); }

    Quad inv() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("division by zero in quadratic field");
        return Quad(x_ / n, -y_ / n);
    }

    friend Quad operator+(Quad a, const Quad& b) { return a += b; }
    friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
    friend Quad operator*(Quad a, const Quad& b) { return a *= b; }
    friend Quad operator/(Quad a, const Quad& b) { return a /= b; }
    friend bool operator==(const Quad& a, const Quad& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }

  private:
    Rat x_, y_;
};

template <long D>
std::string to_string(const Quad<D>& q) {
    if (q.radical_part() == 0) return q.rational_part().get_str();
    return q.rational_part().get_str() + "+" + q.radical_part().get_str() +
           "*sqrt(" + std::to_string(D) + ")";
}

template <long D>
Quad<D> quad_from_string(const std::string& s) {
    auto star = s.find("*sqrt(");
    if (star == std::string::npos) return Quad<D>(rat_from_string(s));
    auto plus = s.rfind('+', star);
    if (plus == std::string::npos || s.back() != ')')
        throw std::invalid_argument("bad quadratic scalar: " + s);
    long d = std::stol(s.substr(star + 6, s.size() - star - 7));
    if (d != D) throw std::invalid_argument("mismatched sqrt argument: " + s);
    return Quad<D>(rat_from_string(s.substr(0, plus)),
                   rat_from_string(s.substr(plus + 1, star - plus - 1)));
}

}  // namespace quadsys
