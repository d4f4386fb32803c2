#pragma once

#include <gmpxx.h>
#include <string>

namespace rsq {

// Global field choice: rationals (default) or GF(p).
struct FieldConfig {
    bool rational = true;
    long prime = 0; // used when !rational
};

void set_field(const FieldConfig& cfg); // throws std::invalid_argument unless prime is prime
const FieldConfig& field_config();

// Exact field element. In GF(p) mode values are canonical integers in [0, p).
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) { reduce(); }
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& q) : v_(q) { reduce(); }

    static Scalar from_string(const std::string& s); // "p" or "p/q"

    Scalar operator+(const Scalar& o) const { return Scalar(mpq_class(v_ + o.v_)); }
    Scalar operator-(const Scalar& o) const { return Scalar(mpq_class(v_ - o.v_)); }
    Scalar operator*(const Scalar& o) const { return Scalar(mpq_class(v_ * o.v_)); }
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; reduce(); return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; reduce(); return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; reduce(); return *this; }

    Scalar inv() const;

    bool is_zero() const { return v_ == 0; }
    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }
    bool operator<(const Scalar& o) const { return v_ < o.v_; }

    std::string str() const;
    const mpq_class& value() const { return v_; }

private:
    mpq_class v_;
    void reduce();
};

bool is_prime(long p);

} // namespace rsq
