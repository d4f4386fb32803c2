#include "rsq/field.hpp"

#include <stdexcept>

namespace rsq {

namespace {
FieldConfig g_field; // rationals by default

long mod_pow(long b, long e, long p) {
    long r = 1;
    b %= p;
    if (b < 0) b += p;
    while (e > 0) {
        if (e & 1) r = (long)((__int128)r * b % p);
        b = (long)((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}
} // namespace

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void set_field(const FieldConfig& cfg) {
    if (!cfg.rational && !is_prime(cfg.prime))
        throw std::invalid_argument("field: modulus " + std::to_string(cfg.prime) + " is not prime");
    g_field = cfg;
}

const FieldConfig& field_config() { return g_field; }

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::invalid_argument("scalar: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
    reduce();
}

void Scalar::reduce() {
    v_.canonicalize();
    if (g_field.rational) return;
    const long p = g_field.prime;
    mpz_class num = v_.get_num() % p;
    mpz_class den = v_.get_den() % p;
    long n = num.get_si(), d = den.get_si();
    if (n < 0) n += p;
    if (d == 0) throw std::domain_error("scalar: denominator divisible by " + std::to_string(p));
    long r = (long)((__int128)n * mod_pow(d, p - 2, p) % p);
    v_ = r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("scalar: division by zero");
    return Scalar(mpq_class(v_ / o.v_));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("scalar: inverse of zero");
    return Scalar(mpq_class(1 / v_));
}

Scalar Scalar::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("scalar: cannot parse '" + s + "'");
    q.canonicalize();
    return Scalar(q);
}

std::string Scalar::str() const { return v_.get_str(); }

} // namespace rsq
