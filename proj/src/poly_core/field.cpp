#include "lodeg/field.hpp"

#include <stdexcept>

namespace lodeg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ULL << 32) || !is_prime(p)) {
    throw std::invalid_argument("PrimeField: modulus must be an odd prime below 2^32, got " +
                                std::to_string(p));
  }
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  Element base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in prime field");
  // extended Euclid on signed 64-bit values
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p_);
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
  mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
  if (num < 0) num += static_cast<unsigned long>(p_);
  if (den == 0) {
    throw BadPrime("denominator " + q.get_den().get_str() + " vanishes modulo " +
                   std::to_string(p_));
  }
  Element n = num.get_ui();
  Element d = den.get_ui();
  return mul(n, inv(d));
}

void validate_working_prime(std::uint64_t p) {
  if (p <= (1ULL << 30) || p >= (1ULL << 32) || !is_prime(p)) {
    throw InputError("working prime must be an odd prime in (2^30, 2^32), got " +
                     std::to_string(p));
  }
}

}  // namespace lodeg
