#include <stdexcept>

#include "lodeg/invariants.hpp"

namespace lodeg {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("transform overflows 64 bits");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("transform overflows 64 bits");
  return r;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

long long sign(int e) { return (e % 2 == 0) ? 1 : -1; }

void check_length(const DegreeVector& v) {
  if (v.d < 0 || v.values.size() != static_cast<std::size_t>(v.d) + 1) {
    throw std::invalid_argument("degree vector must have d + 1 entries");
  }
}

}  // namespace

std::string kind_name(DegreeVector::Kind kind) {
  switch (kind) {
    case DegreeVector::Kind::Bidegree:
      return "bidegree";
    case DegreeVector::Kind::Sectional:
      return "sectional";
    case DegreeVector::Kind::Polar:
      return "polar";
    case DegreeVector::Kind::ChernMather:
      return "chern_mather";
  }
  return "unknown";
}

DegreeVector chern_mather_from_bidegrees(const DegreeVector& b) {
  check_length(b);
  const int d = b.d;
  DegreeVector a{DegreeVector::Kind::ChernMather, std::vector<long long>(d + 1, 0), d, b.n};
  for (int j = d; j >= 0; --j) {
    long long rest = b.values[j];
    for (int k = j + 1; k <= d; ++k) {
      rest = checked_add(rest, -checked_mul(sign(d - k) * binomial(k, j), a.values[k]));
    }
    a.values[j] = sign(d - j) * rest;
  }
  return a;
}

DegreeVector bidegrees_from_chern_mather(const DegreeVector& a) {
  check_length(a);
  const int d = a.d;
  DegreeVector b{DegreeVector::Kind::Bidegree, std::vector<long long>(d + 1, 0), d, a.n};
  for (int i = 0; i <= d; ++i) {
    long long acc = 0;
    for (int j = i; j <= d; ++j) acc = checked_add(acc, checked_mul(sign(d - j) * binomial(j, i), a.values[j]));
    b.values[i] = acc;
  }
  return b;
}

long long alternating_sum(const DegreeVector& b) {
  check_length(b);
  long long acc = 0;
  for (int i = 0; i <= b.d; ++i) acc = checked_add(acc, sign(b.d - i) * b.values[i]);
  return acc;
}

}  // namespace lodeg
