#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lodeg/field.hpp"
#include "lodeg/polynomial.hpp"

namespace lodeg {

/// Root of a reproducible random stream. Identical seed, prime and input
/// give bit-identical results everywhere.
struct Seed {
  std::uint64_t value = 0;
  bool operator==(const Seed&) const = default;
};

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is the state
/// passed through the standard two-multiply finalizer. Reproduced exactly
/// in the README so other implementations can regenerate the streams.
class SplitMix64 {
public:
  explicit SplitMix64(Seed seed) : state_(seed.value) {}

  std::uint64_t next();
  // Uniform in [0, bound) by rejection of the biased top range.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t residue(const PrimeField& field) { return below(field.characteristic()); }
  // Uniform in [1, p): zeros are re-drawn.
  std::uint64_t nonzero_residue(const PrimeField& field);

private:
  std::uint64_t state_;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

/// Independent sub-stream for a named stage (and an index within it).
Seed derive_seed(Seed base, std::string_view label, std::uint64_t index = 0);

/// c_0 + c_1 x_1 + ... + c_n x_n with every c_i drawn nonzero.
PPoly random_affine_form(Seed seed, std::size_t nvars, const PrimeField& field);

/// n nonzero residues.
std::vector<std::uint64_t> random_covector(Seed seed, std::size_t n, const PrimeField& field);

/// n nonzero residues used as coefficients of a random linear combination.
std::vector<std::uint64_t> random_weights(Seed seed, std::size_t n, const PrimeField& field);

struct AgreementPolicy {
  std::size_t seeds_per_trial = 2;
  std::vector<std::uint64_t> primes{kDefaultPrimes[0], kDefaultPrimes[1]};
  std::size_t max_retries = 3;
};

struct TrialRecord {
  Seed seed;
  std::uint64_t prime = 0;
  std::optional<long long> value;  // empty when the trial itself was unstable
};

struct AgreedCount {
  long long value = 0;
  std::size_t rounds = 0;
  std::vector<TrialRecord> trials;  // every trial run, including failed rounds
};

using SeededCount = std::function<long long(Seed, std::uint64_t prime)>;

/// Runs `computation` for every (seed, prime) pair of a round and returns the
/// common value. A round with any disagreement (or a trial raising
/// Instability or DegenerateSlice) is retried with fresh seeds, up to
/// policy.max_retries extra rounds; then Instability is thrown carrying every
/// observed value.
AgreedCount agreed_count(const SeededCount& computation, const AgreementPolicy& policy, Seed base);

}  // namespace lodeg
