#include "lodeg/genericity.hpp"

#include <limits>
#include <string>

#include "lodeg/errors.hpp"

namespace lodeg {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return splitmix64_mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::uint64_t SplitMix64::nonzero_residue(const PrimeField& field) {
  std::uint64_t r = residue(field);
  while (r == 0) r = residue(field);
  return r;
}

Seed derive_seed(Seed base, std::string_view label, std::uint64_t index) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = splitmix64_mix(base.value ^ h);
  z = splitmix64_mix(z + 0x9E3779B97F4A7C15ULL * (index + 1));
  return Seed{z};
}

PPoly random_affine_form(Seed seed, std::size_t nvars, const PrimeField& field) {
  SplitMix64 rng(seed);
  std::vector<Term<PrimeField>> terms;
  terms.push_back({rng.nonzero_residue(field), Monomial()});
  for (std::size_t i = 0; i < nvars; ++i) {
    terms.push_back({rng.nonzero_residue(field), Monomial::variable(i)});
  }
  return PPoly::from_terms(field, nvars, MonomialOrder::grevlex(), std::move(terms));
}

std::vector<std::uint64_t> random_covector(Seed seed, std::size_t n, const PrimeField& field) {
  if (n == 0) throw std::invalid_argument("random_covector: n must be positive");
  return random_weights(seed, n, field);
}

std::vector<std::uint64_t> random_weights(Seed seed, std::size_t n, const PrimeField& field) {
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> out(n);
  for (auto& c : out) c = rng.nonzero_residue(field);
  return out;
}

AgreedCount agreed_count(const SeededCount& computation, const AgreementPolicy& policy, Seed base) {
  if (policy.seeds_per_trial == 0 || policy.primes.empty()) {
    throw std::invalid_argument("agreement policy needs at least one seed and one prime");
  }
  AgreedCount result;
  std::vector<long long> observed;
  for (std::size_t round = 0; round <= policy.max_retries; ++round) {
    result.rounds = round + 1;
    std::optional<long long> common;
    bool agree = true;
    for (std::size_t k = 0; k < policy.seeds_per_trial; ++k) {
      Seed seed = derive_seed(base, "trial", round * policy.seeds_per_trial + k);
      for (std::uint64_t prime : policy.primes) {
        TrialRecord rec{seed, prime, std::nullopt};
        try {
          rec.value = computation(seed, prime);
        } catch (const Instability&) {
        } catch (const DegenerateSlice&) {
        }
        result.trials.push_back(rec);
        if (!rec.value) {
          agree = false;
          continue;
        }
        observed.push_back(*rec.value);
        if (!common) {
          common = rec.value;
        } else if (*common != *rec.value) {
          agree = false;
        }
      }
    }
    if (agree && common) {
      result.value = *common;
      return result;
    }
  }
  throw Instability("randomized trials disagree after " + std::to_string(policy.max_retries) +
                        " retries",
                    observed);
}

}  // namespace lodeg
