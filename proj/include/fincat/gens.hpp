#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/dagger.hpp"
#include "fincat/involutive.hpp"

namespace fincat::gens {

/// A finite group by multiplication table; element 0 is the unit.
struct Group {
  std::vector<std::string> elements;
  std::vector<std::vector<std::uint32_t>> table;  // table[a][b] = a * b
};

Group cyclic_group(std::uint32_t n);
/// Permutations of {0,1,2} in lexicographic one-line order.
Group symmetric_group_3();

enum class Kind { delooping, discrete_involution, matrix, poset_antitone, walking_iso, product };

struct GeneratorSpec {
  Kind kind = Kind::delooping;
  std::string name;

  // delooping: dagger g -> twist(g^{-1}); anti-involution with eta = eta_element
  Group group;
  std::vector<std::uint32_t> twist;  // empty means identity
  std::uint32_t eta_element = 0;

  // discrete-involution: d permutes objects, eta = identities
  std::vector<std::uint32_t> permutation;

  // matrix over GF(q^2): objects 0..max_dim, dagger = conjugate transpose, conj(x) = x^q
  std::uint32_t q = 2;
  std::uint32_t max_dim = 1;

  // poset-antitone: leq[i][j] means i <= j; d(i) = antitone[i]
  std::vector<std::vector<bool>> leq;
  std::vector<std::uint32_t> antitone;

  // product of two specs
  std::vector<GeneratorSpec> factors;

  // guards
  std::uint64_t max_morphisms = 100'000;
  std::uint64_t max_composable_pairs = 20'000'000;
};

GeneratorSpec delooping(std::string name, Group group, std::vector<std::uint32_t> twist = {},
                        std::uint32_t eta_element = 0);
GeneratorSpec discrete(std::string name, std::vector<std::uint32_t> permutation);
GeneratorSpec matrix(std::string name, std::uint32_t q, std::uint32_t max_dim);
/// Chain 0 < 1 < ... < length-1 with i -> length-1-i.
GeneratorSpec chain(std::string name, std::uint32_t length);
GeneratorSpec walking_iso(std::string name);
GeneratorSpec product(std::string name, GeneratorSpec a, GeneratorSpec b);

struct Bundle {
  std::string name;
  FiniteCategory category;
  std::optional<DaggerStructure> dagger;
  std::optional<AntiInvolutiveCategory> involution;
  std::string dagger_name;      // "D" when present
  std::string involution_name;  // "T<name>" when it is T of the dagger, "I<name>" otherwise
};

/// Throws InvalidSpec or SizeExceeded. Every output has passed its validators.
Bundle generate(const GeneratorSpec& spec);

/// The fixture suite: One, Walk, Swap2, B3, B4, B4eta1, BS3, M1F4, M2F4,
/// Disc3, Chain3, B2xM1F4.
std::vector<GeneratorSpec> fixture_specs();
std::vector<Bundle> fixture_suite();
Bundle fixture(const std::string& name);

}  // namespace fincat::gens
