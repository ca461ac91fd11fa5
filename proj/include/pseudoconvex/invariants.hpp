#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pseudoconvex/hypergraph.hpp"
#include "pseudoconvex/recognition.hpp"

namespace pseudoconvex {

struct InvariantResult {
  std::string module;
  std::string name;
  bool passed = true;
  std::size_t checks = 0;  // 0 when the instance gave nothing to check
  std::string detail;      // first failure
};

struct InvariantOptions {
  std::uint64_t seed = 1;
  // Random queries drawn per sampled invariant.
  std::size_t samples = 32;
  // Saturation and the equivalence checked on its output only run up to this many vertices.
  std::size_t max_saturate_n = 8;
};

// Every structural property the library promises, evaluated on one instance.
std::vector<InvariantResult> check_invariants(const SignedHypergraph& sh, const InvariantOptions& options = {});

// O(m^2 n^3) enumeration over ordered edge pairs and vertex triples.
std::optional<AbaOccurrence> naive_aba(const Hypergraph& h);

}  // namespace pseudoconvex
