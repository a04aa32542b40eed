#pragma once

// Invariant suites for the Cartan datum and the nil Hecke algebra.

#include "kmcat/cartan.hpp"
#include "kmcat/report.hpp"

#include <cstdint>

namespace kmcat {

/// GCM axioms, symmetrizer, cycle criterion, and in finite type the root
/// count against dim L(rho) = 2^{#roots}.
Report cartan_suite(const CartanDatum& datum);

/// Action compatibility, associativity, the b_w basis, the matrix
/// representation and the idempotent pi_n, for NH_n.
Report nilhecke_suite(int n, std::uint64_t seed, int random_triples = 200, int random_pairs = 100);

}  // namespace kmcat
