#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "degenkit/cone.hpp"
#include "degenkit/serialization.hpp"

namespace degenkit::cli {

struct SuiteRow {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteLimits {
  int max_n = 8;
  int bound = 4;
  std::uint64_t seed = 20240229;
  int random_cones = 200;
};

/// Triple agreement and mod-L congruences for 1 <= r <= max_n, 0 <= n <= max_n.
std::vector<SuiteRow> arrangement_suite(const SuiteLimits& limits);

/// Dual generators, smoothness, partition, semistability, charts, greedy
/// decomposition and duality involution for n <= max_n.
std::vector<SuiteRow> toric_suite(const SuiteLimits& limits);

/// Full degeneration reports, local mod-L invariance and the scissor oracle.
std::vector<SuiteRow> degeneration_suite(const SuiteLimits& limits);

/// Full-dimensional unimodular cone of the given rank: rows of a random
/// unimodular matrix built from elementary row operations.
toriclat::Cone random_unimodular_cone(std::size_t rank, std::mt19937_64& rng);

Json rows_to_json(const std::vector<SuiteRow>& rows);

}  // namespace degenkit::cli
