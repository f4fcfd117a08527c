#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace npv {

struct CorpusMap {
  std::string name;
  std::string text;  // "P; Q"
  std::string kind;  // "fixed", "random", "automorphism"
};

// Fixed examples followed by seeded random pairs: generic monic pairs of
// degree <= 4 whose top forms split into linear factors over Z, and tame
// automorphisms built from elementary triangular maps.
std::vector<CorpusMap> corpus(std::uint64_t seed = 7);

std::vector<CorpusMap> random_pairs(std::uint64_t seed, int count);
std::vector<CorpusMap> random_automorphisms(std::uint64_t seed, int count);

}  // namespace npv
