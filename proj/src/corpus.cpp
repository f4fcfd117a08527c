#include "npv/corpus.hpp"

#include <random>

#include "npv/bipoly.hpp"

namespace npv {

namespace {

// Raw engine output only, so the corpus is the same under every standard
// library.
long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

long pick_nonzero(std::mt19937_64& rng, long bound) {
  const long v = pick(rng, 1, bound);
  return rng() % 2 ? v : -v;
}

BiPoly random_monic(std::mt19937_64& rng, int degree) {
  BiPoly top(Scalar(1));
  for (int k = 0; k < degree; ++k) {
    top *= BiPoly::y() - BiPoly::x() * Scalar(pick(rng, -2, 2));
  }
  BiPoly out = top;
  for (int total = 0; total < degree; ++total) {
    for (int dy = 0; dy <= total; ++dy) {
      if (rng() % 3 == 0) out += BiPoly::term(Scalar(pick_nonzero(rng, 3)), total - dy, dy);
    }
  }
  return out;
}

}  // namespace

std::vector<CorpusMap> random_pairs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusMap> out;
  while (static_cast<int>(out.size()) < count) {
    const int dp = static_cast<int>(pick(rng, 2, 4));
    const int dq = static_cast<int>(pick(rng, 1, 4));
    BiPoly p = random_monic(rng, dp);
    BiPoly q = random_monic(rng, dq);
    if (jacobian(p, q).is_zero()) continue;
    out.push_back(CorpusMap{"R" + std::to_string(out.size() + 1), p.to_string() + "; " + q.to_string(), "random"});
  }
  return out;
}

std::vector<CorpusMap> random_automorphisms(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<CorpusMap> out;
  while (static_cast<int>(out.size()) < count) {
    BiPoly p = BiPoly::x(), q = BiPoly::y();
    const int steps = static_cast<int>(pick(rng, 2, 3));
    for (int s = 0; s < steps; ++s) {
      const Scalar a(pick_nonzero(rng, 2));
      const unsigned k = static_cast<unsigned>(pick(rng, 1, 2));
      if (s % 2 == 0) {
        p += q.pow(k) * a;
      } else {
        q += p.pow(k) * a;
      }
    }
    p += Scalar(pick(rng, -1, 1));
    q += Scalar(pick(rng, -1, 1));
    if (p.degree() > 4 || q.degree() > 4 || p.is_constant() || q.is_constant()) continue;
    out.push_back(CorpusMap{"A" + std::to_string(out.size() + 1), p.to_string() + "; " + q.to_string(), "automorphism"});
  }
  return out;
}

std::vector<CorpusMap> corpus(std::uint64_t seed) {
  std::vector<CorpusMap> out{
      {"F1", "x + y; y", "fixed"},
      {"F2", "x + y; x*y + y^2", "fixed"},
      {"F2T", "x*y + y^2; x + y", "fixed"},
      {"F3p", "x + y + x*y + y^2; x*y + y^2", "fixed"},
      {"F5", "x; y^2", "fixed"},
  };
  for (auto& m : random_pairs(seed, 5)) out.push_back(std::move(m));
  for (auto& m : random_automorphisms(seed, 3)) out.push_back(std::move(m));
  return out;
}

}  // namespace npv
