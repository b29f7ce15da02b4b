#include "sgt/homology.hpp"

#include <algorithm>
#include <string>

namespace sgt {

bool CycleVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

CycleVector& CycleVector::operator+=(const CycleVector& other) {
  if (other.size() != size()) throw std::invalid_argument("cycle vectors of different dimension");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycleVector& CycleVector::operator*=(std::int64_t factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

CycleVector operator-(CycleVector a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

CycleVector cycle_vector(const MetricGraph& g, const BasedLoop& loop) {
  if (walk_end(g, loop.base, loop.steps) != loop.base) {
    throw GraphError("walk from vertex " + std::to_string(loop.base) + " is not closed");
  }
  CycleVector c(g.edge_count());
  for (auto s : loop.steps) c[s.edge] += s.forward ? 1 : -1;
  return c;
}

bool boundary_zero(const MetricGraph& g, const CycleVector& c) {
  if (c.size() != g.edge_count()) return false;
  std::vector<std::int64_t> net(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    net[e.u] -= c[e.id];
    net[e.v] += c[e.id];
  }
  return std::all_of(net.begin(), net.end(), [](std::int64_t x) { return x == 0; });
}

RankCertificate rank(std::span<const CycleVector> vectors) {
  RankCertificate cert;
  cert.vectors.assign(vectors.begin(), vectors.end());
  if (vectors.empty()) return cert;

  const std::size_t cols = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != cols) throw std::invalid_argument("cycle vectors of different dimension");
  }

  std::vector<std::vector<BigInt>> m(vectors.size(), std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(vectors[i][static_cast<EdgeId>(j)]);
  }

  // Bareiss: after each step the entries are minors of the input, so the
  // division by the previous pivot is exact.
  BigInt previous = 1;
  BigInt scratch;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    cert.pivots.push_back(static_cast<EdgeId>(col));
    const BigInt& pivot = m[r][col];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        scratch = pivot * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous = pivot;
    ++r;
  }
  cert.rank = r;
  return cert;
}

bool is_independent(std::span<const CycleVector> vectors) { return rank(vectors).rank == vectors.size(); }

BigInt free_ball_size(unsigned generators, unsigned radius) {
  if (generators == 0) throw std::invalid_argument("free group rank must be at least 1");
  if (radius == 0) return 1;
  if (generators == 1) return BigInt(2 * static_cast<unsigned long>(radius) + 1);
  // 1 + 2k * ((2k-1)^r - 1) / (2k-2)
  const unsigned long k = generators;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2 * k - 1, radius);
  BigInt numerator = BigInt(2 * k) * (power - 1);
  BigInt quotient;
  mpz_divexact_ui(quotient.get_mpz_t(), numerator.get_mpz_t(), 2 * k - 2);
  return 1 + quotient;
}

}  // namespace sgt
