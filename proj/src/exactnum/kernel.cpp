#include "geostruct/exactnum.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

namespace geostruct {

void LinearSystem::add_row(Row row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Row merged;
  for (auto& [c, v] : row) {
    if (c >= unknowns_) throw std::out_of_range("constraint column out of range");
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
  if (!merged.empty()) rows_.push_back(std::move(merged));
}

void LinearSystem::add_dense_row(const RationalVector& row) {
  if (row.size() != unknowns_) throw std::invalid_argument("dense row length mismatch");
  Row r;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (sgn(row[j]) != 0) r.emplace_back(j, row[j]);
  add_row(std::move(r));
}

namespace {

std::vector<RationalVector> kernel_from_rref(const RationalMatrix& reduced, const std::vector<std::size_t>& pivots,
                                             std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Above this many dense entries the modular path is faster than mpq elimination.
constexpr std::size_t kDenseLimit = 20000;

}  // namespace

std::vector<RationalVector> kernel_basis(const RationalMatrix& a) {
  if (a.rows() * a.cols() > kDenseLimit) {
    LinearSystem sys(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) sys.add_dense_row(a.row(i));
    return kernel_basis_modular(sys);
  }
  auto r = rref(a);
  return kernel_from_rref(r.reduced, r.pivots, a.cols());
}

std::vector<RationalVector> kernel_basis_dense(const LinearSystem& system) {
  const std::size_t n = system.unknowns();
  RationalMatrix a(system.size(), n);
  for (std::size_t i = 0; i < system.size(); ++i)
    for (const auto& [c, v] : system.rows()[i]) a(i, c) = v;
  auto r = rref(std::move(a));
  return kernel_from_rref(r.reduced, r.pivots, n);
}

std::vector<RationalVector> kernel_basis(const LinearSystem& system) {
  if (system.size() * system.unknowns() > kDenseLimit) return kernel_basis_modular(system);
  return kernel_basis_dense(system);
}

}  // namespace geostruct
