#include "kcore/sparse_recovery.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcore {

void SparseRecovery::insert(std::uint64_t e) {
  if (!elements_.insert(e).second) throw std::invalid_argument("element already present");
  ++operations_;
}

void SparseRecovery::erase(std::uint64_t e) {
  if (elements_.erase(e) == 0) throw std::invalid_argument("element not present");
  ++operations_;
}

SparseRecovery::Recovered SparseRecovery::recover() const {
  Recovered r;
  if (elements_.size() > capacity_) {
    r.overflow = true;
    return r;
  }
  r.elements = elements();
  return r;
}

std::vector<std::uint64_t> SparseRecovery::elements() const {
  std::vector<std::uint64_t> out(elements_.begin(), elements_.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kcore
