#include "kmcat/linalg.hpp"

#include "kmcat/error.hpp"

namespace kmcat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGCM: return "NotGCM";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::AnchorMismatch: return "AnchorMismatch";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::ParamsNotHomogeneous: return "ParamsNotHomogeneous";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NonSplit: return "NonSplit";
    case ErrorCode::DatumMismatch: return "DatumMismatch";
    case ErrorCode::IncompleteDepth: return "IncompleteDepth";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Config: return "ConfigError";
  }
  return "Unknown";
}

namespace {

// v -= f * row, dropping cancelled entries
void axpy(SparseVectorQ& v, const Rational& f, const SparseVectorQ& row) {
  for (const auto& [col, val] : row) {
    auto [it, inserted] = v.try_emplace(col, Rational(0));
    it->second -= f * val;
    if (it->second.is_zero()) v.erase(it);
  }
}

}  // namespace

bool SparseEchelon::reduce(SparseVectorQ& v) const {
  // Rows only touch columns >= their pivot, so a single ascending sweep suffices.
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    const Rational f = it->second;
    axpy(v, f, row->second);
    it = v.upper_bound(col);
  }
  return v.empty();
}

bool SparseEchelon::insert(SparseVectorQ v) {
  if (reduce(v)) return false;
  const int pivot = v.begin()->first;
  const Rational inv = Rational(1) / v.begin()->second;
  for (auto& [col, val] : v) val *= inv;
  // keep the basis fully reduced: clear the new pivot from existing rows
  for (auto& [p, row] : rows_) {
    auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    const Rational f = hit->second;
    axpy(row, f, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

}  // namespace kmcat
