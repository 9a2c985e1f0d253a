#pragma once

#include "oracle.hpp"
#include "quadscroll/surface.hpp"

namespace testing_helpers {

using namespace quadscroll;

inline Scalar num(const FieldSpec& f, long long v) { return Scalar::from_int(f, v); }

inline ProjPoint pt(const FieldSpec& f, long long c0, long long c1) { return ProjPoint::make(num(f, c0), num(f, c1)); }

inline QuadricPoint qp(const FieldSpec& f, long long a0, long long a1, long long b0, long long b1) {
  return QuadricPoint{pt(f, a0, a1), pt(f, b0, b1)};
}

inline oracle::RawPoint raw(const QuadricPoint& p) {
  return {p.first.c0().residue(), p.first.c1().residue(), p.second.c0().residue(), p.second.c1().residue()};
}

inline std::vector<long long> residues(const std::vector<Scalar>& v) {
  std::vector<long long> out;
  for (const auto& s : v) out.push_back(s.residue());
  return out;
}

inline std::vector<mpq_class> rationals(const std::vector<Scalar>& v) {
  std::vector<mpq_class> out;
  for (const auto& s : v) out.push_back(s.rational());
  return out;
}

}  // namespace testing_helpers
