#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <vector>

#include "horn/scalar.hpp"

// Eigen scalar traits so dense matrices work over Int and Rat.
namespace Eigen {

template <>
struct NumTraits<horn::Int> : GenericNumTraits<horn::Int> {
  typedef horn::Int Real;
  typedef horn::Rat NonInteger;
  typedef horn::Int Nested;
  typedef horn::Int Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
  static inline Real epsilon() { return horn::Int(0); }
  static inline Real dummy_precision() { return horn::Int(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<horn::Rat> : GenericNumTraits<horn::Rat> {
  typedef horn::Rat Real;
  typedef horn::Rat NonInteger;
  typedef horn::Rat Nested;
  typedef horn::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 60,
    MulCost = 100
  };
  static inline Real epsilon() { return horn::Rat(0); }
  static inline Real dummy_precision() { return horn::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace horn {

using Index = Eigen::Index;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline RatMatrix ratCast(const IntMatrix& m) { return m.cast<Rat>(); }
inline RatVector ratCast(const IntVector& v) { return v.cast<Rat>(); }

inline IntVector intVec(std::initializer_list<long> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Int(x);
  return v;
}

inline RatVector ratVec(std::initializer_list<Rat> xs) {
  RatVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

// Row-major construction helper for tests and fixtures.
inline IntMatrix intMat(Index rows, Index cols, std::initializer_list<long> xs) {
  if (static_cast<Index>(xs.size()) != rows * cols) throw ShapeError("intMat: size mismatch");
  IntMatrix m(rows, cols);
  Index i = 0;
  for (long x : xs) {
    m(i / cols, i % cols) = Int(x);
    ++i;
  }
  return m;
}

template <typename Derived>
bool isZero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).isZero()) return false;
  return true;
}

}  // namespace horn
