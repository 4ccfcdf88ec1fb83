#include "toricsplit/intersection.hpp"

#include "toricsplit/error.hpp"

namespace toricsplit {

AugmentedIntersectionMatrix augmented_matrix(const Fan& fan) {
  AugmentedIntersectionMatrix out;
  out.walls = fan.walls();
  out.num_rays = fan.num_rays();
  out.q = IntMatrix(out.walls.size(), out.num_rays);
  for (std::size_t i = 0; i < out.walls.size(); ++i) {
    const Wall& w = out.walls[i];
    out.q(i, w.extra1) += 1;
    out.q(i, w.extra2) += 1;
    for (std::size_t k = 0; k < w.tau.size(); ++k) out.q(i, w.tau[k]) += w.relation[k];
  }
  return out;
}

const char* to_string(SignClass c) {
  switch (c) {
    case SignClass::Positive: return "positive";
    case SignClass::Nef: return "nef";
    case SignClass::Zero: return "zero";
    case SignClass::Negative: return "negative";
    case SignClass::Mixed: return "mixed";
  }
  return "?";
}

SignClass sign_of_image(const IntVector& image) {
  bool pos = false, zero = false, neg = false;
  for (const Int& v : image) {
    int s = sgn(v);
    pos |= s > 0;
    zero |= s == 0;
    neg |= s < 0;
  }
  if (neg) return (pos || zero) ? SignClass::Mixed : SignClass::Negative;
  if (!pos) return SignClass::Zero;
  return zero ? SignClass::Nef : SignClass::Positive;
}

SignClass sign_of_class(const IntMatrix& q, const IntVector& x) {
  if (x.size() != q.cols()) {
    throw Error("dimension", "class has " + std::to_string(x.size()) + " entries, Q has " +
                                 std::to_string(q.cols()) + " columns");
  }
  return sign_of_image(q.apply(x));
}

std::vector<IntVector> principal_columns(const Fan& fan) {
  std::vector<IntVector> cols(fan.dim(), IntVector(fan.num_rays()));
  for (std::size_t j = 0; j < fan.num_rays(); ++j)
    for (std::size_t k = 0; k < fan.dim(); ++k) cols[k][j] = fan.ray(j)[k];
  return cols;
}

}  // namespace toricsplit
