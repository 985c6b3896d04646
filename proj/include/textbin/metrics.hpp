// Pixel-level precision / recall / F-measure against a ground-truth mask.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "textbin/image.hpp"

namespace textbin {

struct EvalReport {
  std::uint64_t true_positive = 0;
  std::uint64_t false_positive = 0;
  std::uint64_t false_negative = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

inline EvalReport evaluate(const BinaryImage& pred, const BinaryImage& truth) {
  if (pred.width != truth.width || pred.height != truth.height)
    throw std::invalid_argument("evaluate: dimension mismatch");
  EvalReport r;
  for (std::size_t i = 0; i < pred.data.size(); ++i) {
    bool p = pred.data[i] != 0, t = truth.data[i] != 0;
    if (p && t) ++r.true_positive;
    else if (p) ++r.false_positive;
    else if (t) ++r.false_negative;
  }
  std::uint64_t pd = r.true_positive + r.false_positive;
  std::uint64_t td = r.true_positive + r.false_negative;
  r.precision = pd ? static_cast<double>(r.true_positive) / pd : 0.0;
  r.recall = td ? static_cast<double>(r.true_positive) / td : 0.0;
  r.f_measure = (r.precision + r.recall) > 0.0
                    ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
                    : 0.0;
  return r;
}

}  // namespace textbin
