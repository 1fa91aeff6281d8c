#pragma once

#include <array>
#include <string>
#include <string_view>

#include "ctxstat/core_prob.hpp"

namespace ctxstat {

inline constexpr double kAccardiTol = 1e-9;

// Bistochastic parameters of a triple (A, B, C):
//   p for P(A|B), q for P(B|C), r for P(C|A).
struct TripleParams {
  std::array<std::string, 3> observables;
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  bool applicable = true;
  std::array<double, 3> deviations{};  // of the P(A|B), P(B|C), P(C|A) matrices
};

enum class Verdict { Classical, Contextual, NotApplicable };

std::string_view to_string(Verdict v);

struct AccardiVerdict {
  Verdict verdict = Verdict::NotApplicable;
  double lower = 0.0;  // |p + q - 1|
  double upper = 0.0;  // 1 - |p - q|
  double slack = 0.0;  // min(r - lower, upper - r); negative when violated
};

// Kolmogorovian iff |p+q-1| <= r <= 1-|p-q|. Points within tol of the
// boundary count as classical.
AccardiVerdict accardi_check(const TripleParams& params, double tol = kAccardiTol);

// Convenience for a bare (p, q, r), treated as applicable.
AccardiVerdict accardi_check(double p, double q, double r, double tol = kAccardiTol);

// Builds params from the three matrices P(A|B), P(B|C), P(C|A), i.e. matrices
// conditioned on B, C and A respectively.
TripleParams triple_params(const TransitionMatrix& a_given_b, const TransitionMatrix& b_given_c,
                           const TransitionMatrix& c_given_a);

}  // namespace ctxstat
