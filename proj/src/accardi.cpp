#include "ctxstat/accardi.hpp"

#include <algorithm>
#include <cmath>

#include "ctxstat/error.hpp"

namespace ctxstat {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Classical: return "classical";
    case Verdict::Contextual: return "contextual";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

AccardiVerdict accardi_check(const TripleParams& params, double tol) {
  AccardiVerdict out;
  out.lower = std::abs(params.p + params.q - 1.0);
  out.upper = 1.0 - std::abs(params.p - params.q);
  out.slack = std::min(params.r - out.lower, out.upper - params.r);
  if (!params.applicable) {
    out.verdict = Verdict::NotApplicable;
  } else {
    out.verdict = out.slack >= -tol ? Verdict::Classical : Verdict::Contextual;
  }
  return out;
}

AccardiVerdict accardi_check(double p, double q, double r, double tol) {
  TripleParams params;
  params.p = p;
  params.q = q;
  params.r = r;
  return accardi_check(params, tol);
}

TripleParams triple_params(const TransitionMatrix& a_given_b, const TransitionMatrix& b_given_c,
                           const TransitionMatrix& c_given_a) {
  const auto& a = a_given_b.pair.second;
  const auto& b = b_given_c.pair.second;
  const auto& c = c_given_a.pair.second;
  if (a_given_b.pair.first != b || b_given_c.pair.first != c || c_given_a.pair.first != a) {
    throw Error(ErrorKind::PairMismatch, "matrices do not form the cycle P(A|B), P(B|C), P(C|A)");
  }
  TripleParams out;
  out.observables = {a, b, c};
  out.p = a_given_b.symmetric_param();
  out.q = b_given_c.symmetric_param();
  out.r = c_given_a.symmetric_param();
  out.applicable =
      a_given_b.is_bistochastic() && b_given_c.is_bistochastic() && c_given_a.is_bistochastic();
  out.deviations = {a_given_b.bistochastic_deviation, b_given_c.bistochastic_deviation,
                    c_given_a.bistochastic_deviation};
  return out;
}

}  // namespace ctxstat
