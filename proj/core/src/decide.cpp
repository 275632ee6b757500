#include "polystab/decide.hpp"

#include "polystab/moduli.hpp"

namespace polystab {

const char* to_string(Embeds e) {
  switch (e) {
    case Embeds::No: return "false";
    case Embeds::Yes: return "true";
    case Embeds::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::AGe2: return "AGe2";
    case Reason::BGeX: return "BGeX";
    case Reason::Obstruction: return "Obstruction";
    case Reason::NonSqueezing: return "NonSqueezing";
    case Reason::HutchingsWindow: return "HutchingsWindow";
    case Reason::FoldingRegime: return "FoldingRegime";
  }
  return "?";
}

bool nonsqueezing_obstruction(const PR& source_first, const PR& target_first) {
  if (source_first.sign() <= 0 || target_first.sign() <= 0)
    throw Error(ErrorCode::DomainError, "capacities must be positive");
  return target_first < source_first;
}

namespace {

// Case 1: shrink the source to P(1-lambda, x) and rescale by 1/(1-lambda).
// lambda is the largest 2^-j keeping a' < 2 and pushing x' past 2.
TraceStep case1(const PR& x, const PR& a, const PR& b) {
  PR lambda(Rational(1, 2));
  for (;;) {
    PR s = PR(1) - lambda;
    if (a / s < PR(2) && x / s > PR(2)) return TraceStep{1, lambda, "shrink", x / s, a / s, b / s};
    lambda = lambda / PR(2);
    if (lambda.q() < Rational(1, Integer(1) << 200))
      throw Error(ErrorCode::NotApplicable, "no dyadic Case 1 scaling");
  }
}

Verdict yes(Reason r, std::vector<TraceStep> t = {}) { return Verdict{Embeds::Yes, r, std::move(t)}; }
Verdict no(Reason r, std::vector<TraceStep> t = {}) { return Verdict{Embeds::No, r, std::move(t)}; }

}  // namespace

Reduction reduce_to_big_x(const PR& x, const PR& a, const PR& b) {
  if (x > PR(2)) throw Error(ErrorCode::NotApplicable, "x > 2 already");
  if (x < PR(1)) throw Error(ErrorCode::DomainError, "x < 1");
  if (a.sign() <= 0 || b < a || !(a < PR(2))) throw Error(ErrorCode::DomainError, "need 0 < a < 2, a <= b");
  Reduction r;
  r.x = x;
  r.a = a;
  r.b = b;
  // target written as P(lambda, lambda*beta)
  const PR lambda = a;
  const PR beta = b / a;
  auto settle = [&](int case_no, Verdict v) {
    v.trace.push_back(TraceStep{case_no, lambda, "target", x, a, b});
    r.trace = v.trace;
    r.verdict = v;
  };
  if (beta >= PR(2)) {
    settle(3, nonsqueezing_obstruction(PR(1), lambda) ? no(Reason::NonSqueezing) : yes(Reason::BGeX));
    return r;
  }
  if (x <= beta) {
    settle(5, nonsqueezing_obstruction(PR(1), lambda) ? no(Reason::NonSqueezing) : yes(Reason::BGeX));
    return r;
  }
  if (b >= x) {
    settle(4, yes(Reason::BGeX));
    return r;
  }
  // b < x: rescale so the source becomes P(2/x, 2) and include P(1, 2).
  const int c = (a == b) ? 2 : 4;
  PR x2 = x, a2 = a, b2 = b;
  if (x != PR(2)) {
    const PR s = PR(2) / x;
    x2 = PR(2);
    a2 = a * s;
    b2 = b * s;
    r.trace.push_back(TraceStep{c, s, "scale", x2, a2, b2});
    if (nonsqueezing_obstruction(PR(1), a2)) {
      Verdict v = no(Reason::NonSqueezing, r.trace);
      r.verdict = v;
      return r;
    }
  }
  TraceStep s1 = case1(x2, a2, b2);
  r.trace.push_back(s1);
  r.x = s1.x;
  r.a = s1.a;
  r.b = s1.b;
  return r;
}

std::vector<PR> replay_trace(const std::vector<TraceStep>& trace, const PR& x, const PR& a, const PR& b) {
  PR X = x, A = a, B = b;
  for (const auto& t : trace) {
    if (t.action == "scale") {
      X = X * t.lambda;
      A = A * t.lambda;
      B = B * t.lambda;
    } else if (t.action == "shrink") {
      PR s = PR(1) - t.lambda;
      X = X / s;
      A = A / s;
      B = B / s;
    }
  }
  return {X, A, B};
}

Verdict decide_stabilized(const PR& x, const PR& a, const PR& b, int n, const DecideOptions& opt) {
  if (a < PR(1)) throw Error(ErrorCode::DomainError, "a < 1");
  if (x < PR(1)) throw Error(ErrorCode::DomainError, "x < 1");
  if (b < a) throw Error(ErrorCode::DomainError, "b < a");
  if (n < 3) throw Error(ErrorCode::DomainError, "n < 3");
  if (a >= PR(2)) return yes(Reason::AGe2);
  if (b >= x) return yes(Reason::BGeX);
  if (x <= PR(2)) {
    Reduction red = reduce_to_big_x(x, a, b);
    if (red.verdict) return *red.verdict;
    Verdict v = decide_stabilized(red.x, red.a, red.b, n, opt);
    v.trace.insert(v.trace.begin(), red.trace.begin(), red.trace.end());
    return v;
  }
  if (opt.cross_check) {
    Regime reg = select_regime(n, x, a, b, opt.knobs);
    auto rep = contradiction_check(reg, enumerate_configurations(reg, default_bounds(reg), opt.workers));
    if (!rep.contradiction) throw Error(ErrorCode::PreconditionFailed, "engine found no contradiction");
  }
  return no(Reason::Obstruction);
}

PR hutchings_window_bound(const PR& a, const PR& b) {
  if (a < PR(1) || b < a) throw Error(ErrorCode::DomainError, "need 1 <= a <= b");
  const PR beta = b / a;
  // an exact integer ratio has an exact ceiling; otherwise it must be generic
  Integer c = (beta.exact() && is_integral(beta.q())) ? floor_rational(beta.q()) : ceil_generic(beta);
  return PR(2) * beta / (PR(1) + (beta - PR(1)) / PR(Integer(4 * c - 1)));
}

bool hutchings_admissible(const PR& x, const PR& a, const PR& b) {
  return PR(1) <= x && x <= hutchings_window_bound(a, b);
}

Verdict decide_4d(const PR& x, const PR& a, const PR& b) {
  if (a < PR(1) || x < PR(1) || b < a) throw Error(ErrorCode::DomainError, "need x >= 1, 1 <= a <= b");
  if (b >= x) return yes(Reason::BGeX);  // inclusion
  if (hutchings_admissible(x, a, b)) return no(Reason::HutchingsWindow);
  if (x >= PR(2) && a < PR(2)) return no(Reason::Obstruction);
  return Verdict{Embeds::Unknown, a >= PR(2) ? Reason::FoldingRegime : Reason::HutchingsWindow, {}};
}

EmbeddingValue embedding_function(const PR& x, const PR& a) {
  if (x < PR(1) || a < PR(1)) throw Error(ErrorCode::DomainError, "need x >= 1, a >= 1");
  EmbeddingValue v;
  if (a < PR(2)) {
    // embeds iff b >= x, and the target needs b >= a
    v.lower = x < a ? a : x;
    v.upper = v.lower;
    return v;
  }
  v.lower = a;
  v.reason = Reason::FoldingRegime;
  return v;
}

}  // namespace polystab
