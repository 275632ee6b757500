#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polystab/domains.hpp"

namespace polystab {

enum class Embeds { No, Yes, Unknown };
enum class Reason { AGe2, BGeX, Obstruction, NonSqueezing, HutchingsWindow, FoldingRegime };

const char* to_string(Embeds e);
const char* to_string(Reason r);

// One scaling applied while moving an x <= 2 instance into the x > 2 range.
struct TraceStep {
  int case_no = 0;
  PR lambda;
  std::string action;  // "scale" (multiply all capacities by lambda), "shrink" (Case 1 inclusion then 1/(1-lambda)), "target"
  PR x, a, b;          // instance after the step
};

struct Verdict {
  Embeds embeds = Embeds::Unknown;
  Reason reason = Reason::Obstruction;
  std::vector<TraceStep> trace;
};

struct Reduction {
  std::optional<Verdict> verdict;  // set when Cases 3-5 settle the instance directly
  PR x, a, b;                      // reduced instance (x > 2) otherwise
  std::vector<TraceStep> trace;
};

struct DecideOptions {
  bool cross_check = false;  // run the moduli engine on x > 2 obstruction instances
  RegimeKnobs knobs;
  int workers = 1;
};

Verdict decide_stabilized(const PR& x, const PR& a, const PR& b, int n, const DecideOptions& opt = {});
Reduction reduce_to_big_x(const PR& x, const PR& a, const PR& b);
// Apply the trace's scalings to (x, a, b) in order.
std::vector<PR> replay_trace(const std::vector<TraceStep>& trace, const PR& x, const PR& a, const PR& b);

bool nonsqueezing_obstruction(const PR& source_first, const PR& target_first);

PR hutchings_window_bound(const PR& a, const PR& b);
bool hutchings_admissible(const PR& x, const PR& a, const PR& b);

// Four-dimensional query: Hutchings' window, then the stabilized theorem for
// x >= 2; Unknown elsewhere.
Verdict decide_4d(const PR& x, const PR& a, const PR& b);

struct EmbeddingValue {
  PR lower;
  std::optional<PR> upper;  // empty means unknown
  std::optional<Reason> reason;
  bool exact() const { return upper && *upper == lower; }
};
EmbeddingValue embedding_function(const PR& x, const PR& a);

}  // namespace polystab
