#pragma once

#include <string>
#include <vector>

namespace droopjr {

// Deterministic tie resolution. Lexicographic picks the smallest legal index.
// Scripted replays an explicit sequence of choices; it exists to reproduce
// tie-breaking-sensitive scenarios, and aborts if a scripted choice is not
// legal at its decision point. Forced decisions (a single legal option, or a
// pick of the whole legal set) never consume script entries.
class TieBreakPolicy {
 public:
  static TieBreakPolicy lexicographic() { return TieBreakPolicy(); }
  static TieBreakPolicy scripted(std::vector<int> choices);

  bool is_scripted() const { return scripted_; }

  // One decision (candidate selection, or a single voter pick).
  // `legal` must be non-empty and ascending.
  int choose(const std::vector<int>& legal);
  // `count` decisions drawn from `legal` without repetition (filler voters).
  std::vector<int> choose_many(const std::vector<int>& legal, int count);

 private:
  TieBreakPolicy() = default;
  bool scripted_ = false;
  std::vector<int> script_;
  std::size_t pos_ = 0;
};

}  // namespace droopjr
