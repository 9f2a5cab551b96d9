#include "droopjr/tiebreak.hpp"

#include <algorithm>
#include <stdexcept>

namespace droopjr {

TieBreakPolicy TieBreakPolicy::scripted(std::vector<int> choices) {
  TieBreakPolicy p;
  p.scripted_ = true;
  p.script_ = std::move(choices);
  return p;
}

int TieBreakPolicy::choose(const std::vector<int>& legal) {
  if (legal.empty()) throw std::logic_error("tiebreak: no legal choice");
  if (legal.size() == 1) return legal.front();  // forced, consumes no script entry
  if (!scripted_) return legal.front();
  if (pos_ >= script_.size()) throw std::runtime_error("tiebreak: script exhausted");
  int pick = script_[pos_++];
  if (!std::binary_search(legal.begin(), legal.end(), pick))
    throw std::runtime_error("tiebreak: scripted choice " + std::to_string(pick) +
                             " is not legal here");
  return pick;
}

std::vector<int> TieBreakPolicy::choose_many(const std::vector<int>& legal, int count) {
  if (count < 0 || count > static_cast<int>(legal.size()))
    throw std::logic_error("tiebreak: bad choice count");
  if (count == static_cast<int>(legal.size())) return legal;  // forced
  if (!scripted_) return std::vector<int>(legal.begin(), legal.begin() + count);
  std::vector<int> out;
  std::vector<int> remaining = legal;
  for (int j = 0; j < count; ++j) {
    if (pos_ >= script_.size()) throw std::runtime_error("tiebreak: script exhausted");
    int pick = script_[pos_++];
    auto it = std::find(remaining.begin(), remaining.end(), pick);
    if (it == remaining.end())
      throw std::runtime_error("tiebreak: scripted choice " + std::to_string(pick) +
                               " is not legal here");
    remaining.erase(it);
    out.push_back(pick);
  }
  return out;
}

}  // namespace droopjr
