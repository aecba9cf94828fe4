#include "runsrules/automaton.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace runsrules {

namespace {

// Drops all but the most recent `keep` labels.
void truncate_front(std::vector<int>& history, int keep) {
  if (static_cast<int>(history.size()) > keep) {
    history.erase(history.begin(), history.end() - keep);
  }
}

}  // namespace

LabeledAutomaton build_window_automaton(const SchemeSpec& scheme) {
  if (scheme.kind == SchemeKind::western_electric) {
    throw std::invalid_argument(
        "window automaton applies to basic/modified schemes only");
  }
  const int sigma = alphabet_size(scheme);
  const int keep = scheme.m - 1;

  // States are the label-history suffixes reachable without a signal,
  // discovered breadth-first from the empty history. Genuine short
  // histories represent the start-up period.
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> histories;
  ids.emplace(std::vector<int>{}, 0);
  histories.emplace_back();

  std::vector<int> steps;
  for (std::size_t s = 0; s < histories.size(); ++s) {
    const std::vector<int> history = histories[s];
    for (int label = 0; label < sigma; ++label) {
      std::vector<int> window = history;
      window.push_back(label);
      if (signals(scheme, window)) {
        steps.push_back(LabeledAutomaton::kSignal);
        continue;
      }
      truncate_front(window, keep);
      auto [it, inserted] =
          ids.try_emplace(std::move(window), static_cast<int>(histories.size()));
      if (inserted) histories.push_back(it->first);
      steps.push_back(it->second);
    }
  }

  LabeledAutomaton a;
  a.alphabet = sigma;
  a.state_count = static_cast<int>(histories.size());
  a.initial = 0;
  a.step_table = std::move(steps);
  return a;
}

LabeledAutomaton build_we_automaton(int we_run_length) {
  if (we_run_length != 8 && we_run_length != 9) {
    throw std::invalid_argument("we_run_length must be 8 or 9");
  }
  // Compressed state: the last <= 4 transient labels (enough for the 2-of-3
  // and 4-of-5 tests once the new label arrives) plus the length of the
  // current same-side run, capped because a run of we_run_length signals.
  // Labels in band 3 go straight to the signal sink and are never stored.
  using State = std::pair<std::vector<int>, int>;
  std::map<State, int> ids;
  std::vector<State> states;
  ids.emplace(State{{}, 0}, 0);
  states.push_back({{}, 0});

  std::vector<int> steps;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto [history, streak] = states[s];
    for (int label = 0; label < kWeAlphabet; ++label) {
      if (we_band(label) >= 3) {
        steps.push_back(LabeledAutomaton::kSignal);
        continue;
      }
      std::vector<int> window = history;
      window.push_back(label);
      const bool same_side =
          !history.empty() && we_upper(history.back()) == we_upper(label);
      const int new_streak = same_side ? streak + 1 : 1;
      if (new_streak >= we_run_length || we_two_of_three(window) ||
          we_four_of_five(window)) {
        steps.push_back(LabeledAutomaton::kSignal);
        continue;
      }
      truncate_front(window, 4);
      auto [it, inserted] = ids.try_emplace(
          State{std::move(window), new_streak}, static_cast<int>(states.size()));
      if (inserted) states.push_back(it->first);
      steps.push_back(it->second);
    }
  }

  LabeledAutomaton a;
  a.alphabet = kWeAlphabet;
  a.state_count = static_cast<int>(states.size());
  a.initial = 0;
  a.step_table = std::move(steps);
  return a;
}

LabeledAutomaton minimize(const LabeledAutomaton& a) {
  const int n = a.state_count;
  const int sigma = a.alphabet;

  // Moore partition refinement with the signal sink as the one accepting
  // class. Class ids are assigned in first-occurrence order over the state
  // indices, which keeps the result deterministic.
  std::vector<int> cls(n, 0);
  int class_count = 1;
  for (;;) {
    std::map<std::vector<int>, int> signature_ids;
    std::vector<int> next_cls(n);
    std::vector<int> signature(sigma + 1);
    for (int s = 0; s < n; ++s) {
      signature[0] = cls[s];
      for (int label = 0; label < sigma; ++label) {
        const int t = a.next(s, label);
        signature[label + 1] = t == LabeledAutomaton::kSignal
                                   ? LabeledAutomaton::kSignal
                                   : cls[t];
      }
      auto [it, inserted] = signature_ids.try_emplace(
          signature, static_cast<int>(signature_ids.size()));
      next_cls[s] = it->second;
    }
    const int next_count = static_cast<int>(signature_ids.size());
    cls.swap(next_cls);
    if (next_count == class_count) break;
    class_count = next_count;
  }

  std::vector<int> representative(class_count, -1);
  for (int s = 0; s < n; ++s) {
    if (representative[cls[s]] < 0) representative[cls[s]] = s;
  }

  LabeledAutomaton m;
  m.alphabet = sigma;
  m.state_count = class_count;
  m.initial = cls[a.initial];
  m.step_table.resize(static_cast<std::size_t>(class_count) * sigma);
  for (int c = 0; c < class_count; ++c) {
    const int rep = representative[c];
    for (int label = 0; label < sigma; ++label) {
      const int t = a.next(rep, label);
      m.step_table[static_cast<std::size_t>(c) * sigma + label] =
          t == LabeledAutomaton::kSignal ? LabeledAutomaton::kSignal : cls[t];
    }
  }
  return m;
}

LabeledAutomaton compile_scheme(const SchemeSpec& scheme) {
  if (scheme.kind == SchemeKind::western_electric) {
    return minimize(build_we_automaton(scheme.we_run_length));
  }
  return minimize(build_window_automaton(scheme));
}

}  // namespace runsrules
