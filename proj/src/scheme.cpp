#include "runsrules/scheme.hpp"

#include <charconv>
#include <stdexcept>

namespace runsrules {

namespace {

constexpr int kMaxWindow = 12;  // guard against state blow-up

int parse_positive_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw std::invalid_argument("invalid scheme: bad count in \"" +
                                std::string(text) + "\"");
  }
  return value;
}

// Basic r/m: at least r of the window's labels beyond the same limit.
bool basic_signals(int r, std::span<const int> window) {
  int above = 0;
  int below = 0;
  for (int label : window) {
    if (label == kBeyondUpper) ++above;
    if (label == kBeyondLower) ++below;
  }
  return above >= r || below >= r;
}

// Modified r/m: some suffix of the window begins and ends with a
// beyond-limit point, contains exactly r of them, and everything between
// lies between the center line and that same limit. Equivalently: the
// newest label is beyond a limit and the maximal trailing stretch of
// same-side labels contains at least r beyond-limit points. The suffix fits
// inside the window, so its length is at most m automatically.
bool modified_signals(int r, std::span<const int> window) {
  if (window.empty()) return false;
  const int newest = window.back();
  if (newest != kBeyondUpper && newest != kBeyondLower) return false;
  const int beyond = newest;
  const int separator = newest == kBeyondUpper ? kAboveCenter : kBelowCenter;
  int count = 0;
  for (auto it = window.rbegin(); it != window.rend(); ++it) {
    if (*it == beyond) {
      if (++count >= r) return true;
    } else if (*it != separator) {
      break;
    }
  }
  return false;
}

// One Western Electric zone test: at least `need` of the last `span` labels
// in a qualifying band on the same side.
bool we_count_rule(std::span<const int> window, std::size_t span, int min_band,
                   int need) {
  const std::size_t n = std::min(window.size(), span);
  int upper = 0;
  int lower = 0;
  for (std::size_t i = window.size() - n; i < window.size(); ++i) {
    const int label = window[i];
    if (we_band(label) >= min_band) {
      (we_upper(label) ? upper : lower) += 1;
    }
  }
  return upper >= need || lower >= need;
}

}  // namespace

bool we_two_of_three(std::span<const int> window) {
  return we_count_rule(window, 3, 2, 2);
}

bool we_four_of_five(std::span<const int> window) {
  return we_count_rule(window, 5, 1, 4);
}

bool we_same_side_run(std::span<const int> window, int run_length) {
  if (window.size() < static_cast<std::size_t>(run_length)) return false;
  const bool side = we_upper(window.back());
  for (std::size_t i = window.size() - run_length; i < window.size(); ++i) {
    if (we_upper(window[i]) != side) return false;
  }
  return true;
}

namespace {

bool we_signals(int run_length, std::span<const int> window) {
  if (window.empty()) return false;
  return we_band(window.back()) >= 3 || we_two_of_three(window) ||
         we_four_of_five(window) || we_same_side_run(window, run_length);
}

}  // namespace

std::string SchemeSpec::text() const {
  switch (kind) {
    case SchemeKind::basic:
      return std::to_string(r) + "/" + std::to_string(m);
    case SchemeKind::modified:
      return "M-" + std::to_string(r) + "/" + std::to_string(m);
    case SchemeKind::western_electric:
      return "C1234";
  }
  return {};
}

SchemeSpec parse_scheme(std::string_view text) {
  SchemeSpec scheme;
  if (text == "C1234" || text == "WE") {
    scheme.kind = SchemeKind::western_electric;
    return scheme;
  }
  std::string_view body = text;
  if (body.starts_with("M-")) {
    scheme.kind = SchemeKind::modified;
    body.remove_prefix(2);
  }
  const std::size_t slash = body.find('/');
  if (slash == std::string_view::npos || slash == 0 ||
      slash + 1 == body.size()) {
    throw std::invalid_argument("invalid scheme \"" + std::string(text) +
                                "\": expected r/m, M-r/m, or C1234");
  }
  scheme.r = parse_positive_int(body.substr(0, slash));
  scheme.m = parse_positive_int(body.substr(slash + 1));
  if (scheme.r > scheme.m) {
    throw std::invalid_argument("invalid scheme \"" + std::string(text) +
                                "\": requires 1 <= r <= m");
  }
  if (scheme.m > kMaxWindow) {
    throw std::invalid_argument("invalid scheme \"" + std::string(text) +
                                "\": window m capped at 12");
  }
  return scheme;
}

int alphabet_size(const SchemeSpec& scheme) {
  return scheme.kind == SchemeKind::western_electric ? kWeAlphabet : 4;
}

int required_window(const SchemeSpec& scheme) {
  if (scheme.kind == SchemeKind::western_electric) {
    return scheme.we_run_length;  // longest constituent rule window
  }
  return scheme.m;
}

ZonePartition zone_partition(const SchemeSpec& scheme) {
  if (scheme.kind == SchemeKind::western_electric) {
    return {{-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0},
            {"l3", "l2", "l1", "l0", "u0", "u1", "u2", "u3"}};
  }
  if (!(scheme.limit > 0.0)) {
    throw std::invalid_argument("scheme " + scheme.text() +
                                " has no control limit set");
  }
  return {{-scheme.limit, 0.0, scheme.limit}, {"d", "l", "u", "U"}};
}

bool signals(const SchemeSpec& scheme, std::span<const int> window) {
  if (window.size() > static_cast<std::size_t>(required_window(scheme))) {
    throw std::invalid_argument("signal window longer than the scheme needs");
  }
  switch (scheme.kind) {
    case SchemeKind::basic:
      return basic_signals(scheme.r, window);
    case SchemeKind::modified:
      return modified_signals(scheme.r, window);
    case SchemeKind::western_electric:
      if (scheme.we_run_length != 8 && scheme.we_run_length != 9) {
        throw std::invalid_argument("we_run_length must be 8 or 9");
      }
      return we_signals(scheme.we_run_length, window);
  }
  return false;
}

}  // namespace runsrules
