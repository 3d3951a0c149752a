#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shiftlab {

/// Finite truncation of the index ranges probed by the checkers.
struct TruncationBudget {
  std::size_t n_max = 2000;
  std::size_t m_max = 200;
  std::size_t k_max = 8;   // seminorm indices k = 0 .. k_max-1
  std::size_t l_max = 32;  // witness search l = 0 .. l_max
  double growth_tol = 0.05;
  double stability_tol = 0.01;
  std::size_t doublings = 5;          // sweep levels s = 0..doublings with bounds n_max*2^s, m_max*2^s
  std::size_t tail_horizon = 1 << 20; // last index for single-index limsup estimates

  void validate() const;
  /// Multiplies the index bounds by f (k_max, l_max and tolerances unchanged).
  TruncationBudget scaled(double f) const;
  friend bool operator==(const TruncationBudget&, const TruncationBudget&) = default;
};

enum class Outcome { Holds, Fails, Inconclusive };

const char* to_string(Outcome o);

struct Witness {
  std::optional<std::size_t> k, l, n, m, r;
  double value = 0.0;  // natural log of the observed quantity unless noted in the verdict
};

struct Certificate {
  std::size_t k;
  std::size_t l;
};

struct Verdict {
  std::string property;
  Outcome outcome = Outcome::Inconclusive;
  std::string quantity;
  std::string route;
  std::optional<Witness> witness;
  std::optional<double> growth_fit;
  std::optional<double> estimate;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
  std::vector<Verdict> sub_verdicts;
  TruncationBudget budget;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

/// Contradiction between two definite verdicts linked by an implication.
struct ImplicationFlag {
  std::string premise;
  std::string conclusion;
  bool violated = false;
};

struct PropertyReport {
  std::string operator_description;
  Verdict continuity;
  Verdict topologizable;
  Verdict power_bounded;
  Verdict cesaro_bounded;
  Verdict mean_ergodic;
  Verdict montel;
  std::vector<ImplicationFlag> implications;
  std::vector<std::string> notes;

  bool consistent() const;
  const Verdict& get(const std::string& property) const;
  Verdict& get(const std::string& property);
};

}  // namespace shiftlab
