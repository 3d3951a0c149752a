#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shiftlab/checkers.hpp"

namespace shiftlab {

/// Expected outcome of one property; NotHolds accepts Fails or Inconclusive.
enum class Expectation { Holds, Fails, NotHolds, Unspecified };

const char* to_string(Expectation e);

struct ExpectedProperty {
  std::string property;
  Expectation expected;
};

struct CatalogEntry {
  std::string name;
  std::string title;
  ShiftOperatorSpec op;
  std::vector<ExpectedProperty> expected;
  /// Closed form of ln|prod| over the shift's window at (n, m):
  /// backward prod_{j=0}^{m-1} w_{n+j}, forward prod_{j=1}^m w_{n+j}.
  std::function<double(std::size_t n, std::size_t m)> log_product;
  std::vector<std::string> notes;
};

std::vector<CatalogEntry> catalog_entries();
/// Throws Error for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

double analytic_log_product(const CatalogEntry& entry, std::size_t n, std::size_t m);
/// Same window from the weight sequence's prefix sums.
double prefix_log_product(const CatalogEntry& entry, std::size_t n, std::size_t m);

enum class RowStatus { Match, Warning, Contradiction, Unchecked };

const char* to_string(RowStatus s);

struct VerificationRow {
  std::string property;
  Expectation expected;
  Outcome actual;
  RowStatus status;
};

struct EntryVerification {
  std::string name;
  PropertyReport report;
  std::vector<VerificationRow> rows;
  double seconds = 0.0;

  std::size_t contradictions() const;
  std::size_t warnings() const;
};

std::vector<VerificationRow> compare_expectations(const PropertyReport& report,
                                                  const std::vector<ExpectedProperty>& expected);

EntryVerification verify_entry(const CatalogEntry& entry, const TruncationBudget& b);

}  // namespace shiftlab
