#pragma once

// Range scans: run selected characterizations for every odd p in a range,
// compare each verdict with the sieve oracle and aggregate the results.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polignac/oracle.hpp"
#include "polignac/theorems.hpp"

namespace polignac {

enum class OutputFormat { Table, Csv };

struct ScanConfig {
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 3;
  std::uint64_t k = 1;
  std::vector<TheoremId> theorems;  // evaluated and emitted in this order
  OutputFormat output_format = OutputFormat::Table;
  bool count_mults = false;
};

/// One theorem's outcome at one p.
struct ScanEntry {
  TheoremId theorem;
  TestVerdict verdict;
  bool claim_truth = false;  // oracle truth of the theorem's own claim
  bool agree = true;
  std::uint64_t mults = 0;
};

struct ScanRow {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::vector<ScanEntry> entries;  // parallel to ScanConfig::theorems
  bool oracle_truth = false;       // p and p + 2k both prime
  bool agree = true;
};

struct TheoremTally {
  std::uint64_t satisfied = 0;
  std::uint64_t preconditions_skipped = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t total_mults = 0;
};

struct ScanSummary {
  std::uint64_t rows_scanned = 0;
  std::uint64_t pairs_found_by_oracle = 0;
  std::map<TheoremId, TheoremTally> per_theorem;
  std::vector<ScanRow> mismatches;
};

struct ScanResult {
  ScanConfig config;
  std::vector<ScanRow> rows;
  ScanSummary summary;
};

/// Evaluates `theorem` at (p, k) the way the scanner does. Simionov uses k
/// directly, DualIndexCorollary uses (k1, k2) = (k-1, k), GoldbachCorollary
/// takes the minimal decomposition of p + 1. Inputs outside those derived
/// ranges become PreconditionViolated verdicts.
TestVerdict evaluate_at(TheoremId theorem, std::uint64_t p, std::uint64_t k,
                        const SieveOracle& oracle, MulCounter* counter = nullptr);

/// Oracle truth of the theorem's claim at (p, k).
bool claim_truth(TheoremId theorem, std::uint64_t p, std::uint64_t k, const SieveOracle& oracle);

/// Scans every odd p in [p_min, p_max]. With jobs > 1 the range is split into
/// contiguous segments evaluated concurrently; the result is identical to the
/// serial scan. Throws DomainError when the oracle does not cover p_max + 2k
/// or the configuration is inconsistent.
ScanResult scan(const ScanConfig& config, const SieveOracle& oracle, unsigned jobs = 1);

/// Recomputes the summary from rows.
ScanSummary summarize(const ScanConfig& config, const std::vector<ScanRow>& rows);

/// CSV: header "p,k,theorem,verdict,residual,oracle,agree,mults" then one line
/// per (p, theorem). Table: aligned columns followed by a summary block.
std::string emit(const ScanResult& result, OutputFormat format);
inline std::string emit(const ScanResult& result) {
  return emit(result, result.config.output_format);
}

}  // namespace polignac
