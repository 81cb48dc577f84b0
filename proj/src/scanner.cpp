#include "polignac/scanner.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace polignac {
namespace {

bool entry_agrees(TheoremId theorem, const TestVerdict& verdict, bool truth) {
  if (!verdict.evaluated()) return true;
  if (theorem_info(theorem).direction == Direction::ForwardOnly)
    return !(truth && !verdict.satisfied());
  return verdict.satisfied() == truth;
}

ScanRow scan_one(const ScanConfig& config, std::uint64_t p, const SieveOracle& oracle) {
  ScanRow row;
  row.p = p;
  row.k = config.k;
  row.oracle_truth = oracle.is_prime(p) && oracle.is_prime(p + 2 * config.k);
  row.entries.reserve(config.theorems.size());
  for (TheoremId id : config.theorems) {
    MulCounter counter;
    ScanEntry e{id, evaluate_at(id, p, config.k, oracle, &counter)};
    e.claim_truth = claim_truth(id, p, config.k, oracle);
    e.agree = entry_agrees(id, e.verdict, e.claim_truth);
    e.mults = counter.count();
    row.agree = row.agree && e.agree;
    row.entries.push_back(std::move(e));
  }
  return row;
}

std::vector<ScanRow> scan_segment(const ScanConfig& config, std::uint64_t first,
                                  std::uint64_t last, const SieveOracle& oracle) {
  std::vector<ScanRow> rows;
  for (std::uint64_t p = first; p <= last; p += 2) rows.push_back(scan_one(config, p, oracle));
  return rows;
}

std::string residual_text(const TestVerdict& v) {
  return v.residual ? to_string(v.residual->value) : std::string();
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

TestVerdict evaluate_at(TheoremId theorem, std::uint64_t p, std::uint64_t k,
                        const SieveOracle& oracle, MulCounter* counter) {
  switch (theorem) {
    case TheoremId::Wilson: return wilson(p, counter);
    case TheoremId::Clement: return clement(p, counter);
    case TheoremId::PolignacFactorial: return polignac_factorial(p, k, counter);
    case TheoremId::Simionov:
      if (k < 1 || k > p) return TestVerdict::precondition("k outside [1, p]");
      return simionov(p, k, counter);
    case TheoremId::HalfWilson: return half_wilson(p, counter);
    case TheoremId::TwinHalf: return twin_half(p, counter);
    case TheoremId::PolignacHalf: return polignac_half(p, k, counter);
    case TheoremId::GoldbachCorollary: {
      const auto split = oracle.goldbach_decompose(p + 1);
      if (!split)
        return TestVerdict::precondition("p+1 has no decomposition into distinct odd primes");
      return goldbach_corollary(p, split->first, split->second, oracle, counter);
    }
    case TheoremId::DualIndexCorollary:
      if (k < 1 || k >= p) return TestVerdict::precondition("(k-1, k) outside 0 <= k1 < k2 < p");
      return dual_index_corollary(p, k - 1, k, counter);
  }
  throw DomainError("unknown theorem");
}

bool claim_truth(TheoremId theorem, std::uint64_t p, std::uint64_t k, const SieveOracle& oracle) {
  switch (theorem_info(theorem).claim) {
    case Claim::PrimeP: return oracle.is_prime(p);
    case Claim::TwinPair: return oracle.is_prime(p) && oracle.is_prime(p + 2);
    case Claim::PolignacPair: return oracle.is_prime(p) && oracle.is_prime(p + 2 * k);
  }
  return false;
}

ScanResult scan(const ScanConfig& config, const SieveOracle& oracle, unsigned jobs) {
  if (config.p_min < 3) throw DomainError("scan needs p_min >= 3");
  if (config.p_min > config.p_max) throw DomainError("scan needs p_min <= p_max");
  if (config.k < 1) throw DomainError("scan needs k >= 1");
  if (config.theorems.empty()) throw DomainError("scan needs at least one theorem");
  if (config.p_max > oracle.limit() || 2 * config.k > oracle.limit() - config.p_max)
    throw DomainError("oracle limit " + std::to_string(oracle.limit()) +
                      " does not cover p_max + 2k = " +
                      std::to_string(config.p_max + 2 * config.k));

  ScanResult result{config, {}, {}};
  const std::uint64_t first = config.p_min | 1;
  if (first <= config.p_max) {
    const std::uint64_t count = (config.p_max - first) / 2 + 1;
    jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, count));
    if (jobs == 1) {
      result.rows = scan_segment(config, first, config.p_max, oracle);
    } else {
      std::vector<std::vector<ScanRow>> parts(jobs);
      {
        std::vector<std::jthread> workers;
        const std::uint64_t chunk = (count + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
          const std::uint64_t lo = j * chunk;
          if (lo >= count) break;
          const std::uint64_t hi = std::min(count, lo + chunk) - 1;
          workers.emplace_back([&, j, lo, hi] {
            parts[j] = scan_segment(config, first + 2 * lo, first + 2 * hi, oracle);
          });
        }
      }
      for (auto& part : parts)
        std::move(part.begin(), part.end(), std::back_inserter(result.rows));
    }
  }
  result.summary = summarize(config, result.rows);
  return result;
}

ScanSummary summarize(const ScanConfig& config, const std::vector<ScanRow>& rows) {
  ScanSummary s;
  for (TheoremId id : config.theorems) s.per_theorem[id];
  for (const ScanRow& row : rows) {
    ++s.rows_scanned;
    if (row.oracle_truth) ++s.pairs_found_by_oracle;
    for (const ScanEntry& e : row.entries) {
      TheoremTally& t = s.per_theorem[e.theorem];
      if (e.verdict.satisfied()) ++t.satisfied;
      if (!e.verdict.evaluated()) ++t.preconditions_skipped;
      if (!e.agree) ++t.mismatches;
      t.total_mults += e.mults;
    }
    if (!row.agree) s.mismatches.push_back(row);
  }
  return s;
}

std::string emit(const ScanResult& result, OutputFormat format) {
  const bool mults = result.config.count_mults;
  std::ostringstream out;

  if (format == OutputFormat::Csv) {
    out << "p,k,theorem,verdict,residual,oracle,agree,mults\n";
    for (const ScanRow& row : result.rows) {
      for (const ScanEntry& e : row.entries) {
        out << row.p << ',' << row.k << ',' << theorem_info(e.theorem).name << ','
            << to_string(e.verdict.kind) << ',' << residual_text(e.verdict) << ','
            << bool_text(e.claim_truth) << ',' << bool_text(e.agree) << ',';
        if (mults) out << e.mults;
        out << '\n';
      }
    }
    return out.str();
  }

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"p", "k", "theorem", "verdict", "residual", "oracle", "agree"});
  if (mults) cells.back().push_back("mults");
  for (const ScanRow& row : result.rows) {
    for (const ScanEntry& e : row.entries) {
      cells.push_back({std::to_string(row.p), std::to_string(row.k),
                       std::string(theorem_info(e.theorem).name),
                       std::string(to_string(e.verdict.kind)), residual_text(e.verdict),
                       bool_text(e.claim_truth), bool_text(e.agree)});
      if (mults) cells.back().push_back(std::to_string(e.mults));
    }
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      // numbers right-aligned, text left-aligned
      const bool numeric = i == 0 || i == 1 || i == 4 || i == 7;
      const std::string pad(width[i] - line[i].size(), ' ');
      out << (numeric ? pad + line[i] : line[i] + (i + 1 < line.size() ? pad : ""));
    }
    out << '\n';
  }

  const ScanSummary& s = result.summary;
  out << "\nsummary\n"
      << "  range             [" << result.config.p_min << ", " << result.config.p_max
      << "], k = " << result.config.k << '\n'
      << "  rows scanned      " << s.rows_scanned << '\n'
      << "  oracle pairs      " << s.pairs_found_by_oracle << '\n';
  for (TheoremId id : result.config.theorems) {
    const TheoremTally& t = s.per_theorem.at(id);
    out << "  " << theorem_info(id).name << ": satisfied=" << t.satisfied
        << " skipped=" << t.preconditions_skipped << " mismatches=" << t.mismatches;
    if (mults) out << " mults=" << t.total_mults;
    out << '\n';
  }
  if (s.mismatches.empty()) {
    out << "  mismatches        none\n";
  } else {
    out << "  mismatches        " << s.mismatches.size() << '\n';
    for (const ScanRow& row : s.mismatches)
      for (const ScanEntry& e : row.entries)
        if (!e.agree)
          out << "    p=" << row.p << ' ' << theorem_info(e.theorem).name << ' '
              << to_string(e.verdict.kind) << " oracle=" << bool_text(e.claim_truth) << '\n';
  }
  return out.str();
}

}  // namespace polignac
