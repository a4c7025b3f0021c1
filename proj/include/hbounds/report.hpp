#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hbounds {

// How a claim's computed value is compared against its published value.
enum class ClaimKind {
  eq,       // |computed - published| <= tolerance
  integer,  // exact integer match; off by exactly 1 -> boundary-sensitive
  le,       // computed <= published + tolerance
  ge,       // computed >= published - tolerance
  info,     // recorded for the record, never judged
};

enum class ClaimStatus { pass, fail, boundary_sensitive, informational };

std::string to_string(ClaimKind k);
std::string to_string(ClaimStatus s);

// One verified quantitative claim. published_value is the value printed in
// the source being reproduced; computed_value is what this toolkit got.
struct ClaimRecord {
  std::string id;
  double published_value;
  double computed_value;
  double tolerance;
  ClaimStatus status;
  ClaimKind kind;
  std::string citation;
};

// Pure comparator used to set ClaimRecord::status.
ClaimStatus judge(ClaimKind kind, double published, double computed,
                  double tolerance);

struct VerifyOptions {
  std::int64_t n_cap = 10000;  // upper end of the envelope / radius sweeps
  bool run_oracle = true;      // include the brute-force cross-checks
};

struct VerificationReport {
  std::vector<ClaimRecord> claims;
  bool all_passed() const;  // true iff no claim has status == fail
};

// Runs the complete claim suite: coefficient-envelope sweeps, the increasing-
// ratio function and its sign polynomial, the closed-form bound agreements,
// the rational floor and tail identities, monotonicity of the order offset,
// the radius table, both threshold families, the slack chain with the
// logarithmic lower-bound curve, the oracle cross-checks, and a self-test
// that deliberately tampers one tolerance to prove the comparator can fail.
VerificationReport run_verification(const VerifyOptions& opts = {});

// {"schema": 1, "claims": [...]} rendered deterministically.
std::string report_to_json(const VerificationReport& rep);

// Shortest decimal that round-trips the double exactly.
std::string format_double(double v);
// 9 significant digits, for human-readable console output.
std::string format_human(double v);

// The pinned diagonal-radius table: section order and published radius.
struct Table1Row {
  std::int64_t n;
  double published;
};
const std::vector<Table1Row>& table1_rows();

}  // namespace hbounds
