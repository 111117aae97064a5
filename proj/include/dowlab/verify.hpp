#pragma once

// Executable identity catalog. Every check compares exact LambdaPoly values;
// identities in x are sampled at enough rational points to pin the polynomial
// down, identities in a free z at seeded random rationals.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dowlab/numbers.hpp"

namespace dowlab {

enum class Status { pass, fail, paper_discrepancy };

// "pass", "fail", "paper-discrepancy"
std::string_view status_name(Status s);

struct Counterexample {
  std::string params;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct IdentityReport {
  std::string id;
  long params_tested = 0;
  Status status = Status::pass;
  std::optional<Counterexample> counterexample;
  // Set on entries that compare two readings of a formula: which one holds.
  std::string resolution;
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

struct VerifyConfig {
  long n_max = 8;
  std::vector<long> m_set{1, 2, 3};
  std::vector<long> r_set{1, 2, 3};
  std::uint64_t seed = 0;
};

// Where the checks read the W/V triangles from. Tests swap in a corrupted
// source to make sure the checks can fail.
struct Context {
  using TriangleSource = std::function<std::shared_ptr<const Triangle>(Family, long m, long r, std::size_t n_max)>;
  TriangleSource triangle_source = triangle;
};

struct IdentityCheck {
  std::string id;
  std::string description;
  std::function<IdentityReport(const VerifyConfig&, const Context&)> run;
};

const std::vector<IdentityCheck>& identity_catalog();
std::vector<std::string> identity_ids();

// Throws DomainError for an id that is not in the catalog.
IdentityReport run_identity(std::string_view id, const VerifyConfig& cfg, const Context& ctx = {});
IdentityReport run_identity(std::string_view id, long n_max, const std::vector<long>& m_set,
                            const std::vector<long>& r_set, std::uint64_t seed);

// Runs the whole catalog concurrently; results come back in catalog order.
// threads == 0 reads DOWLAB_THREADS, falling back to the hardware count.
std::vector<IdentityReport> verify_all(const VerifyConfig& cfg, const Context& ctx = {}, unsigned threads = 0);
std::vector<IdentityReport> verify_all(long n_max, const std::vector<long>& m_set, const std::vector<long>& r_set,
                                       std::uint64_t seed);

// True unless some entry has status fail.
bool all_passed(const std::vector<IdentityReport>& reports);

nlohmann::json report_json(const IdentityReport& r);
nlohmann::json reports_json(const std::vector<IdentityReport>& reports, const VerifyConfig& cfg);

unsigned thread_cap_from_env();

}  // namespace dowlab
