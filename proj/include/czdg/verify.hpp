#pragma once

#include <string>
#include <vector>

#include "czdg/invariants.hpp"
#include "czdg/ring.hpp"
#include "czdg/scan.hpp"

namespace czdg {

enum class Verdict { Pass, Fail, Erratum };

struct ClaimInstance {
  std::string ring;  // expression or short description
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::Pass;
  std::string note;
};

struct ClaimReport {
  std::string claim_id;
  std::string family;
  std::vector<ClaimInstance> instances;

  int passes() const;
  int fails() const;
  int errata() const;
  bool ok() const { return fails() == 0; }
};

struct VerifyConfig {
  int zn_min = 4, zn_max = 200;
  std::vector<int> primes_2p = {3, 5, 7, 11, 13};
  std::vector<int> primes_psq = {2, 3, 5, 7, 11};
  int field_product_cap = 81;  // pairs F_q1 x F_q2 with q1*q2 below this
  ConstructOptions construct;
  MdimOptions mdim;
};

struct CorpusEntry {
  std::string expr;
  RingAnalysis analysis;
};

// Z_n over the configured range, every catalogued presentation, field-pair
// products, and Z2 x Z2 x Z2; analyzed once and shared across suites.
std::vector<CorpusEntry> build_corpus(const VerifyConfig& cfg);

ClaimReport check_prop_2_1(const std::vector<CorpusEntry>& family);
ClaimReport check_prop_2_2(const std::vector<CorpusEntry>& family);
ClaimReport check_thm_3_1(const std::vector<CorpusEntry>& family);
ClaimReport check_prop_3_1(const VerifyConfig& cfg);
ClaimReport check_prop_3_2(const VerifyConfig& cfg);
ClaimReport check_prop_3_3(const VerifyConfig& cfg);
ClaimReport check_props_3_4_to_3_6(const VerifyConfig& cfg);
ClaimReport check_thm_4_1_and_cor_4_1(const std::vector<CorpusEntry>& family,
                                      const VerifyConfig& cfg);
ClaimReport check_thm_4_2(const std::vector<CorpusEntry>& family,
                          const VerifyConfig& cfg);
ClaimReport check_structural_properties(const std::vector<CorpusEntry>& family);
ClaimReport check_errata(const VerifyConfig& cfg);

struct AggregateReport {
  std::vector<ClaimReport> suites;
  bool ok = true;

  std::vector<std::string> erratum_lines() const;  // deduplicated
  std::string render_text() const;
  std::string render_json() const;
};

// suite ids: 2.1 2.2 thm-3.1 3.1 3.2 3.3 3.4-3.6 4.1 4.2 structural errata all
AggregateReport run_suites(const std::string& suite, const VerifyConfig& cfg);
const std::vector<std::string>& known_suites();

}  // namespace czdg
