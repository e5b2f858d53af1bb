#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "czdg/errors.hpp"
#include "czdg/ring.hpp"
#include "czdg/scan.hpp"
#include "czdg/verify.hpp"

namespace czdg {

// Requesting the compressed graph of an integral domain.
struct UndefinedGraphError : Error {
  using Error::Error;
};

// 0 success, 2 parse error, 3 construction error, 4 undefined-graph request,
// 5 verification failure, 6 resource limit
int exit_code_for(const std::exception& e);

struct CommandOptions {
  ConstructOptions construct;
  MdimOptions mdim;
  int threads = 1;
};

void cmd_ring_info(std::ostream& out, const std::string& expr, bool as_json,
                   const CommandOptions& opt);

void cmd_graph(std::ostream& out, const std::string& expr,
               const std::string& kind, const std::string& format,
               const CommandOptions& opt);

void cmd_invariants(std::ostream& out, const std::string& expr, bool as_json,
                    const CommandOptions& opt);

// returns false when a suite failed (exit 5)
bool cmd_verify(std::ostream& out, const std::string& suite,
                const std::string& format, const VerifyConfig& cfg);

void cmd_scan(std::ostream& out, const std::vector<std::string>& exprs,
              const CommandOptions& opt);

}  // namespace czdg
