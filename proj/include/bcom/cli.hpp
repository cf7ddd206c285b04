#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bcom/caps.hpp"

namespace bcom::cli {

// Exit codes: 0 success, 2 validation error, 3 resource cap exceeded,
// 4 verification failure.
constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kResource = 3;
constexpr int kVerification = 4;

// One invocation of a subcommand. Deterministic configs produce
// byte-identical results on `out`; progress goes to `err` only.
struct RunConfig {
  std::string group_spec = "C2";
  std::string tau = "z";
  int ell = 2;
  int max_degree = 1;
  std::string format = "text";  // text | json | csv
  Caps caps;
  unsigned long long seed = 0;  // reserved for sampling diagnostics; unused
};

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run_main(int argc, char** argv);

}  // namespace bcom::cli
