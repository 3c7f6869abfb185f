#pragma once

// fgrverify front end.
//
//   fgrverify verify [all|<id>]   exact + numeric check of claim fixtures
//   fgrverify reduce "<expr>"     reduce a combination to the core basis
//   fgrverify eval "<expr>"       quadrature of a combination (or a scalar)
//   fgrverify constants           Gamma, p1, c0
//   fgrverify report <path>       summarize a saved JSON report
//
// Options --tol, --truncation, --json, --parallel, --format, --fixtures can
// also be set through FGR_TOL, FGR_TRUNCATION, FGR_JSON, FGR_PARALLEL,
// FGR_FORMAT, FGR_FIXTURES; flags win over the environment.
//
// Exit status: 0 everything verified, 1 a verification failed, 2 bad usage,
// unparsable expression or unknown claim.

#include <ostream>

namespace fgr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fgr::cli
