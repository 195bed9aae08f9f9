#pragma once

namespace banditlab {

// Entry point behind the `banditlab` executable. Subcommands:
//   simulate  --config F [--out D] [--workers W]
//   sweep-k   --config F --k 2,4,8 [--out D] [--workers W]
//   bound     --config F
//   fit-prior --means F1 --precisions F2 [--mode exact|paper]
// Exit codes: 0 success, 1 usage error, 2 runtime error.
// BANDIT_LAB_WORKERS provides the default for --workers.
int run_cli(int argc, const char* const* argv);

}  // namespace banditlab
