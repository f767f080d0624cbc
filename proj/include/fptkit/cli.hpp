#pragma once

namespace fptkit {

// Full command-line surface. Returns the process exit code: 0 success,
// 2 usage or invalid input, 3 resource cap, 4 reproduction mismatch.
int run_cli(int argc, char** argv);

} // namespace fptkit
