#pragma once

namespace tgl {

// Exit codes: 0 success / all pass, 1 a verification or identity check did
// not come back positive, 2 usage or input error (diagnostic on stderr).
int run_cli(int argc, char** argv);

}  // namespace tgl
