#pragma once

namespace eulab {

// full command-line front end; returns the process exit code
int run_cli(int argc, const char* const* argv);

}  // namespace eulab
