#pragma once

namespace picite {

// Full command-line surface of the picite tool; tools/picite.cpp is a thin
// wrapper around this so tests can drive the exact production entry point.
int run_cli(int argc, const char* const* argv);

}  // namespace picite
