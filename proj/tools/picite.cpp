#include "picite/cli.hpp"

int main(int argc, char** argv) { return picite::run_cli(argc, argv); }
