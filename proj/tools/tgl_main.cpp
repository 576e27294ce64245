#include "tgl/cli.hpp"

int main(int argc, char** argv) { return tgl::run_cli(argc, argv); }
