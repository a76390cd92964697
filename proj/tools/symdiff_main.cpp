#include "symdiff/cli.hpp"

int main(int argc, char** argv) { return symdiff::run_cli(argc, argv); }
