#include "qsdc/cli.hpp"

int main(int argc, char** argv) { return qsdc::run_cli(argc, argv); }
