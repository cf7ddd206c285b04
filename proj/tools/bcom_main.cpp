#include "bcom/cli.hpp"

int main(int argc, char** argv) { return bcom::cli::run_main(argc, argv); }
