#include "krc/harness.hpp"

int main(int argc, char** argv) { return krc::cli_main(argc, argv); }
