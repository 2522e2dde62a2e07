#include "systolic/cli.hpp"

int main(int argc, char** argv) { return systolic::main_entry(argc, argv); }
