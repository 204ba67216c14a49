#include "boolpred/cli.hpp"

int main(int argc, char** argv) {
    return boolpred::run_cli(argc, argv);
}
