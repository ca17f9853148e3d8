#include "daml/cli.hpp"

int main(int argc, char** argv) {
    return daml::run_cli(argc, argv);
}
