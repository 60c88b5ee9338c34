#include "canon/acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    canon::acceptance::Options opt;
    if (argc > 1) opt.jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[1])));
    bool ok = true;
    canon::acceptance::run_all(opt, [&](const canon::acceptance::Criterion& c) {
        std::cout << c.line() << std::endl;
        if (!c.pass) {
            std::cout << "  " << c.detail.dump().substr(0, 2000) << std::endl;
            ok = false;
        }
    });
    return ok ? 0 : 1;
}
