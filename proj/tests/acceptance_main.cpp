#include "scy/acceptance.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    scy::AcceptanceOptions opt;
    if (argc > 1) opt.config = scy::Config::load(argv[1]);
    bool ok = true;
    scy::run_acceptance(opt, [&](const scy::CriterionResult& r) {
        ok = ok && r.passed;
        std::cout << scy::format_result_line(r) << "\n";
        for (auto& c : r.checks)
            if (c.rfind("FAIL", 0) == 0) std::cout << "      " << c << "\n";
        std::cout.flush();
    });
    return ok ? 0 : 1;
}
