// Command-line front end; all work happens behind the C API.

#include "fukalg.h"

#include <cstdio>

int main(int argc, char** argv) {
    char* report = nullptr;
    fukalg_status rc =
        fukalg_run(argc - 1, const_cast<const char* const*>(argv + 1), &report);
    if (report) {
        std::fputs(report, stdout);
        fukalg_string_free(report);
    }
    const char* err = fukalg_last_error();
    if (rc != FUKALG_OK && err && err[0]) std::fprintf(stderr, "%s\n", err);
    return static_cast<int>(rc);
}
