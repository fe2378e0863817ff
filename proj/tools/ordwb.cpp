#include <pthread.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "ordwb/cli.hpp"

namespace {

struct Args {
    int argc;
    char** argv;
    int rc = 0;
};

// Comparison and validation recurse on term depth.
constexpr std::size_t kStack = std::size_t(512) << 20;

void* body(void* p) {
    auto* a = static_cast<Args*>(p);
    std::optional<std::string> env;
    if (const char* e = std::getenv("ORDWB_BUDGET"))
        env = e;
    a->rc = ordwb::run_cli(a->argc - 1, a->argv + 1, std::cout, std::cerr, env);
    return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
    Args a{argc, argv};
    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, kStack);
    pthread_t th;
    if (pthread_create(&th, &attr, body, &a) != 0) {
        body(&a);
    } else {
        pthread_join(th, nullptr);
    }
    pthread_attr_destroy(&attr);
    std::cout.flush();
    return a.rc;
}
