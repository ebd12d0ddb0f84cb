#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <string_view>
#include <vector>

namespace atlas::testing {
unsigned long long seed = 0x5eed0a71;
}

int main(int argc, char** argv) {
    std::vector<const char*> passthrough;
    for (int k = 0; k < argc; ++k) {
        std::string_view arg = argv[k];
        if (arg.rfind("--seed=", 0) == 0) {
            atlas::testing::seed = std::strtoull(arg.data() + 7, nullptr, 10);
            continue;
        }
        passthrough.push_back(argv[k]);
    }
    doctest::Context context(static_cast<int>(passthrough.size()),
                             const_cast<char**>(passthrough.data()));
    return context.run();
}
