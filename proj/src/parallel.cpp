#include "zetalab/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "zetalab/error.hpp"

namespace zetalab {

std::size_t thread_count() {
    if (const char* env = std::getenv("ZETALAB_THREADS")) {
        const std::string_view text(env);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
            throw InputError("ZETALAB_THREADS must be a positive integer, got '" + std::string(text) + "'");
        }
        return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace zetalab
