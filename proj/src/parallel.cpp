#include "hompoly/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hompoly {

std::size_t default_threads()
{
    if (const char* env = std::getenv("HOMPOLY_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace hompoly
