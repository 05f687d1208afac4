#include "cqda/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace cqda {

namespace {

std::uint64_t initial_budget()
{
    if (char const* env = std::getenv("CQDA_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return std::uint64_t{1} << 20;
}

std::atomic<std::uint64_t>& budget_cell()
{
    static std::atomic<std::uint64_t> cell{initial_budget()};
    return cell;
}

}  // namespace

std::uint64_t budget()
{
    return budget_cell().load();
}

void set_budget(std::uint64_t cap)
{
    budget_cell().store(cap);
}

}  // namespace cqda
