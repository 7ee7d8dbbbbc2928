#include "hk/mutation.hpp"

#include <atomic>

namespace hk {

namespace {
std::atomic<Mutation> g_mutation{Mutation::none};
}

Mutation active_mutation() { return g_mutation.load(std::memory_order_relaxed); }
void set_mutation(Mutation m) { g_mutation.store(m, std::memory_order_relaxed); }

const char* mutation_name(Mutation m) {
    switch (m) {
        case Mutation::none: return "none";
        case Mutation::star_f_case1: return "star_f_case1";
        case Mutation::star_f_case2: return "star_f_case2";
        case Mutation::star_e_case1: return "star_e_case1";
        case Mutation::star_e_case2: return "star_e_case2";
        case Mutation::svt_f_exception: return "svt_f_exception";
        case Mutation::svt_f_plain: return "svt_f_plain";
        case Mutation::svt_e_exception: return "svt_e_exception";
        case Mutation::svt_e_plain: return "svt_e_plain";
        case Mutation::star_insert_case3: return "star_insert_case3";
    }
    return "?";
}

}  // namespace hk
