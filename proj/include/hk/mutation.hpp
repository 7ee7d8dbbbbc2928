#pragma once

// Test-only switches that disable one case of an operator, so the verification
// suites can demonstrate they are able to fail. Production code never sets them.

namespace hk {

enum class Mutation {
    none,
    star_f_case1,       // f_star: x+1 in both factors
    star_f_case2,       // f_star: plain move of x
    star_e_case1,       // e_star: y-1 in both factors
    star_e_case2,       // e_star: plain move of y
    svt_f_exception,    // f_svt: right neighbour holds i and i+1
    svt_f_plain,        // f_svt: change i to i+1
    svt_e_exception,    // e_svt: left neighbour holds i and i+1
    svt_e_plain,        // e_svt: change i+1 to i
    star_insert_case3,  // star insertion: x already in the row
};

Mutation active_mutation();
void set_mutation(Mutation m);
const char* mutation_name(Mutation m);

class ScopedMutation {
public:
    explicit ScopedMutation(Mutation m) : saved_(active_mutation()) { set_mutation(m); }
    ~ScopedMutation() { set_mutation(saved_); }
    ScopedMutation(const ScopedMutation&) = delete;
    ScopedMutation& operator=(const ScopedMutation&) = delete;

private:
    Mutation saved_;
};

}  // namespace hk
