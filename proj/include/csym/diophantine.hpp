#ifndef CSYM_DIOPHANTINE_HPP
#define CSYM_DIOPHANTINE_HPP

#include "csym/seed.hpp"

#include <map>
#include <string>
#include <vector>

namespace csym {

// A cluster symmetric equation F(x) = F(1,...,1) together with the
// mutation generators that preserve F. All builtin instances verify the
// invariance of F under every generator at construction.
struct EquationInstance {
    LaurentPoly F;
    Rat c; // F(1,...,1)
    std::vector<ClusterSymmetricMap> generators;
    ExpVec height_d; // d of F's realized type

    int nvars() const { return F.nvars(); }
};

enum class BuiltinTable { Rank2, Rank3 };

struct BuiltinRow {
    Seed seed;
    EquationInstance eq;
    std::vector<std::string> param_names;
};

int builtin_arity(BuiltinTable table, int index);
// index is 1-based; params are substituted into Z and F.
BuiltinRow builtin(BuiltinTable table, int index, const std::vector<Int>& params);

using Tuple = std::vector<Int>;

Rat eval_at(const LaurentPoly& F, const Tuple& x);
bool is_solution(const EquationInstance& eq, const Tuple& x);

// h_F(x) = max_i x_i^{d_i}.
Int height(const EquationInstance& eq, const Tuple& x);

// Integer tuple image of one generator; throws when the image is not a
// positive integer tuple (which would contradict the Laurent phenomenon
// on solution orbits).
Tuple apply_generator(const ClusterSymmetricMap& psi, const Tuple& x);

// BFS orbit of `start` under the generators, pruned at height <= bound;
// sorted output. `start` must solve the equation.
std::vector<Tuple> orbit_enumerate(const EquationInstance& eq,
                                   const Tuple& start, const Int& height_bound);

// BFS orbit pruned at every coordinate <= bound (solution descent is
// coordinatewise monotone, so this is complete inside the box).
std::vector<Tuple> orbit_in_box(const EquationInstance& eq, const Tuple& start,
                                const Int& coord_bound);

// All positive integer solutions with coordinates <= bound, by exhaustive
// scan solving the cleared equation for the lowest-degree variable.
// jobs > 1 splits the outer loop; the result does not depend on jobs.
std::vector<Tuple> brute_force_solutions(const EquationInstance& eq,
                                         const Int& bound, int jobs = 1);

// Greedy height descent to (1,...,1); returns the 0-based generator word
// in application order. Fails (throws) if the height ever refuses to drop,
// which would falsify the solution-structure property at this instance.
std::vector<int> descend(const EquationInstance& eq, const Tuple& x);

struct OrbitCheckReport {
    bool equal = false;
    std::vector<Tuple> only_in_orbit;
    std::vector<Tuple> only_in_solutions;
    size_t count = 0;
};

// Compares the mutation orbit of 1 with the brute-force solution set,
// both restricted to coordinates <= bound.
OrbitCheckReport verify_orbit_equals_solutions(const EquationInstance& eq,
                                               const Int& bound, int jobs = 1);

} // namespace csym

#endif
