#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "chanmaj/lp.hpp"
#include "chanmaj/prob.hpp"

namespace chanmaj {

// Convex combination of the identity and a swap of entries i and j. The
// constructive chain below always produces t in [1/2, 1].
struct t_transform {
    std::size_t i = 0;
    std::size_t j = 0;
    double t = 1.0;

    vec apply(const vec& v) const;
};

// Chain mapping raw p to raw q: sort p with perm_p, apply the steps, then
// place entries into q's original order through perm_q. perm_* hold the
// indices that sort the respective vector in nonincreasing order.
struct t_chain_witness {
    std::vector<std::size_t> perm_p;
    std::vector<std::size_t> perm_q;
    std::vector<t_transform> steps;

    vec apply(const vec& p) const;
};

struct doubly_stochastic_witness {
    mat d;
};

struct ky_fan_gap_witness {
    vec gaps; // profile(p) - profile(q) per k, on the padded dimension
};

using majorization_witness =
    std::variant<ky_fan_gap_witness, t_chain_witness, doubly_stochastic_witness>;

struct not_comparable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p majorizes q: every Ky Fan k-norm of p dominates q's, vectors zero-padded
// to a common dimension first.
bool majorizes(const prob_vector& p, const prob_vector& q, const tolerance& tol = {});

ky_fan_gap_witness witness_ky_fan(const prob_vector& p, const prob_vector& q,
                                  const tolerance& tol = {});

// Constructive chain of T-transforms mapping p to q. Throws not_comparable
// unless majorizes(p, q).
t_chain_witness witness_t_chain(const prob_vector& p, const prob_vector& q,
                                const tolerance& tol = {});

// The chain collapsed into one explicit doubly stochastic matrix D with
// D p = q (raw orderings).
doubly_stochastic_witness witness_doubly_stochastic(const prob_vector& p, const prob_vector& q,
                                                    const tolerance& tol = {});

// Independent witness validation; no decision code involved.
bool check_witness(const majorization_witness& w, const prob_vector& p, const prob_vector& q,
                   const tolerance& tol = {});

bool is_doubly_stochastic(const mat& d, const tolerance& tol = {});

} // namespace chanmaj
