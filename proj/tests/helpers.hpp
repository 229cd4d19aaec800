// Test-side oracles and generators.  Everything here is deliberately
// written from the definitions, independent of the library code paths it
// cross-checks.

#ifndef CCN_TESTS_HELPERS_HPP_
#define CCN_TESTS_HELPERS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "ccn/coupling.hpp"
#include "ccn/digraph.hpp"
#include "ccn/partition.hpp"
#include "ccn/rng.hpp"

namespace ccn::testing {

/// Literal definition: for every two same-class vertices, the edge count
/// from each class into them must agree.
inline bool oracle_balanced(const DiGraph& g, const Partition& p) {
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v) {
            if (p.class_of(u) != p.class_of(v)) continue;
            for (int cls = 0; cls < p.m(); ++cls) {
                long long to_u = 0;
                long long to_v = 0;
                for (int w = 0; w < g.n(); ++w) {
                    if (p.class_of(w) != cls) continue;
                    to_u += g.entry(u, w);
                    to_v += g.entry(v, w);
                }
                if (to_u != to_v) return false;
            }
        }
    }
    return true;
}

/// Independent bipartiteness oracle: try both colors for every component
/// root by brute force over colorings of small graphs.
inline bool oracle_bipartite(const DiGraph& g) {
    int n = g.n();
    if (n < 2) return false;
    for (int v = 0; v < n; ++v) {
        if (g.entry(v, v) != 0) return false;
    }
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        bool ok = true;
        bool nonempty_both = mask != 0 && mask != (1LL << n) - 1;
        if (!nonempty_both) continue;
        for (int u = 0; u < n && ok; ++u) {
            for (int w = 0; w < n && ok; ++w) {
                if (u == w || (g.entry(u, w) == 0 && g.entry(w, u) == 0)) continue;
                if (((mask >> u) & 1) == ((mask >> w) & 1)) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

/// All partitions of {0..n-1} in restricted-growth-string order,
/// enumerated iteratively (independent of the library's recursion).
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    for (;;) {
        out.push_back(Partition(rgs));
        int i = n - 1;
        while (i > 0) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
            --i;
        }
        if (i == 0) return out;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
}

inline DiGraph random_multigraph(SplitMix64& rng, int n, long long max_mult) {
    DiGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g.set_entry(i, j, rng.uniform_int(0, max_mult));
    }
    return g;
}

inline DiGraph random_symmetric_graph(SplitMix64& rng, int n, long long max_mult) {
    DiGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long long m = rng.uniform_int(0, max_mult);
            g.set_entry(i, j, m);
            g.set_entry(j, i, m);
        }
    }
    return g;
}

inline Partition random_partition(SplitMix64& rng, int n) {
    std::vector<int> ids(n, 0);
    int used = 1;
    for (int v = 1; v < n; ++v) {
        ids[v] = static_cast<int>(rng.uniform_int(0, used));
        if (ids[v] == used) ++used;
    }
    return Partition(std::move(ids));
}

inline double round_coeff(double x) { return std::round(x * 16.0) / 16.0; }

/// Random gradient tables: alpha and symmetric beta, total degree <= 3,
/// coefficients on a 1/16 grid in [lo, hi] (exact in binary floating point).
inline CouplingSpec random_gradient_spec(SplitMix64& rng, double lo = -2.0, double hi = 2.0) {
    CouplingSpec spec;
    spec.kind = CouplingKind::Gradient;
    std::vector<Polynomial::Term> alpha;
    for (int e = 1; e <= 3; ++e) {
        alpha.push_back({{e, 0, 0, 0}, round_coeff(rng.uniform(lo, hi))});
    }
    spec.alpha = Polynomial(1, std::move(alpha));
    std::vector<Polynomial::Term> beta;
    for (int a = 0; a <= 3; ++a) {
        for (int b = a; a + b <= 3; ++b) {
            if (a == 0 && b == 0) continue;
            double c = round_coeff(rng.uniform(lo, hi));
            beta.push_back({{a, b, 0, 0}, c});
            if (a != b) beta.push_back({{b, a, 0, 0}, c});
        }
    }
    spec.beta = Polynomial(2, std::move(beta));
    spec.beta_symmetric = true;
    return spec;
}

/// Random admissible tables: alpha plus an arbitrary (not necessarily
/// symmetric) pairwise coupling, total degree <= 3.
inline CouplingSpec random_admissible_spec(SplitMix64& rng, double lo = -1.0, double hi = 1.0) {
    CouplingSpec spec;
    spec.kind = CouplingKind::Admissible;
    std::vector<Polynomial::Term> alpha;
    for (int e = 1; e <= 3; ++e) {
        alpha.push_back({{e, 0, 0, 0}, round_coeff(rng.uniform(lo, hi))});
    }
    spec.alpha = Polynomial(1, std::move(alpha));
    std::vector<Polynomial::Term> beta;
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; a + b <= 3; ++b) {
            if (b == 0) continue;  // pure-self terms belong to alpha
            beta.push_back({{a, b, 0, 0}, round_coeff(rng.uniform(lo, hi))});
        }
    }
    spec.beta = Polynomial(2, std::move(beta));
    spec.beta_symmetric = false;
    return spec;
}

/// Random Hamiltonian tables with sigma-invariant beta, total degree <= 3.
inline CouplingSpec random_hamiltonian_spec(SplitMix64& rng, double lo = -2.0, double hi = 2.0) {
    CouplingSpec spec;
    spec.kind = CouplingKind::Hamiltonian;
    std::vector<Polynomial::Term> alpha;
    alpha.push_back({{2, 0, 0, 0}, round_coeff(rng.uniform(lo, hi))});
    alpha.push_back({{0, 2, 0, 0}, round_coeff(rng.uniform(lo, hi))});
    alpha.push_back({{1, 1, 0, 0}, round_coeff(rng.uniform(lo, hi))});
    spec.alpha = Polynomial(2, std::move(alpha));
    std::vector<Polynomial::Term> beta;
    for (int qi = 0; qi <= 2; ++qi) {
        for (int qj = 0; qj <= 2; ++qj) {
            for (int pi = 0; pi <= 2; ++pi) {
                for (int pj = 0; pj <= 2; ++pj) {
                    int deg = qi + qj + pi + pj;
                    if (deg == 0 || deg > 3) continue;
                    // Emit each sigma-orbit once, from its lexicographically
                    // smaller member.
                    std::array<int, 4> e{qi, qj, pi, pj};
                    std::array<int, 4> swapped{qj, qi, pj, pi};
                    if (swapped < e) continue;
                    double c = round_coeff(rng.uniform(lo, hi));
                    beta.push_back({e, c});
                    if (swapped != e) beta.push_back({swapped, c});
                }
            }
        }
    }
    spec.beta = Polynomial(4, std::move(beta));
    spec.beta_symmetric = true;
    return spec;
}

}  // namespace ccn::testing

#endif  // CCN_TESTS_HELPERS_HPP_
