#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semireg/multigraph.hpp"
#include "semireg/rng.hpp"

namespace semireg {

// Semi-regular bipartite: n1 vertices of degree d1 matched by stubs against
// n2 = n1*d1/d2 vertices of degree d2.
struct RsrbParams {
    int d1 = 2;
    int d2 = 3;
    int n1 = 0;

    int n2() const;                 // n1*d1/d2, throws unless integral
    int total_vertices() const { return n1 + n2(); }
    double average_degree() const { return 2.0 * d1 * d2 / (d1 + d2); }

    // n1 = d2/(d1+d2)*n, throws unless integral
    static RsrbParams from_n_exact(int d1, int d2, int n);
    // nearest feasible n1 to d2/(d1+d2)*n (ties toward smaller)
    static RsrbParams from_n_nearest(int d1, int d2, int n);
};

// Mixed single-bag model: floor((1-p)n) vertices of degree d1, the rest d2.
struct RsrParams {
    double p = 0.5;
    int d1 = 2;
    int d2 = 3;
    int n = 0;

    int n1() const;
    int n2() const { return n - n1(); }
    double average_degree() const { return (1 - p) * d1 + p * d2; }
};

struct SmallWorldParams {
    int n = 0;  // ring size, must be divisible by 4
};

struct RegularParams {
    int d = 3;
    int n = 0;  // n*d must be even
};

struct CompleteBipartiteParams {
    int b = 1;
    int n = 0;  // parts of size b and n-b
};

using ModelParams = std::variant<RsrbParams, RsrParams, SmallWorldParams,
                                 RegularParams, CompleteBipartiteParams>;

std::string model_name(const ModelParams& m);
int model_vertex_count(const ModelParams& m);

Multigraph generate_rsrb(const RsrbParams& params, RngStream& rng);

// If the stub bag is odd one stub is discarded; *short_vertex (when non-null)
// receives the vertex left one below its target degree, or -1.
Multigraph generate_rsr(const RsrParams& params, RngStream& rng,
                        int* short_vertex = nullptr);

Multigraph generate_regular(const RegularParams& params, RngStream& rng);

Multigraph generate_small_world(const SmallWorldParams& params, RngStream& rng);

Multigraph complete_bipartite(const CompleteBipartiteParams& params);

Multigraph generate(const ModelParams& m, RngStream& rng);

// All integer pairs 2 <= d1 <= d2 with 2*d1*d2/(d1+d2) == d, descending in d1
// (the regular pair (d,d) first).
std::vector<std::pair<int, int>> integer_pairs(int d);

}  // namespace semireg
