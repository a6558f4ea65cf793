#include "semireg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace semireg {

int RsrbParams::n2() const {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("rsrb: degrees must be >= 1");
    if (n1 < 1) throw std::invalid_argument("rsrb: n1 must be >= 1");
    long long stubs = static_cast<long long>(n1) * d1;
    if (stubs % d2 != 0)
        throw std::invalid_argument("rsrb: n1*d1 not divisible by d2");
    return static_cast<int>(stubs / d2);
}

RsrbParams RsrbParams::from_n_exact(int d1, int d2, int n) {
    long long num = static_cast<long long>(d2) * n;
    if (num % (d1 + d2) != 0)
        throw std::invalid_argument("rsrb: d2/(d1+d2)*n is not an integer");
    RsrbParams p{d1, d2, static_cast<int>(num / (d1 + d2))};
    p.n2();  // validate divisibility
    return p;
}

RsrbParams RsrbParams::from_n_nearest(int d1, int d2, int n) {
    // n1 must be a multiple of d2/gcd(d1,d2)
    int step = d2 / std::gcd(d1, d2);
    double target = static_cast<double>(d2) * n / (d1 + d2);
    long long k = std::llround(target / step);
    if (k < 1) k = 1;
    return RsrbParams{d1, d2, static_cast<int>(k * step)};
}

int RsrParams::n1() const {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("rsr: p must be in [0,1]");
    if (n < 2) throw std::invalid_argument("rsr: n must be >= 2");
    return static_cast<int>(std::floor((1.0 - p) * n));
}

std::string model_name(const ModelParams& m) {
    struct Visitor {
        std::string operator()(const RsrbParams&) const { return "rsrb"; }
        std::string operator()(const RsrParams&) const { return "rsr"; }
        std::string operator()(const SmallWorldParams&) const { return "small-world"; }
        std::string operator()(const RegularParams&) const { return "regular"; }
        std::string operator()(const CompleteBipartiteParams&) const { return "complete-bipartite"; }
    };
    return std::visit(Visitor{}, m);
}

int model_vertex_count(const ModelParams& m) {
    struct Visitor {
        int operator()(const RsrbParams& p) const { return p.total_vertices(); }
        int operator()(const RsrParams& p) const { return p.n; }
        int operator()(const SmallWorldParams& p) const { return p.n; }
        int operator()(const RegularParams& p) const { return p.n; }
        int operator()(const CompleteBipartiteParams& p) const { return p.n; }
    };
    return std::visit(Visitor{}, m);
}

Multigraph generate_rsrb(const RsrbParams& params, RngStream& rng) {
    const int n1 = params.n1, d1 = params.d1, d2 = params.d2;
    const int n2 = params.n2();
    Multigraph g;
    g.n = n1 + n2;

    // bag1: d1 copies of 0..n1-1 in order; bag2: d2 copies of n1..n-1, shuffled.
    std::vector<int> bag2(static_cast<std::size_t>(n2) * d2);
    for (std::size_t i = 0; i < bag2.size(); ++i)
        bag2[i] = n1 + static_cast<int>(i % n2);
    rng.shuffle(bag2);

    g.edges.reserve(bag2.size());
    for (std::size_t i = 0; i < bag2.size(); ++i) {
        int u = static_cast<int>(i % n1);
        g.edges.emplace_back(u, bag2[i]);
    }
    return g;
}

Multigraph generate_rsr(const RsrParams& params, RngStream& rng, int* short_vertex) {
    const int n1 = params.n1(), n = params.n;
    const int n2 = n - n1;
    if (params.d1 < 1 || params.d2 < 1)
        throw std::invalid_argument("rsr: degrees must be >= 1");

    std::vector<int> bag;
    bag.reserve(static_cast<std::size_t>(n1) * params.d1 +
                static_cast<std::size_t>(n2) * params.d2);
    for (int k = 0; k < params.d1; ++k)
        for (int v = 0; v < n1; ++v) bag.push_back(v);
    for (int k = 0; k < params.d2; ++k)
        for (int v = n1; v < n; ++v) bag.push_back(v);
    rng.shuffle(bag);

    int shorted = -1;
    if (bag.size() % 2 != 0) {
        shorted = bag.back();
        bag.pop_back();
    }
    if (short_vertex) *short_vertex = shorted;

    Multigraph g;
    g.n = n;
    const std::size_t half = bag.size() / 2;
    g.edges.reserve(half);
    for (std::size_t i = 0; i < half; ++i)
        g.edges.emplace_back(bag[i], bag[half + i]);
    return g;
}

Multigraph generate_regular(const RegularParams& params, RngStream& rng) {
    if (params.d < 1) throw std::invalid_argument("regular: d must be >= 1");
    if (params.n < 2) throw std::invalid_argument("regular: n must be >= 2");
    if ((static_cast<long long>(params.n) * params.d) % 2 != 0)
        throw std::invalid_argument("regular: n*d must be even");
    RsrParams rp{1.0, params.d, params.d, params.n};
    int shorted = -1;
    Multigraph g = generate_rsr(rp, rng, &shorted);
    return g;
}

Multigraph generate_small_world(const SmallWorldParams& params, RngStream& rng) {
    const int n = params.n;
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("small-world: n must be a positive multiple of 4");

    Multigraph g;
    g.n = n;
    g.edges.reserve(n + n / 4);
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);

    // random perfect matching on the alternating vertices 0,2,...,n-2
    std::vector<int> bag(n / 2);
    for (int i = 0; i < n / 2; ++i) bag[i] = 2 * i;
    rng.shuffle(bag);
    const int half = n / 4;
    for (int i = 0; i < half; ++i) g.edges.emplace_back(bag[i], bag[half + i]);
    return g;
}

Multigraph complete_bipartite(const CompleteBipartiteParams& params) {
    if (params.b < 1 || params.b >= params.n)
        throw std::invalid_argument("complete-bipartite: need 1 <= b < n");
    Multigraph g;
    g.n = params.n;
    for (int u = 0; u < params.b; ++u)
        for (int v = params.b; v < params.n; ++v) g.edges.emplace_back(u, v);
    return g;
}

Multigraph generate(const ModelParams& m, RngStream& rng) {
    struct Visitor {
        RngStream& rng;
        Multigraph operator()(const RsrbParams& p) const { return generate_rsrb(p, rng); }
        Multigraph operator()(const RsrParams& p) const { return generate_rsr(p, rng); }
        Multigraph operator()(const SmallWorldParams& p) const { return generate_small_world(p, rng); }
        Multigraph operator()(const RegularParams& p) const { return generate_regular(p, rng); }
        Multigraph operator()(const CompleteBipartiteParams& p) const { return complete_bipartite(p); }
    };
    return std::visit(Visitor{rng}, m);
}

std::vector<std::pair<int, int>> integer_pairs(int d) {
    if (d < 3) throw std::invalid_argument("integer_pairs: d must be >= 3");
    std::vector<std::pair<int, int>> out;
    for (int d1 = d; d1 >= 2; --d1) {
        int den = 2 * d1 - d;
        if (den <= 0) continue;
        long long num = static_cast<long long>(d) * d1;
        if (num % den != 0) continue;
        long long d2 = num / den;
        if (d2 >= d1) out.emplace_back(d1, static_cast<int>(d2));
    }
    return out;
}

}  // namespace semireg
