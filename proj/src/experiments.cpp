#include "semireg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "semireg/asymptotics.hpp"
#include "semireg/series.hpp"

namespace semireg {

int default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    jobs = std::clamp(jobs, 1, std::max(count, 1));
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

Histogram make_histogram(const std::vector<double>& values, int bins) {
    Histogram h;
    if (values.empty() || bins < 1) return h;
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    if (hi <= lo) hi = lo + std::max(1e-12, std::abs(lo) * 1e-9);
    h.edges.resize(bins + 1);
    for (int b = 0; b <= bins; ++b)
        h.edges[b] = lo + (hi - lo) * b / bins;
    h.counts.assign(bins, 0);
    for (double v : values) {
        int b = static_cast<int>((v - lo) / (hi - lo) * bins);
        b = std::clamp(b, 0, bins - 1);
        h.counts[b] += 1;
    }
    return h;
}

namespace {

double mu_asymptotic_for(const ModelParams& m) {
    struct Visitor {
        double operator()(const RsrbParams& p) const { return mu_rsrb(p.d1, p.d2); }
        double operator()(const RsrParams& p) const { return mu_rsr(p.p, p.d1, p.d2); }
        double operator()(const SmallWorldParams&) const { return mu_small_world(); }
        double operator()(const RegularParams& p) const { return mu_regular(p.d); }
        double operator()(const CompleteBipartiteParams& p) const {
            return static_cast<double>(std::min(p.b, p.n - p.b));
        }
    };
    return std::visit(Visitor{}, m);
}

struct TrialOutcome {
    double ac = 0;
    bool ok = false;
    bool connected = false;
};

std::vector<TrialOutcome> run_trials(const ModelParams& model, int trials,
                                     std::uint64_t seed, bool simple, int jobs) {
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, jobs, [&](int i) {
        RngStream rng = RngStream::for_trial(seed, static_cast<std::uint64_t>(i));
        Multigraph g = generate(model, rng);
        if (simple) {
            try {
                g = rewire_to_simple(g, rng);
            } catch (const std::runtime_error&) {
                return;  // recorded as failure
            }
        }
        TrialOutcome& out = outcomes[i];
        out.connected = is_connected(g);
        out.ac = algebraic_connectivity(g);
        out.ok = true;
    });
    return outcomes;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double acc = 0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace

EnsembleReport run_ensemble(const ModelParams& model, int trials, std::uint64_t seed,
                            bool simple, int jobs, int bins) {
    if (trials < 1) throw std::invalid_argument("run_ensemble: trials must be >= 1");
    EnsembleReport r;
    r.model = model;
    r.n = model_vertex_count(model);
    r.trials = trials;
    r.seed = seed;
    r.simple = simple;

    auto outcomes = run_trials(model, trials, seed, simple, jobs);
    std::vector<double> connected_values;
    for (const auto& out : outcomes) {
        if (!out.ok) {
            r.failures += 1;
            continue;
        }
        r.values.push_back(out.ac);
        if (out.connected)
            connected_values.push_back(out.ac);
        else
            r.disconnected_count += 1;
    }
    if (r.values.empty()) throw std::runtime_error("run_ensemble: every trial failed");

    r.mean = mean_of(r.values);
    r.stddev = sample_std(r.values, r.mean);
    r.min = *std::min_element(r.values.begin(), r.values.end());
    r.max = *std::max_element(r.values.begin(), r.values.end());
    r.histogram = make_histogram(r.values, bins);
    r.mu_asymptotic = mu_asymptotic_for(model);
    r.diff_percent =
        r.mu_asymptotic != 0.0 ? (r.mean - r.mu_asymptotic) / r.mu_asymptotic * 100.0 : 0.0;
    r.connected_mean = mean_of(connected_values);
    return r;
}

TableReport reproduce_rsrb_table(int n, int trials, std::uint64_t seed, int jobs) {
    TableReport t;
    t.name = "rsrb";
    t.n = n;
    t.trials = trials;
    t.seed = seed;
    int row_index = 0;
    for (int d = 3; d <= 8; ++d) {
        for (auto [d1, d2] : integer_pairs(d)) {
            RsrbParams params = RsrbParams::from_n_nearest(d1, d2, n);
            std::uint64_t row_seed = derive_stream_seed(seed, 7000 + row_index);
            EnsembleReport e = run_ensemble(params, trials, row_seed, true, jobs);
            TableRow row;
            row.d = d;
            row.d1 = d1;
            row.d2 = d2;
            row.actual_n = e.n;
            row.mu_asympt = mu_rsrb(d1, d2);
            row.mu_numerics = e.mean;
            row.stddev = e.stddev;
            row.diff_percent = e.diff_percent;
            row.failures = e.failures;
            row.disconnected = e.disconnected_count;
            row.connected_mean = e.connected_mean;
            t.rows.push_back(row);
            ++row_index;
        }
    }
    return t;
}

TableReport reproduce_rsr_table(int n, int trials, std::uint64_t seed, int jobs) {
    TableReport t;
    t.name = "rsr";
    t.n = n;
    t.trials = trials;
    t.seed = seed;
    struct Column {
        Rational p;
        int d1, d2;
    };
    const std::vector<Column> columns = {
        {Rational(1), 4, 4},        {Rational(1, 2), 3, 5}, {Rational(1, 3), 3, 6},
        {Rational(2, 3), 2, 5},     {Rational(1, 2), 2, 6}, {Rational(2, 5), 2, 7}};
    for (std::size_t i = 0; i < columns.size(); ++i) {
        const auto& col = columns[i];
        double p = static_cast<double>(col.p);
        RsrParams params{p, col.d1, col.d2, n};
        std::uint64_t row_seed = derive_stream_seed(seed, 8000 + i);
        EnsembleReport e = run_ensemble(params, trials, row_seed, true, jobs);
        TableRow row;
        row.d = 4;
        row.d1 = col.d1;
        row.d2 = col.d2;
        row.p = p;
        row.actual_n = n;
        row.mu_asympt = mu_rsr(col.p, col.d1, col.d2);
        row.mu_numerics = e.mean;
        row.stddev = e.stddev;
        row.diff_percent = (e.mean - row.mu_asympt) / row.mu_asympt * 100.0;
        row.failures = e.failures;
        row.disconnected = e.disconnected_count;
        row.connected_mean = e.connected_mean;
        t.rows.push_back(row);
    }
    return t;
}

RamanujanReport ramanujan_fraction(int d1, int d2, int n, int trials, std::uint64_t seed,
                                   int jobs) {
    RamanujanReport r;
    r.d1 = d1;
    r.d2 = d2;
    r.trials = trials;
    RsrbParams params = RsrbParams::from_n_nearest(d1, d2, n);
    r.n = params.total_vertices();
    double d_avg = params.average_degree();
    r.threshold = d_avg - 2.0 * std::sqrt(d_avg - 1.0);
    auto outcomes = run_trials(params, trials, seed, true, jobs);
    int ok = 0, counted = 0;
    for (const auto& out : outcomes) {
        if (!out.ok) continue;
        ++counted;
        if (out.ac >= r.threshold) ++ok;
    }
    if (counted == 0) throw std::runtime_error("ramanujan_fraction: every trial failed");
    r.fraction = static_cast<double>(ok) / counted;
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent, rank_;
    int components;
    explicit UnionFind(int n) : parent(n), rank_(n, 0), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        --components;
    }
};

bool connected_subset(const Multigraph& g, const std::vector<char>& present) {
    // BFS over the still-present edges
    std::vector<std::vector<int>> adj(g.n);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!present[e]) continue;
        auto [u, v] = g.edges[e];
        if (u == v) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.n;
}

// deletions until first disconnect, full recomputation per deletion
int deletions_slow(const Multigraph& g, const std::vector<int>& order, bool* isolated) {
    std::vector<char> present(g.edge_count(), 1);
    std::vector<int> deg = degree_sequence(g);
    for (std::size_t k = 0; k < order.size(); ++k) {
        int e = order[k];
        present[e] = 0;
        auto [u, v] = g.edges[e];
        deg[u] -= 1;
        deg[v] -= 1;
        if (!connected_subset(g, present)) {
            if (isolated) *isolated = (deg[u] == 0 || deg[v] == 0);
            return static_cast<int>(k) + 1;
        }
    }
    throw std::logic_error("deletions_slow: graph never disconnected");
}

// same count via union-find on reverse insertion
int deletions_fast(const Multigraph& g, const std::vector<int>& order, bool* isolated) {
    const int m = g.edge_count();
    UnionFind uf(g.n);
    int deletions = -1;
    for (int j = m - 1; j >= 0; --j) {
        auto [u, v] = g.edges[order[j]];
        uf.unite(u, v);
        if (uf.components == 1) {
            deletions = j + 1;  // removing edges order[0..j] disconnects; order[0..j-1] does not
            break;
        }
    }
    if (deletions < 0) throw std::logic_error("deletions_fast: graph never connected");
    if (isolated) {
        auto [u, v] = g.edges[order[deletions - 1]];
        int du = 0, dv = 0;
        for (int j = deletions; j < m; ++j) {
            auto [a, b] = g.edges[order[j]];
            if (a == u || b == u) ++du;
            if (a == v || b == v) ++dv;
        }
        *isolated = (du == 0 || dv == 0);
    }
    return deletions;
}

}  // namespace

int deletions_to_disconnect(const Multigraph& g, const std::vector<int>& deletion_order,
                            bool fast, bool* isolated_vertex) {
    if (static_cast<int>(deletion_order.size()) != g.edge_count())
        throw std::invalid_argument("deletions_to_disconnect: order must cover every edge");
    return fast ? deletions_fast(g, deletion_order, isolated_vertex)
                : deletions_slow(g, deletion_order, isolated_vertex);
}

ReliabilityReport reliability_deletions(const ModelParams& model, int trials,
                                        std::uint64_t seed, int jobs, bool fast) {
    ReliabilityReport r;
    r.model = model_name(model);
    r.n = model_vertex_count(model);
    r.trials = trials;
    r.fast_path = fast;
    std::vector<int> counts(trials);
    std::vector<char> isolated(trials);
    std::atomic<int> resamples{0};
    parallel_for(trials, jobs, [&](int i) {
        RngStream rng = RngStream::for_trial(seed, static_cast<std::uint64_t>(i));
        Multigraph g;
        int attempts = 0;
        for (;;) {
            g = rewire_to_simple(generate(model, rng), rng);
            if (is_connected(g)) break;
            resamples.fetch_add(1);
            if (++attempts >= 100)
                throw std::runtime_error("reliability: initial graph disconnected after 100 resamples");
        }
        std::vector<int> order(g.edge_count());
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        bool iso = false;
        counts[i] = deletions_to_disconnect(g, order, fast, &iso);
        isolated[i] = iso ? 1 : 0;
    });
    double total = 0, iso_total = 0;
    for (int i = 0; i < trials; ++i) {
        total += counts[i];
        iso_total += isolated[i];
    }
    r.mean_deletions = total / trials;
    r.isolated_fraction = iso_total / trials;
    r.resamples = resamples.load();
    return r;
}

DensityReport density_check(int d1, int d2, int n, int trials, std::uint64_t seed,
                            int jobs, int bins) {
    DensityReport r;
    r.d1 = d1;
    r.d2 = d2;
    r.trials = trials;
    RsrbParams params = RsrbParams::from_n_nearest(d1, d2, n);
    r.n = params.total_vertices();
    DensityModel model = make_density_model(d1, d2);
    r.delta_weight = model.delta_weight;

    std::vector<std::vector<double>> trial_values(trials);
    parallel_for(trials, jobs, [&](int i) {
        RngStream rng = RngStream::for_trial(seed, static_cast<std::uint64_t>(i));
        Multigraph g = rewire_to_simple(generate_rsrb(params, rng), rng);
        Spectrum s = eigenvalues_sym(adjacency(g));
        trial_values[i] = std::move(s.values);
    });
    std::vector<double> pooled;
    for (auto& tv : trial_values) pooled.insert(pooled.end(), tv.begin(), tv.end());
    std::sort(pooled.begin(), pooled.end());
    r.pooled = static_cast<long long>(pooled.size());

    auto zero_fraction = [&](double tol) {
        long long c = std::count_if(pooled.begin(), pooled.end(),
                                    [&](double v) { return std::abs(v) <= tol; });
        return static_cast<double>(c) / pooled.size();
    };
    r.zero_fraction_1e8 = zero_fraction(1e-8);
    r.zero_fraction_1e6 = zero_fraction(1e-6);

    // KS against the continuous part, atom excluded: the +-1e-6 window around 0
    // is removed from the sample and the reference CDF renormalized.
    std::vector<double> cont;
    for (double v : pooled)
        if (std::abs(v) > 1e-6) cont.push_back(v);
    const double denom = 1.0 - model.delta_weight;
    double ks = 0.0, acc = 0.0, prev = -model.radii.r_plus - 1.0;
    const double count = static_cast<double>(cont.size());
    for (std::size_t i = 0; i < cont.size(); ++i) {
        acc += rsrb_density_integral(prev, cont[i], model);
        prev = cont[i];
        double f = std::min(acc / denom, 1.0);
        ks = std::max({ks, (i + 1) / count - f, f - i / count});
    }
    r.ks = ks;
    r.histogram = make_histogram(pooled, bins);
    return r;
}

WalkValidationReport walk_validation(int d1, int d2, int n, int trials, int s_max,
                                     std::uint64_t seed, int jobs) {
    if (s_max > 12) throw std::invalid_argument("walk_validation: s_max must be <= 12");
    WalkValidationReport r;
    r.d1 = d1;
    r.d2 = d2;
    r.trials = trials;
    r.s_max = s_max;
    RsrbParams params = RsrbParams::from_n_nearest(d1, d2, n);
    r.n = params.total_vertices();

    std::vector<std::vector<double>> per_trial(trials);
    parallel_for(trials, jobs, [&](int i) {
        RngStream rng = RngStream::for_trial(seed, static_cast<std::uint64_t>(i));
        Multigraph g = rewire_to_simple(generate_rsrb(params, rng), rng);
        per_trial[i] = closed_walk_counts(g, s_max);
    });
    r.empirical.assign(s_max + 1, 0.0);
    for (const auto& tv : per_trial)
        for (int s = 0; s <= s_max; ++s) r.empirical[s] += tv[s] / trials;

    GfSystem sys = builtin_system(GfKind::rsrb, GfParams{d1, d2, Rational(0)});
    auto exact = solve_gf_system_exact(sys, s_max);
    const auto& phi = exact.at("phi");
    r.predicted.resize(s_max + 1);
    for (int s = 0; s <= s_max; ++s) r.predicted[s] = static_cast<double>(phi[s]);

    for (int s = 2; s <= s_max; s += 2) {
        double rel = (r.empirical[s] - r.predicted[s]) / r.predicted[s];
        r.rel_error.push_back(rel);
    }
    return r;
}

// ---------------------------------------------------------------------------
// report serialization

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_doubles(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt17(v[i]);
    }
    return s + "]";
}

std::string json_counts(const std::vector<long long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string json_histogram(const Histogram& h) {
    return "{\"edges\":" + json_doubles(h.edges) + ",\"counts\":" + json_counts(h.counts) + "}";
}

std::string json_params(const ModelParams& m) {
    struct Visitor {
        std::string operator()(const RsrbParams& p) const {
            return "{\"d1\":" + std::to_string(p.d1) + ",\"d2\":" + std::to_string(p.d2) +
                   ",\"n1\":" + std::to_string(p.n1) + ",\"n2\":" + std::to_string(p.n2()) + "}";
        }
        std::string operator()(const RsrParams& p) const {
            return "{\"p\":" + fmt17(p.p) + ",\"d1\":" + std::to_string(p.d1) +
                   ",\"d2\":" + std::to_string(p.d2) + ",\"n\":" + std::to_string(p.n) + "}";
        }
        std::string operator()(const SmallWorldParams& p) const {
            return "{\"n\":" + std::to_string(p.n) + "}";
        }
        std::string operator()(const RegularParams& p) const {
            return "{\"d\":" + std::to_string(p.d) + ",\"n\":" + std::to_string(p.n) + "}";
        }
        std::string operator()(const CompleteBipartiteParams& p) const {
            return "{\"b\":" + std::to_string(p.b) + ",\"n\":" + std::to_string(p.n) + "}";
        }
    };
    return std::visit(Visitor{}, m);
}

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string to_json(const EnsembleReport& r) {
    std::ostringstream out;
    out << "{\"model\":\"" << model_name(r.model) << "\""
        << ",\"params\":" << json_params(r.model)
        << ",\"n\":" << r.n
        << ",\"trials\":" << r.trials
        << ",\"seed\":" << r.seed
        << ",\"simple\":" << (r.simple ? "true" : "false")
        << ",\"values\":" << json_doubles(r.values)
        << ",\"mean\":" << fmt17(r.mean)
        << ",\"std\":" << fmt17(r.stddev)
        << ",\"min\":" << fmt17(r.min)
        << ",\"max\":" << fmt17(r.max)
        << ",\"histogram\":" << json_histogram(r.histogram)
        << ",\"mu_asymptotic\":" << fmt17(r.mu_asymptotic)
        << ",\"diff_percent\":" << fmt17(r.diff_percent)
        << ",\"failures\":" << r.failures
        << ",\"disconnected\":" << r.disconnected_count
        << ",\"connected_mean\":" << fmt17(r.connected_mean)
        << ",\"generated_at\":\"" << timestamp_utc() << "\"}\n";
    return out.str();
}

static std::string table_row_json(const TableRow& r) {
    std::ostringstream out;
    out << "{\"d\":" << r.d << ",\"d1\":" << r.d1 << ",\"d2\":" << r.d2;
    if (r.p >= 0) out << ",\"p\":" << fmt17(r.p);
    out << ",\"n\":" << r.actual_n
        << ",\"mu_asympt\":" << fmt17(r.mu_asympt)
        << ",\"mu_numerics\":" << fmt17(r.mu_numerics)
        << ",\"std\":" << fmt17(r.stddev)
        << ",\"diff_percent\":" << fmt17(r.diff_percent)
        << ",\"failures\":" << r.failures
        << ",\"disconnected\":" << r.disconnected
        << ",\"connected_mean\":" << fmt17(r.connected_mean) << "}";
    return out.str();
}

std::string to_json(const TableReport& r) {
    std::ostringstream out;
    out << "{\"table\":\"" << r.name << "\",\"n\":" << r.n << ",\"trials\":" << r.trials
        << ",\"seed\":" << r.seed << ",\"rows\":[";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (i) out << ",";
        out << table_row_json(r.rows[i]);
    }
    out << "],\"generated_at\":\"" << timestamp_utc() << "\"}\n";
    return out.str();
}

std::string to_json(const RamanujanReport& r) {
    std::ostringstream out;
    out << "{\"experiment\":\"ramanujan\",\"d1\":" << r.d1 << ",\"d2\":" << r.d2
        << ",\"n\":" << r.n << ",\"trials\":" << r.trials
        << ",\"threshold\":" << fmt17(r.threshold)
        << ",\"fraction\":" << fmt17(r.fraction)
        << ",\"generated_at\":\"" << timestamp_utc() << "\"}\n";
    return out.str();
}

std::string to_json(const ReliabilityReport& r) {
    std::ostringstream out;
    out << "{\"experiment\":\"reliability\",\"model\":\"" << r.model << "\",\"n\":" << r.n
        << ",\"trials\":" << r.trials
        << ",\"mean_deletions\":" << fmt17(r.mean_deletions)
        << ",\"isolated_fraction\":" << fmt17(r.isolated_fraction)
        << ",\"resamples\":" << r.resamples
        << ",\"fast_path\":" << (r.fast_path ? "true" : "false")
        << ",\"generated_at\":\"" << timestamp_utc() << "\"}\n";
    return out.str();
}

std::string to_json(const DensityReport& r) {
    std::ostringstream out;
    out << "{\"experiment\":\"density\",\"d1\":" << r.d1 << ",\"d2\":" << r.d2
        << ",\"n\":" << r.n << ",\"trials\":" << r.trials << ",\"pooled\":" << r.pooled
        << ",\"ks\":" << fmt17(r.ks)
        << ",\"zero_fraction_1e8\":" << fmt17(r.zero_fraction_1e8)
        << ",\"zero_fraction_1e6\":" << fmt17(r.zero_fraction_1e6)
        << ",\"delta_weight\":" << fmt17(r.delta_weight)
        << ",\"histogram\":" << json_histogram(r.histogram)
        << ",\"generated_at\":\"" << timestamp_utc() << "\"}\n";
    return out.str();
}

std::string to_json(const WalkValidationReport& r) {
    std::ostringstream out;
    out << "{\"experiment\":\"walks\",\"d1\":" << r.d1 << ",\"d2\":" << r.d2
        << ",\"n\":" << r.n << ",\"trials\":" << r.trials << ",\"s_max\":" << r.s_max
        << ",\"empirical\":" << json_doubles(r.empirical)
        << ",\"predicted\":" << json_doubles(r.predicted)
        << ",\"rel_error\":" << json_doubles(r.rel_error)
        << ",\"generated_at\":\"" << timestamp_utc() << "\"}\n";
    return out.str();
}

std::string to_csv(const EnsembleReport& r) {
    std::string s = "trial_value\n";
    for (double v : r.values) s += fmt17(v) + "\n";
    return s;
}

std::string to_csv(const TableReport& r) {
    std::string s = "d,d1,d2,p,n,mu_asympt,mu_numerics,std,diff_percent,failures,disconnected,connected_mean\n";
    for (const auto& row : r.rows) {
        s += std::to_string(row.d) + "," + std::to_string(row.d1) + "," +
             std::to_string(row.d2) + ",";
        s += row.p >= 0 ? fmt17(row.p) : "";
        s += "," + std::to_string(row.actual_n) + "," + fmt17(row.mu_asympt) + "," +
             fmt17(row.mu_numerics) + "," + fmt17(row.stddev) + "," +
             fmt17(row.diff_percent) + "," + std::to_string(row.failures) + "," +
             std::to_string(row.disconnected) + "," + fmt17(row.connected_mean) + "\n";
    }
    return s;
}

}  // namespace semireg
