#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semireg/generators.hpp"
#include "semireg/spectra.hpp"

namespace semireg {

struct Histogram {
    std::vector<double> edges;       // bins+1 edges
    std::vector<long long> counts;   // bins
};

Histogram make_histogram(const std::vector<double>& values, int bins);

struct EnsembleReport {
    ModelParams model;
    int n = 0;            // actual vertex count
    int trials = 0;
    std::uint64_t seed = 0;
    bool simple = true;
    std::vector<double> values;  // per successful trial, trial order
    double mean = 0, stddev = 0, min = 0, max = 0;
    Histogram histogram;
    double mu_asymptotic = 0;
    double diff_percent = 0;
    int failures = 0;             // rewiring failures (trial dropped)
    int disconnected_count = 0;   // connected==false among successes
    double connected_mean = 0;    // mean over connected samples only
};

EnsembleReport run_ensemble(const ModelParams& model, int trials, std::uint64_t seed,
                            bool simple, int jobs, int bins = 80);

struct TableRow {
    int d = 0;
    int d1 = 0, d2 = 0;
    double p = -1;  // RSR only
    int actual_n = 0;
    double mu_asympt = 0;
    double mu_numerics = 0;
    double stddev = 0;
    double diff_percent = 0;
    int failures = 0;
    int disconnected = 0;
    double connected_mean = 0;
};

struct TableReport {
    std::string name;
    int n = 0, trials = 0;
    std::uint64_t seed = 0;
    std::vector<TableRow> rows;
};

// One row per integer_pairs(d), d = 3..8, at the nearest feasible sizes to n.
TableReport reproduce_rsrb_table(int n, int trials, std::uint64_t seed, int jobs);

// The six fixed average-degree-4 mixed-model columns.
TableReport reproduce_rsr_table(int n, int trials, std::uint64_t seed, int jobs);

struct RamanujanReport {
    int d1 = 0, d2 = 0, n = 0, trials = 0;
    double threshold = 0;  // d_avg - 2 sqrt(d_avg - 1)
    double fraction = 0;   // AC >= threshold
};

RamanujanReport ramanujan_fraction(int d1, int d2, int n, int trials, std::uint64_t seed,
                                   int jobs);

struct ReliabilityReport {
    std::string model;
    int n = 0, trials = 0;
    double mean_deletions = 0;
    double isolated_fraction = 0;  // disconnection exposed an isolated vertex
    int resamples = 0;             // initial graphs rejected as disconnected
    bool fast_path = false;
};

// Deletions to disconnect, averaged over trials. fast=false recomputes
// connectivity per deletion; fast=true replays the same deletion order with
// union-find on reverse insertion. Both produce identical counts.
ReliabilityReport reliability_deletions(const ModelParams& model, int trials,
                                        std::uint64_t seed, int jobs, bool fast = false);

// Number of deletions, following deletion_order, until the graph first
// disconnects. isolated_vertex (when non-null) reports whether the
// disconnecting deletion left a degree-0 vertex.
int deletions_to_disconnect(const Multigraph& g, const std::vector<int>& deletion_order,
                            bool fast, bool* isolated_vertex = nullptr);

struct DensityReport {
    int d1 = 0, d2 = 0, n = 0, trials = 0;
    long long pooled = 0;
    double ks = 0;                  // atom excluded, continuous part renormalized
    double zero_fraction_1e8 = 0;
    double zero_fraction_1e6 = 0;
    double delta_weight = 0;
    Histogram histogram;
};

DensityReport density_check(int d1, int d2, int n, int trials, std::uint64_t seed,
                            int jobs, int bins = 80);

struct WalkValidationReport {
    int d1 = 0, d2 = 0, n = 0, trials = 0, s_max = 0;
    std::vector<double> empirical;   // trial-averaged phi_s
    std::vector<double> predicted;   // generating-function coefficients
    std::vector<double> rel_error;   // per even s >= 2
};

WalkValidationReport walk_validation(int d1, int d2, int n, int trials, int s_max,
                                     std::uint64_t seed, int jobs);

// Reports as JSON (stable field order, 17 significant digits) and CSV.
std::string to_json(const EnsembleReport& r);
std::string to_json(const TableReport& r);
std::string to_json(const RamanujanReport& r);
std::string to_json(const ReliabilityReport& r);
std::string to_json(const DensityReport& r);
std::string to_json(const WalkValidationReport& r);
std::string to_csv(const EnsembleReport& r);
std::string to_csv(const TableReport& r);

// run fn(i) for i in [0, count) on up to `jobs` threads; any exception rethrown
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

int default_jobs();

}  // namespace semireg
