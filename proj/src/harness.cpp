#include "qconn/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qconn/instances.hpp"
#include "qconn/ledger.hpp"
#include "qconn/quantum_connectivity.hpp"
#include "qconn/rng.hpp"

namespace qconn {

namespace {

const std::array<const char*, 7> kFamilies = {
    "one-cycle", "two-cycle", "gnp", "gnp-directed", "gnm", "parity", "gadget",
};

const std::array<const char*, 5> kAlgorithms = {
    "q_connected",         "q_connected_learning",        "q_strongly_connected",
    "classical_connected", "classical_strongly_connected",
};

[[noreturn]] void config_error(const std::string& what) {
    throw std::runtime_error("config error: " + what);
}

std::vector<std::uint8_t> random_bits(std::uint32_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.below(2));
    return bits;
}

} // namespace

bool known_family(const std::string& name) {
    return std::find(kFamilies.begin(), kFamilies.end(), name) != kFamilies.end();
}

bool known_algorithm(const std::string& name) {
    return std::find(kAlgorithms.begin(), kAlgorithms.end(), name) != kAlgorithms.end();
}

std::vector<std::string> family_names() {
    return {kFamilies.begin(), kFamilies.end()};
}

std::vector<std::string> algorithm_names() {
    return {kAlgorithms.begin(), kAlgorithms.end()};
}

GraphFile make_instance(const std::string& family, std::uint32_t n, std::uint32_t k,
                        std::uint64_t seed) {
    if (family == "one-cycle")
        return gen_cycle_instance({n, CycleVariant::OneCycle, 0, 0, seed});
    if (family == "two-cycle")
        return gen_cycle_instance({n, CycleVariant::TwoCycle, 0, 0, seed});
    if (family == "gnp") return gen_random_matrix(n, 0.5, false, seed);
    if (family == "gnp-directed") return gen_random_matrix(n, 0.5, true, seed);
    if (family == "gnm") return gen_gnm_matrix(n, k, seed);
    if (family == "parity") {
        if (n < 2 || n % 2) throw std::invalid_argument("parity family needs even n >= 2");
        return gen_parity_graph({random_bits(n / 2, mix_seed(seed, 0xb175))});
    }
    if (family == "gadget") {
        if (k < 2 || n <= k || (n - k) % 2)
            throw std::invalid_argument("gadget family needs n = 2p + k, k >= 2");
        GadgetSpec s;
        s.x = random_bits((n - k) / 2, mix_seed(seed, 0xb175));
        // pin odd parity so every instance is strongly connected: scaling sweeps
        // need one truth value per point, or the query median straddles the
        // cheap bail-out mode and the full two-stage mode
        if (!parity_of(s.x)) s.x[0] ^= 1;
        s.k = k;
        s.seed = mix_seed(seed, 0x51075);
        return gen_origin_gadget(s);
    }
    throw std::invalid_argument("unknown family: " + family);
}

void SweepConfig::validate() const {
    if (!known_algorithm(algorithm)) config_error("unknown algorithm: " + algorithm);
    if (!known_family(family)) config_error("unknown family: " + family);
    if (ns.empty()) config_error("empty n list");
    if (ks.empty()) config_error("empty k list");
    if (trials < 1) config_error("trials must be >= 1");
    if (pair && ns.size() != ks.size()) config_error("pair=1 needs n and k lists of equal length");
    grover.validate();
    bool list_model = family == "parity" || family == "gadget";
    bool undirected = family == "one-cycle" || family == "two-cycle" || family == "gnp" ||
                      family == "gnm";
    if ((algorithm == "q_connected" || algorithm == "q_connected_learning" ||
         algorithm == "classical_connected") &&
        !undirected)
        config_error(algorithm + " needs an undirected matrix family");
    if (algorithm == "q_connected_learning" && family != "gnm")
        config_error("q_connected_learning needs the exact-edge-count family gnm");
    (void)list_model;
}

namespace {

std::vector<std::uint32_t> parse_u32_list(const std::string& value, const std::string& key) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
            config_error("bad value for " + key + ": " + item);
        }
    }
    if (out.empty()) config_error("empty list for " + key);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) config_error("expected key=value, got: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "algorithm") cfg.algorithm = value;
        else if (key == "family") cfg.family = value;
        else if (key == "n") cfg.ns = parse_u32_list(value, key);
        else if (key == "k") cfg.ks = parse_u32_list(value, key);
        else if (key == "pair") cfg.pair = value == "1";
        else if (key == "trials") cfg.trials = parse_u32_list(value, key)[0];
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "lambda") cfg.grover.bbht_lambda = std::stod(value);
        else if (key == "cutoff_factor") cfg.grover.bbht_cutoff_factor = std::stod(value);
        else if (key == "budget_factor") cfg.grover.min_budget_factor = std::stod(value);
        else if (key == "boost") {
            if (value == "log2") cfg.grover.boost = BoostPolicy::Log2;
            else if (value == "sqrtlog2") cfg.grover.boost = BoostPolicy::SqrtLog2;
            else config_error("boost must be log2 or sqrtlog2");
        }
        else if (key == "out") cfg.out_csv = value;
        else if (key == "report") cfg.report_json = value;
        else if (key == "fit") cfg.fit_x = value;
        else config_error("unknown config key: " + key);
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    return parse_sweep_config(in);
}

namespace {

bool ground_truth(const std::string& algorithm, const GraphFile& gf) {
    QueryLedger scratch;
    bool strong = algorithm == "q_strongly_connected" ||
                  algorithm == "classical_strongly_connected";
    if (const auto* m = std::get_if<MatrixGraph>(&gf)) {
        return strong ? classical_strongly_connected(*m, scratch)
                      : classical_connected(*m, scratch);
    }
    const auto& l = std::get<ListGraph>(gf);
    if (!strong) throw std::invalid_argument("undirected connectivity needs the matrix model");
    return classical_strongly_connected(l, scratch);
}

struct RunOutcome {
    bool answer = false;
    std::uint64_t queries = 0;
};

RunOutcome run_algorithm(const std::string& algorithm, const GraphFile& gf,
                         const GroverConfig& cfg, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0xa15ead));
    const auto* m = std::get_if<MatrixGraph>(&gf);
    bool needs_matrix = algorithm == "q_connected" || algorithm == "q_connected_learning" ||
                        algorithm == "classical_connected";
    if (needs_matrix && !m)
        throw std::invalid_argument(algorithm + " needs a matrix-model graph");
    if (algorithm == "q_connected") {
        auto rep = q_connected(*m, cfg, rng);
        return {rep.answer, rep.queries};
    }
    if (algorithm == "q_connected_learning") {
        auto rep = q_connected_learning(*m, m->cell_count(), cfg, rng);
        return {rep.answer, rep.queries};
    }
    if (algorithm == "q_strongly_connected") {
        auto rep = m ? q_strongly_connected_matrix(*m, cfg, rng)
                     : q_strongly_connected_list(std::get<ListGraph>(gf), cfg, rng);
        return {rep.answer, rep.queries};
    }
    QueryLedger ledger;
    if (algorithm == "classical_connected")
        return {classical_connected(*m, ledger), ledger.count()};
    if (algorithm == "classical_strongly_connected") {
        bool ans = m ? classical_strongly_connected(*m, ledger)
                     : classical_strongly_connected(std::get<ListGraph>(gf), ledger);
        return {ans, ledger.count()};
    }
    throw std::invalid_argument("unknown algorithm: " + algorithm);
}

} // namespace

SingleRun run_single(const std::string& algorithm, const GraphFile& g, const GroverConfig& cfg,
                     std::uint64_t seed) {
    SingleRun out;
    out.truth = ground_truth(algorithm, g);
    RunOutcome run = run_algorithm(algorithm, g, cfg, seed);
    out.answer = run.answer;
    out.queries = run.queries;
    return out;
}

std::vector<TrialRecord> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
    if (cfg.pair) {
        for (std::size_t i = 0; i < cfg.ns.size(); ++i) points.emplace_back(cfg.ns[i], cfg.ks[i]);
    } else {
        for (auto n : cfg.ns)
            for (auto k : cfg.ks) points.emplace_back(n, k);
    }

    std::vector<TrialRecord> records;
    records.reserve(points.size() * cfg.trials);
    for (auto [n, k] : points) {
        for (std::uint32_t trial = 0; trial < cfg.trials; ++trial) {
            std::uint64_t seed = derive_seed(cfg.seed, n, k, trial);
            GraphFile gf = make_instance(cfg.family, n, k, seed);

            TrialRecord rec;
            rec.algorithm = cfg.algorithm;
            rec.model = std::holds_alternative<MatrixGraph>(gf) ? "matrix" : "list";
            rec.family = cfg.family;
            rec.n = n;
            rec.k = k;
            rec.trial = trial;
            rec.seed = seed;
            rec.truth = ground_truth(cfg.algorithm, gf);

            auto t0 = std::chrono::steady_clock::now();
            RunOutcome out = run_algorithm(cfg.algorithm, gf, cfg.grover, seed);
            auto t1 = std::chrono::steady_clock::now();
            rec.answer = out.answer;
            rec.queries = out.queries;
            rec.correct = rec.answer == rec.truth;
            rec.ms = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
            records.push_back(std::move(rec));
        }
    }
    return records;
}

FitResult fit_loglog(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("need at least 3 points for a fit");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<std::pair<double, double>> logs;
    for (auto [x, y] : points) {
        if (x <= 0 || y <= 0) throw std::invalid_argument("log-log fit needs positive data");
        logs.emplace_back(std::log(x), std::log(y));
    }
    for (auto [lx, ly] : logs) {
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double np = static_cast<double>(logs.size());
    const double denom = np * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) throw std::invalid_argument("degenerate x values in fit");
    FitResult fit;
    fit.slope = (np * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / np;
    double ss = 0;
    for (auto [lx, ly] : logs) {
        double r = ly - (fit.slope * lx + fit.intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / np);
    fit.points = static_cast<std::uint32_t>(logs.size());
    return fit;
}

FitResult fit_exponent(const std::vector<TrialRecord>& records, const std::string& x_field) {
    bool use_k = x_field == "k" || x_field == "m";
    if (!use_k && x_field != "n") throw std::invalid_argument("x field must be n, k, or m");
    std::map<std::uint32_t, std::vector<double>> groups;
    for (const auto& r : records) groups[use_k ? r.k : r.n].push_back(static_cast<double>(r.queries));
    if (groups.size() < 3) throw std::invalid_argument("need at least 3 distinct x values");
    std::vector<std::pair<double, double>> points;
    for (auto& [x, ys] : groups) {
        std::sort(ys.begin(), ys.end());
        std::size_t h = ys.size() / 2;
        double median = ys.size() % 2 ? ys[h] : 0.5 * (ys[h - 1] + ys[h]);
        points.emplace_back(static_cast<double>(x), median);
    }
    return fit_loglog(points);
}

void emit_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
    out << "algorithm,model,family,n,k,trial,seed,queries,answer,truth,correct,ms\n";
    for (const auto& r : records) {
        out << r.algorithm << ',' << r.model << ',' << r.family << ',' << r.n << ',' << r.k
            << ',' << r.trial << ',' << r.seed << ',' << r.queries << ',' << int(r.answer)
            << ',' << int(r.truth) << ',' << int(r.correct) << ',' << r.ms << '\n';
    }
}

std::string csv_string(const std::vector<TrialRecord>& records) {
    std::ostringstream ss;
    emit_csv(records, ss);
    return ss.str();
}

void emit_csv_file(const std::vector<TrialRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    emit_csv(records, out);
}

std::vector<TrialRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        trim(line) != "algorithm,model,family,n,k,trial,seed,queries,answer,truth,correct,ms")
        throw std::runtime_error("bad CSV header");
    std::vector<TrialRecord> out;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string f[12];
        for (int i = 0; i < 12; ++i)
            if (!std::getline(ss, f[i], ',')) throw std::runtime_error("short CSV row: " + line);
        TrialRecord r;
        r.algorithm = f[0];
        r.model = f[1];
        r.family = f[2];
        r.n = static_cast<std::uint32_t>(std::stoul(f[3]));
        r.k = static_cast<std::uint32_t>(std::stoul(f[4]));
        r.trial = static_cast<std::uint32_t>(std::stoul(f[5]));
        r.seed = std::stoull(f[6]);
        r.queries = std::stoull(f[7]);
        r.answer = f[8] == "1";
        r.truth = f[9] == "1";
        r.correct = f[10] == "1";
        r.ms = std::stoull(f[11]);
        out.push_back(std::move(r));
    }
    return out;
}

std::string report_json(const FitResult& fit) {
    nlohmann::json j;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["residual"] = fit.residual;
    j["n_points"] = fit.points;
    return j.dump(2) + "\n";
}

void emit_report(const FitResult& fit, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << report_json(fit);
}

double correct_fraction(const std::vector<TrialRecord>& records) {
    if (records.empty()) return 1.0;
    std::size_t good = 0;
    for (const auto& r : records) good += r.correct;
    return static_cast<double>(good) / static_cast<double>(records.size());
}

} // namespace qconn
