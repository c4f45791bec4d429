// Copyright 2026 The qmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include "qmine/chain.hpp"
#include "qmine/errors.hpp"
#include "qmine/estimate.hpp"
#include "qmine/kernels.hpp"
#include "qmine/miner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace qmine::cli {

std::string format_float(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

enum class Mode { classical, quantum, both };

struct RunConfig {
    unsigned n = 4;
    unsigned m = 8;
    unsigned rounds = 2;
    std::optional<unsigned> zeros; // unset means auto
    bool auto_zeros = false;
    std::uint64_t seed = 1;
    Mode mode = Mode::both;
    bool exact = false;
    bool true_chi = false;
    bool out_of_place = false;
    std::string prev_hex;
    std::string payload_hex = "0";
    std::uint64_t timestamp = 0;
    std::optional<std::uint64_t> solutions;
    std::optional<std::uint64_t> target_solutions;
    unsigned max_rounds = 8;
    unsigned qubit_cap = StateVector::default_qubit_cap;
    std::optional<std::uint64_t> k_max;
    std::string chain_file;
    std::string csv_out;
    std::string dump_circuit;

    // estimate
    unsigned estimate_n = 48;
    double hash_rate = 7.0e6;
    double gate_time = 1.0e-9;
    double gates_per_iteration = 1.0;
    bool measured = false;
};

const std::map<std::string, Mode> mode_names{
    {"classical", Mode::classical}, {"quantum", Mode::quantum}, {"both", Mode::both}};

/// Flags registered for one subcommand plus the JSON config keys they own.
class Options {
  public:
    Options(CLI::App &app, RunConfig &cfg) : app_(app), cfg_(cfg) {}

    template <class T>
    void add(const std::string &flag, T &field, const std::string &help) {
        CLI::Option *opt = app_.add_option(flag, field, help);
        bind(flag, opt, [&field](const nlohmann::json &j) { field = j.get<T>(); });
    }

    template <class T>
    void add(const std::string &flag, std::optional<T> &field, const std::string &help) {
        CLI::Option *opt = app_.add_option(flag, field, help);
        bind(flag, opt, [&field](const nlohmann::json &j) { field = j.get<T>(); });
    }

    void add_flag(const std::string &flag, bool &field, const std::string &help) {
        CLI::Option *opt = app_.add_flag(flag, field, help);
        bind(flag, opt, [&field](const nlohmann::json &j) { field = j.get<bool>(); });
    }

    void add_mode() {
        CLI::Option *opt = app_.add_option("--mode", cfg_.mode, "classical | quantum | both")
                               ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
        bind("--mode", opt, [this](const nlohmann::json &j) {
            const auto it = mode_names.find(j.get<std::string>());
            if (it == mode_names.end()) {
                throw ArgumentError("config: unknown mode '" + j.get<std::string>() + "'");
            }
            cfg_.mode = it->second;
        });
    }

    void add_config() {
        app_.add_option("--config", config_path_, "JSON config file; flags override it")
            ->check(CLI::ExistingFile);
    }

    /// Fills every option not given on the command line from the config file.
    void apply_config() const {
        if (config_path_.empty()) {
            return;
        }
        std::ifstream in(config_path_);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw ArgumentError("config " + config_path_ + ": " + e.what());
        }
        if (!j.is_object()) {
            throw ArgumentError("config " + config_path_ + ": expected a JSON object");
        }
        for (const auto &[key, value] : j.items()) {
            const auto it = bindings_.find(key);
            if (it == bindings_.end()) {
                throw ArgumentError("config " + config_path_ + ": unknown key '" + key + "'");
            }
            if (it->second.option->count() == 0) {
                try {
                    it->second.set(value);
                } catch (const nlohmann::json::exception &e) {
                    throw ArgumentError("config key '" + key + "': " + e.what());
                }
            }
        }
    }

  private:
    struct Binding {
        CLI::Option *option;
        std::function<void(const nlohmann::json &)> set;
    };

    void bind(const std::string &flag, CLI::Option *opt,
              std::function<void(const nlohmann::json &)> set) {
        std::string key = flag.substr(2);
        std::replace(key.begin(), key.end(), '-', '_');
        bindings_[key] = {opt, std::move(set)};
    }

    CLI::App &app_;
    RunConfig &cfg_;
    std::string config_path_;
    std::map<std::string, Binding> bindings_;
};

void add_problem_options(Options &o, RunConfig &cfg) {
    o.add("--n", cfg.n, "nonce bits");
    o.add("--m", cfg.m, "hash width in bits (4..16)");
    o.add("--rounds", cfg.rounds, "permutation rounds (1..8)");
    o.add("--zeros", cfg.zeros, "required leading zero bits (default: --auto-zeros)");
    o.add_flag("--auto-zeros", cfg.auto_zeros, "derive zeros as n + 1");
    o.add("--seed", cfg.seed, "measurement RNG seed");
    o.add_flag("--exact", cfg.exact, "read out the most probable nonce instead of sampling");
    o.add_flag("--true-chi", cfg.true_chi, "use the negated-control chi layer");
    o.add_flag("--out-of-place", cfg.out_of_place,
               "hash with a service register (m <= 4, rounds = 1)");
    o.add("--prev", cfg.prev_hex, "previous block digest, hex (default: chain tip or 0)");
    o.add("--payload", cfg.payload_hex, "payload digest, hex");
    o.add("--timestamp", cfg.timestamp, "header timestamp");
    o.add("--qubit-cap", cfg.qubit_cap, "simulator qubit cap");
    o.add("--csv-out", cfg.csv_out, "CSV output path");
    o.add("--dump-circuit", cfg.dump_circuit, "write the hash/oracle/diffusion circuits here");
    o.add_config();
}

struct Problem {
    HashParams hash;
    unsigned zeros = 0;
    BlockHeader header;
    RegisterLayout layout;
};

Problem resolve_problem(const RunConfig &cfg, const BitString *tip = nullptr) {
    Problem p;
    p.hash = {cfg.m, cfg.rounds, cfg.true_chi};
    p.hash.validate();
    if (cfg.n == 0 || cfg.n > cfg.m) {
        throw ArgumentError("nonce bits must be in [1, m] (n=" + std::to_string(cfg.n) +
                            ", m=" + std::to_string(cfg.m) + ")");
    }
    if (cfg.zeros && !cfg.auto_zeros) {
        p.zeros = *cfg.zeros;
    } else {
        p.zeros = compute_required_zeros(cfg.n, cfg.m);
    }
    if (p.zeros > cfg.m) {
        throw ArgumentError("zeros exceed hash width");
    }
    p.header.prev_digest = tip != nullptr          ? *tip
                           : cfg.prev_hex.empty() ? BitString::zeros(cfg.m)
                                                   : BitString::from_hex(cfg.prev_hex, cfg.m);
    p.header.payload_digest = BitString::from_hex(cfg.payload_hex, cfg.m);
    p.header.timestamp = cfg.timestamp;
    p.header.difficulty_zeros = p.zeros;
    p.layout = RegisterLayout::make(cfg.n, cfg.m, cfg.out_of_place ? cfg.m : 0);
    return p;
}

MiningParams mining_params(const RunConfig &cfg, const Problem &p) {
    MiningParams mp;
    mp.difficulty_zeros = p.zeros;
    mp.hash_params = p.hash;
    mp.max_grover_rounds = cfg.max_rounds;
    mp.solution_count_hint = cfg.solutions;
    mp.rng_seed = cfg.seed;
    mp.exact_readout = cfg.exact;
    mp.out_of_place_hash = cfg.out_of_place;
    mp.qubit_cap = cfg.qubit_cap;
    return mp;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw ArgumentError("cannot write " + path);
    }
    out << text;
}

void dump_circuits(const std::string &path, const Problem &p, const MiningParams &mp) {
    const auto blocks = serialize_header(p.header, p.hash);
    const GroverCircuits gc = build_grover_circuits(p.layout, blocks, mp);
    write_file(path, gc.hash.dump() + gc.oracle.dump() + gc.diffusion.dump());
}

void print_result(std::ostream &out, const char *miner, const MiningResult &r, unsigned n) {
    out << miner << " miner\n";
    out << "  success:        " << (r.success ? "yes" : "no") << "\n";
    out << "  nonce:          " << r.nonce << " (0b"
        << BitString::truncate(r.nonce, std::max(1U, n)).to_binary() << ")\n";
    out << "  digest:         0x" << r.digest.to_hex() << " (" << r.digest.to_binary() << ")\n";
    out << "  hashes tried:   " << r.hashes_tried << "\n";
    if (std::string_view(miner) == "quantum") {
        out << "  iterations:     " << r.grover_iterations_used << "\n";
        out << "  rounds:         " << r.measurement_rounds << "\n";
        out << "  success prob:   " << format_float(r.success_probability_at_measurement) << "\n";
        out << "  gates:          " << r.total_gates << " (H " << r.gate_stats.count(GateKind::h)
            << ", X " << r.gate_stats.count(GateKind::x) << ", SWAP "
            << r.gate_stats.count(GateKind::swap) << ", MCX " << r.gate_stats.count(GateKind::mcx)
            << ")\n";
    }
}

int cmd_mine(const RunConfig &cfg, std::ostream &out) {
    std::optional<Chain> chain;
    if (!cfg.chain_file.empty() && std::filesystem::exists(cfg.chain_file)) {
        chain = Chain::load(cfg.chain_file);
        const ChainParams want{{cfg.m, cfg.rounds, cfg.true_chi}, cfg.n};
        if (!(chain->params == want)) {
            throw ArgumentError("chain file parameters do not match --n/--m/--rounds/--true-chi");
        }
    }
    const BitString tip = chain ? chain->tip_digest() : BitString{};
    const Problem p = resolve_problem(cfg, chain ? &tip : nullptr);
    const MiningParams mp = mining_params(cfg, p);
    const auto blocks = serialize_header(p.header, p.hash);

    if (!cfg.dump_circuit.empty()) {
        dump_circuits(cfg.dump_circuit, p, mp);
    }

    out << "n=" << cfg.n << " m=" << cfg.m << " rounds=" << cfg.rounds << " zeros=" << p.zeros
        << " kernels=" << kernels::active().name << "\n";

    std::optional<MiningResult> classical;
    std::optional<MiningResult> quantum;
    if (cfg.mode != Mode::quantum) {
        classical = mine_classical(blocks, cfg.n, mp);
        print_result(out, "classical", *classical, cfg.n);
    }
    if (cfg.mode != Mode::classical) {
        quantum = mine_quantum(blocks, p.layout, mp);
        print_result(out, "quantum", *quantum, cfg.n);
    }
    if (classical && quantum && quantum->success) {
        const auto set = solution_set(blocks, cfg.n, p.zeros, p.hash);
        const bool member = std::binary_search(set.begin(), set.end(), quantum->nonce);
        out << "agreement: quantum nonce " << (member ? "is" : "is NOT")
            << " in the classical solution set (" << set.size() << " solutions)\n";
    }

    if (!cfg.csv_out.empty()) {
        std::string csv = "miner,nonce,digest,success,iterations,hashes_tried,total_gates,"
                          "success_probability\n";
        auto row = [&](const char *name, const MiningResult &r) {
            csv += std::string(name) + "," + std::to_string(r.nonce) + "," + r.digest.to_hex() +
                   "," + (r.success ? "1" : "0") + "," + std::to_string(r.grover_iterations_used) +
                   "," + std::to_string(r.hashes_tried) + "," + std::to_string(r.total_gates) +
                   "," + format_float(r.success_probability_at_measurement) + "\n";
        };
        if (classical) {
            row("classical", *classical);
        }
        if (quantum) {
            row("quantum", *quantum);
        }
        write_file(cfg.csv_out, csv);
    }

    const bool ok = (!classical || classical->success) && (!quantum || quantum->success);
    if (!ok) {
        out << "mining budget exhausted\n";
        return exit_exhausted;
    }
    if (!cfg.chain_file.empty()) {
        if (!chain) {
            chain = Chain{{p.hash, cfg.n}, {}};
        }
        BlockHeader header = p.header;
        header.nonce = quantum ? quantum->nonce : classical->nonce;
        chain->blocks.push_back(seal_block(header, p.hash));
        chain->save(cfg.chain_file);
        out << "appended block " << chain->blocks.size() - 1 << " to " << cfg.chain_file << "\n";
    }
    return exit_ok;
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    Problem p = resolve_problem(cfg);
    if (cfg.target_solutions) {
        const auto found = find_header_with_solutions(p.header, *cfg.target_solutions,
                                                      {p.hash, cfg.n});
        if (!found) {
            throw ArgumentError("no header with exactly " + std::to_string(*cfg.target_solutions) +
                                " solutions found near timestamp " +
                                std::to_string(cfg.timestamp));
        }
        p.header = *found;
    }
    const MiningParams mp = mining_params(cfg, p);
    const auto blocks = serialize_header(p.header, p.hash);
    if (!cfg.dump_circuit.empty()) {
        dump_circuits(cfg.dump_circuit, p, mp);
    }
    const auto solutions = solution_set(blocks, cfg.n, p.zeros, p.hash);
    const std::uint64_t count = solutions.size();
    const std::uint64_t k_max =
        cfg.k_max ? *cfg.k_max : (count > 0 ? 2 * iteration_count(cfg.n, count) + 1 : 4);

    err << "sweep: n=" << cfg.n << " m=" << cfg.m << " rounds=" << cfg.rounds
        << " zeros=" << p.zeros << " timestamp=" << p.header.timestamp << " solutions=" << count
        << "\n";

    const GroverCircuits gc = build_grover_circuits(p.layout, blocks, mp);
    StateVector state(p.layout.total_qubits(), cfg.qubit_cap);
    prepare(state, p.layout);
    std::string csv = "k,simulated_p,analytic_p,abs_diff\n";
    double worst = 0.0;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        if (k > 0) {
            grover_iteration(state, gc);
        }
        const double sim = nonce_set_probability(state, p.layout, solutions);
        const double ana = count > 0 ? analytic_success_probability(cfg.n, count, k) : 0.0;
        const double diff = std::abs(sim - ana);
        worst = std::max(worst, diff);
        csv += std::to_string(k) + "," + format_float(sim) + "," + format_float(ana) + "," +
               format_float(diff) + "\n";
    }
    if (cfg.csv_out.empty()) {
        out << csv;
    } else {
        write_file(cfg.csv_out, csv);
    }
    if (!(worst < 1e-9)) {
        err << "sweep: simulated and analytic curves differ by " << format_float(worst) << "\n";
        return exit_check_failed;
    }
    return exit_ok;
}

int cmd_estimate(const RunConfig &cfg, std::ostream &out) {
    ResourceAssumptions a{cfg.hash_rate, cfg.gate_time, cfg.gates_per_iteration};
    if (cfg.measured) {
        const HashParams hp{cfg.m, cfg.rounds, cfg.true_chi};
        hp.validate();
        const unsigned sim_nonce = std::min(cfg.estimate_n, cfg.m);
        const RegisterLayout layout = RegisterLayout::make(sim_nonce, cfg.m);
        MiningParams mp;
        mp.hash_params = hp;
        mp.difficulty_zeros = sim_nonce < cfg.m ? compute_required_zeros(sim_nonce, cfg.m) : cfg.m;
        const std::vector<BitString> header(4, BitString::zeros(cfg.m));
        const GroverCircuits gc = build_grover_circuits(layout, header, mp);
        StateVector state(layout.total_qubits(), cfg.qubit_cap);
        prepare(state, layout);
        GateStats stats;
        grover_iteration(state, gc, &stats);
        a.gates_per_iteration = static_cast<double>(stats.total);
        out << "measured gates per iteration: " << stats.total << " (toy hash m=" << cfg.m
            << " rounds=" << cfg.rounds << ", " << sim_nonce << " nonce qubits simulated)\n";
    }
    const ResourceEstimate e = estimate_resources(cfg.estimate_n, a);
    out << "assumptions: hash_rate=" << format_float(a.hash_rate)
        << "/s gate_time=" << format_float(a.gate_time)
        << "s gates_per_iteration=" << format_float(a.gates_per_iteration) << "\n";
    out << "classical hashes:    " << format_float(e.classical_hashes) << "\n";
    out << "classical seconds:   " << format_float(e.classical_seconds) << "\n";
    out << "classical hours:     " << format_float(e.classical_hours) << "\n";
    out << "classical days:      " << format_float(e.classical_days) << "\n";
    out << "quantum iterations:  " << e.quantum_iterations << "\n";
    out << "quantum gates:       " << format_float(e.quantum_gate_count) << "\n";
    out << "quantum seconds:     " << format_float(e.quantum_seconds) << "\n";
    if (!cfg.csv_out.empty()) {
        write_file(cfg.csv_out,
                   "n,hash_rate,gate_time,gates_per_iteration,classical_hashes,classical_seconds,"
                   "classical_days,quantum_iterations,quantum_seconds\n" +
                       std::to_string(cfg.estimate_n) + "," + format_float(a.hash_rate) + "," +
                       format_float(a.gate_time) + "," + format_float(a.gates_per_iteration) +
                       "," + format_float(e.classical_hashes) + "," +
                       format_float(e.classical_seconds) + "," + format_float(e.classical_days) +
                       "," + std::to_string(e.quantum_iterations) + "," +
                       format_float(e.quantum_seconds) + "\n");
    }
    return exit_ok;
}

int cmd_chain_validate(const RunConfig &cfg, std::ostream &out) {
    const Chain chain = Chain::load(cfg.chain_file);
    const ValidationReport report = validate_chain(chain.blocks, chain.params);
    if (report.valid) {
        out << "chain valid (" << chain.blocks.size() << " blocks)\n";
        return exit_ok;
    }
    out << "chain INVALID\n";
    for (const std::string &r : report.reasons) {
        out << "  " << r << "\n";
    }
    return exit_check_failed;
}

int cmd_chain_show(const RunConfig &cfg, std::ostream &out) {
    const Chain chain = Chain::load(cfg.chain_file);
    out << chain.format_version << " m=" << chain.params.hash.width
        << " rounds=" << chain.params.hash.rounds << " n=" << chain.params.nonce_bits
        << (chain.params.hash.true_chi ? " true_chi" : "") << "\n";
    out << "#  prev  payload  timestamp  zeros  nonce  digest  valid\n";
    for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
        const Block &b = chain.blocks[i];
        const bool ok = validate_block(b, chain.params).valid;
        out << i << "  " << b.header.prev_digest.to_hex() << "  "
            << b.header.payload_digest.to_hex() << "  " << b.header.timestamp << "  "
            << b.header.difficulty_zeros << "  " << b.header.nonce << "  " << b.digest.to_hex()
            << "  " << (ok ? "yes" : "no") << "\n";
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qmine: Grover nonce search on a simulated quantum register", "qmine"};
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App *mine = app.add_subcommand("mine", "mine one block classically and/or quantumly");
    Options mine_opts(*mine, cfg);
    add_problem_options(mine_opts, cfg);
    mine_opts.add_mode();
    mine_opts.add("--solutions", cfg.solutions, "known solution count (else unknown-count search)");
    mine_opts.add("--max-rounds", cfg.max_rounds, "iteration budget multiplier");
    mine_opts.add("--chain-file", cfg.chain_file, "append the mined block to this chain file");

    CLI::App *sweep = app.add_subcommand("sweep", "success probability vs Grover iterations");
    Options sweep_opts(*sweep, cfg);
    add_problem_options(sweep_opts, cfg);
    sweep_opts.add("--k-max", cfg.k_max, "largest iteration count (default 2k*+1)");
    sweep_opts.add("--target-solutions", cfg.target_solutions,
                   "search timestamps for a header with exactly this many solutions");

    CLI::App *estimate = app.add_subcommand("estimate", "classical vs quantum cost projection");
    Options est_opts(*estimate, cfg);
    est_opts.add("--n", cfg.estimate_n, "nonce bits");
    est_opts.add("--hash-rate", cfg.hash_rate, "classical hashes per second");
    est_opts.add("--gate-time", cfg.gate_time, "seconds per gate");
    est_opts.add("--gates-per-iteration", cfg.gates_per_iteration, "gates per Grover iteration");
    est_opts.add_flag("--measured", cfg.measured,
                      "count gates per iteration on the simulator (uses --m/--rounds)");
    est_opts.add("--m", cfg.m, "toy hash width for --measured");
    est_opts.add("--rounds", cfg.rounds, "toy hash rounds for --measured");
    est_opts.add("--csv-out", cfg.csv_out, "CSV output path");
    est_opts.add_config();

    CLI::App *chain = app.add_subcommand("chain", "inspect a chain file");
    chain->require_subcommand(1);
    CLI::App *validate = chain->add_subcommand("validate", "check every block and link");
    validate->add_option("--chain-file", cfg.chain_file, "chain file")->required();
    CLI::App *show = chain->add_subcommand("show", "print the chain");
    show->add_option("--chain-file", cfg.chain_file, "chain file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (mine->parsed()) {
            mine_opts.apply_config();
            return cmd_mine(cfg, out);
        }
        if (sweep->parsed()) {
            sweep_opts.apply_config();
            return cmd_sweep(cfg, out, err);
        }
        if (estimate->parsed()) {
            est_opts.apply_config();
            return cmd_estimate(cfg, out);
        }
        if (validate->parsed()) {
            return cmd_chain_validate(cfg, out);
        }
        if (show->parsed()) {
            return cmd_chain_show(cfg, out);
        }
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace qmine::cli
