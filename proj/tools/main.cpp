// Command-line front end: search for code transformations, inspect their
// reliability cost, encode/decode single words, and run FER simulations.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polarlike/decoder.hpp"
#include "polarlike/io.hpp"
#include "polarlike/reliability.hpp"
#include "polarlike/search.hpp"
#include "polarlike/sim.hpp"

using namespace polarlike;

namespace {

ChannelParam parse_channel(const std::string& spec, double rate) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParamOutOfRange("channel must be kind:param, e.g. bsc:0.01 or awgn:4.0");
    const std::string kind = spec.substr(0, colon);
    const double param = std::stod(spec.substr(colon + 1));
    if (kind == "bsc") return ChannelParam::bsc(param);
    if (kind == "bec") return ChannelParam::bec(param);
    if (kind == "awgn") return ChannelParam::biawgn(param, rate);
    throw ParamOutOfRange("unknown channel kind '" + kind + "'");
}

std::vector<std::uint8_t> parse_bits(const std::string& text) {
    std::vector<std::uint8_t> bits;
    for (char ch : text) {
        if (ch == ' ' || ch == ',' || ch == '\t') continue;
        if (ch != '0' && ch != '1') throw ParamOutOfRange("message must be 0/1 digits");
        bits.push_back(ch == '1');
    }
    return bits;
}

LlrVector load_llr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, path + ": cannot open");
    LlrVector llr;
    double v;
    while (in >> v) llr.push_back(v);
    return llr;
}

void print_bits(const char* label, const std::vector<std::uint8_t>& bits) {
    std::cout << label;
    for (auto b : bits) std::cout << ' ' << int(b);
    std::cout << '\n';
}

DecoderSpec::Kind parse_decoder_kind(const std::string& name) {
    if (name == "sc") return DecoderSpec::Kind::sc;
    if (name == "scl") return DecoderSpec::Kind::scl;
    if (name == "mld") return DecoderSpec::Kind::mld;
    throw ParamOutOfRange("decoder must be sc, scl, or mld");
}

int cmd_cost(const std::string& gen_path, const std::string& transform_path,
             const std::string& channel) {
    const BitMatrix g = load_generator(gen_path);
    const Transformation t = load_transformation(transform_path, g);
    const ChannelParam chan =
        parse_channel(channel, double(t.k()) / double(t.n()));
    const ReliabilityVector z = propagate_z(initial_z(chan, t), t.pruning);
    std::cout << "position z\n" << std::fixed << std::setprecision(6);
    double sum = 0.0;
    for (auto i : t.info_set) {
        std::cout << (i + 1) << ' ' << z[i] << '\n';
        sum += z[i];
    }
    std::cout << "sum " << sum << '\n';
    return 0;
}

int cmd_encode(const std::string& gen_path, const std::string& transform_path,
               const std::string& message) {
    const BitMatrix g = load_generator(gen_path);
    const Transformation t = load_transformation(transform_path, g);
    const auto m = parse_bits(message);
    print_bits("codeword:", encode_via_transform(m, t));
    return 0;
}

int cmd_decode(const std::string& gen_path, const std::string& transform_path,
               const std::string& llr_path, const std::string& decoder,
               std::size_t list_size) {
    const BitMatrix g = load_generator(gen_path);
    const Transformation t = load_transformation(transform_path, g);
    const LlrVector chan = load_llr_file(llr_path);

    DecodeResult res;
    const auto kind = parse_decoder_kind(decoder);
    if (kind == DecoderSpec::Kind::mld) {
        res = mld(chan, t.g);
    } else {
        const std::size_t L = kind == DecoderSpec::Kind::sc ? 1 : list_size;
        res = scl_decode(prepare_llr(chan, t), t, L);
    }
    print_bits("message:", res.message);
    print_bits("codeword:", res.codeword);
    std::cout << "path_metric: " << std::setprecision(12) << res.path_metric << '\n';
    return 0;
}

int cmd_simulate(SimConfig cfg, const std::string& out_path) {
    const SimResult result = simulate_fer(cfg);
    const std::string csv = to_csv(result);
    std::cout << csv;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << csv;
    }
    return 0;
}

int cmd_search(const std::string& gen_path, std::size_t n_big, const std::string& channel,
               AnnealConfig cfg, unsigned chains, const std::string& out_path,
               const std::string& trace_path) {
    const BitMatrix g = load_generator(gen_path);
    const ChannelParam chan = parse_channel(channel, double(g.rows()) / double(g.cols()));

    std::vector<AnnealResult> results(chains);
    std::vector<std::thread> pool;
    for (unsigned c = 0; c < chains; ++c) {
        AnnealConfig chain_cfg = cfg;
        chain_cfg.seed = cfg.seed + c;  // per-chain stream
        pool.emplace_back([&, c, chain_cfg] { results[c] = anneal(g, n_big, chan, chain_cfg); });
    }
    for (auto& th : pool) th.join();

    std::size_t winner = 0;
    for (std::size_t c = 1; c < results.size(); ++c)
        if (results[c].best_cost < results[winner].best_cost) winner = c;

    for (std::size_t c = 0; c < results.size(); ++c) {
        std::cout << "chain " << c << " seed " << (cfg.seed + c) << " best_cost "
                  << std::setprecision(10) << results[c].best_cost << " found_at "
                  << results[c].best_found_at << " visited "
                  << results[c].candidates_visited << '\n';
    }
    std::cout << "best chain " << winner << " cost " << std::setprecision(10)
              << results[winner].best_cost << '\n';

    save_transformation(out_path, results[winner].best);
    std::cout << "wrote " << out_path << '\n';

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        out << "iteration,temperature,current_cost,best_cost\n";
        for (const auto& p : results[winner].trace) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g,%.17g\n",
                          static_cast<unsigned long long>(p.iteration), p.temperature,
                          p.current_cost, p.best_cost);
            out << buf;
        }
        std::cout << "wrote " << trace_path << '\n';
    }
    return 0;
}

int cmd_exhaustive(const std::string& gen_path, std::size_t n_big, const std::string& channel,
                   const std::string& scope, unsigned workers, const std::string& out_path) {
    const BitMatrix g = load_generator(gen_path);
    const ChannelParam chan = parse_channel(channel, double(g.rows()) / double(g.cols()));
    const SearchScope sc = scope == "perm-only" ? SearchScope::perm_only : SearchScope::full;
    const ExhaustiveResult result = exhaustive(g, n_big, chan, sc, workers);
    std::cout << "candidates " << result.candidates << '\n'
              << "min_cost " << std::setprecision(10) << result.min_cost << '\n';
    if (!out_path.empty()) {
        save_transformation(out_path, result.best);
        std::cout << "wrote " << out_path << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& gen_path, const std::string& transform_path,
               std::size_t trials, std::uint64_t seed) {
    const BitMatrix g = load_generator(gen_path);
    const Transformation t = load_transformation(transform_path, g);

    int failures = 0;
    auto report = [&](const char* name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
        if (!ok) ++failures;
    };

    const RoundTripReport rt = verify_roundtrip(t, trials, seed);
    report("roundtrip", rt.ok(),
           rt.ok() ? std::to_string(trials) + " trials" : rt.first_failure);

    report("info_set_size", t.info_set.size() == t.k());

    bool causal = true;
    for (std::size_t pos = 0; pos < t.n_big; ++pos)
        for (auto ref : t.frozen.combination[pos]) causal = causal && ref < pos;
    report("frozen_causality", causal);

    bool pivots_ok = true;
    try {
        (void)extract_frozen(t.m_df);
    } catch (const NotEchelon&) {
        pivots_ok = false;
    }
    report("m_df_echelon", pivots_ok);

    const BitMatrix gen = build_generator(t.pruning);
    bool lower_unit = true;
    for (std::size_t r = 0; r < gen.rows(); ++r) {
        lower_unit = lower_unit && gen.get(r, r);
        for (std::size_t c = r + 1; c < gen.cols(); ++c)
            lower_unit = lower_unit && !gen.get(r, c);
    }
    report("generator_lower_triangular", lower_unit);

    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar-like transformation toolkit for binary linear block codes"};
    app.require_subcommand(1);

    std::string gen_path, transform_path, channel = "bsc:0.01", out_path, trace_path;
    std::string message, llr_path, decoder = "sc", scope = "full";
    std::size_t n_big = 0, list_size = 1, trials = 1000;
    unsigned chains = 1, workers = 1;
    AnnealConfig anneal_cfg;
    SimConfig sim_cfg;
    std::vector<double> ebno;

    auto* cost_cmd = app.add_subcommand("cost", "Print per-info-position Z values and their sum");
    cost_cmd->add_option("--gen", gen_path, "generator matrix file")->required();
    cost_cmd->add_option("--transform", transform_path, "transformation file")->required();
    cost_cmd->add_option("--channel", channel, "bsc:p | bec:eps | awgn:ebno_db");

    auto* enc_cmd = app.add_subcommand("encode", "Encode a message through the transformation");
    enc_cmd->add_option("--gen", gen_path)->required();
    enc_cmd->add_option("--transform", transform_path)->required();
    enc_cmd->add_option("--message", message, "k bits, e.g. '1 0 1'")->required();

    auto* dec_cmd = app.add_subcommand("decode", "Decode one LLR vector");
    dec_cmd->add_option("--gen", gen_path)->required();
    dec_cmd->add_option("--transform", transform_path)->required();
    dec_cmd->add_option("--llr", llr_path, "file with one channel LLR per line")->required();
    dec_cmd->add_option("--decoder", decoder, "sc | scl | mld");
    dec_cmd->add_option("--list", list_size, "SCL list size");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo FER/BER simulation");
    sim_cmd->add_option("--gen", gen_path)->required();
    sim_cmd->add_option("--transform", transform_path)->required();
    sim_cmd->add_option("--decoder", decoder, "sc | scl | mld");
    sim_cmd->add_option("--list", list_size, "SCL list size");
    sim_cmd->add_option("--ebno", ebno, "Eb/N0 grid in dB")->required()->delimiter(',');
    sim_cmd->add_option("--max-frames", sim_cfg.stop.max_frames);
    sim_cmd->add_option("--target-errors", sim_cfg.stop.target_frame_errors);
    sim_cmd->add_option("--seed", sim_cfg.seed);
    sim_cmd->add_option("--workers", workers);
    sim_cmd->add_option("--out", out_path, "also write the CSV here");

    auto* search_cmd = app.add_subcommand("search", "Simulated annealing over (R, p)");
    search_cmd->add_option("--gen", gen_path)->required();
    search_cmd->add_option("--n-big", n_big, "target blocklength N = 2^m")->required();
    search_cmd->add_option("--channel", channel);
    search_cmd->add_option("--t-max", anneal_cfg.t_max);
    search_cmd->add_option("--gamma", anneal_cfg.gamma);
    search_cmd->add_option("--t-init", anneal_cfg.t_init);
    search_cmd->add_option("--seed", anneal_cfg.seed);
    search_cmd->add_option("--chains", chains, "parallel chains, seeds seed+0..seed+chains-1");
    std::string move_policy = "alternate";
    search_cmd->add_option("--move-policy", move_policy, "alternate | uniform-random");
    search_cmd->add_option("--out", out_path, "output transformation file")->required();
    search_cmd->add_option("--trace", trace_path, "cost-trace CSV of the winning chain");
    search_cmd->add_option("--trace-every", anneal_cfg.trace_every,
                           "record every Nth iteration (default 1 when --trace is given)");

    auto* exh_cmd = app.add_subcommand("exhaustive", "Complete enumeration at tiny scale");
    exh_cmd->add_option("--gen", gen_path)->required();
    exh_cmd->add_option("--n-big", n_big)->required();
    exh_cmd->add_option("--channel", channel);
    exh_cmd->add_option("--scope", scope, "perm-only | full");
    exh_cmd->add_option("--workers", workers);
    exh_cmd->add_option("--out", out_path, "output transformation file");

    auto* ver_cmd = app.add_subcommand("verify", "Round-trip and invariant audit");
    ver_cmd->add_option("--gen", gen_path)->required();
    ver_cmd->add_option("--transform", transform_path)->required();
    ver_cmd->add_option("--trials", trials);
    std::uint64_t verify_seed = 0x5eed;
    ver_cmd->add_option("--seed", verify_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cost_cmd)) return cmd_cost(gen_path, transform_path, channel);
        if (app.got_subcommand(enc_cmd)) return cmd_encode(gen_path, transform_path, message);
        if (app.got_subcommand(dec_cmd))
            return cmd_decode(gen_path, transform_path, llr_path, decoder, list_size);
        if (app.got_subcommand(sim_cmd)) {
            sim_cfg.code_file = gen_path;
            sim_cfg.transform_file = transform_path;
            sim_cfg.decoder.kind = parse_decoder_kind(decoder);
            sim_cfg.decoder.list_size = list_size;
            sim_cfg.ebno_db = ebno;
            sim_cfg.workers = workers;
            return cmd_simulate(sim_cfg, out_path);
        }
        if (app.got_subcommand(search_cmd)) {
            anneal_cfg.move_policy = move_policy == "uniform-random"
                                         ? MovePolicy::uniform_random
                                         : MovePolicy::alternate;
            if (!trace_path.empty() && anneal_cfg.trace_every == 0) anneal_cfg.trace_every = 1;
            return cmd_search(gen_path, n_big, channel, anneal_cfg, chains, out_path,
                              trace_path);
        }
        if (app.got_subcommand(exh_cmd))
            return cmd_exhaustive(gen_path, n_big, channel, scope, workers, out_path);
        if (app.got_subcommand(ver_cmd))
            return cmd_verify(gen_path, transform_path, trials, verify_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
