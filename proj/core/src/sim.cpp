#include "polarlike/sim.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include "polarlike/io.hpp"

namespace polarlike {

LlrVector awgn_llr(std::span<const std::uint8_t> codeword, double ebno_db, double rate,
                   Rng& rng) {
    if (!(rate > 0.0 && rate <= 1.0)) throw ParamOutOfRange("awgn_llr: rate must be in (0, 1]");
    if (!std::isfinite(ebno_db)) throw ParamOutOfRange("awgn_llr: Eb/N0 must be finite");
    const double sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, ebno_db / 10.0));
    const double sigma = std::sqrt(sigma2);
    const double scale = 2.0 / sigma2;
    LlrVector llr(codeword.size());
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const double x = codeword[i] ? -1.0 : 1.0;
        llr[i] = scale * (x + sigma * rng.gaussian());
    }
    return llr;
}

std::string DecoderSpec::name() const {
    switch (kind) {
        case Kind::sc: return "sc";
        case Kind::scl: return "scl";
        case Kind::mld: return "mld";
    }
    return "?";
}

std::uint64_t DecoderSpec::candidates(std::size_t k) const {
    switch (kind) {
        case Kind::sc: return 1;
        case Kind::scl: return list_size;
        case Kind::mld: return std::uint64_t{1} << k;
    }
    return 0;
}

namespace {

constexpr std::uint64_t kFrameBlock = 1024;

struct BlockCounters {
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
};

// One worker's share of a frame block. Frame randomness depends only on
// (seed, point, frame), never on the worker layout.
void run_frames(const Transformation& t, const DecoderSpec& dec, double ebno_db,
                std::uint64_t seed, std::uint64_t point_index, std::uint64_t frame_lo,
                std::uint64_t frame_hi, BlockCounters& out) {
    const std::size_t k = t.k();
    const std::size_t n = t.n();
    const double rate = static_cast<double>(k) / static_cast<double>(n);
    const std::uint64_t point_seed = Rng::derive(seed, point_index);

    SclDecoder scl(t, dec.kind == DecoderSpec::Kind::scl ? dec.list_size : 1);
    MldDecoder* mld_dec = nullptr;
    MldDecoder mld_storage = dec.kind == DecoderSpec::Kind::mld
                                 ? MldDecoder(t.g)
                                 : MldDecoder(BitMatrix::identity(1));
    if (dec.kind == DecoderSpec::Kind::mld) mld_dec = &mld_storage;

    std::vector<std::uint8_t> message(k);
    for (std::uint64_t f = frame_lo; f < frame_hi; ++f) {
        Rng rng(Rng::derive(point_seed, f));
        for (auto& b : message) b = static_cast<std::uint8_t>(rng.coin());
        const auto codeword = matvec(message, t.g);
        const LlrVector chan = awgn_llr(codeword, ebno_db, rate, rng);

        DecodeResult res;
        if (mld_dec) {
            res = mld_dec->decode(chan);
        } else {
            res = scl.decode(prepare_llr(chan, t));
        }

        std::uint64_t bit_errs = 0;
        for (std::size_t i = 0; i < k; ++i) bit_errs += res.message[i] != message[i];
        if (bit_errs > 0) {
            ++out.frame_errors;
            out.bit_errors += bit_errs;
        }
    }
}

}  // namespace

SimResult simulate_fer(const Transformation& t, const DecoderSpec& decoder,
                       std::span<const double> ebno_db, const StopRule& stop,
                       std::uint64_t seed, unsigned workers) {
    if (stop.max_frames < 1 || stop.target_frame_errors < 1)
        throw ParamOutOfRange("simulate_fer: stop rule must be at least one frame/error");
    if (ebno_db.empty()) throw ParamOutOfRange("simulate_fer: empty Eb/N0 list");
    if (workers == 0) workers = 1;

    SimResult result;
    result.decoder = decoder;
    result.seed = seed;

    for (std::size_t pt = 0; pt < ebno_db.size(); ++pt) {
        const auto t0 = std::chrono::steady_clock::now();
        SimPoint point;
        point.ebno_db = ebno_db[pt];
        point.candidates = decoder.candidates(t.k());

        std::uint64_t next_frame = 0;
        while (next_frame < stop.max_frames && point.frame_errors < stop.target_frame_errors) {
            const std::uint64_t block =
                std::min<std::uint64_t>(kFrameBlock, stop.max_frames - next_frame);
            const unsigned used = static_cast<unsigned>(
                std::min<std::uint64_t>(workers, block));
            std::vector<BlockCounters> counters(used);
            if (used == 1) {
                run_frames(t, decoder, ebno_db[pt], seed, pt, next_frame,
                           next_frame + block, counters[0]);
            } else {
                std::vector<std::thread> pool;
                const std::uint64_t chunk = (block + used - 1) / used;
                for (unsigned w = 0; w < used; ++w) {
                    const std::uint64_t lo = next_frame + std::min<std::uint64_t>(w * chunk, block);
                    const std::uint64_t hi = next_frame + std::min<std::uint64_t>((w + 1) * chunk, block);
                    pool.emplace_back(run_frames, std::cref(t), std::cref(decoder), ebno_db[pt],
                                      seed, pt, lo, hi, std::ref(counters[w]));
                }
                for (auto& th : pool) th.join();
            }
            for (const auto& c : counters) {
                point.frame_errors += c.frame_errors;
                point.bit_errors += c.bit_errors;
            }
            next_frame += block;
        }
        point.frames = next_frame;
        point.fer = static_cast<double>(point.frame_errors) / static_cast<double>(point.frames);
        point.ber = t.k() == 0 ? 0.0
                               : static_cast<double>(point.bit_errors) /
                                     (static_cast<double>(point.frames) *
                                      static_cast<double>(t.k()));
        point.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.points.push_back(point);
    }
    return result;
}

SimResult simulate_fer(const SimConfig& cfg) {
    const BitMatrix g = load_generator(cfg.code_file);
    const Transformation t = load_transformation(cfg.transform_file, g);
    return simulate_fer(t, cfg.decoder, cfg.ebno_db, cfg.stop, cfg.seed, cfg.workers);
}

}  // namespace polarlike
