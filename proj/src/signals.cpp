#include "sensecore/signals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "sensecore/rng.hpp"

namespace sensecore {

namespace {

double realize_with_engine(const NoiseModel& noise, std::mt19937_64& eng) {
    const double rho = noise.uncertainty_db;
    switch (noise.realization) {
    case NoiseRealization::Nominal:
        return noise.nominal_power;
    case NoiseRealization::Upper:
        return noise.nominal_power * std::pow(10.0, rho / 10.0);
    case NoiseRealization::Lower:
        return noise.nominal_power * std::pow(10.0, -rho / 10.0);
    case NoiseRealization::UniformDraw: {
        std::uniform_real_distribution<double> db(-rho, rho);
        return noise.nominal_power * std::pow(10.0, db(eng) / 10.0);
    }
    }
    throw std::logic_error("unreachable noise realization");
}

} // namespace

Snr Snr::from_db(double db) { return Snr{std::pow(10.0, db / 10.0)}; }

double Snr::db() const { return 10.0 * std::log10(gamma); }

void validate(const NoiseModel& noise) {
    if (!(noise.nominal_power > 0.0) || !std::isfinite(noise.nominal_power))
        throw std::domain_error("NoiseModel: nominal_power must be positive and finite");
    if (!(noise.uncertainty_db >= 0.0) || !std::isfinite(noise.uncertainty_db))
        throw std::domain_error("NoiseModel: uncertainty_db must be >= 0 and finite");
}

double realize_noise_power(const NoiseModel& noise, std::uint64_t seed) {
    validate(noise);
    auto eng = make_engine(seed, 0);
    return realize_with_engine(noise, eng);
}

SampleBlock gen_block(Hypothesis hyp, std::size_t n, Snr snr, const NoiseModel& noise,
                      std::uint64_t seed, SignalModel model) {
    validate(noise);
    if (n == 0)
        throw std::domain_error("gen_block: block length must be >= 1");
    if (!(snr.gamma >= 0.0) || !std::isfinite(snr.gamma))
        throw std::domain_error("gen_block: snr.gamma must be >= 0 and finite");

    auto eng = make_engine(seed, 0);
    const double noise_power = realize_with_engine(noise, eng);
    const double noise_sigma = std::sqrt(noise_power / 2.0); // per real dimension

    SampleBlock block;
    block.samples.resize(n);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (auto& y : block.samples)
        y = {noise_sigma * gauss(eng), noise_sigma * gauss(eng)};

    if (hyp == Hypothesis::SignalPlusNoise && snr.gamma > 0.0) {
        const double signal_power = snr.gamma * noise_power;
        if (model == SignalModel::GaussianIid) {
            const double sig_sigma = std::sqrt(signal_power / 2.0);
            for (auto& y : block.samples)
                y += std::complex<double>{sig_sigma * gauss(eng), sig_sigma * gauss(eng)};
        } else {
            // Constant modulus: fixed amplitude, i.i.d. uniform phase.
            const double amp = std::sqrt(signal_power);
            std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
            for (auto& y : block.samples) {
                const double th = phase(eng);
                y += std::complex<double>{amp * std::cos(th), amp * std::sin(th)};
            }
        }
    }
    return block;
}

IqRecording gen_iq_fixture(const IqFixtureSpec& spec, std::uint64_t seed) {
    if (!(spec.sample_rate_hz > 0.0))
        throw std::domain_error("gen_iq_fixture: sample_rate_hz must be positive");
    if (!(spec.noise_power > 0.0))
        throw std::domain_error("gen_iq_fixture: noise_power must be positive");
    const auto n = static_cast<std::size_t>(std::llround(spec.duration_s * spec.sample_rate_hz));
    if (n == 0)
        throw std::domain_error("gen_iq_fixture: duration yields an empty recording");
    for (const auto& tone : spec.tones) {
        if (std::abs(tone.offset_hz) > spec.sample_rate_hz / 2.0)
            throw std::domain_error("gen_iq_fixture: tone offset outside the Nyquist band");
        if (!(tone.power >= 0.0))
            throw std::domain_error("gen_iq_fixture: tone power must be >= 0");
    }

    auto eng = make_engine(seed, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uniform_phase(0.0, 2.0 * std::numbers::pi);

    const double noise_sigma = std::sqrt(spec.noise_power / 2.0);
    std::vector<double> amps, omegas, phases;
    for (const auto& tone : spec.tones) {
        amps.push_back(std::sqrt(tone.power));
        omegas.push_back(2.0 * std::numbers::pi * tone.offset_hz / spec.sample_rate_hz);
        phases.push_back(uniform_phase(eng));
    }

    IqRecording rec;
    rec.sample_rate_hz = spec.sample_rate_hz;
    rec.center_freq_hz = spec.center_freq_hz;
    rec.block.sample_rate_hz = spec.sample_rate_hz;
    rec.block.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double re = noise_sigma * gauss(eng);
        double im = noise_sigma * gauss(eng);
        for (std::size_t t = 0; t < amps.size(); ++t) {
            const double arg = omegas[t] * static_cast<double>(i) + phases[t];
            re += amps[t] * std::cos(arg);
            im += amps[t] * std::sin(arg);
        }
        // Quantize to the file format's float32 so round trips are bit-exact.
        rec.block.samples[i] = {static_cast<double>(static_cast<float>(re)),
                                static_cast<double>(static_cast<float>(im))};
    }
    return rec;
}

} // namespace sensecore
