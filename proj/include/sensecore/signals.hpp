#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace sensecore {

// A finite block of complex baseband samples.
struct SampleBlock {
    std::vector<std::complex<double>> samples;
    std::optional<double> sample_rate_hz; // unset for pure-simulation blocks

    std::size_t size() const noexcept { return samples.size(); }
};

enum class Hypothesis { NoiseOnly, SignalPlusNoise };

// How the realized noise power relates to the nominal one.
enum class NoiseRealization { Nominal, Upper, Lower, UniformDraw };

// Noise power with dB-bounded uncertainty: the true power is assumed to
// lie within +/- uncertainty_db of the nominal value.
struct NoiseModel {
    double nominal_power = 1.0;  // sigma_n^2, linear units
    double uncertainty_db = 0.0; // rho >= 0
    NoiseRealization realization = NoiseRealization::Nominal;
};

// Linear SNR, gamma >= 0.
struct Snr {
    double gamma = 0.0;

    static Snr from_db(double db);
    double db() const; // 10 log10(gamma); -inf at gamma = 0
};

// Primary-user waveform used by gen_block under SignalPlusNoise.
enum class SignalModel { GaussianIid, ConstantModulus };

// Throws std::domain_error when the model violates its invariants.
void validate(const NoiseModel& noise);

// Realized noise power for one sensing epoch. UniformDraw picks a power
// uniform in dB on [-rho, +rho] around nominal; deterministic per seed.
double realize_noise_power(const NoiseModel& noise, std::uint64_t seed);

// n i.i.d. circularly-symmetric complex Gaussian noise samples at the
// realized noise power, plus (under SignalPlusNoise) an independent signal
// of power gamma * realized_noise_power. Deterministic per seed.
SampleBlock gen_block(Hypothesis hyp, std::size_t n, Snr snr, const NoiseModel& noise,
                      std::uint64_t seed, SignalModel model = SignalModel::GaussianIid);

// ---- synthetic IQ fixtures (stand-ins for recorded captures) ----

struct Tone {
    double offset_hz = 0.0; // from center frequency; must lie within +/- fs/2
    double power = 1.0;     // linear
};

struct IqFixtureSpec {
    double sample_rate_hz = 0.0;
    double center_freq_hz = 0.0;
    std::vector<Tone> tones;
    double noise_power = 1.0;
    double duration_s = 0.0;
};

struct IqRecording {
    SampleBlock block;
    double sample_rate_hz = 0.0;
    double center_freq_hz = 0.0;
};

// Complex tones plus AWGN at the specified powers. Samples are quantized
// to float32, matching the IQ file format, so a write/read round trip is
// bit-exact.
IqRecording gen_iq_fixture(const IqFixtureSpec& spec, std::uint64_t seed);

} // namespace sensecore
