#include "gmsel/green_bank.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "gmsel/fsio.hpp"
#include "gmsel/impulse.hpp"

static_assert(std::endian::native == std::endian::little,
              "GBK1 I/O assumes a little-endian host");

namespace gmsel {

GreenBank compute_green_bank(const HexMesh& mesh, const TimeIntegratorConfig& cfg,
                             const std::vector<std::array<double, 2>>& stations,
                             double pulse_width, double duration, SimStats* stats) {
  if (stations.empty()) throw std::invalid_argument("compute_green_bank: no stations");
  if (!(pulse_width > 0.0)) throw std::invalid_argument("compute_green_bank: pulse width <= 0");
  const double ratio = duration / cfg.dt;
  const int n_step = int(std::llround(ratio));
  if (n_step < 1 || std::abs(ratio - n_step) > 1e-9 * ratio)
    throw std::invalid_argument("compute_green_bank: duration must be a multiple of dt");

  GreenBank bank;
  bank.stations = stations;
  bank.dt = cfg.dt;
  bank.pulse_width = pulse_width;
  bank.n_step = n_step;
  bank.samples.assign(stations.size() * 9 * size_t(n_step), 0.0);

  TimeIntegratorConfig run_cfg = cfg;
  run_cfg.steps = n_step;
  SimStats acc;
  for (int j = 0; j < 3; ++j) {
    Waveform input(cfg.dt, size_t(n_step));
    for (int t = 0; t < n_step; ++t) input.comp[j][size_t(t)] = impulse_p(t * cfg.dt, pulse_width);
    SimStats s;
    auto recs = run_forward(mesh, run_cfg, input, stations, &s);
    acc.total_cg_iterations += s.total_cg_iterations;
    acc.max_cg_iterations = std::max(acc.max_cg_iterations, s.max_cg_iterations);
    acc.max_rel_residual = std::max(acc.max_rel_residual, s.max_rel_residual);
    for (size_t k = 0; k < stations.size(); ++k)
      for (int i = 0; i < 3; ++i)
        std::memcpy(&bank.samples[bank.index(k, j, i, 0)], recs[k].comp[i].data(),
                    sizeof(double) * size_t(n_step));
  }
  if (stats) *stats = acc;
  return bank;
}

namespace {
void put_u32(std::string& s, uint32_t v) { s.append(reinterpret_cast<const char*>(&v), 4); }
void put_f64(std::string& s, double v) { s.append(reinterpret_cast<const char*>(&v), 8); }
}  // namespace

void write_green_bank(const std::filesystem::path& path, const GreenBank& bank) {
  std::string buf;
  buf.reserve(32 + bank.samples.size() * 8);
  buf.append("GBK1", 4);
  put_u32(buf, 1);
  put_u32(buf, uint32_t(bank.station_count()));
  put_u32(buf, 3);
  put_u32(buf, 3);
  put_u32(buf, uint32_t(bank.n_step));
  put_f64(buf, bank.dt);
  put_f64(buf, bank.pulse_width);
  buf.append(reinterpret_cast<const char*>(bank.samples.data()), bank.samples.size() * 8);
  atomic_write_file(path, buf);
}

GreenBank read_green_bank(const std::filesystem::path& path) {
  std::string data = read_text_file(path);
  if (data.size() < 40 || data.compare(0, 4, "GBK1") != 0)
    throw std::runtime_error(path.string() + ": not a GBK1 file");
  const char* p = data.data() + 4;
  auto get_u32 = [&p]() {
    uint32_t v;
    std::memcpy(&v, p, 4);
    p += 4;
    return v;
  };
  auto get_f64 = [&p]() {
    double v;
    std::memcpy(&v, p, 8);
    p += 8;
    return v;
  };
  const uint32_t version = get_u32();
  if (version != 1) throw std::runtime_error(path.string() + ": unsupported GBK version");
  const uint32_t n_station = get_u32();
  const uint32_t n_in = get_u32();
  const uint32_t n_out = get_u32();
  const uint32_t n_step = get_u32();
  if (n_in != 3 || n_out != 3)
    throw std::runtime_error(path.string() + ": expected 3x3 direction pairs");
  if (n_step < 1 || n_station < 1)
    throw std::runtime_error(path.string() + ": empty bank");
  GreenBank bank;
  bank.dt = get_f64();
  bank.pulse_width = get_f64();
  bank.n_step = int(n_step);
  const size_t count = size_t(n_station) * 9 * n_step;
  if (data.size() != 40 + count * 8)
    throw std::runtime_error(path.string() + ": truncated GBK1 payload");
  bank.samples.resize(count);
  std::memcpy(bank.samples.data(), data.data() + 40, count * 8);
  bank.model_id = path.stem().string();
  return bank;
}

}  // namespace gmsel
