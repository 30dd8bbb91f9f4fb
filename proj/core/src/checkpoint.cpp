#include "rles/checkpoint.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>

#include "rles/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "checkpoint layout assumes a little-endian host");

namespace rles {

namespace {

constexpr char kMagic[8] = {'R', 'L', 'E', 'S', 'C', 'K', 'P', 'T'};

template <typename T>
void put(std::string& buf, const T& v) {
  const char* p = reinterpret_cast<const char*>(&v);
  buf.append(p, sizeof(T));
}

void put_array(std::string& buf, std::span<const double> a) {
  buf.append(reinterpret_cast<const char*>(a.data()), a.size() * sizeof(double));
}

struct Reader {
  const std::string& buf;
  std::size_t pos = 0;
  const std::string& path;

  template <typename T>
  T get() {
    if (pos + sizeof(T) > buf.size())
      throw io_error("truncated checkpoint " + path);
    T v;
    std::memcpy(&v, buf.data() + pos, sizeof(T));
    pos += sizeof(T);
    return v;
  }
  void get_array(std::vector<double>& a, std::size_t count) {
    if (pos + count * sizeof(double) > buf.size())
      throw io_error("truncated checkpoint " + path);
    a.resize(count);
    std::memcpy(a.data(), buf.data() + pos, count * sizeof(double));
    pos += count * sizeof(double);
  }
};

}  // namespace

void write_checkpoint(const std::string& path, const SolverState& state,
                      const GridConfig& grid, const std::string& config_text) {
  std::string payload;
  put<std::uint32_t>(payload, 1);
  put(payload, grid.lx);
  put(payload, grid.lz);
  put<std::int32_t>(payload, grid.nx);
  put<std::int32_t>(payload, grid.ny);
  put<std::int32_t>(payload, grid.nz);
  put(payload, grid.stretch_beta);
  put<std::uint64_t>(payload, config_text.size());
  payload += config_text;
  put<std::uint64_t>(payload, state.step);
  put(payload, state.t);
  put(payload, state.dpdx);
  put<std::uint8_t>(payload, state.has_history ? 1 : 0);
  for (int c = 0; c < 3; ++c) put_array(payload, state.vel.comp(c).phys());
  if (state.has_history)
    for (int c = 0; c < 3; ++c)
      put_array(payload, state.conv_prev.comp(c).phys());

  const std::uint32_t crc = static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(payload.data()),
            static_cast<uInt>(payload.size())));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out.write(kMagic, sizeof kMagic);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  out.write(reinterpret_cast<const char*>(&crc), sizeof crc);
  if (!out) throw io_error("failed writing checkpoint " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open checkpoint " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (data.size() < sizeof(kMagic) + sizeof(std::uint32_t) * 2)
    throw io_error("truncated checkpoint " + path);
  if (std::memcmp(data.data(), kMagic, sizeof kMagic) != 0)
    throw io_error(path + " is not a checkpoint file (bad magic)");

  const std::string payload =
      data.substr(sizeof kMagic, data.size() - sizeof kMagic - 4);
  std::uint32_t stored_crc;
  std::memcpy(&stored_crc, data.data() + data.size() - 4, 4);
  const std::uint32_t crc = static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(payload.data()),
            static_cast<uInt>(payload.size())));
  if (crc != stored_crc)
    throw io_error("checkpoint " + path + " is corrupt (CRC mismatch)");

  Reader r{payload, 0, path};
  Checkpoint ck;
  ck.version = r.get<std::uint32_t>();
  if (ck.version != 1)
    throw io_error("unsupported checkpoint version " +
                   std::to_string(ck.version) + " in " + path);
  ck.grid.lx = r.get<double>();
  ck.grid.lz = r.get<double>();
  ck.grid.nx = r.get<std::int32_t>();
  ck.grid.ny = r.get<std::int32_t>();
  ck.grid.nz = r.get<std::int32_t>();
  ck.grid.stretch_beta = r.get<double>();
  const std::uint64_t text_len = r.get<std::uint64_t>();
  if (r.pos + text_len > r.buf.size())
    throw io_error("truncated checkpoint " + path);
  ck.config_text.assign(r.buf.data() + r.pos, text_len);
  r.pos += text_len;
  ck.step = r.get<std::uint64_t>();
  ck.t = r.get<double>();
  ck.dpdx = r.get<double>();
  ck.has_history = r.get<std::uint8_t>() != 0;
  const std::size_t np = static_cast<std::size_t>(ck.grid.nx) * ck.grid.ny *
                         ck.grid.nz;
  r.get_array(ck.u, np);
  r.get_array(ck.v, np);
  r.get_array(ck.w, np);
  if (ck.has_history) {
    r.get_array(ck.hu, np);
    r.get_array(ck.hv, np);
    r.get_array(ck.hw, np);
  }
  if (r.pos != r.buf.size())
    throw io_error("trailing bytes in checkpoint " + path);
  return ck;
}

void restore_state(const Checkpoint& ck, SolverState& state) {
  const ChannelGrid& g = state.vel.grid();
  if (ck.grid.nx != g.nx() || ck.grid.ny != g.ny() || ck.grid.nz != g.nz())
    throw config_error("checkpoint grid " + std::to_string(ck.grid.nx) + "x" +
                       std::to_string(ck.grid.ny) + "x" +
                       std::to_string(ck.grid.nz) +
                       " does not match the run grid");
  const std::vector<double>* vel[3] = {&ck.u, &ck.v, &ck.w};
  const std::vector<double>* hist[3] = {&ck.hu, &ck.hv, &ck.hw};
  for (int c = 0; c < 3; ++c) {
    state.vel.comp(c).set_rep(Rep::physical);
    auto ph = state.vel.comp(c).phys();
    std::copy(vel[c]->begin(), vel[c]->end(), ph.begin());
    state.conv_prev.comp(c).set_rep(Rep::physical);
    auto hp = state.conv_prev.comp(c).phys();
    if (ck.has_history)
      std::copy(hist[c]->begin(), hist[c]->end(), hp.begin());
    else
      std::fill(hp.begin(), hp.end(), 0.0);
  }
  state.has_history = ck.has_history;
  state.step = ck.step;
  state.t = ck.t;
  state.dpdx = ck.dpdx;
}

}  // namespace rles
