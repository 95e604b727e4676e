#include "ndlt/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "ndlt/errors.hpp"

namespace ndlt {

namespace {

constexpr const char* kMagic = "ndlt-container";
constexpr const char* kSeparator = "---";

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    throw ParseError("manifest: " + key + " is not an integer: '" + value + "'");
  }
  if (used != value.size() || v < 0 || v > (1LL << 20)) throw ParseError("manifest: bad value for " + key + ": '" + value + "'");
  return static_cast<int>(v);
}

void put_f64(std::string& out, double x) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  char buf[8];
  std::memcpy(buf, &bits, 8);
  out.append(buf, 8);
}

double get_f64(const char* p) {
  std::uint64_t bits;
  std::memcpy(&bits, p, 8);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  return std::bit_cast<double>(bits);
}

void put_complex(std::string& out, std::span<const cdouble> xs) {
  for (const auto& x : xs) {
    put_f64(out, x.real());
    put_f64(out, x.imag());
  }
}

void get_complex(const char*& p, std::span<cdouble> xs) {
  for (auto& x : xs) {
    x = {get_f64(p), get_f64(p + 8)};
    p += 16;
  }
}

template <Manifold M>
std::uint64_t needlet_entries(int bandwidth, int j0, int channels) {
  using S = BasicSpectrum<double, M>;
  std::uint64_t n = S::count_for(lowpass_bandwidth(j0, bandwidth));
  for (int s = j0; s < finest_scale(bandwidth); ++s) n += 2 * S::count_for(highpass_bandwidth(s, bandwidth));
  return n * channels;
}

std::uint64_t grid_points(Manifold m, int L) {
  const std::uint64_t lon = 2 * static_cast<std::uint64_t>(L) + 1;
  return (m == Manifold::S2 ? lon : lon * lon) * (L + 1);
}

}  // namespace

const char* to_string(ContainerKind k) {
  switch (k) {
    case ContainerKind::S2Grid: return "s2-grid";
    case ContainerKind::SO3Grid: return "so3-grid";
    case ContainerKind::S2Spectral: return "s2-spectral";
    case ContainerKind::SO3Spectral: return "so3-spectral";
    case ContainerKind::Needlet: return "needlet";
    case ContainerKind::Quadrature: return "quadrature";
  }
  return "?";
}

ContainerKind container_kind_from_string(const std::string& s) {
  for (auto k : {ContainerKind::S2Grid, ContainerKind::SO3Grid, ContainerKind::S2Spectral, ContainerKind::SO3Spectral,
                 ContainerKind::Needlet, ContainerKind::Quadrature})
    if (s == to_string(k)) return k;
  throw ParseError("manifest: unknown kind '" + s + "'");
}

std::uint64_t expected_payload_bytes(const Manifest& m) {
  const std::uint64_t c = m.channels;
  switch (m.kind) {
    case ContainerKind::S2Grid:
    case ContainerKind::SO3Grid: return 16 * c * grid_points(m.manifold, m.bandwidth);
    case ContainerKind::S2Spectral: return 16 * c * SpectralS2::count_for(m.bandwidth);
    case ContainerKind::SO3Spectral: return 16 * c * SpectralSO3::count_for(m.bandwidth);
    case ContainerKind::Needlet:
      return 16 * (m.manifold == Manifold::S2 ? needlet_entries<Manifold::S2>(m.bandwidth, m.j0, m.channels)
                                              : needlet_entries<Manifold::SO3>(m.bandwidth, m.j0, m.channels));
    case ContainerKind::Quadrature: return 32 * grid_points(m.manifold, m.bandwidth);
  }
  return 0;
}

Manifest manifest_of(const ContainerValue& v) {
  Manifest m;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GridSignal>) {
          m.manifold = x.rule().manifold();
          m.kind = m.manifold == Manifold::S2 ? ContainerKind::S2Grid : ContainerKind::SO3Grid;
          m.bandwidth = x.rule().bandwidth();
          m.channels = x.channels();
        } else if constexpr (std::is_same_v<T, SpectralS2> || std::is_same_v<T, SpectralSO3>) {
          m.manifold = T::manifold;
          m.kind = m.manifold == Manifold::S2 ? ContainerKind::S2Spectral : ContainerKind::SO3Spectral;
          m.bandwidth = x.bandwidth();
          m.channels = x.channels();
        } else if constexpr (std::is_same_v<T, NeedletS2> || std::is_same_v<T, NeedletSO3>) {
          x.validate();
          m.manifold = T::manifold;
          m.kind = ContainerKind::Needlet;
          m.bandwidth = x.bandwidth;
          m.channels = x.channels();
          m.j0 = x.j0;
          m.j = x.j;
        } else {
          m.manifold = x.manifold();
          m.kind = ContainerKind::Quadrature;
          m.bandwidth = x.bandwidth();
          m.channels = 1;
          m.dtype = "f64";
        }
      },
      v);
  m.payload_bytes = expected_payload_bytes(m);
  return m;
}

std::string encode_container(const ContainerValue& v) {
  const Manifest m = manifest_of(v);
  std::ostringstream head;
  head << kMagic << '\n'
       << "format_version: " << m.format_version << '\n'
       << "kind: " << to_string(m.kind) << '\n'
       << "manifold: " << to_string(m.manifold) << '\n'
       << "bandwidth: " << m.bandwidth << '\n'
       << "channels: " << m.channels << '\n';
  if (m.kind == ContainerKind::Needlet) head << "j0: " << m.j0 << '\n' << "j: " << m.j << '\n';
  head << "dtype: " << m.dtype << '\n' << "payload_bytes: " << m.payload_bytes << '\n' << kSeparator << '\n';
  std::string out = head.str();
  out.reserve(out.size() + m.payload_bytes);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GridSignal>) {
          put_complex(out, x.samples());
        } else if constexpr (std::is_same_v<T, SpectralS2> || std::is_same_v<T, SpectralSO3>) {
          put_complex(out, x.data());
        } else if constexpr (std::is_same_v<T, NeedletS2> || std::is_same_v<T, NeedletSO3>) {
          put_complex(out, x.lowpass.data());
          for (const auto& b : x.highpass) put_complex(out, b.data());
        } else {
          for (std::size_t k = 0; k < x.size(); ++k) {
            const auto p = x.points()[k];
            put_f64(out, p.alpha);
            put_f64(out, p.beta);
            put_f64(out, p.gamma);
            put_f64(out, x.weights()[k]);
          }
        }
      },
      v);
  return out;
}

namespace {

Manifest parse_manifest(const std::string& bytes, std::size_t& payload_offset) {
  std::size_t pos = 0;
  auto next_line = [&]() -> std::string {
    const std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string::npos) throw ParseError("manifest: unterminated header");
    std::string line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  };
  if (next_line() != kMagic) throw ParseError("manifest: missing 'ndlt-container' line");
  Manifest m;
  bool seen_version = false, seen_kind = false, seen_manifold = false, seen_bw = false, seen_ch = false,
       seen_dtype = false, seen_bytes = false, seen_j0 = false, seen_j = false;
  for (;;) {
    const std::string line = next_line();
    if (line == kSeparator) break;
    const std::size_t colon = line.find(": ");
    if (colon == std::string::npos) throw ParseError("manifest: expected 'key: value', got '" + line + "'");
    const std::string key = line.substr(0, colon), value = line.substr(colon + 2);
    if (key == "format_version") {
      m.format_version = parse_int(key, value);
      seen_version = true;
    } else if (key == "kind") {
      m.kind = container_kind_from_string(value);
      seen_kind = true;
    } else if (key == "manifold") {
      try {
        m.manifold = manifold_from_string(value);
      } catch (const std::invalid_argument&) {
        throw ParseError("manifest: unknown manifold '" + value + "'");
      }
      seen_manifold = true;
    } else if (key == "bandwidth") {
      m.bandwidth = parse_int(key, value);
      seen_bw = true;
    } else if (key == "channels") {
      m.channels = parse_int(key, value);
      seen_ch = true;
    } else if (key == "j0") {
      m.j0 = parse_int(key, value);
      seen_j0 = true;
    } else if (key == "j") {
      m.j = parse_int(key, value);
      seen_j = true;
    } else if (key == "dtype") {
      m.dtype = value;
      seen_dtype = true;
    } else if (key == "payload_bytes") {
      std::size_t used = 0;
      try {
        m.payload_bytes = std::stoull(value, &used);
      } catch (const std::exception&) {
        throw ParseError("manifest: payload_bytes is not an integer");
      }
      if (used != value.size() || value.empty() || value[0] == '-') throw ParseError("manifest: bad payload_bytes");
      seen_bytes = true;
    } else {
      throw ParseError("manifest: unknown key '" + key + "'");
    }
  }
  if (!(seen_version && seen_kind && seen_manifold && seen_bw && seen_ch && seen_dtype && seen_bytes))
    throw ParseError("manifest: missing required keys");
  if (m.format_version != 1) throw ParseError("manifest: unsupported format_version");
  if (m.channels < 1) throw ParseError("manifest: channels must be >= 1");
  if (m.bandwidth > 2048) throw ParseError("manifest: bandwidth too large");
  const bool needlet = m.kind == ContainerKind::Needlet;
  if (needlet != (seen_j0 && seen_j)) throw ParseError("manifest: j0 and j are required exactly for needlet containers");
  const bool grid_kind = m.kind == ContainerKind::S2Grid || m.kind == ContainerKind::S2Spectral;
  const bool so3_kind = m.kind == ContainerKind::SO3Grid || m.kind == ContainerKind::SO3Spectral;
  if ((grid_kind && m.manifold != Manifold::S2) || (so3_kind && m.manifold != Manifold::SO3))
    throw ParseError("manifest: kind and manifold disagree");
  if (m.dtype != (m.kind == ContainerKind::Quadrature ? "f64" : "c128")) throw ParseError("manifest: unexpected dtype");
  if ((m.kind == ContainerKind::Quadrature || m.kind == ContainerKind::S2Grid || m.kind == ContainerKind::SO3Grid) &&
      m.bandwidth < 1)
    throw ParseError("manifest: grid bandwidth must be >= 1");
  if (needlet && (m.j != finest_scale(m.bandwidth) || m.j0 < 1 || m.j0 >= m.j))
    throw ParseError("manifest: needlet scales inconsistent with bandwidth");
  payload_offset = pos;
  return m;
}

}  // namespace

ContainerValue decode_container(const std::string& bytes) {
  std::size_t offset = 0;
  const Manifest m = parse_manifest(bytes, offset);
  const std::uint64_t want = expected_payload_bytes(m);
  if (m.payload_bytes != want) throw CorruptionError("container: payload_bytes does not match kind and shape");
  if (bytes.size() - offset != want) throw CorruptionError("container: payload size does not match payload_bytes");
  const char* p = bytes.data() + offset;
  switch (m.kind) {
    case ContainerKind::S2Grid:
    case ContainerKind::SO3Grid: {
      GridSignal g(std::make_shared<const QuadratureRule>(m.manifold, m.bandwidth), m.channels);
      get_complex(p, g.samples());
      return g;
    }
    case ContainerKind::S2Spectral: {
      SpectralS2 f(m.bandwidth, m.channels);
      get_complex(p, f.data());
      return f;
    }
    case ContainerKind::SO3Spectral: {
      SpectralSO3 f(m.bandwidth, m.channels);
      get_complex(p, f.data());
      return f;
    }
    case ContainerKind::Needlet: {
      auto fill = [&](auto c) -> ContainerValue {
        get_complex(p, c.lowpass.data());
        for (auto& b : c.highpass) get_complex(p, b.data());
        return c;
      };
      if (m.manifold == Manifold::S2) return fill(NeedletS2::zeros(m.bandwidth, m.j0, m.channels));
      return fill(NeedletSO3::zeros(m.bandwidth, m.j0, m.channels));
    }
    case ContainerKind::Quadrature: {
      QuadratureRule rule(m.manifold, m.bandwidth);
      for (std::size_t k = 0; k < rule.size(); ++k, p += 32) {
        const auto q = rule.points()[k];
        if (get_f64(p) != q.alpha || get_f64(p + 8) != q.beta || get_f64(p + 16) != q.gamma ||
            get_f64(p + 24) != rule.weights()[k])
          throw CorruptionError("container: quadrature payload differs from the rule it declares");
      }
      return rule;
    }
  }
  throw ParseError("container: unknown kind");
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

void write_container(const ContainerValue& v, const std::filesystem::path& path) {
  write_text_file(encode_container(v), path);
}

ContainerValue read_container(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return decode_container(ss.str());
}

}  // namespace ndlt
