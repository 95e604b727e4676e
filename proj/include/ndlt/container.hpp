#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>

#include "ndlt/needlet.hpp"
#include "ndlt/quadrature.hpp"
#include "ndlt/spectral.hpp"

namespace ndlt {

enum class ContainerKind { S2Grid, SO3Grid, S2Spectral, SO3Spectral, Needlet, Quadrature };

const char* to_string(ContainerKind k);
ContainerKind container_kind_from_string(const std::string& s);

/// Text header preceding the raw payload.
struct Manifest {
  int format_version = 1;
  ContainerKind kind = ContainerKind::S2Spectral;
  Manifold manifold = Manifold::S2;
  int bandwidth = 0;
  int channels = 1;
  int j0 = 0;  ///< needlet only
  int j = 0;   ///< needlet only
  std::string dtype = "c128";
  std::uint64_t payload_bytes = 0;

  bool operator==(const Manifest&) const = default;
};

using ContainerValue = std::variant<GridSignal, SpectralS2, SpectralSO3, NeedletS2, NeedletSO3, QuadratureRule>;

/// Payload size implied by the manifest's kind, bandwidth, channels and scales.
std::uint64_t expected_payload_bytes(const Manifest& m);

Manifest manifest_of(const ContainerValue& v);

/// Manifest text followed by the little-endian payload.
std::string encode_container(const ContainerValue& v);

/// Throws ParseError for a malformed manifest and CorruptionError for a payload
/// that disagrees with it.
ContainerValue decode_container(const std::string& bytes);

/// Writes through a temporary file in the same directory and renames it into place.
void write_container(const ContainerValue& v, const std::filesystem::path& path);
ContainerValue read_container(const std::filesystem::path& path);

/// Writes text atomically.
void write_text_file(const std::string& text, const std::filesystem::path& path);

}  // namespace ndlt
