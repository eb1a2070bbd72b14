#ifndef RSW_FIELD_IO_HPP
#define RSW_FIELD_IO_HPP

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rsw/field_grid.hpp"

// Field file pair: <base>.json header + <base>.bin raw little-endian payload.
// Header: {version:1, dtype:"f64"|"c128", order:"C", shape:[...],
//          domain:"spatial"|"frequency", grid:{dim,N,dx}}.
// Complex payloads store interleaved re,im. Round trips are bit-exact.

namespace rsw {

static_assert(std::endian::native == std::endian::little,
              "field files are little-endian; byte swapping is not implemented");

class FieldIoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MalformedHeaderError : public FieldIoError {
public:
  using FieldIoError::FieldIoError;
};

class ShapeMismatchError : public FieldIoError {
public:
  using FieldIoError::FieldIoError;
};

class TruncatedPayloadError : public FieldIoError {
public:
  using FieldIoError::FieldIoError;
};

enum class Domain { Spatial, Frequency };

inline const char* domain_name(Domain d) {
  return d == Domain::Spatial ? "spatial" : "frequency";
}

struct LoadedField {
  std::variant<ScalarField, SpectrumField> data;
  Domain domain;
};

namespace detail {

inline nlohmann::json grid_header(const GridSpec& g) {
  return {{"dim", g.dim()}, {"N", g.size()}, {"dx", g.spacing()}};
}

inline void write_payload(const std::filesystem::path& path, const void* bytes,
                          std::size_t count) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FieldIoError("cannot open for writing: " + path.string());
  out.write(static_cast<const char*>(bytes), static_cast<std::streamsize>(count));
  if (!out) throw FieldIoError("write failed: " + path.string());
}

inline void write_header(const std::filesystem::path& base, const GridSpec& g,
                         const char* dtype, Domain domain) {
  nlohmann::json h{{"version", 1},
                   {"dtype", dtype},
                   {"order", "C"},
                   {"shape", std::vector<int>(static_cast<std::size_t>(g.dim()), g.size())},
                   {"domain", domain_name(domain)},
                   {"grid", grid_header(g)}};
  std::filesystem::path hp = base;
  hp += ".json";
  std::ofstream out(hp);
  if (!out) throw FieldIoError("cannot open for writing: " + hp.string());
  out << h.dump(2) << "\n";
  if (!out) throw FieldIoError("write failed: " + hp.string());
}

}  // namespace detail

inline void write_field(const ScalarField& f, const std::filesystem::path& base,
                        Domain domain = Domain::Spatial) {
  detail::write_header(base, f.grid, "f64", domain);
  std::filesystem::path bp = base;
  bp += ".bin";
  detail::write_payload(bp, f.values.data(), f.values.size() * sizeof(double));
}

inline void write_field(const SpectrumField& f, const std::filesystem::path& base,
                        Domain domain = Domain::Frequency) {
  detail::write_header(base, f.grid, "c128", domain);
  std::filesystem::path bp = base;
  bp += ".bin";
  detail::write_payload(bp, f.values.data(),
                        f.values.size() * 2 * sizeof(double));
}

inline LoadedField read_field(const std::filesystem::path& base) {
  std::filesystem::path hp = base;
  hp += ".json";
  std::ifstream in(hp);
  if (!in) throw FieldIoError("cannot open header: " + hp.string());
  nlohmann::json h;
  try {
    in >> h;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedHeaderError("unparsable header " + hp.string() + ": " + e.what());
  }

  int version, dim, n;
  double dx;
  std::string dtype, order, domain_str;
  std::vector<int> shape;
  try {
    version = h.at("version").get<int>();
    dtype = h.at("dtype").get<std::string>();
    order = h.at("order").get<std::string>();
    shape = h.at("shape").get<std::vector<int>>();
    domain_str = h.at("domain").get<std::string>();
    dim = h.at("grid").at("dim").get<int>();
    n = h.at("grid").at("N").get<int>();
    dx = h.at("grid").at("dx").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedHeaderError("missing or mistyped header field in " + hp.string() +
                               ": " + e.what());
  }
  if (version != 1)
    throw MalformedHeaderError("unsupported field file version " + std::to_string(version));
  if (order != "C") throw MalformedHeaderError("unsupported storage order: " + order);
  if (domain_str != "spatial" && domain_str != "frequency")
    throw MalformedHeaderError("unknown domain: " + domain_str);
  if (dtype != "f64" && dtype != "c128")
    throw ShapeMismatchError("unknown dtype: " + dtype);

  GridSpec grid = [&] {
    try {
      return GridSpec(dim, n, dx);
    } catch (const std::invalid_argument& e) {
      throw MalformedHeaderError(std::string("invalid grid in header: ") + e.what());
    }
  }();
  if (shape.size() != static_cast<std::size_t>(grid.dim()))
    throw ShapeMismatchError("shape rank does not match grid dim");
  for (int s : shape)
    if (s != grid.size()) throw ShapeMismatchError("shape does not match grid N");

  std::filesystem::path bp = base;
  bp += ".bin";
  std::ifstream bin(bp, std::ios::binary | std::ios::ate);
  if (!bin) throw FieldIoError("cannot open payload: " + bp.string());
  const std::uintmax_t actual = static_cast<std::uintmax_t>(bin.tellg());
  const std::size_t samples = grid.num_samples();
  const std::uintmax_t expected =
      static_cast<std::uintmax_t>(samples) * (dtype == "f64" ? 8 : 16);
  if (actual < expected)
    throw TruncatedPayloadError("payload " + bp.string() + " holds " +
                                std::to_string(actual) + " bytes, expected " +
                                std::to_string(expected));
  if (actual > expected)
    throw ShapeMismatchError("payload " + bp.string() + " larger than header shape implies");
  bin.seekg(0);

  const Domain domain = domain_str == "spatial" ? Domain::Spatial : Domain::Frequency;
  if (dtype == "f64") {
    std::vector<double> v(samples);
    bin.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(expected));
    if (!bin) throw TruncatedPayloadError("short read on " + bp.string());
    return LoadedField{ScalarField(grid, std::move(v)), domain};
  }
  std::vector<std::complex<double>> v(samples);
  bin.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(expected));
  if (!bin) throw TruncatedPayloadError("short read on " + bp.string());
  return LoadedField{SpectrumField(grid, std::move(v)), domain};
}

inline ScalarField read_scalar_field(const std::filesystem::path& base) {
  LoadedField lf = read_field(base);
  if (!std::holds_alternative<ScalarField>(lf.data))
    throw ShapeMismatchError("expected f64 field at " + base.string());
  return std::get<ScalarField>(std::move(lf.data));
}

inline SpectrumField read_spectrum_field(const std::filesystem::path& base) {
  LoadedField lf = read_field(base);
  if (!std::holds_alternative<SpectrumField>(lf.data))
    throw ShapeMismatchError("expected c128 field at " + base.string());
  return std::get<SpectrumField>(std::move(lf.data));
}

}  // namespace rsw

#endif  // RSW_FIELD_IO_HPP
