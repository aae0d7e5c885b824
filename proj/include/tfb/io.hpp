#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tfb/cohen.hpp"
#include "tfb/signal.hpp"
#include "tfb/tfarray.hpp"

namespace tfb {

using json = nlohmann::json;

inline constexpr const char* kLibraryVersion = "0.1.0";

namespace io {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hash_hex(const std::string& data) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(data)));
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::invalid_input, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::invalid_input, "cannot write file: " + path);
  out << data;
}

// --- base64 (for inline sample payloads) ---

inline const char* b64_alphabet() {
  return "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
}

inline std::string base64_encode(const std::string& bytes) {
  const char* tbl = b64_alphabet();
  std::string out;
  size_t i = 0;
  while (i + 2 < bytes.size()) {
    uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16) |
                 (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                 static_cast<unsigned char>(bytes[i + 2]);
    out += tbl[(v >> 18) & 63];
    out += tbl[(v >> 12) & 63];
    out += tbl[(v >> 6) & 63];
    out += tbl[v & 63];
    i += 3;
  }
  size_t rem = bytes.size() - i;
  if (rem == 1) {
    uint32_t v = static_cast<unsigned char>(bytes[i]) << 16;
    out += tbl[(v >> 18) & 63];
    out += tbl[(v >> 12) & 63];
    out += "==";
  } else if (rem == 2) {
    uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16) |
                 (static_cast<unsigned char>(bytes[i + 1]) << 8);
    out += tbl[(v >> 18) & 63];
    out += tbl[(v >> 12) & 63];
    out += tbl[(v >> 6) & 63];
    out += "=";
  }
  return out;
}

inline std::string base64_decode(const std::string& text) {
  int rev[256];
  for (int& r : rev) r = -1;
  const char* tbl = b64_alphabet();
  for (int i = 0; i < 64; ++i) rev[static_cast<unsigned char>(tbl[i])] = i;
  std::string out;
  uint32_t acc = 0;
  int bits = 0;
  for (char ch : text) {
    if (ch == '=' || ch == '\n' || ch == '\r') continue;
    int v = rev[static_cast<unsigned char>(ch)];
    if (v < 0) fail(errc::invalid_input, "base64: invalid character");
    acc = (acc << 6) | static_cast<uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out += static_cast<char>((acc >> bits) & 0xff);
    }
  }
  return out;
}

// --- signal JSON / shorthand ---

inline AxisGrid grid_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("delta"))
    fail(errc::invalid_input, "grid JSON needs fields n and delta");
  return AxisGrid(j.at("n").get<int>(), j.at("delta").get<double>());
}

inline json grid_to_json(const AxisGrid& g) { return json{{"n", g.n}, {"delta", g.delta}}; }

// Either a 1D signal or a phase-space symbol description.
struct ParsedInput {
  std::variant<SampledSignal, GenGaussian> value;

  bool is_signal() const { return std::holds_alternative<SampledSignal>(value); }
  const SampledSignal& signal() const {
    if (!is_signal()) fail(errc::invalid_input, "expected a 1D signal, got a phase-space symbol");
    return std::get<SampledSignal>(value);
  }
  const GenGaussian& symbol() const {
    if (is_signal()) fail(errc::invalid_input, "expected a phase-space symbol, got a 1D signal");
    return std::get<GenGaussian>(value);
  }
};

inline std::vector<cplx> samples_from_csv_text(const std::string& text, int n) {
  std::vector<cplx> samples(static_cast<size_t>(n), cplx{0.0, 0.0});
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first && line.find("index") != std::string::npos) {
      first = false;
      continue;
    }
    first = false;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> cols;
    while (std::getline(ls, tok, ',')) cols.push_back(tok);
    if (cols.size() != 3) fail(errc::invalid_input, "sample CSV rows must be index,re,im");
    int idx = std::stoi(cols[0]);
    if (idx < 0 || idx >= n) fail(errc::invalid_input, "sample CSV index out of range");
    samples[static_cast<size_t>(idx)] = cplx{std::stod(cols[1]), std::stod(cols[2])};
  }
  return samples;
}

inline ParsedInput parse_signal_json(const json& j, const AxisGrid& fallback_grid) {
  const std::string kind = j.value("kind", "");
  if (kind == "gaussian") {
    AxisGrid g = j.contains("grid") ? grid_from_json(j.at("grid")) : fallback_grid;
    GaussianAtom atom;
    atom.lambda = j.value("lambda", 1.0);
    if (!(atom.lambda > 0.0)) fail(errc::invalid_input, "gaussian signal: lambda must be > 0");
    atom.x0 = j.value("x0", 0.0);
    atom.xi0 = j.value("xi0", 0.0);
    atom.coef = cplx{j.value("amplitude", 1.0), 0.0};
    return ParsedInput{sample_atoms({atom}, g)};
  }
  if (kind == "gen_gaussian") {
    return ParsedInput{GenGaussian(j.value("amplitude", 1.0), j.at("a").get<double>(),
                                   j.at("b").get<double>(), j.at("c").get<double>())};
  }
  if (kind == "samples") {
    AxisGrid g = grid_from_json(j.at("grid"));
    std::vector<cplx> samples;
    if (j.contains("csv")) {
      samples = samples_from_csv_text(read_file(j.at("csv").get<std::string>()), g.n);
    } else if (j.contains("base64")) {
      std::string bytes = base64_decode(j.at("base64").get<std::string>());
      if (bytes.size() != static_cast<size_t>(g.n) * 2 * sizeof(double))
        fail(errc::invalid_input, "samples base64 payload has wrong length");
      samples.resize(static_cast<size_t>(g.n));
      const double* d = reinterpret_cast<const double*>(bytes.data());
      for (int k = 0; k < g.n; ++k) samples[static_cast<size_t>(k)] = cplx{d[2 * k], d[2 * k + 1]};
    } else {
      fail(errc::invalid_input, "samples signal needs a csv or base64 payload");
    }
    return ParsedInput{SampledSignal(g, std::move(samples))};
  }
  fail(errc::invalid_input, "unknown signal kind '" + kind + "'");
}

// Shorthand grammar: gauss:<l> | gengauss:<a>,<b>,<c> | shift:<x0>,<xi0>:gauss:<l>
inline ParsedInput parse_shorthand(const std::string& s, const AxisGrid& grid) {
  auto need_num = [&](const std::string& tok) {
    try {
      size_t pos = 0;
      double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      fail(errc::invalid_input, "shorthand: cannot parse number '" + tok + "'");
    }
  };
  if (s.rfind("gauss:", 0) == 0) {
    double lam = need_num(s.substr(6));
    if (!(lam > 0.0)) fail(errc::invalid_input, "shorthand: gauss lambda must be > 0");
    return ParsedInput{gaussian(lam, grid)};
  }
  if (s.rfind("gengauss:", 0) == 0) {
    std::istringstream in(s.substr(9));
    std::string tok;
    std::vector<double> vals;
    while (std::getline(in, tok, ',')) vals.push_back(need_num(tok));
    if (vals.size() != 3) fail(errc::invalid_input, "shorthand: gengauss needs a,b,c");
    return ParsedInput{GenGaussian(1.0, vals[0], vals[1], vals[2])};
  }
  if (s.rfind("shift:", 0) == 0) {
    std::string rest = s.substr(6);
    auto second_colon = rest.find(':');
    if (second_colon == std::string::npos)
      fail(errc::invalid_input, "shorthand: shift:<x0>,<xi0>:<base>");
    std::string shifts = rest.substr(0, second_colon);
    std::string base = rest.substr(second_colon + 1);
    auto comma = shifts.find(',');
    if (comma == std::string::npos) fail(errc::invalid_input, "shorthand: shift needs x0,xi0");
    double x0 = need_num(shifts.substr(0, comma));
    double xi0 = need_num(shifts.substr(comma + 1));
    ParsedInput inner = parse_shorthand(base, grid);
    return ParsedInput{modulate(translate(inner.signal(), x0), xi0)};
  }
  fail(errc::invalid_input, "unknown signal shorthand '" + s + "'");
}

// A signal argument is either a shorthand or a path to a JSON file.
inline ParsedInput parse_signal_arg(const std::string& arg, const AxisGrid& grid) {
  if (arg.rfind("gauss:", 0) == 0 || arg.rfind("gengauss:", 0) == 0 || arg.rfind("shift:", 0) == 0)
    return parse_shorthand(arg, grid);
  json j = json::parse(read_file(arg));
  return parse_signal_json(j, grid);
}

// --- TfArray / signal CSV ---

inline std::string tfarray_csv(const TfArray& a, const std::string& manifest_name) {
  std::ostringstream out;
  out << "# manifest=" << manifest_name << "\n";
  out << "i,j,x,xi,re,im\n";
  for (int i = 0; i < a.xgrid.n; ++i)
    for (int j = 0; j < a.xigrid.n; ++j) {
      const cplx& z = a.at(i, j);
      out << i << ',' << j << ',' << fmt17(a.x(i)) << ',' << fmt17(a.xi(j)) << ','
          << fmt17(z.real()) << ',' << fmt17(z.imag()) << "\n";
    }
  return out.str();
}

inline std::string signal_csv(const SampledSignal& f, const std::string& manifest_name) {
  std::ostringstream out;
  out << "# manifest=" << manifest_name << "\n";
  out << "index,re,im\n";
  for (int k = 0; k < f.grid.n; ++k)
    out << k << ',' << fmt17(f.samples[static_cast<size_t>(k)].real()) << ','
        << fmt17(f.samples[static_cast<size_t>(k)].imag()) << "\n";
  return out.str();
}

inline json tfarray_meta(const TfArray& a, const std::string& op, const json& inputs,
                         const std::string& manifest_name) {
  return json{{"op", op},
              {"inputs", inputs},
              {"manifest", manifest_name},
              {"xgrid", grid_to_json(a.xgrid)},
              {"xigrid", grid_to_json(a.xigrid)}};
}

// --- run manifest ---

struct Manifest {
  std::string subcommand;
  json parameters;
  json inputs = json::array();   // {arg, value, hash}
  json outputs = json::array();  // paths

  void add_input(const std::string& arg, const std::string& value) {
    inputs.push_back({{"arg", arg}, {"value", value}, {"hash", hash_hex(value)}});
  }
  void add_input_file(const std::string& arg, const std::string& path) {
    inputs.push_back({{"arg", arg}, {"value", path}, {"hash", hash_hex(read_file(path))}});
  }

  json to_json() const {
    return json{{"tool", "tfbounds"},
                {"version", kLibraryVersion},
                {"subcommand", subcommand},
                {"parameters", parameters},
                {"inputs", inputs},
                {"outputs", outputs}};
  }
};

} // namespace io
} // namespace tfb
