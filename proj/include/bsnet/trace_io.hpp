#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bsnet/errors.hpp"
#include "bsnet/memory_net.hpp"
#include "bsnet/threshold_net.hpp"

// Text renderings of traces and the JSON descriptions of nets.

namespace bsnet {

enum class trace_style { table2, csv, json };

// One rendered state: bits from the highest neuron down to neuron 1.
inline std::string trace_line(const configuration& c) {
  std::string out;
  for (std::size_t i = c.size(); i >= 1; --i) {
    if (!out.empty()) out += ' ';
    out += c.get(i) ? '1' : '0';
  }
  return out;
}

namespace detail {

inline std::string bits_high_to_low(const configuration& c) {
  std::string out;
  out.reserve(c.size());
  for (std::size_t i = c.size(); i >= 1; --i) out += c.get(i) ? '1' : '0';
  return out;
}

}  // namespace detail

// Renders a trace, one time step per row, neurons listed high to low.
//   table2: "Neurones N .. 1" header, a "Temps" line, then "t  bits".
//   csv:    "nN,...,n1" header, then rows of comma-separated bits.
//   json:   a meta line {"neurons":N,"rows":R}, then one object per row.
// `neurons` may be passed explicitly so an empty trace still gets a header.
inline std::string format_trace(const std::vector<configuration>& rows,
                                trace_style style, std::size_t neurons = 0) {
  if (neurons == 0 && !rows.empty()) neurons = rows.front().size();
  for (const configuration& row : rows)
    if (row.size() != neurons)
      throw dimension_error("trace rows differ in neuron count");

  std::ostringstream out;
  switch (style) {
    case trace_style::table2: {
      out << "Neurones";
      for (std::size_t i = neurons; i >= 1; --i) out << ' ' << i;
      out << "\nTemps\n";
      for (std::size_t t = 0; t < rows.size(); ++t)
        out << t << ' ' << trace_line(rows[t]) << '\n';
      break;
    }
    case trace_style::csv: {
      for (std::size_t i = neurons; i >= 1; --i) {
        out << 'n' << i;
        if (i > 1) out << ',';
      }
      out << '\n';
      for (const configuration& row : rows) {
        for (std::size_t i = neurons; i >= 1; --i) {
          out << row.get(i);
          if (i > 1) out << ',';
        }
        out << '\n';
      }
      break;
    }
    case trace_style::json: {
      nlohmann::json meta = {{"neurons", neurons}, {"rows", rows.size()}};
      out << meta.dump() << '\n';
      for (std::size_t t = 0; t < rows.size(); ++t) {
        nlohmann::json row = {{"t", t}, {"bits", detail::bits_high_to_low(rows[t])}};
        out << row.dump() << '\n';
      }
      break;
    }
  }
  return out.str();
}

inline nlohmann::json orbit_json(std::size_t transient, std::size_t cycle,
                                 std::size_t steps, std::size_t state_bits) {
  return nlohmann::json{{"transient", transient},
                        {"cycle", cycle},
                        {"steps", steps},
                        {"state_bits", state_bits}};
}

// --- threshold net description -------------------------------------------
// { "size": N, "weights": [[i, j, w], ...], "thresholds": [N ints],
//   "initial": [N bits] }

inline nlohmann::json to_json(const threshold_net& net,
                              const configuration& init) {
  nlohmann::json weights = nlohmann::json::array();
  for (std::size_t i = 1; i <= net.size(); ++i)
    for (std::size_t j = 1; j <= net.size(); ++j)
      if (net.weight(i, j) != 0)
        weights.push_back({i, j, net.weight(i, j)});
  nlohmann::json thresholds = nlohmann::json::array();
  for (std::size_t i = 1; i <= net.size(); ++i)
    thresholds.push_back(net.threshold(i));
  nlohmann::json initial = nlohmann::json::array();
  for (std::size_t i = 1; i <= init.size(); ++i) initial.push_back(init.get(i));
  return nlohmann::json{{"size", net.size()},
                        {"weights", weights},
                        {"thresholds", thresholds},
                        {"initial", initial}};
}

namespace detail {

inline std::size_t json_size_field(const nlohmann::json& j, const char* what) {
  if (!j.contains("size") || !j["size"].is_number_unsigned() ||
      j["size"].get<std::size_t>() == 0)
    throw parse_error(std::string(what) + ": \"size\" must be a positive integer");
  return j["size"].get<std::size_t>();
}

inline std::vector<std::uint8_t> json_bits(const nlohmann::json& j,
                                           std::size_t expect,
                                           const char* what) {
  if (!j.is_array() || j.size() != expect)
    throw parse_error(std::string(what) + " must be an array of " +
                      std::to_string(expect) + " bits");
  std::vector<std::uint8_t> bits;
  bits.reserve(expect);
  for (const auto& b : j) {
    if (!b.is_number_integer() ||
        (b.get<std::int64_t>() != 0 && b.get<std::int64_t>() != 1))
      throw parse_error(std::string(what) + " entries must be 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(b.get<std::int64_t>()));
  }
  return bits;
}

}  // namespace detail

inline net_with_state mcp_net_from_json(const nlohmann::json& j) {
  const std::size_t size = detail::json_size_field(j, "net description");
  threshold_net net(size);
  if (!j.contains("weights") || !j["weights"].is_array())
    throw parse_error("net description: \"weights\" must be an array of [i, j, w]");
  for (const auto& triple : j["weights"]) {
    if (!triple.is_array() || triple.size() != 3)
      throw parse_error("net description: each weight entry must be [i, j, w]");
    const std::size_t i = triple[0].get<std::size_t>();
    const std::size_t col = triple[1].get<std::size_t>();
    if (i < 1 || i > size || col < 1 || col > size)
      throw parse_error("net description: weight index out of range");
    net.set_weight(i, col, triple[2].get<std::int64_t>());
  }
  if (!j.contains("thresholds") || !j["thresholds"].is_array() ||
      j["thresholds"].size() != size)
    throw parse_error("net description: \"thresholds\" must list one integer per neuron");
  for (std::size_t i = 1; i <= size; ++i)
    net.set_threshold(i, j["thresholds"][i - 1].get<std::int64_t>());
  configuration init = configuration::from_bits(
      detail::json_bits(j.value("initial", nlohmann::json::array()), size,
                        "net description: \"initial\""));
  return {std::move(net), std::move(init)};
}

// --- memory net description ----------------------------------------------
// { "size": N, "memory": k, "taps": [[i, j, s, w], ...],
//   "thresholds": [N ints], "initial_window": [k rows of N bits, oldest first] }

struct memory_net_with_window {
  memory_net net;
  memory_window window;
};

inline nlohmann::json to_json(const memory_net& net,
                              const memory_window& window) {
  nlohmann::json taps = nlohmann::json::array();
  for (const memory_net::tap& t : net.all_taps())
    taps.push_back({t.target, t.source, t.delay, t.weight});
  nlohmann::json thresholds = nlohmann::json::array();
  for (std::size_t i = 1; i <= net.size(); ++i)
    thresholds.push_back(net.threshold(i));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < window.memory(); ++i) {
    const configuration& c = window.at_offset(i);
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t neuron = 1; neuron <= c.size(); ++neuron)
      row.push_back(c.get(neuron));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"size", net.size()},
                        {"memory", net.memory()},
                        {"taps", taps},
                        {"thresholds", thresholds},
                        {"initial_window", rows}};
}

inline memory_net_with_window memory_net_from_json(const nlohmann::json& j) {
  const std::size_t size = detail::json_size_field(j, "memory net description");
  if (!j.contains("memory") || !j["memory"].is_number_unsigned() ||
      j["memory"].get<std::size_t>() == 0)
    throw parse_error("memory net description: \"memory\" must be a positive integer");
  const std::size_t memory = j["memory"].get<std::size_t>();
  memory_net net(size, memory);
  if (!j.contains("taps") || !j["taps"].is_array())
    throw parse_error("memory net description: \"taps\" must be an array of [i, j, s, w]");
  for (const auto& quad : j["taps"]) {
    if (!quad.is_array() || quad.size() != 4)
      throw parse_error("memory net description: each tap must be [i, j, s, w]");
    const std::size_t i = quad[0].get<std::size_t>();
    const std::size_t src = quad[1].get<std::size_t>();
    const std::size_t delay = quad[2].get<std::size_t>();
    if (i < 1 || i > size || src < 1 || src > size || delay < 1 ||
        delay > memory)
      throw parse_error("memory net description: tap index or delay out of range");
    net.add_tap(i, src, delay, quad[3].get<std::int64_t>());
  }
  if (!j.contains("thresholds") || !j["thresholds"].is_array() ||
      j["thresholds"].size() != size)
    throw parse_error("memory net description: \"thresholds\" must list one integer per neuron");
  for (std::size_t i = 1; i <= size; ++i)
    net.set_threshold(i, j["thresholds"][i - 1].get<std::int64_t>());
  if (!j.contains("initial_window") || !j["initial_window"].is_array() ||
      j["initial_window"].size() != memory)
    throw parse_error("memory net description: \"initial_window\" must hold one row per memory slot, oldest first");
  std::vector<configuration> configs;
  configs.reserve(memory);
  for (const auto& row : j["initial_window"])
    configs.push_back(configuration::from_bits(
        detail::json_bits(row, size, "memory net description: window row")));
  return {std::move(net), memory_window::from_configs(std::move(configs))};
}

// --- file helpers ----------------------------------------------------------

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  return j;
}

inline void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << text;
}

}  // namespace bsnet
