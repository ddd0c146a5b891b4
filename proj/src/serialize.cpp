#include "damplab/serialize.hpp"

#include <string>

#include "damplab/error.hpp"

namespace damplab {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void to_json(json& j, const ChannelConfig& config) {
  j = json{{"kind", to_string(config.kind.type())},
           {"param", config.kind.param()},
           {"side", to_string(config.side)}};
}

void to_json(json& j, const ChannelSpec& spec) {
  to_json(j, ChannelConfig{spec.kind, spec.side});
  j["n"] = spec.n;
}

ChannelSpec channel_spec_from_json(const json& j) {
  try {
    const ChannelType type = parse_channel_type(j.at("kind").get<std::string>());
    const double param = j.at("param").get<double>();
    const Side side = parse_side(j.at("side").get<std::string>());
    const json& n = j.at("n");
    if (!n.is_number_integer() || n.get<long long>() < 0)
      throw Error(ErrorCode::ParseError, "\"n\" must be a nonnegative integer");
    const ChannelKind kind = type == ChannelType::AmplitudeDamping
                                 ? ChannelKind::amplitude_damping(param)
                                 : ChannelKind::phase_damping(param);
    return {kind, side, n.get<std::size_t>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("channel spec: ") + e.what());
  }
}

void to_json(json& j, const FrozenVerdict& verdict) {
  j = json{{"frozen", verdict.frozen},
           {"reason", to_string(verdict.reason)},
           {"channel_config", verdict.channel_config}};
}

void to_json(json& j, const CoherenceReport& report) {
  json trajectory = json::array();
  for (const auto& p : report.trajectory) trajectory.push_back({{"n", p.n}, {"c", p.c}});
  j = json{{"c_in", report.c_in},
           {"trajectory", std::move(trajectory)},
           {"c_analytic", optional_number(report.c_analytic)},
           {"c_limit", optional_number(report.c_limit)},
           {"frozen", report.frozen}};
}

}  // namespace damplab
