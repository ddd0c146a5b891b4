#ifndef DAMPLAB_SERIALIZE_HPP
#define DAMPLAB_SERIALIZE_HPP

#include <json.hpp>

#include "damplab/channels.hpp"
#include "damplab/coherence.hpp"
#include "damplab/structure.hpp"

namespace damplab {

// {"kind": "ad"|"pd", "param": x, "side": "left"|"right"|"both", "n": k}
void to_json(nlohmann::json& j, const ChannelSpec& spec);
ChannelSpec channel_spec_from_json(const nlohmann::json& j);

// {"kind", "param", "side"}: a ChannelSpec without n.
void to_json(nlohmann::json& j, const ChannelConfig& config);

// {"frozen": bool, "reason": <FrozenReason name>, "channel_config": {...}}
void to_json(nlohmann::json& j, const FrozenVerdict& verdict);

// {"c_in", "trajectory": [{"n", "c"}...], "c_analytic", "c_limit", "frozen"}
// c_analytic and c_limit are null for phase damping.
void to_json(nlohmann::json& j, const CoherenceReport& report);

}  // namespace damplab

#endif  // DAMPLAB_SERIALIZE_HPP
