#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sppn {

enum class NodeRole : std::uint8_t {
  IsacTransmitter,
  CommReceiver,
  SensingTarget,
  PrivateUser,
  Eavesdropper,
  Jammer,
  Ris,
};

constexpr std::string_view role_name(NodeRole role) {
  switch (role) {
    case NodeRole::IsacTransmitter: return "transmitters";
    case NodeRole::CommReceiver: return "receivers";
    case NodeRole::SensingTarget: return "sensing_targets";
    case NodeRole::PrivateUser: return "private_users";
    case NodeRole::Eavesdropper: return "eavesdroppers";
    case NodeRole::Jammer: return "jammers";
    case NodeRole::Ris: return "ris";
  }
  return "unknown";
}

// Stable identity of a placed node: role plus index within that role's list.
struct NodeRef {
  NodeRole role = NodeRole::IsacTransmitter;
  std::size_t index = 0;
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

constexpr std::uint64_t node_key(NodeRef n) {
  return (static_cast<std::uint64_t>(n.role) << 56) |
         (static_cast<std::uint64_t>(n.index) & 0x00ffffffffffffffULL);
}

}  // namespace sppn
