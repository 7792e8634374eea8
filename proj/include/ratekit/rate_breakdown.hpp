#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ratekit/coding_rate.hpp"

namespace ratekit {

enum class Method { single_stage, m1, m2, m3, m4, multihop, multihop_avg, original_hc };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view s) noexcept;

// Penalty constants of the hierarchical throughput: the general-Q derivation forms, or
// the Q = 2 constants as printed in the main theorem.
enum class ConstantsVariant { derivation, theorem3 };

std::string_view to_string(ConstantsVariant v) noexcept;
std::optional<ConstantsVariant> parse_constants(std::string_view s) noexcept;

// Which entry of the coding-rate sequence bounds a t-stage scheme. A t-stage scheme
// crosses t backhaul-limited MIMO hops, so the default is R^(t+1); `stage_count` uses R^(t).
enum class CodingRateIndex { stage_count_plus_one, stage_count };

// sum_rate = coding_rate * packet_throughput.
struct RateBreakdown {
  Method method = Method::single_stage;
  double coding_rate = 0.0;        // bits/symbol
  double packet_throughput = 0.0;  // messages/slot
  double sum_rate = 0.0;           // bits/s/Hz
  std::vector<double> cluster_sizes;  // outermost stage first, continuous values
  int t_used = 1;
  int q_used = 1;
  RelayScheme relay = RelayScheme::qmf_optimal;
  int reuse = 2;
  double snr = 0.0;
  double p_i = 0.0;
};

}  // namespace ratekit
