// Copyright 2026 The liarq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liarq/adversary.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "liarq/errors.hpp"

namespace liarq {

namespace {

// "name" or "name:key=value"; returns name and the optional value for key.
std::pair<std::string_view, std::optional<std::uint32_t>> split_descriptor(std::string_view text,
                                                                          std::string_view key) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return {text, std::nullopt};
  const std::string_view name = text.substr(0, colon);
  std::string_view arg = text.substr(colon + 1);
  if (arg.substr(0, key.size()) != key || arg.size() <= key.size() || arg[key.size()] != '=') {
    throw ConfigError("strategy '" + std::string(text) + "' expects " + std::string(key) + "=<count>");
  }
  arg.remove_prefix(key.size() + 1);
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size()) {
    throw ConfigError("bad count in strategy '" + std::string(text) + "'");
  }
  return {name, value};
}

std::vector<std::uint32_t> positions_where(std::span<const Pair> l_a, Pair value) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < l_a.size(); ++i) {
    if (l_a[i] == value) out.push_back(static_cast<std::uint32_t>(i + 1));
  }
  return out;
}

// Uniform subset of size min(count, pool.size()), in increasing order.
std::vector<std::uint32_t> draw(const std::vector<std::uint32_t>& pool, std::uint32_t count, Rng& rng) {
  std::vector<std::uint32_t> out;
  out.reserve(std::min<std::size_t>(count, pool.size()));
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), count, rng);
  return out;
}

}  // namespace

StrategyA parse_strategy_a(std::string_view text) {
  if (text == "honest") return HonestA{};
  if (text == "frame") return FrameB{};
  if (text.starts_with("split")) {
    auto [name, n] = split_descriptor(text, "n");
    if (name == "split") return SplitMessage{n.value_or(0)};
  }
  if (text.starts_with("forged")) {
    auto [name, k] = split_descriptor(text, "k");
    if (name == "forged") return ForgedFullList{k.value_or(0)};
  }
  throw ConfigError("unknown strategy for A: '" + std::string(text) + "'");
}

StrategyB parse_strategy_b(std::string_view text) {
  if (text == "honest") return HonestB{};
  if (text.starts_with("flipforge")) {
    auto [name, k] = split_descriptor(text, "k");
    if (name == "flipforge") return FlipAndForge{k};
  }
  throw ConfigError("unknown strategy for B: '" + std::string(text) + "'");
}

std::string to_string(const StrategyA& strategy) {
  struct Name {
    std::string operator()(const HonestA&) const { return "honest"; }
    std::string operator()(const SplitMessage& s) const { return "split:n=" + std::to_string(s.fabrications); }
    std::string operator()(const ForgedFullList& s) const { return "forged:k=" + std::to_string(s.altered); }
    std::string operator()(const FrameB&) const { return "frame"; }
  };
  return std::visit(Name{}, strategy);
}

std::string to_string(const StrategyB& strategy) {
  struct Name {
    std::string operator()(const HonestB&) const { return "honest"; }
    std::string operator()(const FlipAndForge& s) const {
      return s.fakes ? "flipforge:k=" + std::to_string(*s.fakes) : std::string("flipforge");
    }
  };
  return std::visit(Name{}, strategy);
}

bool is_honest(const StrategyA& strategy) { return std::holds_alternative<HonestA>(strategy); }
bool is_honest(const StrategyB& strategy) { return std::holds_alternative<HonestB>(strategy); }

AAction strategy_a_act(const StrategyA& strategy, Bit intended, std::span<const Pair> l_a, Rng& rng) {
  AAction act;
  act.m_ab = intended;
  act.m_ac = intended;
  act.l_ac.assign(l_a.begin(), l_a.end());
  const auto doubles = positions_where(l_a, double_of(intended));

  if (const auto* split = std::get_if<SplitMessage>(&strategy)) {
    act.m_ac = 1 - intended;
    const auto mixed = positions_where(l_a, Pair::Mixed);
    act.requested = split->fabrications;
    act.fabricated = draw(mixed, split->fabrications, rng);
    act.capped = act.fabricated.size() < split->fabrications;
    std::vector<std::uint32_t> to_b = doubles;
    to_b.insert(to_b.end(), act.fabricated.begin(), act.fabricated.end());
    act.to_b = PositionList::from_unsorted(std::move(to_b));
    for (std::uint32_t j : mixed) act.l_ac[j - 1] = double_of(act.m_ac);
    act.altered = mixed;
    return act;
  }

  act.to_b = PositionList(doubles);

  if (const auto* forged = std::get_if<ForgedFullList>(&strategy)) {
    const auto mixed = positions_where(l_a, Pair::Mixed);
    act.requested = forged->altered;
    act.altered = draw(mixed, forged->altered, rng);
    act.capped = act.altered.size() < forged->altered;
    std::bernoulli_distribution coin;
    for (std::uint32_t j : act.altered) act.l_ac[j - 1] = double_of(coin(rng) ? 1 : 0);
    return act;
  }

  if (std::holds_alternative<FrameB>(strategy)) {
    act.m_ac = 1 - intended;
    for (std::uint32_t j : doubles) act.l_ac[j - 1] = Pair::Mixed;
    act.altered = doubles;
  }
  return act;
}

BAction strategy_b_act(const StrategyB& strategy, Bit m_ab, const PositionList& received, std::span<const Bit> l_b,
                       const AcceptanceThreshold& threshold, Rng& rng) {
  BAction act;
  if (const auto* flip = std::get_if<FlipAndForge>(&strategy)) {
    act.m_bc = 1 - m_ab;
    std::vector<std::uint32_t> plausible;
    for (std::size_t i = 0; i < l_b.size(); ++i) {
      if (l_b[i] == m_ab) plausible.push_back(static_cast<std::uint32_t>(i + 1));
    }
    act.requested =
        flip->fakes.value_or(static_cast<std::uint32_t>(std::ceil(threshold.expected_length(l_b.size()))));
    act.forged = draw(plausible, act.requested, rng);
    act.capped = act.forged.size() < act.requested;
    act.forwarded = PositionList(act.forged);
    return act;
  }
  act.m_bc = m_ab;
  act.forwarded = received;
  return act;
}

}  // namespace liarq
