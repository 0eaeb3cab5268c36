#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arena/domain.hpp"
#include "arena/persistence.hpp"
#include "arena/protocol.hpp"

namespace arena {

/// Classic time-dependent tactic. The target utility decays from 1 to
/// floor along t^(1/e): e < 1 concedes late (Boulware-like), e = 1 is
/// linear, e > 1 concedes early (Conceder-like).
struct TimeDependentParams {
    double e = 1.0;
    double floor = 0.0;
};

double time_dependent_target(double t, const TimeDependentParams& params);

/// Offers a random bid at or above the current target (nearest below if
/// none exists) and accepts anything at or above it.
class TimeDependentAgent final : public Agent {
public:
    TimeDependentAgent(std::string id, TimeDependentParams params);

    void begin_session(const SessionContext& ctx) override;
    Action act(const std::optional<Bid>& pending, double t) override;

    const TimeDependentParams& params() const { return params_; }

private:
    TimeDependentParams params_;
    const LinearAdditiveProfile* profile_ = nullptr;
    std::optional<BidSpace> space_;
    std::mt19937_64 rng_;
};

/// Always offers a maximum-own-utility bid; accepts only near-maximal
/// offers (own utility >= 0.95).
class HardlinerAgent final : public Agent {
public:
    explicit HardlinerAgent(std::string id);

    void begin_session(const SessionContext& ctx) override;
    Action act(const std::optional<Bid>& pending, double t) override;

private:
    const LinearAdditiveProfile* profile_ = nullptr;
    std::optional<BidSpace> space_;
};

/// Offers uniformly random bids; accepts at own utility >= 0.5.
class RandomAgent final : public Agent {
public:
    explicit RandomAgent(std::string id);

    void begin_session(const SessionContext& ctx) override;
    Action act(const std::optional<Bid>& pending, double t) override;

private:
    const LinearAdditiveProfile* profile_ = nullptr;
    std::optional<BidSpace> space_;
    std::mt19937_64 rng_;
};

/// Build an agent from a registry spec: `chargingboul`, `boulware`,
/// `linear`, `conceder`, `hardliner`, or `random`, with optional
/// parameter suffixes such as `conceder:e=2,floor=0.1` or
/// `chargingboul:m=0.6,E=0.2`. The spec string doubles as the agent id
/// unless id_override is given. The store is used only by agents that
/// persist opponent stats.
std::unique_ptr<Agent> make_agent(const std::string& spec, StatsStore* store = nullptr,
                                  std::string id_override = "");

std::vector<std::string> registered_agent_names();

}  // namespace arena
