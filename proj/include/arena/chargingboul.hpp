#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "arena/domain.hpp"
#include "arena/opponent_model.hpp"
#include "arena/persistence.hpp"
#include "arena/protocol.hpp"

namespace arena {

/// Per-session bidding parameters.
struct StrategyParams {
    double min_utility = 0.5;      // utility the goal curve reaches at t = 1
    double concession_shape = 0.1; // smaller values delay concession further
    double tolerance = kToleranceMax;
};

inline constexpr double kDefaultMinUtility = 0.5;
inline constexpr double kDefaultConcessionShape = 0.1;
inline constexpr double kConcederMinUtility = 0.4;
inline constexpr double kLatePhaseMinUtility = 0.3;

/// Time-dependent utility goal: starts at 1, ends at min_utility, with
/// the concession shaped by t^(1/shape). Exact at both endpoints.
double utility_goal(double t, double min_utility, double concession_shape);

struct UtilityInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Selection band around the goal, half-width (3t+1) * tolerance,
/// clamped to [0, 1]. Widens as the clock advances.
UtilityInterval bid_interval(double t, double goal, double tolerance);

/// Concession shape tuned to a Boulware opponent: 0.2 * 2^(5 - ubi).
double adapt_shape(int ubi);

/// Clock threshold after which the late-phase concession applies
/// against a Boulware opponent: 1 - 0.5^ubi.
double late_phase_threshold(int ubi);

/// Session parameters from the previous session's stats. No stats or a
/// Hardliner give the defaults; a Boulware keeps the default floor but
/// adapts the shape to its ubi; a Conceder lowers the floor to 0.4.
StrategyParams configure_for_session(const std::optional<OpponentStats>& prior_stats,
                                     double default_min_utility = kDefaultMinUtility,
                                     double default_shape = kDefaultConcessionShape);

/// Adaptive Boulware-style negotiator. Bids are drawn uniformly from
/// the utility band around the goal curve, a selected bid never falls
/// below the best offer received so far (that offer is re-proposed
/// instead), and against opponents classified Boulware the endgame
/// lowers the floor to 0.3 and re-proposes the best received offer when
/// the frequency model predicts the opponent gains little from it.
/// An offer is accepted whenever it is at least as good as the bid the
/// agent generated that turn. Opponent stats are recorded per session
/// and persisted through an optional stats store keyed by opponent id.
class ChargingBoulAgent final : public Agent {
public:
    struct Options {
        double default_min_utility = kDefaultMinUtility;
        double default_shape = kDefaultConcessionShape;
    };

    explicit ChargingBoulAgent(std::string id, StatsStore* store = nullptr, Options options = {});

    void begin_session(const SessionContext& ctx) override;
    Action act(const std::optional<Bid>& pending, double t) override;
    void end_session(const SessionView& view) override;

    const StrategyParams& params() const { return params_; }
    OpponentClass opponent_class() const { return opponent_class_; }
    const std::optional<OpponentStats>& prior_stats() const { return prior_stats_; }
    const std::optional<OpponentStats>& last_recorded_stats() const { return last_recorded_; }

private:
    struct ReceivedBest {
        Bid bid;
        double utility = 0.0;
    };

    struct Candidate {
        Bid bid;
        double utility = 0.0;
    };

    Candidate select_bid(double t);
    void note_received(const Bid& bid, double own_utility);

    StatsStore* store_;
    Options options_;

    // Session state, reset by begin_session.
    const Domain* domain_ = nullptr;
    const LinearAdditiveProfile* profile_ = nullptr;
    std::string opponent_id_;
    std::optional<BidSpace> space_;
    std::optional<FrequencyModel> frequency_;
    std::optional<ReceivedBest> best_received_;
    std::optional<OpponentStats> prior_stats_;
    OpponentClass opponent_class_ = OpponentClass::Unknown;
    StrategyParams params_;
    bool late_phase_entered_ = false;
    std::mt19937_64 rng_;
    std::optional<OpponentStats> last_recorded_;
};

}  // namespace arena
