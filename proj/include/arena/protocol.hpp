#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arena/domain.hpp"

namespace arena {

enum class Side { A, B };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }
inline char side_letter(Side s) { return s == Side::A ? 'A' : 'B'; }

/// One move under the alternating offers protocol.
struct Action {
    enum class Kind { Offer, Accept };

    Kind kind = Kind::Offer;
    std::optional<Bid> bid;  // present for offers

    static Action offer(Bid b) { return {Kind::Offer, std::move(b)}; }
    static Action accept() { return {Kind::Accept, std::nullopt}; }
};

struct SessionConfig {
    int deadline_turns = 1000;  // must be >= 2
    Side starting_agent = Side::A;
};

/// What an agent learns when a session starts.
struct SessionContext {
    const Domain* domain = nullptr;
    const LinearAdditiveProfile* profile = nullptr;  // the agent's own preferences
    std::string opponent_id;
    std::uint64_t seed = 0;
    int deadline_turns = 0;
};

/// End-of-session notification from one agent's perspective.
struct SessionView {
    std::vector<Bid> received_bids;          // opponent offers, in order
    std::vector<double> received_utilities;  // own utility of each received bid
    bool agreement = false;
    std::optional<Bid> agreed_bid;
    double own_utility = 0.0;  // reservation on failure
};

class Agent {
public:
    explicit Agent(std::string id) : id_(std::move(id)) {}
    virtual ~Agent() = default;

    /// Identity string, also the persistence key seen by opponents.
    const std::string& id() const { return id_; }

    virtual void begin_session(const SessionContext& ctx) = 0;

    /// Called on the agent's turn with the opponent's pending offer, if
    /// any, and the normalized clock t in [0,1].
    virtual Action act(const std::optional<Bid>& pending, double t) = 0;

    virtual void end_session(const SessionView& view) { (void)view; }

private:
    std::string id_;
};

struct TranscriptRow {
    int turn = 0;  // 1-based
    Side actor = Side::A;
    Action::Kind action = Action::Kind::Offer;
    std::optional<Bid> bid;  // offered bid, or the accepted pending bid
    double utility_a = 0.0;  // true utilities of the row's bid
    double utility_b = 0.0;
};

/// Ordered record of every action in a session.
struct Transcript {
    std::vector<TranscriptRow> rows;

    /// Bids offered by one side, in order.
    std::vector<Bid> bids_by(Side side) const;

    /// Utilities, measured with `side`'s profile, of the bids the other
    /// side offered, in order.
    std::vector<double> received_utilities(Side side) const;
};

struct SessionOutcome {
    bool agreement = false;
    std::optional<Bid> agreed_bid;
    double utility_a = 0.0;  // reservation values on failure
    double utility_b = 0.0;
    int end_turn = 0;        // turn of the accept, or deadline_turns on failure
    double end_time = 0.0;   // end_turn / deadline_turns
    bool protocol_violation = false;
};

/// Sum of both utilities, in [0, 2].
double social_welfare(const SessionOutcome& outcome);

struct SessionResult {
    SessionOutcome outcome;
    Transcript transcript;
};

/// Run one alternating-offers session to agreement or deadline.
///
/// Turns are numbered from 1; the agent acting on turn k observes
/// t = (k-1) / deadline_turns, so the first action sees t = 0. An
/// Accept with no pending offer is a protocol violation: the session is
/// scored as a failure and flagged. Both agents receive an end-of-session
/// view built from their own perspective.
SessionResult run_session(const Domain& domain, Agent& agent_a, Agent& agent_b,
                          const LinearAdditiveProfile& profile_a,
                          const LinearAdditiveProfile& profile_b,
                          const SessionConfig& config, std::uint64_t seed);

/// CSV export: columns turn, actor, action, bid_id, utility_self,
/// utility_opponent_true.
void write_transcript_csv(std::ostream& out, const Transcript& transcript, const Domain& domain);

}  // namespace arena
