#include "arena/protocol.hpp"

#include <ostream>
#include <stdexcept>

#include "arena/rng.hpp"
#include "arena/tournament.hpp"  // format_double

namespace arena {

std::vector<Bid> Transcript::bids_by(Side side) const {
    std::vector<Bid> bids;
    for (const auto& row : rows) {
        if (row.actor == side && row.action == Action::Kind::Offer && row.bid) {
            bids.push_back(*row.bid);
        }
    }
    return bids;
}

std::vector<double> Transcript::received_utilities(Side side) const {
    std::vector<double> utilities;
    for (const auto& row : rows) {
        if (row.actor == opposite(side) && row.action == Action::Kind::Offer && row.bid) {
            utilities.push_back(side == Side::A ? row.utility_a : row.utility_b);
        }
    }
    return utilities;
}

double social_welfare(const SessionOutcome& outcome) {
    return outcome.utility_a + outcome.utility_b;
}

namespace {

SessionView make_view(Side side, const Transcript& transcript, const SessionOutcome& outcome) {
    SessionView view;
    view.received_bids = transcript.bids_by(opposite(side));
    view.received_utilities = transcript.received_utilities(side);
    view.agreement = outcome.agreement;
    view.agreed_bid = outcome.agreed_bid;
    view.own_utility = side == Side::A ? outcome.utility_a : outcome.utility_b;
    return view;
}

}  // namespace

SessionResult run_session(const Domain& domain, Agent& agent_a, Agent& agent_b,
                          const LinearAdditiveProfile& profile_a,
                          const LinearAdditiveProfile& profile_b,
                          const SessionConfig& config, std::uint64_t seed) {
    if (config.deadline_turns < 2) {
        throw std::invalid_argument("deadline must allow at least two turns");
    }
    if (profile_a.issue_count() != domain.issue_count() ||
        profile_b.issue_count() != domain.issue_count()) {
        throw DomainMismatchError("profiles do not match the session domain");
    }

    agent_a.begin_session({&domain, &profile_a, agent_b.id(), hash_combine(seed, 0xA),
                           config.deadline_turns});
    agent_b.begin_session({&domain, &profile_b, agent_a.id(), hash_combine(seed, 0xB),
                           config.deadline_turns});

    SessionResult result;
    auto& transcript = result.transcript;
    auto& outcome = result.outcome;

    std::optional<Bid> pending;
    Side actor = config.starting_agent;
    bool agreement = false;

    for (int turns_elapsed = 0; turns_elapsed < config.deadline_turns; ++turns_elapsed) {
        const double t = static_cast<double>(turns_elapsed) / config.deadline_turns;
        Agent& agent = actor == Side::A ? agent_a : agent_b;
        const Action action = agent.act(pending, t);
        const int turn = turns_elapsed + 1;

        if (action.kind == Action::Kind::Accept) {
            if (!pending) {
                // Accept with nothing on the table: flag and score as failure.
                outcome.protocol_violation = true;
                transcript.rows.push_back({turn, actor, Action::Kind::Accept, std::nullopt, 0, 0});
                break;
            }
            const double ua = utility(profile_a, *pending);
            const double ub = utility(profile_b, *pending);
            transcript.rows.push_back({turn, actor, Action::Kind::Accept, pending, ua, ub});
            outcome.agreement = true;
            outcome.agreed_bid = pending;
            outcome.utility_a = ua;
            outcome.utility_b = ub;
            outcome.end_turn = turn;
            outcome.end_time = static_cast<double>(turn) / config.deadline_turns;
            agreement = true;
            break;
        }

        if (!action.bid) {
            throw std::logic_error("offer action carries no bid");
        }
        const double ua = utility(profile_a, *action.bid);  // also validates the bid
        const double ub = utility(profile_b, *action.bid);
        transcript.rows.push_back({turn, actor, Action::Kind::Offer, action.bid, ua, ub});
        pending = action.bid;
        actor = opposite(actor);
    }

    if (!agreement) {
        outcome.agreement = false;
        outcome.utility_a = profile_a.reservation();
        outcome.utility_b = profile_b.reservation();
        outcome.end_turn = outcome.protocol_violation
                               ? static_cast<int>(transcript.rows.size())
                               : config.deadline_turns;
        outcome.end_time = static_cast<double>(outcome.end_turn) / config.deadline_turns;
    }

    agent_a.end_session(make_view(Side::A, transcript, outcome));
    agent_b.end_session(make_view(Side::B, transcript, outcome));
    return result;
}

void write_transcript_csv(std::ostream& out, const Transcript& transcript, const Domain& domain) {
    out << "turn,actor,action,bid_id,utility_self,utility_opponent_true\n";
    for (const auto& row : transcript.rows) {
        const bool actor_is_a = row.actor == Side::A;
        out << row.turn << ',' << side_letter(row.actor) << ','
            << (row.action == Action::Kind::Offer ? "offer" : "accept") << ',';
        if (row.bid) {
            out << bid_index(domain, *row.bid);
        }
        out << ',' << format_double(actor_is_a ? row.utility_a : row.utility_b) << ','
            << format_double(actor_is_a ? row.utility_b : row.utility_a) << '\n';
    }
}

}  // namespace arena
