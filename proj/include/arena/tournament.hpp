#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "arena/protocol.hpp"
#include "arena/scenario.hpp"

namespace arena {

struct TournamentConfig {
    std::vector<std::string> agent_specs;
    std::vector<Scenario> scenarios;
    int sessions_per_pairing = 50;
    int deadline_turns = 1000;
    std::uint64_t seed = 0;
    bool learning = true;
    bool self_play = false;
    bool dump_transcripts = false;
    std::filesystem::path out_dir;  // empty: keep stores in a temp directory, write no files
};

struct OutcomeRow {
    long session_id = 0;
    std::string scenario;
    std::string agent_a;
    std::string agent_b;
    std::string starter;
    bool agreement = false;
    double util_a = 0.0;
    double util_b = 0.0;
    double welfare = 0.0;
    int turns = 0;
    int ubi_a_recorded = 0;  // stats of agent B's bids as seen by agent A
    int aui_a_recorded = 0;
};

struct AgentStanding {
    std::string agent;
    double mean_utility = 0.0;
    double mean_welfare = 0.0;
    double agreement_rate = 0.0;
    int sessions = 0;
};

struct PairingStanding {
    std::string agent_a;
    std::string agent_b;
    double mean_utility_a = 0.0;
    double mean_utility_b = 0.0;
    double mean_welfare = 0.0;
    double agreement_rate = 0.0;
    int sessions = 0;
};

struct Standings {
    std::vector<AgentStanding> per_agent;      // registration order
    std::vector<PairingStanding> per_pairing;
    std::vector<OutcomeRow> outcomes;
};

/// Full detail of one tournament session, offered to observers.
struct SessionRecord {
    const OutcomeRow* row = nullptr;
    const SessionResult* result = nullptr;
    const Scenario* scenario = nullptr;
};

/// Seed for one session of a pairing. Keyed by the pair's names in
/// lexicographic order, so results do not depend on registration order.
std::uint64_t tournament_session_seed(std::uint64_t master_seed, const std::string& agent_a,
                                      const std::string& agent_b, int session_index);

/// Round-robin tournament over every unordered agent pair (plus
/// self-pairs when self_play is set). Each pairing plays
/// sessions_per_pairing sessions, cycling through the scenario list and
/// alternating the starting agent. Opponent memory lives in a fresh
/// per-pairing store namespace; with learning disabled the stores are
/// reset before every session. Deterministic for a fixed config.
Standings run_tournament(const TournamentConfig& config,
                         const std::function<void(const SessionRecord&)>& observer = {});

void write_outcomes_csv(std::ostream& out, const std::vector<OutcomeRow>& rows);
void write_standings_csv(std::ostream& out, const std::vector<AgentStanding>& standings);

/// Write outcomes.csv and standings.csv under out_dir.
void write_reports(const Standings& standings, const std::filesystem::path& out_dir);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace arena
