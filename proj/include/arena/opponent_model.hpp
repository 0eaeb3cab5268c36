#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arena/domain.hpp"

namespace arena {

/// Classification thresholds over the (ubi, aui) pair.
inline constexpr int kUbiBoulwareThreshold = 5;   // ubi >= 5 -> Boulware
inline constexpr int kAuiHardlinerThreshold = 2;  // aui <= 2 -> Hardliner

/// Opponent strategy statistics persisted between sessions.
struct OpponentStats {
    int ubi = 0;
    int aui = 0;
    int sessions_observed = 0;

    bool operator==(const OpponentStats&) const = default;
};

enum class OpponentClass { Unknown, Boulware, Hardliner, Conceder };

const char* to_string(OpponentClass cls);

/// Unique bid index: recursive halving over the received-bid sequence.
/// The index grows by one each time the right half holds strictly more
/// unique bids than the left, measuring how strongly new bids
/// concentrate in the tail. Empty and singleton sequences yield 0.
int calculate_ubi(std::span<const Bid> received_bids);

/// Average utility index: the same halving recursion on the observer's
/// own utilities of received bids, stepping right while the right
/// half's mean strictly exceeds the left's. Measures tail concession.
int calculate_aui(std::span<const double> received_utils);

/// Boulware if ubi >= 5, else Hardliner if aui <= 2, else Conceder.
/// Unknown when no session has been observed yet.
OpponentClass classify(const OpponentStats& stats);

/// Frequency-based preference model over the opponent's received bids.
/// Issue weights come from Laplace-smoothed counts of consecutive bid
/// pairs that kept the issue's value unchanged; value scores are the
/// per-issue counts normalized by the modal count.
class FrequencyModel {
public:
    explicit FrequencyModel(const Domain& domain);

    /// Record one received bid. Throws DomainMismatchError if the bid
    /// does not fit the domain shape.
    void update(const Bid& bid);

    /// Predicted opponent utility of a bid, in [0,1]. Requires at
    /// least one observed bid.
    double predict(const Bid& bid) const;

    std::int64_t total_bids_observed() const { return total_; }
    std::int64_t value_count(std::size_t issue, std::uint32_t value) const {
        return value_counts_[issue][value];
    }
    std::int64_t unchanged_count(std::size_t issue) const { return unchanged_counts_[issue]; }

private:
    std::vector<std::vector<std::int64_t>> value_counts_;
    std::vector<std::int64_t> unchanged_counts_;
    std::optional<Bid> previous_;
    std::int64_t total_ = 0;
};

/// End-of-session stats from the opponent's bid sequence, measured with
/// the observer's own profile.
OpponentStats finalize_session(std::span<const Bid> opponent_bids,
                               const LinearAdditiveProfile& own_profile,
                               int prior_sessions_observed);

/// Same, with the utilities already evaluated.
OpponentStats finalize_session(std::span<const Bid> opponent_bids,
                               std::span<const double> own_utilities,
                               int prior_sessions_observed);

}  // namespace arena
