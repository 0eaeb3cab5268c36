#include "arena/opponent_model.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace arena {

namespace {

std::size_t unique_count(std::span<const Bid> bids) {
    std::unordered_set<Bid, BidHash> seen(bids.size() * 2 + 1);
    for (const auto& bid : bids) {
        seen.insert(bid);
    }
    return seen.size();
}

double mean(std::span<const double> values) {
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

}  // namespace

const char* to_string(OpponentClass cls) {
    switch (cls) {
        case OpponentClass::Unknown: return "unknown";
        case OpponentClass::Boulware: return "boulware";
        case OpponentClass::Hardliner: return "hardliner";
        case OpponentClass::Conceder: return "conceder";
    }
    return "unknown";
}

int calculate_ubi(std::span<const Bid> received_bids) {
    int ubi = 0;
    std::span<const Bid> current = received_bids;
    for (;;) {
        const auto left = current.first(current.size() / 2);
        const auto right = current.subspan(current.size() / 2);
        const std::size_t unique_left = unique_count(left);
        const std::size_t unique_right = unique_count(right);
        if (unique_left > 0 && unique_right > 0 && unique_left < unique_right) {
            ++ubi;
            current = right;
        } else {
            return ubi;
        }
    }
}

int calculate_aui(std::span<const double> received_utils) {
    int aui = 0;
    std::span<const double> current = received_utils;
    for (;;) {
        const auto left = current.first(current.size() / 2);
        const auto right = current.subspan(current.size() / 2);
        if (!left.empty() && !right.empty() && mean(left) < mean(right)) {
            ++aui;
            current = right;
        } else {
            return aui;
        }
    }
}

OpponentClass classify(const OpponentStats& stats) {
    if (stats.sessions_observed < 1) {
        return OpponentClass::Unknown;
    }
    if (stats.ubi >= kUbiBoulwareThreshold) {
        return OpponentClass::Boulware;
    }
    return stats.aui <= kAuiHardlinerThreshold ? OpponentClass::Hardliner : OpponentClass::Conceder;
}

FrequencyModel::FrequencyModel(const Domain& domain) {
    value_counts_.resize(domain.issue_count());
    for (std::size_t i = 0; i < domain.issue_count(); ++i) {
        value_counts_[i].assign(domain.issues()[i].value_count(), 0);
    }
    unchanged_counts_.assign(domain.issue_count(), 0);
}

void FrequencyModel::update(const Bid& bid) {
    const auto& values = bid.values();
    if (values.size() != value_counts_.size()) {
        throw DomainMismatchError("bid shape does not match frequency model");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= value_counts_[i].size()) {
            throw DomainMismatchError("bid value out of range for frequency model");
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        ++value_counts_[i][values[i]];
        if (previous_ && previous_->values()[i] == values[i]) {
            ++unchanged_counts_[i];
        }
    }
    previous_ = bid;
    ++total_;
}

double FrequencyModel::predict(const Bid& bid) const {
    if (total_ < 1) {
        throw std::logic_error("frequency model has no observations");
    }
    const auto& values = bid.values();
    if (values.size() != value_counts_.size()) {
        throw DomainMismatchError("bid shape does not match frequency model");
    }
    double weight_norm = 0.0;
    for (const std::int64_t unchanged : unchanged_counts_) {
        weight_norm += static_cast<double>(unchanged + 1);
    }
    double prediction = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= value_counts_[i].size()) {
            throw DomainMismatchError("bid value out of range for frequency model");
        }
        const double weight = static_cast<double>(unchanged_counts_[i] + 1) / weight_norm;
        std::int64_t modal = 0;
        for (const std::int64_t c : value_counts_[i]) {
            modal = std::max(modal, c);
        }
        const double score =
            modal > 0 ? static_cast<double>(value_counts_[i][values[i]]) / static_cast<double>(modal)
                      : 0.0;
        prediction += weight * score;
    }
    return prediction;
}

OpponentStats finalize_session(std::span<const Bid> opponent_bids,
                               const LinearAdditiveProfile& own_profile,
                               int prior_sessions_observed) {
    std::vector<double> utilities;
    utilities.reserve(opponent_bids.size());
    for (const auto& bid : opponent_bids) {
        utilities.push_back(utility(own_profile, bid));
    }
    return finalize_session(opponent_bids, utilities, prior_sessions_observed);
}

OpponentStats finalize_session(std::span<const Bid> opponent_bids,
                               std::span<const double> own_utilities,
                               int prior_sessions_observed) {
    OpponentStats stats;
    stats.ubi = calculate_ubi(opponent_bids);
    stats.aui = calculate_aui(own_utilities);
    stats.sessions_observed = prior_sessions_observed + 1;
    return stats;
}

}  // namespace arena
