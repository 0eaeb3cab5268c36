#include "arena/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "arena/rng.hpp"

namespace arena {

namespace {

constexpr double kWeightSumTolerance = 1e-9;
constexpr double kScoreNormTolerance = 1e-9;

}  // namespace

Issue::Issue(std::string name, std::vector<std::string> values)
    : name_(std::move(name)), values_(std::move(values)) {
    if (name_.empty()) {
        throw std::invalid_argument("issue name must be non-empty");
    }
    if (values_.empty()) {
        throw std::invalid_argument("issue '" + name_ + "' must have at least one value");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& v : values_) {
        if (!seen.insert(v).second) {
            throw std::invalid_argument("issue '" + name_ + "' has duplicate value '" + v + "'");
        }
    }
}

std::optional<std::uint32_t> Issue::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == label) {
            return static_cast<std::uint32_t>(i);
        }
    }
    return std::nullopt;
}

Domain::Domain(std::vector<Issue> issues) : issues_(std::move(issues)) {
    if (issues_.empty()) {
        throw std::invalid_argument("domain must have at least one issue");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& issue : issues_) {
        if (!seen.insert(issue.name()).second) {
            throw std::invalid_argument("duplicate issue name '" + issue.name() + "'");
        }
    }
}

std::optional<std::size_t> Domain::issue_index(std::string_view name) const {
    for (std::size_t i = 0; i < issues_.size(); ++i) {
        if (issues_[i].name() == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::uint64_t Domain::bid_count() const {
    std::uint64_t count = 1;
    for (const auto& issue : issues_) {
        const std::uint64_t n = issue.value_count();
        if (count > std::numeric_limits<std::uint64_t>::max() / n) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        count *= n;
    }
    return count;
}

Bid Bid::from_labels(const Domain& domain, const std::map<std::string, std::string>& assignment) {
    if (assignment.size() != domain.issue_count()) {
        throw DomainMismatchError("bid must assign exactly one value to every issue");
    }
    std::vector<std::uint32_t> values(domain.issue_count());
    for (const auto& [name, label] : assignment) {
        const auto idx = domain.issue_index(name);
        if (!idx) {
            throw DomainMismatchError("unknown issue '" + name + "'");
        }
        const auto value = domain.issues()[*idx].index_of(label);
        if (!value) {
            throw DomainMismatchError("unknown value '" + label + "' for issue '" + name + "'");
        }
        values[*idx] = *value;
    }
    return Bid(std::move(values));
}

std::map<std::string, std::string> Bid::to_labels(const Domain& domain) const {
    if (values_.size() != domain.issue_count()) {
        throw DomainMismatchError("bid shape does not match domain");
    }
    std::map<std::string, std::string> labels;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const auto& issue = domain.issues()[i];
        if (values_[i] >= issue.value_count()) {
            throw DomainMismatchError("bid value out of range for issue '" + issue.name() + "'");
        }
        labels[issue.name()] = issue.values()[values_[i]];
    }
    return labels;
}

std::size_t BidHash::operator()(const Bid& bid) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const std::uint32_t v : bid.values()) {
        h ^= v + 1;
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
}

LinearAdditiveProfile::LinearAdditiveProfile(std::vector<double> weights,
                                             std::vector<std::vector<double>> value_scores,
                                             double reservation)
    : weights_(std::move(weights)), value_scores_(std::move(value_scores)), reservation_(reservation) {
    validate();
}

LinearAdditiveProfile::LinearAdditiveProfile(
    const Domain& domain, const std::map<std::string, double>& weights,
    const std::map<std::string, std::map<std::string, double>>& value_scores, double reservation)
    : reservation_(reservation) {
    if (weights.size() != domain.issue_count() || value_scores.size() != domain.issue_count()) {
        throw DomainMismatchError("profile must cover every issue exactly once");
    }
    weights_.resize(domain.issue_count());
    value_scores_.resize(domain.issue_count());
    for (const auto& [name, weight] : weights) {
        const auto idx = domain.issue_index(name);
        if (!idx) {
            throw DomainMismatchError("profile weight for unknown issue '" + name + "'");
        }
        weights_[*idx] = weight;
    }
    for (const auto& [name, scores] : value_scores) {
        const auto idx = domain.issue_index(name);
        if (!idx) {
            throw DomainMismatchError("profile scores for unknown issue '" + name + "'");
        }
        const auto& issue = domain.issues()[*idx];
        if (scores.size() != issue.value_count()) {
            throw DomainMismatchError("profile must score every value of issue '" + name + "'");
        }
        auto& row = value_scores_[*idx];
        row.resize(issue.value_count());
        for (const auto& [label, score] : scores) {
            const auto value = issue.index_of(label);
            if (!value) {
                throw DomainMismatchError("profile scores unknown value '" + label + "' of issue '" +
                                          name + "'");
            }
            row[*value] = score;
        }
    }
    validate();
}

void LinearAdditiveProfile::validate() const {
    if (weights_.empty() || weights_.size() != value_scores_.size()) {
        throw std::invalid_argument("profile shape invalid");
    }
    double sum = 0.0;
    for (const double w : weights_) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw std::invalid_argument("issue weight outside [0,1]");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        throw std::invalid_argument("issue weights must sum to 1");
    }
    for (const auto& row : value_scores_) {
        if (row.empty()) {
            throw std::invalid_argument("issue must have at least one scored value");
        }
        double best = 0.0;
        for (const double s : row) {
            if (!(s >= 0.0 && s <= 1.0)) {
                throw std::invalid_argument("value score outside [0,1]");
            }
            best = std::max(best, s);
        }
        if (std::abs(best - 1.0) > kScoreNormTolerance) {
            throw std::invalid_argument("each issue needs a value scoring 1");
        }
    }
    if (!(reservation_ >= 0.0 && reservation_ <= 1.0)) {
        throw std::invalid_argument("reservation outside [0,1]");
    }
}

double utility(const LinearAdditiveProfile& profile, const Bid& bid) {
    const auto& values = bid.values();
    if (values.size() != profile.issue_count()) {
        throw DomainMismatchError("bid shape does not match profile");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= profile.value_scores()[i].size()) {
            throw DomainMismatchError("bid value out of range for profile");
        }
        total += profile.weight(i) * profile.score(i, values[i]);
    }
    return total;
}

std::vector<Bid> enumerate_bids(const Domain& domain, std::uint64_t cap) {
    const std::uint64_t count = domain.bid_count();
    if (count > cap) {
        throw CapacityError("bid space of " + std::to_string(count) + " exceeds cap of " +
                            std::to_string(cap));
    }
    std::vector<Bid> bids;
    bids.reserve(count);
    std::vector<std::uint32_t> current(domain.issue_count(), 0);
    for (;;) {
        bids.emplace_back(current);
        // Advance the mixed-radix counter, last issue fastest.
        std::size_t i = domain.issue_count();
        while (i > 0) {
            --i;
            if (++current[i] < domain.issues()[i].value_count()) {
                break;
            }
            current[i] = 0;
            if (i == 0) {
                return bids;
            }
        }
    }
}

std::uint64_t bid_index(const Domain& domain, const Bid& bid) {
    const auto& values = bid.values();
    if (values.size() != domain.issue_count()) {
        throw DomainMismatchError("bid shape does not match domain");
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& issue = domain.issues()[i];
        if (values[i] >= issue.value_count()) {
            throw DomainMismatchError("bid value out of range for issue '" + issue.name() + "'");
        }
        index = index * issue.value_count() + values[i];
    }
    return index;
}

Tolerance compute_tolerance(const LinearAdditiveProfile& profile, const Domain& domain,
                            std::uint64_t cap) {
    std::vector<double> utilities;
    const auto bids = enumerate_bids(domain, cap);
    utilities.reserve(bids.size());
    for (const auto& bid : bids) {
        utilities.push_back(utility(profile, bid));
    }
    std::sort(utilities.begin(), utilities.end());
    utilities.erase(std::unique(utilities.begin(), utilities.end()), utilities.end());
    if (utilities.size() < 2) {
        return Tolerance{kToleranceMax};
    }
    // The mean adjacent gap over sorted distinct utilities telescopes to
    // (max - min) / (gap count).
    const double mean_gap =
        (utilities.back() - utilities.front()) / static_cast<double>(utilities.size() - 1);
    return Tolerance{std::clamp(mean_gap, kToleranceMin, kToleranceMax)};
}

namespace {

LinearAdditiveProfile draw_profile(std::mt19937_64& rng, int issue_count, int values_per_issue) {
    std::vector<double> weights(issue_count);
    double sum = 0.0;
    for (auto& w : weights) {
        w = 0.05 + 0.95 * next_unit(rng);
        sum += w;
    }
    for (auto& w : weights) {
        w /= sum;
    }
    std::vector<std::vector<double>> scores(issue_count);
    for (auto& row : scores) {
        row.resize(values_per_issue);
        double best = 0.0;
        for (auto& s : row) {
            s = 1.0 - next_unit(rng);  // (0, 1], so the max is always positive
            best = std::max(best, s);
        }
        for (auto& s : row) {
            s /= best;  // modal value scores exactly 1
        }
    }
    return LinearAdditiveProfile(std::move(weights), std::move(scores));
}

}  // namespace

std::tuple<Domain, LinearAdditiveProfile, LinearAdditiveProfile>
random_scenario(std::uint64_t seed, int issue_count, int values_per_issue) {
    if (issue_count < 1 || values_per_issue < 1) {
        throw std::invalid_argument("scenario needs at least one issue and one value per issue");
    }
    std::vector<Issue> issues;
    issues.reserve(issue_count);
    for (int i = 0; i < issue_count; ++i) {
        std::vector<std::string> values;
        values.reserve(values_per_issue);
        for (int v = 0; v < values_per_issue; ++v) {
            values.push_back("v" + std::to_string(v));
        }
        issues.emplace_back("i" + std::to_string(i), std::move(values));
    }
    Domain domain(std::move(issues));
    std::mt19937_64 rng(splitmix64(seed));
    auto profile_a = draw_profile(rng, issue_count, values_per_issue);
    auto profile_b = draw_profile(rng, issue_count, values_per_issue);
    return {std::move(domain), std::move(profile_a), std::move(profile_b)};
}

BidSpace::BidSpace(const Domain& domain, const LinearAdditiveProfile& profile, std::uint64_t cap) {
    bids_ = enumerate_bids(domain, cap);
    utilities_.reserve(bids_.size());
    for (const auto& bid : bids_) {
        utilities_.push_back(utility(profile, bid));
    }
    sorted_index_.resize(bids_.size());
    std::iota(sorted_index_.begin(), sorted_index_.end(), 0u);
    std::sort(sorted_index_.begin(), sorted_index_.end(), [this](std::uint32_t a, std::uint32_t b) {
        if (utilities_[a] != utilities_[b]) {
            return utilities_[a] < utilities_[b];
        }
        return a < b;
    });
    sorted_utilities_.reserve(bids_.size());
    for (const std::uint32_t idx : sorted_index_) {
        sorted_utilities_.push_back(utilities_[idx]);
    }
}

std::pair<std::size_t, std::size_t> BidSpace::sorted_range(double lo, double hi) const {
    const auto first = std::lower_bound(sorted_utilities_.begin(), sorted_utilities_.end(), lo);
    const auto last = std::upper_bound(first, sorted_utilities_.end(), hi);
    return {static_cast<std::size_t>(first - sorted_utilities_.begin()),
            static_cast<std::size_t>(last - sorted_utilities_.begin())};
}

std::size_t BidSpace::first_at_or_above(double u) const {
    const auto it = std::lower_bound(sorted_utilities_.begin(), sorted_utilities_.end(), u);
    return static_cast<std::size_t>(it - sorted_utilities_.begin());
}

}  // namespace arena
