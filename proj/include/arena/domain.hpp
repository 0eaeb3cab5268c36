#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "arena/errors.hpp"

namespace arena {

/// Default ceiling on enumerable bid spaces (desk scale).
inline constexpr std::uint64_t kDefaultBidCap = 1'000'000;

/// Clamp bounds for the bid-space granularity tolerance.
inline constexpr double kToleranceMin = 0.001;
inline constexpr double kToleranceMax = 0.05;

/// One negotiable issue: a name and its ordered, discrete value labels.
class Issue {
public:
    Issue(std::string name, std::vector<std::string> values);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& values() const { return values_; }
    std::size_t value_count() const { return values_.size(); }

    /// Index of a value label within this issue, if present.
    std::optional<std::uint32_t> index_of(std::string_view label) const;

private:
    std::string name_;
    std::vector<std::string> values_;
};

/// An ordered set of issues. Immutable once constructed.
class Domain {
public:
    explicit Domain(std::vector<Issue> issues);

    const std::vector<Issue>& issues() const { return issues_; }
    std::size_t issue_count() const { return issues_.size(); }
    std::optional<std::size_t> issue_index(std::string_view name) const;

    /// Total number of bids (product of value counts). Saturates at
    /// uint64 max if the true product overflows.
    std::uint64_t bid_count() const;

private:
    std::vector<Issue> issues_;
};

/// One value index per issue, aligned with the domain's issue order.
/// Equality is full per-issue equality.
class Bid {
public:
    Bid() = default;
    explicit Bid(std::vector<std::uint32_t> value_indices) : values_(std::move(value_indices)) {}

    /// Build from a name -> label assignment. Must cover every issue of
    /// the domain exactly; unknown names or labels are a domain mismatch.
    static Bid from_labels(const Domain& domain, const std::map<std::string, std::string>& assignment);

    const std::vector<std::uint32_t>& values() const { return values_; }
    std::map<std::string, std::string> to_labels(const Domain& domain) const;

    bool operator==(const Bid&) const = default;

private:
    std::vector<std::uint32_t> values_;
};

struct BidHash {
    std::size_t operator()(const Bid& bid) const;
};

/// Linear additive preferences over a domain: per-issue weights summing
/// to one and per-value scores in [0,1] with each issue's best value
/// scoring exactly 1, so the best bid has utility 1.
class LinearAdditiveProfile {
public:
    LinearAdditiveProfile(std::vector<double> weights,
                          std::vector<std::vector<double>> value_scores,
                          double reservation = 0.0);

    /// Build from name-keyed tables, validated against the domain.
    LinearAdditiveProfile(const Domain& domain,
                          const std::map<std::string, double>& weights,
                          const std::map<std::string, std::map<std::string, double>>& value_scores,
                          double reservation = 0.0);

    std::size_t issue_count() const { return weights_.size(); }
    double weight(std::size_t issue) const { return weights_[issue]; }
    double score(std::size_t issue, std::uint32_t value) const { return value_scores_[issue][value]; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<std::vector<double>>& value_scores() const { return value_scores_; }
    double reservation() const { return reservation_; }

private:
    void validate() const;

    std::vector<double> weights_;
    std::vector<std::vector<double>> value_scores_;
    double reservation_ = 0.0;
};

/// Bid-space granularity parameter, clamped to [0.001, 0.05].
struct Tolerance {
    double epsilon = kToleranceMax;
};

/// Weighted sum of the chosen values' scores. Throws DomainMismatchError
/// if the bid's shape does not match the profile.
double utility(const LinearAdditiveProfile& profile, const Bid& bid);

/// All bids of the domain in a fixed deterministic order: mixed-radix
/// counting over issue order with the last issue varying fastest.
/// Throws CapacityError when bid_count() exceeds cap.
std::vector<Bid> enumerate_bids(const Domain& domain, std::uint64_t cap = kDefaultBidCap);

/// Enumeration index of a bid under the enumerate_bids order.
std::uint64_t bid_index(const Domain& domain, const Bid& bid);

/// Mean gap between adjacent distinct utilities over the whole bid
/// space, clamped to [0.001, 0.05]. A space with a single distinct
/// utility has no gaps and yields the maximum width.
Tolerance compute_tolerance(const LinearAdditiveProfile& profile, const Domain& domain,
                            std::uint64_t cap = kDefaultBidCap);

/// Deterministic random scenario: issue_count issues with
/// values_per_issue values each, and two independently drawn profiles.
std::tuple<Domain, LinearAdditiveProfile, LinearAdditiveProfile>
random_scenario(std::uint64_t seed, int issue_count, int values_per_issue);

/// The enumerated bid space of one profile, sorted by utility for
/// interval and nearest-utility queries. Built once per session.
class BidSpace {
public:
    BidSpace(const Domain& domain, const LinearAdditiveProfile& profile,
             std::uint64_t cap = kDefaultBidCap);

    std::size_t size() const { return bids_.size(); }
    const Bid& bid(std::size_t enumeration_index) const { return bids_[enumeration_index]; }
    double utility_of(std::size_t enumeration_index) const { return utilities_[enumeration_index]; }

    /// Half-open range [first, last) of sorted positions whose utility
    /// lies in [lo, hi].
    std::pair<std::size_t, std::size_t> sorted_range(double lo, double hi) const;

    /// First sorted position with utility >= u, or size() if none.
    std::size_t first_at_or_above(double u) const;

    const Bid& sorted_bid(std::size_t sorted_pos) const { return bids_[sorted_index_[sorted_pos]]; }
    double sorted_utility(std::size_t sorted_pos) const { return sorted_utilities_[sorted_pos]; }
    std::size_t sorted_enum_index(std::size_t sorted_pos) const { return sorted_index_[sorted_pos]; }

    /// A maximum-own-utility bid (deterministic choice among ties).
    const Bid& best_bid() const { return sorted_bid(size() - 1); }
    double best_utility() const { return sorted_utilities_.back(); }

private:
    std::vector<Bid> bids_;                 // enumeration order
    std::vector<double> utilities_;         // enumeration order
    std::vector<std::uint32_t> sorted_index_;  // enumeration indices sorted by (utility, index)
    std::vector<double> sorted_utilities_;
};

}  // namespace arena
