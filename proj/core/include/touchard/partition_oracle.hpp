#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "touchard/prime_power.hpp"

namespace touchard {

inline constexpr std::size_t kDefaultEnumerationCap = 12;
/// Hard ceiling from the 8-bit block labels, independent of any cap.
inline constexpr std::size_t kMaxPartitionSize = 256;

/// A partition of {0, ..., n-1} encoded as a restricted growth string:
/// labels()[i] is the block of element i, labels()[0] == 0, and each label is
/// at most one more than the largest label before it. The encoding is unique
/// per partition, so equality of SetPartition is equality of partitions.
class SetPartition {
public:
    using Label = std::uint8_t;

    /// Validates the restricted growth condition; throws UsageError otherwise.
    explicit SetPartition(std::vector<Label> rgs);

    /// Relabels an arbitrary block assignment into canonical form.
    static SetPartition canonicalize(std::span<const std::size_t> block_of);
    /// Builds from explicit blocks covering {0, ..., n-1} exactly once.
    static SetPartition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);

    std::size_t size() const noexcept { return rgs_.size(); }
    const std::vector<Label>& labels() const noexcept { return rgs_; }
    std::size_t block_count() const noexcept;
    std::vector<std::vector<std::size_t>> blocks() const;
    std::vector<std::size_t> block_sizes() const;

    /// "{0,2}{1,3}" style rendering, blocks ordered by smallest element.
    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    struct Trusted {};
    SetPartition(Trusted, std::vector<Label> rgs) : rgs_(std::move(rgs)) {}
    friend class PartitionStream;

    std::vector<Label> rgs_;
};

struct SetPartitionHash {
    std::size_t operator()(const SetPartition& p) const noexcept;
};

/// Lexicographic stream of every restricted growth string of length n.
///
///     PartitionStream s(4);
///     while (auto p = s.next()) { ... }
class PartitionStream {
public:
    /// Throws EnumerationCapError when n > cap and UsageError when n == 0.
    explicit PartitionStream(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

    std::optional<SetPartition> next();

private:
    std::vector<SetPartition::Label> rgs_;
    std::vector<SetPartition::Label> prefix_max_;
    bool started_ = false;
    bool done_ = false;
};

void for_each_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit,
                        std::size_t cap = kDefaultEnumerationCap);

std::vector<SetPartition> enumerate_partitions(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// counts[k] = number of partitions of an n-set with exactly k blocks;
/// the vector has n + 1 entries and counts[0] is 0.
std::vector<std::uint64_t> count_by_blocks(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// x -> x + shift (mod modulus) acting element-wise on partitions of Z/modulus.
class TranslationAction {
public:
    /// Requires modulus >= 1 and shift < modulus.
    TranslationAction(std::size_t modulus, std::size_t shift);

    std::size_t modulus() const noexcept { return modulus_; }
    std::size_t shift() const noexcept { return shift_; }

private:
    std::size_t modulus_;
    std::size_t shift_;
};

/// Image of a partition under a translation, in canonical form.
/// Throws UsageError when p.size() != act.modulus().
SetPartition apply_shift(const SetPartition& p, const TranslationAction& act);

/// Invariance under the generator x -> x + 1, which implies invariance
/// under every translation.
bool is_translation_fixed(const SetPartition& p);

struct OrbitSummary {
    SetPartition representative;  ///< lexicographically smallest member
    std::size_t size;
    bool is_fixed;
};

/// Orbits of the cyclic translation group on all partitions of Z/modulus,
/// ordered by representative.
std::vector<OrbitSummary> orbit_decomposition(std::size_t modulus,
                                              std::size_t cap = kDefaultEnumerationCap);

/// All partitions of Z/p^m fixed by every translation.
std::vector<SetPartition> fixed_partitions(const PrimePower& pp,
                                           std::size_t cap = kDefaultEnumerationCap);

/// Residue classes mod p^(m-j) inside Z/p^m: p^(m-j) blocks of size p^j.
/// Requires j <= m and p^m <= kMaxPartitionSize.
SetPartition congruence_class_partition(const PrimePower& pp, std::uint32_t j);

}  // namespace touchard
