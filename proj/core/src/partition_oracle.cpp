#include "touchard/partition_oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "touchard/error.hpp"

namespace touchard {

namespace {

void check_size(std::size_t n, std::size_t cap) {
    if (n == 0) {
        throw UsageError("set partitions need a nonempty ground set");
    }
    if (n > cap) {
        throw EnumerationCapError(n, cap);
    }
    if (n > kMaxPartitionSize) {
        throw EnumerationCapError(n, kMaxPartitionSize);
    }
}

}  // namespace

SetPartition::SetPartition(std::vector<Label> rgs) : rgs_(std::move(rgs)) {
    if (rgs_.empty()) {
        throw UsageError("restricted growth string must be nonempty");
    }
    if (rgs_.size() > kMaxPartitionSize) {
        throw UsageError("restricted growth string longer than " +
                         std::to_string(kMaxPartitionSize));
    }
    if (rgs_[0] != 0) {
        throw UsageError("restricted growth string must start with 0");
    }
    unsigned max_so_far = 0;
    for (std::size_t i = 1; i < rgs_.size(); ++i) {
        if (rgs_[i] > max_so_far + 1) {
            throw UsageError("restricted growth string violates growth at position " +
                             std::to_string(i));
        }
        max_so_far = std::max<unsigned>(max_so_far, rgs_[i]);
    }
}

SetPartition SetPartition::canonicalize(std::span<const std::size_t> block_of) {
    if (block_of.empty() || block_of.size() > kMaxPartitionSize) {
        throw UsageError("partition size must be in [1, " + std::to_string(kMaxPartitionSize) + "]");
    }
    std::unordered_map<std::size_t, Label> relabel;
    std::vector<Label> rgs(block_of.size());
    for (std::size_t i = 0; i < block_of.size(); ++i) {
        auto [it, inserted] = relabel.try_emplace(block_of[i], static_cast<Label>(relabel.size()));
        rgs[i] = it->second;
    }
    return SetPartition{Trusted{}, std::move(rgs)};
}

SetPartition SetPartition::from_blocks(std::size_t n,
                                       const std::vector<std::vector<std::size_t>>& blocks) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block_of(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw UsageError("partition blocks must be nonempty");
        }
        for (std::size_t x : blocks[b]) {
            if (x >= n) {
                throw UsageError("element " + std::to_string(x) + " outside {0.." +
                                 std::to_string(n - 1) + "}");
            }
            if (block_of[x] != unset) {
                throw UsageError("element " + std::to_string(x) + " appears in two blocks");
            }
            block_of[x] = b;
        }
    }
    if (std::find(block_of.begin(), block_of.end(), unset) != block_of.end()) {
        throw UsageError("blocks do not cover the ground set");
    }
    return canonicalize(block_of);
}

std::size_t SetPartition::block_count() const noexcept {
    return static_cast<std::size_t>(*std::max_element(rgs_.begin(), rgs_.end())) + 1;
}

std::vector<std::vector<std::size_t>> SetPartition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count());
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
        out[rgs_[i]].push_back(i);
    }
    return out;
}

std::vector<std::size_t> SetPartition::block_sizes() const {
    std::vector<std::size_t> out(block_count(), 0);
    for (Label l : rgs_) ++out[l];
    return out;
}

std::string SetPartition::to_string() const {
    std::string s;
    for (const auto& block : blocks()) {
        s += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(block[i]);
        }
        s += '}';
    }
    return s;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept {
    // FNV-1a over the label bytes
    std::uint64_t h = 14695981039346656037ULL;
    for (auto l : p.labels()) {
        h ^= l;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

PartitionStream::PartitionStream(std::size_t n, std::size_t cap) {
    check_size(n, cap);
    rgs_.assign(n, 0);
    prefix_max_.assign(n, 0);
}

std::optional<SetPartition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return SetPartition{SetPartition::Trusted{}, rgs_};
    }
    // rightmost position that can still grow; prefix_max_[i] is max(rgs_[0..i])
    const std::size_t n = rgs_.size();
    std::size_t i = n;
    while (i-- > 1) {
        if (rgs_[i] <= prefix_max_[i - 1]) break;
    }
    if (i == 0) {
        done_ = true;
        return std::nullopt;
    }
    ++rgs_[i];
    prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
        rgs_[k] = 0;
        prefix_max_[k] = prefix_max_[i];
    }
    return SetPartition{SetPartition::Trusted{}, rgs_};
}

void for_each_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit,
                        std::size_t cap) {
    PartitionStream stream(n, cap);
    while (auto p = stream.next()) {
        visit(*p);
    }
}

std::vector<SetPartition> enumerate_partitions(std::size_t n, std::size_t cap) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); }, cap);
    return out;
}

std::vector<std::uint64_t> count_by_blocks(std::size_t n, std::size_t cap) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    for_each_partition(n, [&](const SetPartition& p) { ++counts[p.block_count()]; }, cap);
    return counts;
}

TranslationAction::TranslationAction(std::size_t modulus, std::size_t shift)
    : modulus_(modulus), shift_(shift) {
    if (modulus == 0) {
        throw UsageError("translation modulus must be positive");
    }
    if (shift >= modulus) {
        throw UsageError("translation shift " + std::to_string(shift) + " not in [0, " +
                         std::to_string(modulus) + ")");
    }
}

SetPartition apply_shift(const SetPartition& p, const TranslationAction& act) {
    const std::size_t n = p.size();
    if (n != act.modulus()) {
        throw UsageError("apply_shift: partition of a " + std::to_string(n) +
                         "-set cannot be acted on modulo " + std::to_string(act.modulus()));
    }
    // element x lands on x + y, carrying its block with it
    std::vector<std::size_t> image(n);
    const auto& labels = p.labels();
    for (std::size_t x = 0; x < n; ++x) {
        image[(x + act.shift()) % n] = labels[x];
    }
    return SetPartition::canonicalize(image);
}

bool is_translation_fixed(const SetPartition& p) {
    if (p.size() == 1) return true;
    return apply_shift(p, TranslationAction{p.size(), 1}) == p;
}

std::vector<OrbitSummary> orbit_decomposition(std::size_t modulus, std::size_t cap) {
    const std::vector<SetPartition> all = enumerate_partitions(modulus, cap);

    std::unordered_map<SetPartition, std::size_t, SetPartitionHash> index;
    index.reserve(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        index.emplace(all[i], i);
    }

    const TranslationAction generator{modulus, modulus > 1 ? 1u : 0u};
    std::vector<bool> seen(all.size(), false);
    std::vector<OrbitSummary> orbits;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (seen[i]) continue;
        // enumeration is lexicographic, so the first unseen member is the orbit minimum
        std::size_t size = 0;
        SetPartition cur = all[i];
        do {
            seen[index.at(cur)] = true;
            ++size;
            cur = apply_shift(cur, generator);
        } while (!(cur == all[i]));
        orbits.push_back({all[i], size, size == 1});
    }
    return orbits;
}

std::vector<SetPartition> fixed_partitions(const PrimePower& pp, std::size_t cap) {
    std::vector<SetPartition> out;
    for_each_partition(
        static_cast<std::size_t>(pp.value()),
        [&](const SetPartition& p) {
            if (is_translation_fixed(p)) out.push_back(p);
        },
        cap);
    return out;
}

SetPartition congruence_class_partition(const PrimePower& pp, std::uint32_t j) {
    if (j > pp.exponent()) {
        throw UsageError("congruence_class_partition: j = " + std::to_string(j) +
                         " exceeds m = " + std::to_string(pp.exponent()));
    }
    if (pp.value() > kMaxPartitionSize) {
        throw UsageError("congruence_class_partition: " + std::to_string(pp.value()) +
                         " exceeds the partition size limit " + std::to_string(kMaxPartitionSize));
    }
    std::uint64_t classes = 1;
    for (std::uint32_t i = j; i < pp.exponent(); ++i) classes *= pp.prime();

    std::vector<SetPartition::Label> rgs(static_cast<std::size_t>(pp.value()));
    for (std::size_t x = 0; x < rgs.size(); ++x) {
        rgs[x] = static_cast<SetPartition::Label>(x % classes);
    }
    return SetPartition{std::move(rgs)};
}

}  // namespace touchard
