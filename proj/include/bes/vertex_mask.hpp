#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bes {

// Fixed-length bitset over a host's vertex order. One 64-bit word covers
// hosts with up to 64 vertices; larger hosts use as many words as needed.
class VertexMask {
public:
    VertexMask() = default;
    explicit VertexMask(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    static VertexMask from_bits(std::size_t size, std::uint64_t bits) {
        VertexMask m(size);
        if (!m.words_.empty()) m.words_[0] = bits & m.last_word_mask_if_single();
        return m;
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexMask& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    std::size_t intersection_count(const VertexMask& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }
    bool intersects(const VertexMask& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexMask& operator|=(const VertexMask& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexMask& operator&=(const VertexMask& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexMask& operator-=(const VertexMask& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    friend bool operator==(const VertexMask&, const VertexMask&) = default;

private:
    std::uint64_t last_word_mask_if_single() const noexcept {
        return size_ >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size_) - 1);
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

inline VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }
inline VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
inline VertexMask operator-(VertexMask a, const VertexMask& b) { return a -= b; }

} // namespace bes
