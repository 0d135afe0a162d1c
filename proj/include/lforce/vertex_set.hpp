#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lforce/errors.hpp"

namespace lforce {

// Subset of {0, ..., universe-1} stored as a packed bit vector.
// Membership tests are O(1); union/intersection/difference run a word at a
// time; iteration yields members in ascending order. Every binary operation
// requires both operands to share a universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(check_universe(universe)), w_(word_count(n_), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check_vertex(v);
        return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_vertex(v);
        w_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_vertex(v);
        w_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_match(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_match(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // Set difference: remove o's members.
    VertexSet& operator-=(const VertexSet& o) {
        check_match(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool is_subset_of(const VertexSet& o) const {
        check_match(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_match(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersection_size(const VertexSet& o) const {
        check_match(o);
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    // Unique member of this \ o, or -1 when there are zero or several.
    int single_outside(const VertexSet& o) const {
        check_match(o);
        int found = -1;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t d = w_[i] & ~o.w_[i];
            if (!d) continue;
            if (found >= 0 || (d & (d - 1))) return -1;
            found = static_cast<int>(i * 64) + std::countr_zero(d);
        }
        return found;
    }

    // Smallest member of this \ o, or -1 when the difference is empty.
    int first_outside(const VertexSet& o) const {
        check_match(o);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t d = w_[i] & ~o.w_[i];
            if (d) return static_cast<int>(i * 64) + std::countr_zero(d);
        }
        return -1;
    }

    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    // Smallest member strictly greater than v, or -1.
    int next_after(int v) const {
        std::size_t i = static_cast<std::size_t>(v + 1) >> 6;
        if (v + 1 >= n_) return -1;
        std::uint64_t w = w_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
        for (;;) {
            if (w) return static_cast<int>(i * 64) + std::countr_zero(w);
            if (++i >= w_.size()) return -1;
            w = w_[i];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    class const_iterator {
    public:
        using value_type = int;
        const_iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = s_->next_after(v_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

    // Lexicographic order on the ascending member lists ({0,2} < {1}, {1} < {1,3}).
    bool lex_less(const VertexSet& o) const {
        check_match(o);
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next_after(a);
            b = o.next_after(b);
        }
        return a < 0 && b >= 0;
    }

    // "{0,2,5}" in ascending order; "{}" when empty.
    std::string to_string() const {
        std::string out = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) out += ',';
            out += std::to_string(v);
            sep = true;
        }
        return out + "}";
    }

private:
    static int check_universe(int n) {
        if (n < 0) throw ParamError("vertex set universe must be non-negative");
        return n;
    }
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw ParamError("vertex " + std::to_string(v) + " outside universe of size " +
                             std::to_string(n_));
    }
    void check_match(const VertexSet& o) const {
        if (n_ != o.n_) throw ParamError("vertex sets have different universes");
    }
    void trim() {
        if (n_ & 63) w_.back() &= ~std::uint64_t{0} >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace lforce
