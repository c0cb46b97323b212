#pragma once

#include <cstdint>
#include <vector>

namespace altlink {

// Fixed-universe bitset for crossing sets. Comparable, hashable, word-parallel
// subset tests; the universe size is the crossing count of one diagram.
class CrossSet {
public:
    CrossSet() = default;
    explicit CrossSet(int universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int universe() const { return size_; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool subset_of(const CrossSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const CrossSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    CrossSet complement() const {
        CrossSet r(size_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        int tail = size_ & 63;
        if (tail && !r.words_.empty()) r.words_.back() &= (uint64_t{1} << tail) - 1;
        return r;
    }

    CrossSet operator|(const CrossSet& o) const {
        CrossSet r(size_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    CrossSet operator&(const CrossSet& o) const {
        CrossSet r(size_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    CrossSet minus(const CrossSet& o) const {
        CrossSet r(size_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    bool operator==(const CrossSet& o) const { return words_ == o.words_; }
    bool operator!=(const CrossSet& o) const { return words_ != o.words_; }
    bool operator<(const CrossSet& o) const { return words_ < o.words_; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    int size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace altlink
