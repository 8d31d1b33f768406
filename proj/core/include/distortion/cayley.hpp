#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distortion/group_element.hpp"

namespace distortion::cayley {

/// A word in the generators: letter +k is generator k-1, letter -k its inverse (k >= 1).
/// Evaluation is left to right as a matrix product, so "s1 s2 ... sk" is s1 * s2 * ... * sk.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    static Word generator(std::size_t index, int exponent = 1);

    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word pow(int exponent) const;

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// Generators of a finitely generated group, each automatically paired with its inverse.
class GeneratingSet {
public:
    GeneratingSet(std::vector<std::string> labels, std::vector<GroupElement> elements);

    std::size_t size() const { return elements_.size(); }
    GroupElement::Kind kind() const { return elements_.front().kind(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& element(std::size_t i) const { return elements_.at(i); }
    const GroupElement& inverse_element(std::size_t i) const { return inverses_.at(i); }
    GroupElement identity() const { return elements_.front().identity(); }

    /// The symmetric generating set used for BFS: each generator and each inverse that
    /// differs from every earlier entry, with its signed letter.
    struct Step {
        int letter;
        GroupElement element;
    };
    const std::vector<Step>& steps() const { return steps_; }

    /// "g", "g^-1"; a letter outside the generating set throws std::out_of_range.
    std::string letter_label(int letter) const;
    std::string word_to_string(const Word& w) const;
    const GroupElement& letter_element(int letter) const;

private:
    std::vector<std::string> labels_;
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> inverses_;
    std::vector<Step> steps_;
};

GroupElement evaluate_word(const GeneratingSet& gens, const Word& w);

/// Radius-bounded Cayley ball with exact word lengths, stored in breadth-first order.
class Ball {
public:
    Ball() = default;

    /// Largest r such that every element of length <= r is present.
    int complete_radius() const { return complete_radius_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<std::size_t>& sphere_sizes() const { return sphere_sizes_; }
    const GroupElement& element(std::size_t i) const { return elements_[i]; }
    int length_at(std::size_t i) const { return lengths_[i]; }

    std::optional<int> length_of(const GroupElement& g) const;
    bool contains(const GroupElement& g) const { return find(g).has_value(); }

private:
    friend class BallBuilder;

    std::optional<std::size_t> find(const GroupElement& g) const;
    std::optional<std::size_t> find(const GroupElement& g, std::size_t hash) const;
    void insert(GroupElement g, std::size_t hash, int length);
    void grow_table();

    std::vector<GroupElement> elements_;
    std::vector<int> lengths_;
    std::vector<std::size_t> hashes_;
    // Open addressing over indices into elements_; kEmpty marks a free slot.
    std::vector<std::uint32_t> slots_;
    std::vector<std::size_t> sphere_sizes_;
    int complete_radius_ = -1;
};

inline constexpr std::size_t kDefaultElementCap = 10'000'000;

/// Thrown when a ball would need more than element_cap stored elements. Carries the
/// partial ball: every element in it has its exact length, and lengths up to
/// partial().complete_radius() are exhaustive.
class CapacityError : public std::runtime_error {
public:
    CapacityError(std::size_t cap, Ball partial);
    const Ball& partial() const { return partial_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
    Ball partial_;
};

Ball generate_ball(const GeneratingSet& gens, int radius, std::size_t element_cap = kDefaultElementCap);

/// Exact length if target lies within max_radius, std::nullopt otherwise.
std::optional<int> word_length(const GeneratingSet& gens, const GroupElement& target, int max_radius,
                               std::size_t element_cap = kDefaultElementCap);

}  // namespace distortion::cayley
