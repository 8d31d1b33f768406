#include "distortion/cayley.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace distortion::cayley {

namespace {
constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int l : letters_) {
        if (l == 0) throw std::invalid_argument("word letter 0 is not a generator");
    }
}

Word Word::generator(std::size_t index, int exponent) {
    const int letter = static_cast<int>(index) + 1;
    std::vector<int> letters(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent),
                             exponent < 0 ? -letter : letter);
    return Word(std::move(letters));
}

Word Word::inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& l : inv) l = -l;
    return Word(std::move(inv));
}

Word Word::pow(int exponent) const {
    const Word base = exponent < 0 ? inverse() : *this;
    Word out;
    for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = out + base;
    return out;
}

Word operator+(const Word& a, const Word& b) {
    std::vector<int> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

GeneratingSet::GeneratingSet(std::vector<std::string> labels, std::vector<GroupElement> elements)
    : labels_(std::move(labels)), elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("generating set must be nonempty");
    if (labels_.size() != elements_.size()) throw std::invalid_argument("one label per generator required");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw std::invalid_argument("generator labels must be nonempty");
        for (std::size_t j = 0; j < i; ++j) {
            if (labels_[i] == labels_[j]) throw std::invalid_argument("duplicate generator label '" + labels_[i] + "'");
        }
        if (elements_[i].kind() != elements_.front().kind()) {
            throw std::invalid_argument("generators must all live in one group");
        }
    }
    inverses_.reserve(elements_.size());
    for (const auto& g : elements_) inverses_.push_back(g.inverse());  // throws SingularError

    auto already_listed = [this](const GroupElement& g) {
        return std::any_of(steps_.begin(), steps_.end(), [&](const Step& s) { return s.element == g; });
    };
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const int letter = static_cast<int>(i) + 1;
        if (!already_listed(elements_[i])) steps_.push_back({letter, elements_[i]});
        if (!already_listed(inverses_[i])) steps_.push_back({-letter, inverses_[i]});
    }
}

const GroupElement& GeneratingSet::letter_element(int letter) const {
    if (letter == 0 || static_cast<std::size_t>(letter < 0 ? -letter : letter) > elements_.size()) {
        throw std::out_of_range("letter " + std::to_string(letter) + " outside generating set of size " +
                                std::to_string(elements_.size()));
    }
    const auto index = static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1);
    return letter < 0 ? inverses_[index] : elements_[index];
}

std::string GeneratingSet::letter_label(int letter) const {
    letter_element(letter);
    const auto index = static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1);
    return letter < 0 ? labels_[index] + "^-1" : labels_[index];
}

std::string GeneratingSet::word_to_string(const Word& w) const {
    if (w.empty()) return "e";
    std::string out;
    for (int l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += letter_label(l);
    }
    return out;
}

GroupElement evaluate_word(const GeneratingSet& gens, const Word& w) {
    GroupElement acc = gens.identity();
    for (int letter : w.letters()) acc = acc * gens.letter_element(letter);
    return acc;
}

// ---- Ball storage ----------------------------------------------------------

std::optional<int> Ball::length_of(const GroupElement& g) const {
    if (auto i = find(g)) return lengths_[*i];
    return std::nullopt;
}

std::optional<std::size_t> Ball::find(const GroupElement& g) const { return find(g, g.hash()); }

std::optional<std::size_t> Ball::find(const GroupElement& g, std::size_t hash) const {
    if (slots_.empty()) return std::nullopt;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = hash & mask;; pos = (pos + 1) & mask) {
        const std::uint32_t idx = slots_[pos];
        if (idx == kEmpty) return std::nullopt;
        if (hashes_[idx] == hash && elements_[idx] == g) return idx;
    }
}

void Ball::grow_table() {
    std::vector<std::uint32_t> fresh(slots_.empty() ? 64 : slots_.size() * 2, kEmpty);
    const std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        std::size_t pos = hashes_[i] & mask;
        while (fresh[pos] != kEmpty) pos = (pos + 1) & mask;
        fresh[pos] = static_cast<std::uint32_t>(i);
    }
    slots_ = std::move(fresh);
}

void Ball::insert(GroupElement g, std::size_t hash, int length) {
    if (2 * (elements_.size() + 1) > slots_.size()) grow_table();
    const std::size_t mask = slots_.size() - 1;
    std::size_t pos = hash & mask;
    while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
    slots_[pos] = static_cast<std::uint32_t>(elements_.size());
    elements_.push_back(std::move(g));
    lengths_.push_back(length);
    hashes_.push_back(hash);
    if (sphere_sizes_.size() <= static_cast<std::size_t>(length)) sphere_sizes_.resize(length + 1, 0);
    ++sphere_sizes_[length];
}

CapacityError::CapacityError(std::size_t cap, Ball partial)
    : std::runtime_error("Cayley ball exceeded element cap " + std::to_string(cap) + " (complete to radius " +
                         std::to_string(partial.complete_radius()) + ", " + std::to_string(partial.size()) +
                         " elements stored)"),
      cap_(cap),
      partial_(std::move(partial)) {}

// ---- Breadth-first search --------------------------------------------------

class BallBuilder {
public:
    BallBuilder(const GeneratingSet& gens, std::size_t cap) : gens_(gens), cap_(std::min<std::size_t>(cap, kEmpty - 1)) {}

    // Expands layer by layer up to `radius`. When `target` is given, stops as soon as it
    // is stored and returns its length.
    std::optional<int> run(int radius, const GroupElement* target) {
        if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
        if (cap_ == 0) throw CapacityError(cap_, std::move(ball_));
        GroupElement e = gens_.identity();
        const std::size_t h = e.hash();
        ball_.insert(std::move(e), h, 0);
        last_letter_.push_back(0);
        ball_.complete_radius_ = 0;
        if (target != nullptr && ball_.contains(*target)) return 0;

        std::size_t layer_begin = 0;
        for (int r = 1; r <= radius; ++r) {
            const std::size_t layer_end = ball_.size();
            if (layer_begin == layer_end) break;  // finite group exhausted
            for (std::size_t i = layer_begin; i < layer_end; ++i) {
                for (const auto& step : gens_.steps()) {
                    // x * s^-1 is the parent of x; its length is r - 2.
                    if (step.letter == -last_letter_[i]) continue;
                    GroupElement y = ball_.elements_[i] * step.element;
                    const std::size_t hy = y.hash();
                    if (ball_.find(y, hy)) continue;
                    if (ball_.size() >= cap_) throw CapacityError(cap_, std::move(ball_));
                    const bool hit = target != nullptr && y == *target;
                    ball_.insert(std::move(y), hy, r);
                    last_letter_.push_back(step.letter);
                    if (hit) return r;
                }
            }
            layer_begin = layer_end;
            ball_.complete_radius_ = r;
        }
        ball_.complete_radius_ = radius;
        return std::nullopt;
    }

    Ball take() { return std::move(ball_); }

private:
    const GeneratingSet& gens_;
    std::size_t cap_;
    Ball ball_;
    std::vector<int> last_letter_;
};

Ball generate_ball(const GeneratingSet& gens, int radius, std::size_t element_cap) {
    BallBuilder builder(gens, element_cap);
    builder.run(radius, nullptr);
    return builder.take();
}

std::optional<int> word_length(const GeneratingSet& gens, const GroupElement& target, int max_radius,
                               std::size_t element_cap) {
    BallBuilder builder(gens, element_cap);
    return builder.run(max_radius, &target);
}

}  // namespace distortion::cayley
