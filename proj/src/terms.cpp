#include "aisr/terms.hpp"

#include <algorithm>
#include <sstream>

#include "aisr/rng.hpp"

namespace aisr {

namespace {

bool valid_letter_name(std::string_view name) {
    if (name.empty()) return false;
    if (name.front() < 'a' || name.front() > 'z') return false;
    for (char c : name.substr(1)) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
        if (!ok) return false;
    }
    return true;
}

}  // namespace

Letter::Letter(std::string name) : name_(std::move(name)) {
    if (!valid_letter_name(name_)) {
        throw Error("invalid letter name '" + name_ + "' (expected [a-z][a-z0-9]*)");
    }
}

Word Word::concat(const Word& other) const {
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(ls));
}

Word Word::concat(const Letter& letter) const {
    std::vector<Letter> ls = letters_;
    ls.push_back(letter);
    return Word(std::move(ls));
}

std::string Word::str(FormatStyle style) const {
    const char sep = style == FormatStyle::spaced ? ' ' : '*';
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out.push_back(sep);
        out += letters_[i].name();
    }
    return out;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (auto c = letters_[i] <=> other.letters_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

FormalSum::FormalSum(std::vector<Word> summands) : summands_(std::move(summands)) {
    if (summands_.empty()) throw EmptySum("a formal sum needs at least one summand");
    for (const Word& w : summands_) {
        if (w.empty()) throw EmptyWord("the empty word cannot be a summand");
    }
    std::sort(summands_.begin(), summands_.end());
    summands_.erase(std::unique(summands_.begin(), summands_.end()), summands_.end());
}

FormalSum canonicalize(std::vector<Word> raw) { return FormalSum(std::move(raw)); }

Identity::Identity(FormalSum lhs, FormalSum rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    std::set<Letter> seen;
    for (const FormalSum* side : {&lhs_, &rhs_}) {
        for (const Word& w : side->summands()) {
            for (const Letter& l : w.letters()) seen.insert(l);
        }
    }
    alphabet_.assign(seen.begin(), seen.end());
}

std::size_t Identity::max_word_length() const noexcept {
    std::size_t m = 0;
    for (const FormalSum* side : {&lhs_, &rhs_}) {
        for (const Word& w : side->summands()) m = std::max(m, w.length());
    }
    return m;
}

std::string format_identity(const Identity& id, FormatStyle style) {
    const bool spaced = style == FormatStyle::spaced;
    const char* plus = spaced ? " + " : "+";
    const char* rel = spaced ? " ≈ " : "≈";
    std::string out;
    for (const FormalSum* side : {&id.lhs(), &id.rhs()}) {
        if (side == &id.rhs()) out += rel;
        const auto& ws = side->summands();
        for (std::size_t i = 0; i < ws.size(); ++i) {
            if (i > 0) out += plus;
            out += ws[i].str(style);
        }
    }
    return out;
}

bool is_subword(const Word& u, const Word& v) {
    std::size_t i = 0;
    for (const Letter& l : v.letters()) {
        if (i == u.length()) break;
        if (u.letters()[i] == l) ++i;
    }
    return i == u.length();
}

WordSet subwords_up_to(const Word& w, int k) {
    WordSet acc;
    if (k <= 0) return acc;
    for (const Letter& x : w.letters()) {
        std::vector<Word> fresh;
        fresh.push_back(Word({x}));
        for (const Word& s : acc) {
            if (static_cast<int>(s.length()) < k) fresh.push_back(s.concat(x));
        }
        acc.insert(fresh.begin(), fresh.end());
    }
    return acc;
}

Identity basis_identity(int k) {
    if (k < 1) throw Unsupported("basis_identity requires k >= 1, got " + std::to_string(k));
    std::vector<Letter> xs;
    xs.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k + 1; ++i) xs.emplace_back("x" + std::to_string(i));

    std::vector<Word> rhs;
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<Letter> ls;
        for (int i = 0; i <= k; ++i) {
            if (i != skip) ls.push_back(xs[static_cast<std::size_t>(i)]);
        }
        rhs.emplace_back(std::move(ls));
    }
    return Identity(FormalSum({Word(std::move(xs))}), FormalSum(std::move(rhs)));
}

Letter sampler_letter(int index) {
    if (index < 26) return Letter(std::string(1, static_cast<char>('a' + index)));
    return Letter("a" + std::to_string(index));
}

Identity sample_identity(const SamplerConfig& cfg, std::uint64_t seed) {
    if (cfg.alphabet_size < 1 || cfg.max_summands_per_side < 1 || cfg.max_word_len < 1) {
        throw Error("sampler bounds must all be >= 1");
    }
    SplitMix64 rng(seed);
    auto draw_side = [&] {
        const auto count = 1 + rng.below(static_cast<std::uint64_t>(cfg.max_summands_per_side));
        std::vector<Word> words;
        for (std::uint64_t s = 0; s < count; ++s) {
            const auto len = 1 + rng.below(static_cast<std::uint64_t>(cfg.max_word_len));
            std::vector<Letter> ls;
            for (std::uint64_t i = 0; i < len; ++i) {
                ls.push_back(sampler_letter(static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.alphabet_size)))));
            }
            words.emplace_back(std::move(ls));
        }
        return FormalSum(std::move(words));
    };
    FormalSum lhs = draw_side();
    FormalSum rhs = draw_side();
    return Identity(std::move(lhs), std::move(rhs));
}

}  // namespace aisr
