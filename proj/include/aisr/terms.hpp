#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aisr/errors.hpp"

namespace aisr {

// A variable symbol. Names follow [a-z][a-z0-9]*; two letters are equal
// iff their names are equal.
class Letter {
public:
    explicit Letter(std::string name);

    const std::string& name() const noexcept { return name_; }

    auto operator<=>(const Letter&) const = default;

private:
    std::string name_;
};

enum class FormatStyle { compact, spaced };

// A finite sequence of letters. The empty word is allowed as a value
// (it is the neutral element of concatenation and shows up in subword
// reasoning) but never as a summand of an identity.
//
// operator<=> is the canonical order used everywhere: shorter words
// first, ties broken lexicographically by letter names.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    Word concat(const Word& other) const;
    Word concat(const Letter& letter) const;

    // Letters joined by ' ' (spaced) or '*' (compact). Empty word -> "".
    std::string str(FormatStyle style = FormatStyle::spaced) const;

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::vector<Letter> letters_;
};

// Canonical iteration order comes from Word's operator<.
using WordSet = std::set<Word>;

// One side of an identity: a non-empty duplicate-free set of non-empty
// words kept sorted in canonical order. Additive idempotency and
// commutativity are baked into the representation.
class FormalSum {
public:
    explicit FormalSum(std::vector<Word> summands);

    const std::vector<Word>& summands() const noexcept { return summands_; }
    std::size_t size() const noexcept { return summands_.size(); }

    bool operator==(const FormalSum&) const = default;

private:
    std::vector<Word> summands_;
};

// Dedup + canonical sort. Throws EmptySum / EmptyWord.
FormalSum canonicalize(std::vector<Word> raw);

// A pair of formal sums. The alphabet is always derived from the two
// sides, never supplied by the caller.
class Identity {
public:
    Identity(FormalSum lhs, FormalSum rhs);

    const FormalSum& lhs() const noexcept { return lhs_; }
    const FormalSum& rhs() const noexcept { return rhs_; }
    const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }

    std::size_t max_word_length() const noexcept;

    // Identity with the two sides exchanged.
    Identity swapped() const { return Identity(rhs_, lhs_); }

    bool operator==(const Identity& other) const {
        return lhs_ == other.lhs_ && rhs_ == other.rhs_;
    }

private:
    FormalSum lhs_;
    FormalSum rhs_;
    std::vector<Letter> alphabet_;  // sorted, duplicate-free
};

// Grammar:
//   identity := expr ('=' | '≈') expr
//   expr     := term ('+' term)*
//   term     := factor (['*'] factor)*
//   factor   := letter | '(' expr ')'
// Letters inside a word are separated by whitespace or '*'; adjacency is
// only possible against parentheses ("x(y+z)"). Products of sums are
// expanded by distributivity, then both sides are canonicalized.
Identity parse_identity(std::string_view text);

// A bare word in the same lexical syntax ("x y", "x*y"). Empty input
// yields the empty word.
Word parse_word(std::string_view text);

// Deterministic text in canonical summand order; parse_identity is a
// left inverse of this for both styles.
std::string format_identity(const Identity& id, FormatStyle style = FormatStyle::spaced);

// True iff u can be extracted from v as a scattered subsequence.
// Greedy left-to-right matching.
bool is_subword(const Word& u, const Word& v);

// All non-empty scattered subsequences of w of length <= k. The empty
// word is deliberately excluded: it would belong to both sides' unions
// of every identity, so membership questions are unaffected.
WordSet subwords_up_to(const Word& w, int k);

// x1 ... x(k+1) ≈ sum of the k+1 words with one letter deleted.
// Requires k >= 1.
Identity basis_identity(int k);

struct SamplerConfig {
    int alphabet_size = 3;
    int max_summands_per_side = 3;
    int max_word_len = 4;
};

// Letter used for index i in sampled identities: "a".."z", then "a26",
// "a27", ...
Letter sampler_letter(int index);

// Seed-stable random identity. Distribution: each side independently
// draws a summand count uniform on [1, max_summands_per_side], then for
// each summand a length uniform on [1, max_word_len] and letters uniform
// over the first alphabet_size sampler letters; the sides are then
// canonicalized (so duplicates can shrink a side). Draw order is part of
// the contract: lhs count, lhs words left to right, then rhs.
Identity sample_identity(const SamplerConfig& cfg, std::uint64_t seed);

}  // namespace aisr
