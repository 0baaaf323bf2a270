#pragma once

#include "alexdef/numbers.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace alexdef {

/// One run of a reduced word: generator index and a nonzero exponent.
struct Letter {
    int gen;
    long exp;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Reduced word in a free group, stored run-length: adjacent entries have
/// distinct generator indices and all exponents are nonzero. The empty word
/// is the identity.
class FreeWord {
public:
    FreeWord() = default;

    /// Free reduction of an arbitrary letter sequence (zero exponents dropped,
    /// adjacent runs of the same generator merged and cancelled).
    static FreeWord reduce(std::span<const Letter> raw);

    static FreeWord generator(int gen, long exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    /// Letter count with multiplicity, sum of |exp|.
    long length() const;

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& rhs) const;

    /// Total exponent of one generator (image in the abelianization).
    Int exponent_sum(int gen) const;
    std::vector<Int> exponent_vector(int ngens) const;

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Finite formal sum of free-group words with coefficients in a commutative
/// ring C. Zero coefficients are never stored. Multiplication extends word
/// concatenation bilinearly.
template <class C>
class GroupRingElem {
public:
    GroupRingElem() = default;

    static GroupRingElem scalar(C c) {
        GroupRingElem e;
        e.add_term(FreeWord{}, std::move(c));
        return e;
    }
    static GroupRingElem word(const FreeWord& w, C c) {
        GroupRingElem e;
        e.add_term(w, std::move(c));
        return e;
    }

    void add_term(const FreeWord& w, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    GroupRingElem& operator+=(const GroupRingElem& rhs) {
        for (const auto& [w, c] : rhs.terms_) add_term(w, c);
        return *this;
    }
    GroupRingElem operator+(const GroupRingElem& rhs) const {
        GroupRingElem r = *this;
        r += rhs;
        return r;
    }
    GroupRingElem operator-() const {
        GroupRingElem r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    GroupRingElem operator-(const GroupRingElem& rhs) const { return *this + (-rhs); }
    GroupRingElem operator*(const GroupRingElem& rhs) const {
        GroupRingElem r;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : rhs.terms_) r.add_term(w1 * w2, c1 * c2);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<FreeWord, C>& terms() const { return terms_; }

    friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

private:
    std::map<FreeWord, C> terms_;
};

using IntGroupRing = GroupRingElem<Int>;

/// Finite presentation < S_1,...,S_n | R_1,...,R_m >. Relators are reduced
/// words over the declared generators; generator order is declaration order
/// and fixes the Jacobian column order downstream.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<FreeWord> relators;

    int ngens() const { return static_cast<int>(generator_names.size()); }
    int nrels() const { return static_cast<int>(relators.size()); }
    /// n - m; the manifold pipeline requires deficiency one (m = n - 1).
    int deficiency() const { return ngens() - nrels(); }

    std::string word_to_string(const FreeWord& w) const;
};

/// Fox partial derivative d(w)/d(S_gen) in the integral group ring of the
/// free group: dS_i/dS_j = delta_ij, d(uv) = du + u.dv, d(S^-1) = -S^-1.
/// Powers expand in closed form, d(S^k) = 1 + S + ... + S^(k-1).
IntGroupRing fox_derivative(const FreeWord& w, int gen);

/// Linear extension of fox_derivative to group-ring elements.
IntGroupRing fox_derivative(const IntGroupRing& e, int gen);

/// Parses the presentation text format:
///   gens: <name> <name> ...
///   rels: [word]
///   <word>
///   ...
/// A word is whitespace-separated tokens `name` or `name^int`; `#` starts a
/// comment. Relators are words equal to the identity. Throws parse_error with
/// 1-based line/column on malformed input or undeclared generator names.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

} // namespace alexdef
