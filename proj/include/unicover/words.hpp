#pragma once

// Freely reduced words over an indexed generating set. A letter is a nonzero
// int: +(i+1) is generator i, -(i+1) its inverse. Text form is "g1 g2^-1 g1^3"
// with 1-based generator names; the identity prints as "1".

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace unicover {

struct WordError : std::invalid_argument {
    explicit WordError(const std::string& what) : std::invalid_argument(what) {}
};

inline std::vector<int> freeReduceLetters(const std::vector<int>& in) {
    std::vector<int> out;
    out.reserve(in.size());
    for (int l : in) {
        if (l == 0) throw WordError("zero letter");
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

struct GroupWord {
    std::vector<int> letters;   // freely reduced

    GroupWord() = default;
    static GroupWord fromLetters(std::vector<int> ls) {
        GroupWord w;
        w.letters = freeReduceLetters(ls);
        return w;
    }
    static GroupWord identity() { return GroupWord(); }
    static GroupWord generator(int idx, int sign = 1) {
        GroupWord w;
        w.letters.push_back(sign >= 0 ? idx + 1 : -(idx + 1));
        return w;
    }

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }

    GroupWord inverse() const {
        GroupWord w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
        return w;
    }

    GroupWord operator*(const GroupWord& o) const {
        std::vector<int> ls = letters;
        ls.insert(ls.end(), o.letters.begin(), o.letters.end());
        return fromLetters(std::move(ls));
    }

    bool operator==(const GroupWord& o) const { return letters == o.letters; }
    bool operator!=(const GroupWord& o) const { return letters != o.letters; }
    bool operator<(const GroupWord& o) const { return letters < o.letters; }

    int maxGeneratorIndex() const {
        int m = -1;
        for (int l : letters) m = std::max(m, std::abs(l) - 1);
        return m;
    }

    // exponent-sum vector over nGens generators
    std::vector<long long> abelianized(int nGens) const {
        std::vector<long long> v(static_cast<size_t>(nGens), 0);
        for (int l : letters) {
            int idx = std::abs(l) - 1;
            if (idx >= nGens) throw WordError("letter outside generator range");
            v[static_cast<size_t>(idx)] += (l > 0) ? 1 : -1;
        }
        return v;
    }
};

// cyclic reduction: strip cancelling first/last letters
inline GroupWord cyclicReduce(const GroupWord& w) {
    std::vector<int> ls = w.letters;
    size_t a = 0, b = ls.size();
    while (b - a >= 2 && ls[a] == -ls[b - 1]) { ++a; --b; }
    return GroupWord::fromLetters(std::vector<int>(ls.begin() + static_cast<long>(a),
                                                   ls.begin() + static_cast<long>(b)));
}

inline std::string formatWord(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < w.letters.size()) {
        int l = w.letters[i];
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == l) ++j;
        long run = static_cast<long>(j - i);
        long exp = (l > 0 ? run : -run);
        if (!out.empty()) out += ' ';
        out += 'g';
        out += std::to_string(std::abs(l));
        if (exp != 1) {
            out += '^';
            out += std::to_string(exp);
        }
        i = j;
    }
    return out;
}

// Parses "g1 g3^-1 g2^2"; "1" or "" is the identity. Whitespace separates
// syllables. Generator names are 1-based.
inline GroupWord parseWord(const std::string& text) {
    std::vector<int> ls;
    size_t i = 0;
    auto skipWs = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skipWs();
    if (i < text.size() && text[i] == '1' && (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
        ++i;
        skipWs();
        if (i != text.size()) throw WordError("identity literal mixed with letters: " + text);
        return GroupWord::identity();
    }
    while (i < text.size()) {
        if (text[i] != 'g' && text[i] != 'G') throw WordError("expected generator name in word: " + text);
        ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw WordError("generator name without index in word: " + text);
        int idx = std::stoi(text.substr(start, i - start));
        if (idx < 1) throw WordError("generator indices are 1-based: " + text);
        long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t es = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == es || (i == es + 1 && !std::isdigit(static_cast<unsigned char>(text[es]))))
                throw WordError("bad exponent in word: " + text);
            exp = std::stol(text.substr(es, i - es));
        }
        int letter = (exp >= 0) ? idx : -idx;
        for (long r = 0; r < std::labs(exp); ++r) ls.push_back(letter);
        skipWs();
    }
    return GroupWord::fromLetters(std::move(ls));
}

} // namespace unicover
