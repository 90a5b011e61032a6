#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/errors.hpp"

namespace motzkin {

struct EnumLimits {
    int max_len = 16;                   // exhaustive ops
    long long max_count = 10'000'000;   // objects per enumeration
    int max_single_len = 30;            // single-object ops
};

/// A Motzkin word: positive letters, first letter 1, each letter at most one
/// above its predecessor and never equal to it. Every instance is validated
/// at construction; the empty word is the unique word of length 0.
class MotzkinWord {
  public:
    MotzkinWord() = default;

    /// Validates `seq` against the word constraints; InvalidWord carries the
    /// first offending position. Lengths above `max_len` are a ResourceLimit.
    static MotzkinWord validate(std::span<const int> seq, int max_len = EnumLimits{}.max_single_len);
    static MotzkinWord validate(std::initializer_list<int> seq);

    /// Accepts the compact digit form ("12341") when all letters are single
    /// digits and the comma form ("1,2,3,4,1") otherwise; "" is the empty word.
    static MotzkinWord parse(std::string_view text, int max_len = EnumLimits{}.max_single_len);

    const std::vector<int>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int last() const { return letters_.empty() ? 0 : letters_.back(); }

    /// Digit string when all letters <= 9, comma-separated otherwise.
    std::string str() const;

    friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;
    friend auto operator<=>(const MotzkinWord& a, const MotzkinWord& b) {
        return a.letters_ <=> b.letters_;
    }

  private:
    struct Unchecked {};
    MotzkinWord(std::vector<int> letters, Unchecked) : letters_(std::move(letters)) {}
    std::vector<int> letters_;

    friend std::vector<MotzkinWord> generate_all(int, const EnumLimits&);
    friend std::vector<MotzkinWord> generate_by_last(int, int, const EnumLimits&);
};

struct PolyominoStats {
    int length = 0;
    long long area = 0;
    long long sper = 0;   // half of the boundary edge count
    long long inter = 0;  // lattice vertices incident to exactly four cells
    int last = 0;
    std::map<int, long long> height_histogram;  // level -> cells at that level

    friend bool operator==(const PolyominoStats&, const PolyominoStats&) = default;
};

/// All Motzkin words of length n in lexicographic order. Count is the
/// Motzkin number m_{n-1} for n >= 1 (and 1 for n = 0).
std::vector<MotzkinWord> generate_all(int n, const EnumLimits& limits = {});

/// All words of length n whose last letter is k, lexicographic order.
std::vector<MotzkinWord> generate_by_last(int n, int k, const EnumLimits& limits = {});

/// Statistics measured on the polyomino geometry: cells counted one by one,
/// perimeter from unshared cell edges, interior points from 4-cell vertices.
PolyominoStats stats(const MotzkinWord& w);

/// The same statistics from the bargraph closed formulas; independent of
/// stats() and equal to it field by field.
PolyominoStats stats_formula(const MotzkinWord& w);

/// level -> number of cells at that level (weakly decreasing in level).
std::map<int, long long> height_histogram(const MotzkinWord& w);

/// Bottom-justified column drawing, top row first, '#' cells.
std::string render_ascii(const MotzkinWord& w);

}  // namespace motzkin
