#include "motzkin/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "motzkin/formulas.hpp"

namespace motzkin {

MotzkinWord MotzkinWord::validate(std::span<const int> seq, int max_len) {
    if (static_cast<int>(seq.size()) > max_len)
        throw ResourceLimit("word length " + std::to_string(seq.size()) +
                            " exceeds the single-object cap " + std::to_string(max_len));
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (seq[k] < 1) throw InvalidWord(k, "letter below 1");
        if (k == 0) {
            if (seq[0] != 1) throw InvalidWord(0, "first letter must be 1");
            continue;
        }
        if (seq[k] > seq[k - 1] + 1) throw InvalidWord(k, "rise above previous+1");
        if (seq[k] == seq[k - 1]) throw InvalidWord(k, "equal adjacent");
    }
    return MotzkinWord(std::vector<int>(seq.begin(), seq.end()), Unchecked{});
}

MotzkinWord MotzkinWord::validate(std::initializer_list<int> seq) {
    return validate(std::span<const int>(seq.begin(), seq.size()));
}

MotzkinWord MotzkinWord::parse(std::string_view text, int max_len) {
    std::vector<int> letters;
    if (text.empty()) return validate(letters, max_len);
    if (text.find(',') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw InvalidWord(i, "expected a digit");
            letters.push_back(text[i] - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string_view::npos) end = text.size();
            int value = 0;
            auto sub = text.substr(pos, end - pos);
            auto [ptr, ec] = std::from_chars(sub.data(), sub.data() + sub.size(), value);
            if (ec != std::errc{} || ptr != sub.data() + sub.size())
                throw InvalidWord(letters.size(), "expected an integer");
            letters.push_back(value);
            pos = end + 1;
            if (end == text.size()) break;
        }
    }
    return validate(letters, max_len);
}

std::string MotzkinWord::str() const {
    bool compact = std::all_of(letters_.begin(), letters_.end(), [](int c) { return c <= 9; });
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!compact && i) out << ',';
        out << letters_[i];
    }
    return out.str();
}

namespace {

void check_enum_limits(int n, long long count, const EnumLimits& limits) {
    if (n > limits.max_len)
        throw ResourceLimit("exhaustive length " + std::to_string(n) + " exceeds the cap " +
                            std::to_string(limits.max_len));
    if (count > limits.max_count)
        throw ResourceLimit("enumeration of " + std::to_string(count) +
                            " objects exceeds the cap " + std::to_string(limits.max_count));
}

// Depth-first extension: children of a prefix ending in h are
// {1,...,h+1} \ {h} in increasing order, which yields lexicographic output.
template <typename Sink>
void extend(std::vector<int>& prefix, int remaining, Sink&& sink) {
    if (remaining == 0) {
        sink(prefix);
        return;
    }
    int h = prefix.back();
    for (int c = 1; c <= h + 1; ++c) {
        if (c == h) continue;
        prefix.push_back(c);
        extend(prefix, remaining - 1, sink);
        prefix.pop_back();
    }
}

template <typename Sink>
void for_each_word(int n, Sink&& sink) {
    if (n == 0) {
        std::vector<int> empty;
        sink(empty);
        return;
    }
    std::vector<int> prefix{1};
    extend(prefix, n - 1, sink);
}

}  // namespace

std::vector<MotzkinWord> generate_all(int n, const EnumLimits& limits) {
    if (n < 0) throw Error("negative length");
    BigInt expect = n == 0 ? BigInt(1) : motzkin_number(n - 1);
    check_enum_limits(n, expect.convert_to<long long>(), limits);
    std::vector<MotzkinWord> out;
    for_each_word(n, [&](const std::vector<int>& w) {
        out.push_back(MotzkinWord(w, MotzkinWord::Unchecked{}));
    });
    return out;
}

std::vector<MotzkinWord> generate_by_last(int n, int k, const EnumLimits& limits) {
    if (n < 1 || k < 1 || k > n) throw Error("generate_by_last requires 1 <= k <= n");
    BigInt expect = motzkin_number(n - 1);
    check_enum_limits(n, expect.convert_to<long long>(), limits);
    std::vector<MotzkinWord> out;
    for_each_word(n, [&](const std::vector<int>& w) {
        if (w.back() == k) out.push_back(MotzkinWord(w, MotzkinWord::Unchecked{}));
    });
    return out;
}

PolyominoStats stats(const MotzkinWord& w) {
    const auto& letters = w.letters();
    int n = w.size();
    PolyominoStats st;
    st.length = n;
    st.last = w.last();
    if (n == 0) return st;

    auto filled = [&](int col, int row) {  // 1-based column, 1-based row
        return col >= 1 && col <= n && row >= 1 && row <= letters[col - 1];
    };

    long long boundary_edges = 0;
    for (int col = 1; col <= n; ++col) {
        for (int row = 1; row <= letters[col - 1]; ++row) {
            ++st.area;
            ++st.height_histogram[row];
            if (!filled(col - 1, row)) ++boundary_edges;
            if (!filled(col + 1, row)) ++boundary_edges;
            if (!filled(col, row - 1)) ++boundary_edges;
            if (!filled(col, row + 1)) ++boundary_edges;
        }
    }
    if (boundary_edges % 2 != 0)
        throw Error("odd perimeter for " + w.str() + "; bargraph perimeter must be even");
    st.sper = boundary_edges / 2;

    // Vertex (x, y) touches cells (x,y), (x+1,y), (x,y+1), (x+1,y+1).
    int max_h = *std::max_element(letters.begin(), letters.end());
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < max_h; ++y)
            if (filled(x, y) && filled(x + 1, y) && filled(x, y + 1) && filled(x + 1, y + 1))
                ++st.inter;
    return st;
}

PolyominoStats stats_formula(const MotzkinWord& w) {
    const auto& letters = w.letters();
    int n = w.size();
    PolyominoStats st;
    st.length = n;
    st.last = w.last();
    if (n == 0) return st;
    st.sper = n + letters[0];
    for (int i = 0; i < n; ++i) {
        st.area += letters[i];
        if (i >= 1) {
            st.sper += std::max(0, letters[i] - letters[i - 1]);
            st.inter += std::max(0, std::min(letters[i - 1], letters[i]) - 1);
        }
    }
    st.height_histogram = height_histogram(w);
    return st;
}

std::map<int, long long> height_histogram(const MotzkinWord& w) {
    std::map<int, long long> hist;
    for (int h : w.letters())
        for (int level = 1; level <= h; ++level) ++hist[level];
    return hist;
}

std::string render_ascii(const MotzkinWord& w) {
    if (w.empty()) return "";
    const auto& letters = w.letters();
    int max_h = *std::max_element(letters.begin(), letters.end());
    std::ostringstream out;
    for (int row = max_h; row >= 1; --row) {
        std::string line;
        for (int h : letters) line += (h >= row) ? '#' : ' ';
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line;
        if (row > 1) out << '\n';
    }
    return out.str();
}

}  // namespace motzkin
