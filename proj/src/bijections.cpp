#include "motzkin/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "motzkin/formulas.hpp"

namespace motzkin {

namespace {

void check_path(PathKind kind, std::span<const int> steps) {
    long long height = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        int s = steps[i];
        bool ok = kind == PathKind::Motzkin   ? (s == -1 || s == 0 || s == 1)
                  : kind == PathKind::Dyck    ? (s == -1 || s == 1)
                                              : (s >= -1);
        if (!ok) throw MalformedPath("illegal step " + std::to_string(s) + " at position " + std::to_string(i));
        height += s;
        if (height < 0) throw MalformedPath("path dips below the axis at position " + std::to_string(i));
    }
    if (height != 0) throw MalformedPath("path ends at height " + std::to_string(height));
}

}  // namespace

LatticePath LatticePath::motzkin(std::span<const int> steps) {
    check_path(PathKind::Motzkin, steps);
    return LatticePath{PathKind::Motzkin, {steps.begin(), steps.end()}};
}

LatticePath LatticePath::dyck(std::span<const int> steps) {
    check_path(PathKind::Dyck, steps);
    return LatticePath{PathKind::Dyck, {steps.begin(), steps.end()}};
}

LatticePath LatticePath::lukasiewicz(std::span<const int> steps) {
    check_path(PathKind::Lukasiewicz, steps);
    return LatticePath{PathKind::Lukasiewicz, {steps.begin(), steps.end()}};
}

std::string LatticePath::str() const {
    std::ostringstream out;
    if (kind == PathKind::Lukasiewicz) {
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (i) out << ',';
            out << steps[i];
        }
    } else {
        for (int s : steps) out << (s == 1 ? 'U' : s == 0 ? 'F' : 'D');
    }
    return out.str();
}

LatticePath LatticePath::parse(PathKind kind, std::string_view text) {
    std::vector<int> steps;
    if (kind == PathKind::Lukasiewicz) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string_view::npos) end = text.size();
            int value = 0;
            auto sub = text.substr(pos, end - pos);
            auto [ptr, ec] = std::from_chars(sub.data(), sub.data() + sub.size(), value);
            if (ec != std::errc{} || ptr != sub.data() + sub.size())
                throw MalformedPath("expected an integer rise");
            steps.push_back(value);
            pos = end + 1;
        }
        return lukasiewicz(steps);
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'U': steps.push_back(1); break;
            case 'D': steps.push_back(-1); break;
            case 'F':
                if (kind == PathKind::Dyck) throw MalformedPath("flat step in a Dyck path");
                steps.push_back(0);
                break;
            default: throw MalformedPath(std::string("unknown step '") + text[i] + "'");
        }
    }
    return kind == PathKind::Dyck ? dyck(steps) : motzkin(steps);
}

std::vector<int> LatticePath::heights() const {
    std::vector<int> h;
    h.reserve(steps.size());
    int level = 0;
    for (int s : steps) h.push_back(level += s);
    return h;
}

bool LatticePath::is_primitive() const {
    if (steps.empty()) return false;
    int level = 0;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        level += steps[i];
        if (level <= 0) return false;
    }
    return true;  // construction guarantees the final return to 0
}

bool LatticePath::has_flat_step() const {
    return std::find(steps.begin(), steps.end(), 0) != steps.end();
}

// --- psi ---------------------------------------------------------------

namespace {

// A factor w[lo..hi) at recursion depth d is a Motzkin word shifted up by d;
// its "letter 1" has value base = d+1.
void psi_rec(const std::vector<int>& w, int lo, int hi, int base, std::vector<int>& out) {
    if (hi - lo == 1) return;  // psi(1) = empty
    int split = hi;
    for (int j = lo + 1; j < hi; ++j)
        if (w[j] == base) {
            split = j;
            break;
        }
    if (split == hi) {
        out.push_back(0);  // F
        psi_rec(w, lo + 1, hi, base + 1, out);
    } else {
        out.push_back(1);  // U
        psi_rec(w, lo + 1, split, base + 1, out);
        out.push_back(-1);  // D
        psi_rec(w, split, hi, base, out);
    }
}

void psi_inv_rec(const std::vector<int>& steps, int lo, int hi, int base, std::vector<int>& out) {
    out.push_back(base);
    if (lo == hi) return;
    if (steps[lo] == 0) {
        psi_inv_rec(steps, lo + 1, hi, base + 1, out);
        return;
    }
    // steps[lo] == +1: find the matching first return to the entry level
    int level = 0, match = -1;
    for (int j = lo; j < hi; ++j) {
        level += steps[j];
        if (level == 0) {
            match = j;
            break;
        }
    }
    // a valid Motzkin path always closes the U
    psi_inv_rec(steps, lo + 1, match, base + 1, out);
    psi_inv_rec(steps, match + 1, hi, base, out);
}

}  // namespace

LatticePath psi(const MotzkinWord& w) {
    if (w.empty()) throw Error("psi is defined on nonempty words");
    std::vector<int> steps;
    steps.reserve(static_cast<std::size_t>(w.size()) - 1);
    psi_rec(w.letters(), 0, w.size(), 1, steps);
    return LatticePath{PathKind::Motzkin, std::move(steps)};
}

MotzkinWord psi_inv(const LatticePath& path) {
    if (path.kind != PathKind::Motzkin) throw MalformedPath("psi_inv expects a Motzkin path");
    std::vector<int> letters;
    letters.reserve(path.steps.size() + 1);
    psi_inv_rec(path.steps, 0, path.length(), 1, letters);
    return MotzkinWord::validate(letters, path.length() + 1);
}

// --- phi ---------------------------------------------------------------

RestrictedCatalanWord RestrictedCatalanWord::validate(std::span<const int> seq) {
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (seq[k] < 1) throw InvalidCatalanWord("letter below 1 at position " + std::to_string(k));
        if (k == 0) {
            if (seq[0] != 1) throw InvalidCatalanWord("first letter must be 1");
            continue;
        }
        if (seq[k] > seq[k - 1] + 1)
            throw InvalidCatalanWord("rise above previous+1 at position " + std::to_string(k));
        if (k >= 2 && seq[k - 2] >= seq[k - 1] && seq[k - 1] >= seq[k])
            throw InvalidCatalanWord("pattern (>=,>=) at position " + std::to_string(k - 2));
    }
    return RestrictedCatalanWord{{seq.begin(), seq.end()}};
}

RestrictedCatalanWord RestrictedCatalanWord::parse(std::string_view text) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw InvalidCatalanWord("expected a digit");
        letters.push_back(text[i] - '0');
    }
    return validate(letters);
}

std::string RestrictedCatalanWord::str() const {
    std::ostringstream out;
    for (int c : letters) out << c;
    return out.str();
}

namespace {

std::vector<int> phi_rec(std::vector<int> w) {
    if (w.empty()) return {1};
    auto shifted = [](std::vector<int> u) {
        for (int& c : u) ++c;
        return u;
    };
    int n = static_cast<int>(w.size());
    bool doubled = n >= 2 && w[1] == 1;  // leading "11"
    int start = doubled ? 2 : 1;
    int split = start;
    while (split < n && w[split] >= 2) ++split;
    std::vector<int> u(w.begin() + start, w.begin() + split);
    for (int& c : u) --c;
    std::vector<int> v(w.begin() + split, w.end());

    std::vector<int> out{1};
    if (v.empty()) {
        auto mid = shifted(phi_rec(std::move(u)));
        out.insert(out.end(), mid.begin(), mid.end());
    } else {
        // the pattern-avoidance of the input guarantees u is nonempty here
        u.pop_back();
        auto mid = shifted(phi_rec(std::move(u)));
        out.insert(out.end(), mid.begin(), mid.end());
        auto tail = phi_rec(std::move(v));
        out.insert(out.end(), tail.begin(), tail.end());
    }
    if (doubled) out.push_back(1);
    return out;
}

}  // namespace

MotzkinWord phi(const RestrictedCatalanWord& c) {
    return MotzkinWord::validate(phi_rec(c.letters), c.size() + 1);
}

std::vector<RestrictedCatalanWord> generate_catalan_avoiding(int n, const EnumLimits& limits) {
    if (n < 0) throw Error("negative length");
    if (n > limits.max_len)
        throw ResourceLimit("exhaustive length " + std::to_string(n) + " exceeds the cap " +
                            std::to_string(limits.max_len));
    if (motzkin_number(n) > limits.max_count)
        throw ResourceLimit("enumeration exceeds the object cap");
    std::vector<RestrictedCatalanWord> out;
    std::vector<int> prefix;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == n) {
            out.push_back(RestrictedCatalanWord{prefix});
            return;
        }
        int k = static_cast<int>(prefix.size());
        int hi = k == 0 ? 1 : prefix.back() + 1;
        for (int c = 1; c <= hi; ++c) {
            if (k >= 2 && prefix[k - 2] >= prefix[k - 1] && prefix[k - 1] >= c) continue;
            prefix.push_back(c);
            self(self);
            prefix.pop_back();
        }
    };
    rec(rec);
    return out;
}

// --- Lukasiewicz -------------------------------------------------------

LatticePath to_lukasiewicz(const MotzkinWord& w) {
    if (w.empty()) throw Error("to_lukasiewicz is defined on nonempty words");
    const auto& letters = w.letters();
    int n = w.size();
    // heights read right-to-left: step i ends at w_{n+1-i}, step n+1 at 0
    std::vector<int> rises;
    rises.reserve(static_cast<std::size_t>(n) + 1);
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        int h = letters[static_cast<std::size_t>(n - i)];
        rises.push_back(h - prev);
        prev = h;
    }
    rises.push_back(-prev);  // final drop w_1 = 1 -> step -1
    return LatticePath::lukasiewicz(rises);
}

MotzkinWord from_lukasiewicz(const LatticePath& path) {
    if (path.kind != PathKind::Lukasiewicz)
        throw MalformedPath("from_lukasiewicz expects a Lukasiewicz path");
    if (path.has_flat_step()) throw HasFlatStep("path contains a zero step");
    if (!path.is_primitive()) throw NotPrimitive("path returns to the axis before the end");
    auto h = path.heights();
    int n = path.length() - 1;
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) letters[static_cast<std::size_t>(j - 1)] = h[static_cast<std::size_t>(n - j)];
    return MotzkinWord::validate(letters, std::max(n, EnumLimits{}.max_single_len));
}

// --- UDU-avoiding Dyck paths -------------------------------------------

LatticePath to_dyck_udu(const MotzkinWord& w) {
    const auto& letters = w.letters();
    int n = w.size();
    std::vector<int> steps;
    steps.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        steps.push_back(1);
        int downs = (i + 1 < n) ? letters[i] - letters[i + 1] + 1 : letters[i];
        steps.insert(steps.end(), static_cast<std::size_t>(downs), -1);
    }
    return LatticePath::dyck(steps);
}

MotzkinWord from_dyck_udu(const LatticePath& path) {
    if (path.kind != PathKind::Dyck) throw MalformedPath("from_dyck_udu expects a Dyck path");
    const auto& s = path.steps;
    for (std::size_t i = 0; i + 2 < s.size(); ++i)
        if (s[i] == 1 && s[i + 1] == -1 && s[i + 2] == 1)
            throw ContainsUDU("UDU factor at position " + std::to_string(i));
    std::vector<int> letters;
    int level = 0;
    for (int step : s) {
        level += step;
        if (step == 1) letters.push_back(level);
    }
    return MotzkinWord::validate(letters, std::max<int>(static_cast<int>(letters.size()),
                                                        EnumLimits{}.max_single_len));
}

int up_steps(const LatticePath& path) {
    return static_cast<int>(std::count(path.steps.begin(), path.steps.end(), 1));
}

}  // namespace motzkin
