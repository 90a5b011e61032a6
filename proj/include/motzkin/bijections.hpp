#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/word.hpp"

namespace motzkin {

enum class PathKind { Motzkin, Dyck, Lukasiewicz };

/// Lattice path stored as step rises. Motzkin steps are +1/0/-1 (U/F/D),
/// Dyck steps +1/-1, Lukasiewicz steps any k >= -1. Nonnegative prefix sums
/// and zero total are checked at construction.
struct LatticePath {
    PathKind kind = PathKind::Motzkin;
    std::vector<int> steps;

    static LatticePath motzkin(std::span<const int> steps);
    static LatticePath dyck(std::span<const int> steps);
    static LatticePath lukasiewicz(std::span<const int> steps);

    /// "UDUFUFDFDF" for Motzkin/Dyck, comma-separated rises for Lukasiewicz.
    std::string str() const;
    static LatticePath parse(PathKind kind, std::string_view text);

    int length() const { return static_cast<int>(steps.size()); }
    std::vector<int> heights() const;  // prefix sums

    /// Exactly one return to the axis (at the end) and nonempty.
    bool is_primitive() const;
    bool has_flat_step() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.steps <=> b.steps;
    }
};

/// Catalan word (first letter 1, unit-bounded ascents) avoiding the pattern
/// w_i >= w_{i+1} >= w_{i+2}.
struct RestrictedCatalanWord {
    std::vector<int> letters;

    static RestrictedCatalanWord validate(std::span<const int> seq);
    static RestrictedCatalanWord parse(std::string_view text);
    std::string str() const;
    int size() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const RestrictedCatalanWord&, const RestrictedCatalanWord&) = default;
};

/// Motzkin word of length n -> Motzkin path of length n-1, recursively:
/// psi(1) = empty, psi(1(1+u)) = F psi(u), psi(1(1+u)v) = U psi(u) D psi(v)
/// where v starts at the second letter equal to 1.
LatticePath psi(const MotzkinWord& w);
MotzkinWord psi_inv(const LatticePath& path);

/// Restricted Catalan word of length n -> Motzkin word of length n+1.
MotzkinWord phi(const RestrictedCatalanWord& c);

/// All length-n Catalan words avoiding (>=,>=); count is m_n.
std::vector<RestrictedCatalanWord> generate_catalan_avoiding(int n, const EnumLimits& limits = {});

/// Nonempty word of length n -> primitive zero-step-free Lukasiewicz path of
/// length n+1 whose height after step i is the (n+1-i)-th letter.
LatticePath to_lukasiewicz(const MotzkinWord& w);
MotzkinWord from_lukasiewicz(const LatticePath& path);

/// Word of length n -> UDU-avoiding Dyck path of semilength n; the i-th up
/// step ends at height w_i.
LatticePath to_dyck_udu(const MotzkinWord& w);
MotzkinWord from_dyck_udu(const LatticePath& path);

int up_steps(const LatticePath& path);

}  // namespace motzkin
