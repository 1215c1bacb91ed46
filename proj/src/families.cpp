#include "pairsum/families.hpp"

#include <array>
#include <string>

#include "pairsum/sidon.hpp"

namespace pairsum {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kNames{{
    {Family::OddPlusTwo, "odd_plus_two"},
    {Family::Powers2, "powers2"},
    {Family::G4Lower, "g4_lower"},
    {Family::G5Lower, "g5_lower"},
    {Family::G5Point, "g5_point"},
    {Family::Sidon6, "sidon6"},
}};

Int min_n(Family family)
{
    switch (family) {
    case Family::OddPlusTwo:
    case Family::Powers2: return 1;
    case Family::G4Lower:
    case Family::Sidon6: return 2;
    case Family::G5Lower: return 3;
    case Family::G5Point: return 5;
    }
    return 1;
}

} // namespace

std::string_view to_string(Family family)
{
    for (const auto& [f, name] : kNames) {
        if (f == family) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view text)
{
    for (const auto& [f, name] : kNames) {
        if (name == text) {
            return f;
        }
    }
    return std::nullopt;
}

SumSet family_set(Family family, Int n)
{
    if (n < min_n(family) || (family == Family::G5Point && n != 5)) {
        throw Error(ErrorKind::OutOfRange,
                    "n = " + std::to_string(n) + " is outside the range of family " + std::string(to_string(family)));
    }
    if (family == Family::G5Point) {
        SumSet set = SumSet::full(5);
        set.erase(3);
        return set;
    }
    SumSet set = SumSet::odds(n);
    switch (family) {
    case Family::OddPlusTwo: set.insert(2); break;
    case Family::Powers2:
        for (Int p = 2; p <= 2 * n; p *= 2) {
            set.insert(p);
        }
        break;
    case Family::G4Lower:
        set.insert(2 * n - 2);
        set.insert(2 * n);
        break;
    case Family::G5Lower:
        set.insert(2 * n - 4);
        set.insert(2 * n - 2);
        set.insert(2 * n);
        break;
    case Family::Sidon6:
        for (Int a : build_sidon(n / 2, SidonMethod::Modular)) {
            set.insert(4 * a - 2);
        }
        break;
    case Family::G5Point: break;
    }
    return set;
}

FamilyCertificate certify_family(Family family, Int n, int k, Mode mode, Int universe_cap)
{
    SumSet set = family_set(family, n);
    const Interval universe = candidate_universe(n, k, mode);
    if (universe.length() > universe_cap) {
        throw Error(ErrorKind::BudgetExceeded, "candidate universe of " + std::to_string(universe.length())
                                                   + " values exceeds the cap of " + std::to_string(universe_cap));
    }
    Certificate cert = find_witness(set, k, mode);
    const Int excess = static_cast<Int>(set.size()) - n;
    return {family, n, k, mode, std::move(set), std::move(cert), excess};
}

} // namespace pairsum
