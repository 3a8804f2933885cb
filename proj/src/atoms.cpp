#include "stratos/atoms.hpp"

#include <algorithm>
#include <atomic>

namespace stratos {

namespace {

std::atomic<std::uint64_t> g_sigma_fuel{1'000'000};
std::atomic<std::uint64_t> g_cut_fuel{10'000'000};

}  // namespace

std::uint64_t sigma_fuel() { return g_sigma_fuel.load(); }
void set_sigma_fuel(std::uint64_t limit) { g_sigma_fuel.store(limit); }
std::uint64_t cut_fuel() { return g_cut_fuel.load(); }
void set_cut_fuel(std::uint64_t limit) { g_cut_fuel.store(limit); }

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
    AtomSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

AtomSet set_minus(const AtomSet& a, const Atom& b) {
    AtomSet out = a;
    out.erase(b);
    return out;
}

Atom fresh(int level, const AtomSet& avoid) {
    return fresh(level, avoid, {});
}

Atom fresh(int level, const AtomSet& avoid, const std::set<std::uint64_t>& banned_indices) {
    std::uint64_t index = 0;
    while (avoid.count(Atom{level, index}) > 0 || banned_indices.count(index) > 0) ++index;
    return Atom{level, index};
}

Permutation Permutation::theta(int power) {
    Permutation p;
    p.shift_ = power;
    return p;
}

Permutation Permutation::swap(Atom a, Atom b) {
    if (a.level != b.level)
        throw LevelMismatch("swapping requires equal levels: " + to_string(a) + " vs " + to_string(b));
    Permutation p;
    p.set(a, b);
    p.set(b, a);
    return p;
}

void Permutation::set(Atom from, Atom to) {
    if (from == to)
        correction_.erase(from);
    else
        correction_[from] = to;
}

Atom Permutation::apply(Atom a) const {
    Atom shifted{a.level + shift_, a.index};
    auto it = correction_.find(shifted);
    return it == correction_.end() ? shifted : it->second;
}

Permutation Permutation::compose(const Permutation& q) const {
    // this o q = C_p o theta^jp o C_q o theta^jq
    //          = (C_p o (theta^jp C_q theta^-jp)) o theta^(jp+jq).
    Permutation out;
    out.shift_ = shift_ + q.shift_;
    auto correct_p = [this](Atom a) {
        auto it = correction_.find(a);
        return it == correction_.end() ? a : it->second;
    };
    AtomSet covered;  // sources moved by the conjugated q-correction, fixpoints included
    for (const auto& [from, to] : q.correction_) {
        Atom cfrom{from.level + shift_, from.index};
        Atom cto{to.level + shift_, to.index};
        covered.insert(cfrom);
        out.set(cfrom, correct_p(cto));
    }
    for (const auto& [from, to] : correction_) {
        if (covered.count(from) == 0) out.set(from, to);
    }
    return out;
}

Permutation Permutation::inverse() const {
    // (C o theta^j)^-1 = (theta^-j C^-1 theta^j) o theta^-j.
    Permutation out;
    out.shift_ = -shift_;
    for (const auto& [from, to] : correction_) {
        Atom cfrom{to.level - shift_, to.index};
        Atom cto{from.level - shift_, from.index};
        out.set(cfrom, cto);
    }
    return out;
}

Permutation Permutation::power(int j) const {
    Permutation base = j >= 0 ? *this : inverse();
    int steps = j >= 0 ? j : -j;
    Permutation out;
    for (int i = 0; i < steps; ++i) out = base.compose(out);
    return out;
}

std::string atom_name(std::uint64_t index) {
    std::string name(1, static_cast<char>('a' + index % 26));
    if (index >= 26) name += std::to_string(index / 26);
    return name;
}

std::string to_string(const Atom& a) {
    return atom_name(a.index) + "@" + std::to_string(a.level);
}

}  // namespace stratos
