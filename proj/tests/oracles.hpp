#pragma once

// Test-only reference implementations.  None of these call into the library
// code paths they are used to check; only the MapId enum is shared.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "pss/stack_engine.hpp"

namespace pss::oracle {

using Values = std::vector<int>;

/// All of S_n in lexicographic order, built recursively by choosing the
/// first entry from the remaining values in increasing order.
inline std::vector<Values> all_permutations(std::size_t n) {
    std::vector<Values> out;
    Values prefix;
    std::vector<bool> used(n + 1, false);
    std::function<void()> rec = [&] {
        if (prefix.size() == n) {
            out.push_back(prefix);
            return;
        }
        for (std::size_t v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            prefix.push_back(static_cast<int>(v));
            rec();
            prefix.pop_back();
            used[v] = false;
        }
    };
    rec();
    return out;
}

inline Values random_permutation(std::size_t n, std::mt19937_64& rng) {
    Values v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

/// Order-isomorphism of two equal-length sequences, pair by pair.
inline bool order_isomorphic(const Values& a, const Values& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
        }
    }
    return true;
}

/// Containment by checking every subsequence of the pattern's length.
inline bool contains_by_subsequences(const Values& p, const Values& q) {
    const std::size_t n = p.size(), k = q.size();
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth,
                                                            std::size_t from) -> bool {
        if (depth == k) {
            Values sub;
            for (auto i : idx) sub.push_back(p[i]);
            return order_isomorphic(sub, q);
        }
        for (std::size_t i = from; i < n; ++i) {
            idx[depth] = i;
            if (rec(depth + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

/// One stack pass where the push rule is "stack empty, or the incoming
/// value followed by the stack (top to bottom) contains the base pattern
/// through the incoming value", scanning the whole stack each step.
inline Values naive_dotted_pass(const Values& in, bool base_ascending) {
    Values stack, out;
    std::size_t next = 0;
    while (next < in.size() || !stack.empty()) {
        bool push = false;
        if (next < in.size()) {
            push = stack.empty();
            for (auto it = stack.rbegin(); it != stack.rend() && !push; ++it) {
                push = base_ascending ? in[next] < *it : in[next] > *it;
            }
        }
        if (push) {
            stack.push_back(in[next++]);
        } else {
            out.push_back(stack.back());
            stack.pop_back();
        }
    }
    return out;
}

/// Textbook West pass: pop while the top is smaller than the incoming value.
inline Values naive_west_pass(const Values& in) {
    Values stack, out;
    for (int v : in) {
        while (!stack.empty() && stack.back() < v) {
            out.push_back(stack.back());
            stack.pop_back();
        }
        stack.push_back(v);
    }
    while (!stack.empty()) {
        out.push_back(stack.back());
        stack.pop_back();
    }
    return out;
}

inline bool is_identity(const Values& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

inline Values identity(std::size_t n) {
    Values v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
    return v;
}

inline Values apply_map(MapId map, const Values& v) {
    switch (map) {
        case MapId::West: return naive_west_pass(v);
        case MapId::S12: return naive_dotted_pass(v, true);
        case MapId::S21: return naive_dotted_pass(v, false);
        case MapId::Machine12: return naive_west_pass(naive_dotted_pass(v, true));
        case MapId::Machine21: return naive_west_pass(naive_dotted_pass(v, false));
    }
    return {};
}

inline Values iterate_map(MapId map, Values v, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) v = apply_map(map, v);
    return v;
}

}  // namespace pss::oracle
