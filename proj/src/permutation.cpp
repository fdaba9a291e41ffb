#include "gica/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace gica {

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation domain must be non-empty");
    std::vector<uint8_t> images(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    return Permutation(std::move(images));
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    if (n < 1 || n > 255) throw std::invalid_argument("permutation domain size out of range");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<uint8_t> table(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int v = images[static_cast<size_t>(i)];
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("image table is not a bijection");
        seen[static_cast<size_t>(v)] = true;
        table[static_cast<size_t>(i)] = static_cast<uint8_t>(v);
    }
    return Permutation(std::move(table));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("transposition values out of range");
    std::swap(p.images_[static_cast<size_t>(a)], p.images_[static_cast<size_t>(b)]);
    return p;
}

Permutation Permutation::parse_cycles(int n, const std::string& word) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("cycle words support domains up to 10");
    if (word == "id" || word == "()") return identity(n);

    // Collect cycles left to right, then compose right-to-left.
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < word.size()) {
        if (word[i] != '(')
            throw std::invalid_argument("expected '(' in permutation word");
        ++i;
        std::vector<int> cycle;
        std::vector<bool> used(static_cast<size_t>(n), false);
        while (i < word.size() && word[i] != ')') {
            const char ch = word[i];
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("expected digit in permutation cycle");
            const int v = ch - '0';
            if (v >= n)
                throw std::invalid_argument("cycle value exceeds alphabet size");
            if (used[static_cast<size_t>(v)])
                throw std::invalid_argument("repeated value inside a cycle");
            used[static_cast<size_t>(v)] = true;
            cycle.push_back(v);
            ++i;
        }
        if (i == word.size())
            throw std::invalid_argument("unterminated cycle, missing ')'");
        ++i;  // skip ')'
        if (cycle.size() < 2)
            throw std::invalid_argument("cycles need at least two values");
        cycles.push_back(std::move(cycle));
    }
    if (cycles.empty())
        throw std::invalid_argument("empty permutation word");

    Permutation result = identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        Permutation step = identity(n);
        const auto& cyc = *it;
        for (size_t k = 0; k < cyc.size(); ++k) {
            const int from = cyc[k];
            const int to = cyc[(k + 1) % cyc.size()];
            step.images_[static_cast<size_t>(from)] = static_cast<uint8_t>(to);
        }
        result = step.compose(result);
    }
    return result;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (domain_size() != other.domain_size())
        throw std::invalid_argument("composing permutations over different domains");
    std::vector<uint8_t> out(images_.size());
    for (size_t v = 0; v < images_.size(); ++v)
        out[v] = images_[other.images_[v]];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<uint8_t> out(images_.size());
    for (size_t v = 0; v < images_.size(); ++v)
        out[images_[v]] = static_cast<uint8_t>(v);
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (size_t v = 0; v < images_.size(); ++v)
        if (images_[v] != v) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> visited(images_.size(), false);
    for (size_t start = 0; start < images_.size(); ++start) {
        if (visited[start] || images_[start] == start) continue;
        out.push_back('(');
        size_t v = start;
        while (!visited[v]) {
            visited[v] = true;
            out.push_back(static_cast<char>('0' + v));
            v = images_[v];
        }
        out.push_back(')');
    }
    return out.empty() ? "id" : out;
}

}  // namespace gica
