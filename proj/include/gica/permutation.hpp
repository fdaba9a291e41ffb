#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gica {

/// A bijection on {0, ..., n-1}. Local gauge elements act on a cell by
/// applying the same permutation to both components; gauge-field link
/// values are elements of the same kind.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);

    /// Build from an image table; throws std::invalid_argument if the
    /// table is not a bijection on {0,...,n-1}.
    static Permutation from_images(const std::vector<int>& images);

    /// The transposition (a b) on {0,...,n-1}.
    static Permutation transposition(int n, int a, int b);

    /// Parse a cycle word such as "(01)", "(012)", "(01)(23)" or "id".
    /// Values are single decimal digits, so n <= 10. Cycles compose
    /// right-to-left. Throws std::invalid_argument on malformed input.
    static Permutation parse_cycles(int n, const std::string& word);

    int domain_size() const { return static_cast<int>(images_.size()); }
    int apply(int v) const { return images_[static_cast<size_t>(v)]; }

    /// Function composition: (a.compose(b))(v) == a(b(v)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Canonical disjoint-cycle form ("id" for the identity); each cycle
    /// starts at its smallest element, cycles ordered by first element.
    std::string cycle_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<uint8_t> images) : images_(std::move(images)) {}

    std::vector<uint8_t> images_;
};

}  // namespace gica
